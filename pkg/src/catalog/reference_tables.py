# Published reference values, shown next to the computed columns.

# --- level 6 approximants a_n / b_n, n = 2..5, per alpha ---
APPROXIMANTS = {
    "0": ("351/292", "62531/52020", "11424695/9504288",
          "35441662103/29484180000"),
    "-100": ("2049/1708", "253369/210780", "38600105/32111712",
             "107367025397/89319420000"),
    "-5": ("77/64", "2921/2430", "991495/824832", "589608911/490500000"),
    "-2": ("101/84", "56213/46764", "3474733/2890656",
           "1206869939/1004004000"),
    "1": ("125/104", "32845/27324", "3974981/3306816",
          "6144958163/5112036000"),
    "2": ("399/332", "68849/57276", "12425191/10336608",
          "38297835853/31860252000"),
    "5": ("471/392", "39163/32580", "13925935/11585088",
          "21291048239/17712180000"),
    "100": ("917/764", "378431/314820", "20483165/17040096",
            "59416783201/49429260000"),
}

# error exponents of the approximants above
APPROXIMANT_EXPONENTS = {
    "0": (-6, -9, -12, -15),
    "-100": (-3, -6, -9, -12),
    "-5": (-3, -7, -10, -13),
    "-2": (-4, -7, -10, -13),
    "1": (-4, -7, -11, -14),
    "2": (-4, -7, -10, -13),
    "5": (-4, -7, -10, -13),
    "100": (-3, -6, -9, -12),
}

# --- level 6, n = 95..99: error exponent R and denominator digits D ---
LARGE_N = {
    "0": ((-291, -294, -297, -300, -303), (257, 258, 266, 265, 269)),
    "-100": ((-288, -291, -294, -297, -300), (258, 255, 266, 267, 269)),
    "-5": ((-289, -292, -295, -298, -301), (255, 253, 261, 262, 266)),
    "-2": ((-289, -292, -295, -298, -301), (257, 256, 265, 265, 268)),
    "1": ((-289, -292, -295, -298, -302), (256, 257, 264, 267, 266)),
    "2": ((-289, -292, -295, -298, -301), (258, 258, 266, 266, 266)),
    "5": ((-289, -292, -295, -298, -301), (258, 255, 266, 266, 269)),
    "100": ((-288, -291, -294, -297, -300), (258, 257, 266, 266, 267)),
}

# --- n = 199 comparison ---
# (label, alpha, a5/b5 decimal, log10 den, error, E, Q)
# label None marks the classical Apery sequence
N199 = (
    (None, None, "1.2020569032", "567.4", "1.52e-609", "608.8", "1.073"),
    (6, "0", "1.2020569032", "561.0", "3.04e-607", "606.5", "1.081"),
    (6, "1", "1.2020569032", "564.3", "5.21e-608", "607.3", "1.076"),
    (8, "0", "1.2020574348", "520.9", "3.65e-304", "303.4", "0.583"),
    (8, "1", "1.2020569634", "524.2", "3.03e-305", "304.5", "0.581"),
    (10, "0", "1.2020522755", "508.9", "1.70e-249", "248.8", "0.489"),
    (10, "1", "1.2020516590", "513.1", "1.94e-249", "248.7", "0.485"),
    (14, "0", "1.2020634126", "481.4", "1.15e-218", "217.9", "0.453"),
    (14, "1", "1.2020644201", "483.0", "1.26e-218", "217.9", "0.451"),
    (12, "0", "1.2050000000", "343.7", "9.37e-224", "223.0", "0.649"),
    (12, "1", "1.2061302049", "342.5", "1.27e-223", "222.9", "0.651"),
    (15, "0", "1.2021649910", "468.3", "3.54e-248", "247.5", "0.528"),
    (15, "1", "1.2021753512", "470.7", "3.83e-248", "247.4", "0.526"),
    (18, "0", "1.1960565476", "310.8", "7.09e-195", "194.1", "0.625"),
    (18, "1", "1.1944794438", "314.7", "8.64e-195", "194.1", "0.617"),
    (20, "0", "1.1875000000", "299.4", "1.69e-179", "178.8", "0.597"),
    (20, "1", "1.1827153110", "299.9", "1.95e-179", "178.7", "0.596"),
    (21, "0", "1.2011367917", "438.6", "2.25e-181", "180.6", "0.412"),
    (21, "1", "1.2010710819", "445.9", "2.40e-181", "180.6", "0.405"),
    (35, "0", "1.2878789488", "400.9", "9.90e-134", "133.0", "0.332"),
    (35, "1", "1.2936280286", "408.2", "1.04e-133", "133.0", "0.326"),
    (39, "0", "1.2181947829", "400.8", "3.31e-142", "141.5", "0.353"),
    (39, "1", "1.2187952773", "405.4", "4.12e-142", "141.4", "0.349"),
    (50, "0", "1.9461050725", "246.6", "4.59e-106", "105.3", "0.427"),
    (50, "1", "2.0980991224", "251.3", "5.07e-106", "105.3", "0.419"),
)

# Member E1_N + c E0_N behind each reproducible n = 199 row.
# Away from level 6 the rows use c = alpha / N^2. At level 6 the alpha = 0
# row is E1_6 itself and the alpha = 1 row is E_b (1 + t_6), c = -1/4.
N199_MEMBERS = {
    (6, "0"): "0",
    (6, "1"): "-1/4",
    (10, "0"): "0",
    (10, "1"): "1/100",
    (14, "0"): "0",
    (14, "1"): "1/196",
    (15, "0"): "0",
    (15, "1"): "1/225",
    (21, "0"): "0",
    (21, "1"): "1/441",
    (35, "0"): "0",
    (35, "1"): "1/1225",
    (39, "0"): "0",
    (39, "1"): "1/1521",
}

N199_NOTES = {
    (6, "1"): "error and E agree; the reduced denominator has "
              "log10 565.4 against the published 564.3",
}
