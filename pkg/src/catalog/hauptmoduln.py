from fractions import Fraction


# Hauptmoduln of the Fricke groups as eta quotients.
# factors: (d, r_d) pairs of prod eta(d tau)^(r_d)
# golden: Fourier coefficients of q^1 .. q^6
# gauge: (scale, offset), the family parameter alpha enters E1 + c E0
#        with c = scale * alpha + offset
LEVELS = {
    6: {
        'factors': ((1, 12), (2, -12), (3, -12), (6, 12)),
        'golden': (1, -12, 66, -220, 495, -804),
        'gauge': (Fraction(-1, 24), Fraction(-5, 24)),
        'fricke': "0.0294372515",
        'branch': "33.9705627485",
    },
    10: {
        'factors': ((1, 6), (2, -6), (5, -6), (10, 6)),
        'golden': (1, -6, 15, -26, 51, -96),
        'gauge': (Fraction(1), Fraction(0)),
        'fricke': "0.0557",
        'branch': "1",
    },
    14: {
        'factors': ((1, 4), (2, -4), (7, -4), (14, 4)),
        'golden': (1, -4, 6, -8, 17, -28),
        'gauge': (Fraction(1), Fraction(0)),
        'fricke': "0.0795",
        'branch': "1",
    },
    15: {
        'factors': ((1, 3), (3, -3), (5, -3), (15, 3)),
        'golden': (1, -3, 0, 8, -9, 3),
        'gauge': (Fraction(1), Fraction(0)),
        'fricke': "0.0901",
        'branch': "1.6180",
    },
    21: {
        'factors': ((1, 2), (3, -2), (7, -2), (21, 2)),
        'golden': (1, -2, -1, 4, -3, 0),
        'gauge': (Fraction(1), Fraction(0)),
        'fricke': "0.1224",
        'branch': "0.5865",
    },
    26: {
        'factors': ((1, 2), (2, -2), (13, -2), (26, 2)),
        'golden': (1, -2, 1, -2, 4, -4),
        'gauge': (Fraction(1), Fraction(0)),
        'fricke': "0.1385",
        'branch': "0.8134",
    },
    35: {
        'factors': ((1, 1), (5, -1), (7, -1), (35, 1)),
        'golden': (1, -1, -1, 0, 0, 2),
        'gauge': (Fraction(1), Fraction(0)),
        'fricke': "0.1878",
        'branch': "0.6180",
    },
    39: {
        'factors': ((1, 1), (3, -1), (13, -1), (39, 1)),
        'golden': (1, -1, -1, 1, -1, 0),
        'gauge': (Fraction(1), Fraction(0)),
        'fricke': "0.1958",
        'branch': "0.5806",
    },
}

# Levels that appear in the n = 199 comparison without any stated
# Hauptmodul or family data.
UNSPECIFIED_LEVELS = (8, 12, 18, 20, 50)

UNSPECIFIED_NOTE = "not reproducible from published data"

# Beukers' weight two form (eta(3t) eta(2t))^7 / (eta(6t) eta(t))^5
BEUKERS_FACTORS = ((1, -5), (2, 7), (3, 7), (6, -5))
