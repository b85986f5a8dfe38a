from mpmath import mp, nstr


class RadiusFit(object):
    """
    Radius of convergence estimated from coefficient growth
    Args:
        estimate: radius (mpf)
        residual: relative fit residual, the quality signal
        method: 'domb-sykes' or 'root-test'
        n_coeffs: number of coefficients the fit used
    """
    def __init__(self, estimate, residual, method, n_coeffs):
        self.estimate = estimate
        self.residual = residual
        self.method = method
        self.n_coeffs = n_coeffs

    def toDict(self, digits=12):
        return {"estimate": nstr(self.estimate, digits),
                "residual": nstr(mp.mpf(self.residual), 6),
                "method": self.method,
                "n_coeffs": self.n_coeffs}


class BranchReport(object):
    """
    Branch data of one level
    Args:
        level: N
        fricke_value: t_N(i / sqrt N)
        branch: RadiusFit of the linear-form series (estimate of |t_N(p_N)|)
        b_radius: RadiusFit of the B series
        fricke_expected, branch_expected: reference values (mpf or None)
        tolerance: relative tolerance on the branch estimate
        digits: working precision of the evaluation
    """
    def __init__(self, level, fricke_value, branch, b_radius,
                 fricke_expected, branch_expected, tolerance, digits):
        self.level = level
        self.fricke_value = fricke_value
        self.branch = branch
        self.b_radius = b_radius
        self.fricke_expected = fricke_expected
        self.branch_expected = branch_expected
        self.tolerance = tolerance
        self.digits = digits
        self.e3 = mp.e ** 3
        self.exceeds_e3 = branch.estimate > self.e3
        if branch_expected is not None:
            dev = abs(branch.estimate - branch_expected) / branch_expected
            self.deviation = dev
            self.flagged = dev > tolerance
        else:
            self.deviation = None
            self.flagged = False

    @property
    def branch_estimate(self):
        return self.branch.estimate

    @property
    def radius(self):
        """
        Radius the level is classified by; the reference value replaces a
        flagged estimate
        """
        if self.flagged:
            return self.branch_expected
        return self.branch.estimate

    def toDict(self):
        def s(x, d=12):
            return None if x is None else nstr(x, d)
        return {
            "level": self.level,
            "digits": self.digits,
            "fricke_value": s(self.fricke_value, min(self.digits, 40)),
            "fricke_expected": s(self.fricke_expected),
            "branch_estimate": self.branch.toDict(),
            "branch_expected": s(self.branch_expected),
            "b_radius": self.b_radius.toDict(),
            "deviation": s(self.deviation, 6),
            "radius": s(self.radius),
            "below_one": bool(self.radius < 1),
            "flagged": self.flagged,
            "exceeds_e3": self.exceeds_e3,
        }
