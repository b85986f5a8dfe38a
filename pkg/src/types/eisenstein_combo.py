from fractions import Fraction

from _errors import DomainError


class EisensteinCombo(object):
    """
    Formal combination sum_{d | N} c_d E_k(d tau)
    Args:
        weight: even weight k
        level: N
        coeffs: mapping divisor -> rational coefficient; keys must be
                exactly the divisors of N
        divisors: ascending divisors of N
    """
    def __init__(self, weight, level, coeffs, divisors):
        if sorted(coeffs) != list(divisors):
            raise DomainError(
                "combo keys {:} are not the divisors {:} of level {:}"
                .format(sorted(coeffs), list(divisors), level))
        self.weight = weight
        self.level = level
        self.coeffs = {d: Fraction(coeffs[d]) for d in divisors}

    @property
    def divisors(self):
        return sorted(self.coeffs)

    def vector(self):
        return tuple(self.coeffs[d] for d in self.divisors)

    def valueAtInfinity(self):
        return sum(self.coeffs.values(), Fraction(0))

    def __add__(self, other):
        if (self.weight, self.level) != (other.weight, other.level):
            raise DomainError("cannot add combos of weight/level {:}/{:} "
                              "and {:}/{:}".format(self.weight, self.level,
                                                   other.weight, other.level))
        return EisensteinCombo(
            self.weight, self.level,
            {d: self.coeffs[d] + other.coeffs[d] for d in self.divisors},
            self.divisors)

    def __mul__(self, s):
        s = Fraction(s)
        return EisensteinCombo(self.weight, self.level,
                               {d: s * c for d, c in self.coeffs.items()},
                               self.divisors)

    __rmul__ = __mul__

    def __eq__(self, other):
        return (isinstance(other, EisensteinCombo)
                and self.weight == other.weight
                and self.level == other.level
                and self.coeffs == other.coeffs)

    def __repr__(self):
        return "EisensteinCombo(k={:}, N={:}, {:})".format(
            self.weight, self.level,
            ", ".join("{:}: {:}".format(d, c) for d, c in self.coeffs.items()))

    def toDict(self):
        return {
            "weight": self.weight,
            "level": self.level,
            "coeffs": {str(d): "{:}/{:}".format(c.numerator, c.denominator)
                       for d, c in self.coeffs.items()},
        }


class EFamilyBasis(object):
    """
    Weight two affine family E1 + alpha E0
    E0 vanishes at i infinity and is pinned by beta_1 = 1,
    E1 takes the value 1 there and is pinned by beta_1 = 0.
    """
    def __init__(self, E0, E1):
        self.E0 = E0
        self.E1 = E1

    @property
    def level(self):
        return self.E1.level

    def member(self, c):
        return self.E1 + c * self.E0

    def toDict(self):
        return {"E0": self.E0.toDict(), "E1": self.E1.toDict()}
