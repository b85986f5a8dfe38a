from fractions import Fraction
import math

from _errors import DomainError


class EtaQuotient(object):
    """
    Formal product prod_d eta(d tau)^(r_d)
    Args:
        factors: iterable of (d, r_d), d positive, r_d signed
        level: level the quotient lives on; every d must divide it
    """
    def __init__(self, factors, level):
        self.level = level
        merged = {}
        for d, r in factors:
            if d < 1:
                raise DomainError("eta factor index must be positive, got {:}"
                                  .format(d))
            if level % d:
                raise DomainError("eta factor {:} does not divide level {:}"
                                  .format(d, level))
            merged[d] = merged.get(d, 0) + r
        self.factors = tuple(sorted((d, r) for d, r in merged.items() if r))

    def prefactorExponent(self):
        """
        Exponent of q in front of the product, sum d r_d / 24
        """
        return Fraction(sum(d * r for d, r in self.factors), 24)

    def weight(self):
        return Fraction(sum(r for _, r in self.factors), 2)

    def __mul__(self, other):
        return EtaQuotient(self.factors + other.factors,
                           math.lcm(self.level, other.level))

    def inverse(self):
        return EtaQuotient([(d, -r) for d, r in self.factors], self.level)

    def __eq__(self, other):
        return (isinstance(other, EtaQuotient)
                and self.factors == other.factors)

    def __hash__(self):
        return hash(self.factors)

    def __repr__(self):
        return " ".join("eta({:}t)^{:}".format(d, r) for d, r in self.factors)

    def toDict(self):
        return {"level": self.level,
                "factors": [[d, r] for d, r in self.factors]}


class HauptmodulCatalogEntry(object):
    """
    Catalog record of a Fricke group Hauptmodul t_N = q + O(q^2)
    Args:
        level: N
        eta_quotient: EtaQuotient defining t_N (None when unspecified)
        expected_leading: first Fourier coefficients, index 1 first
        gauge: (scale, offset) turning a family parameter into the
               coefficient of E0 in E1 + c E0
        fricke_expected, branch_expected: reference decimal strings
    """
    def __init__(self, level, eta_quotient, expected_leading, gauge,
                 fricke_expected=None, branch_expected=None):
        self.level = level
        self.eta_quotient = eta_quotient
        self.expected_leading = tuple(expected_leading)
        self.gauge = gauge
        self.fricke_expected = fricke_expected
        self.branch_expected = branch_expected

    @property
    def specified(self):
        return self.eta_quotient is not None

    def familyCoefficient(self, alpha):
        scale, offset = self.gauge
        return scale * alpha + offset
