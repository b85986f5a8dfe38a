import sympy

from _errors import DomainError
import arith_functions as arith


class OperatorCoeffs(object):
    """
    Third order operator sum_i A_i(t) D^i with D = t d/dt
    Args:
        polys: [A_0, A_1, A_2, A_3] as sympy expressions or Polys in t
        t: the sympy symbol of the coordinate
    """
    def __init__(self, polys, t):
        if len(polys) != 4:
            raise DomainError("a third order operator needs 4 coefficients, "
                              "got {:}".format(len(polys)))
        self.t = t
        self._l_poly = [sympy.Poly(sympy.expand(p), t, domain='QQ')
                        for p in polys]
        if self._l_poly[3].is_zero:
            raise DomainError("leading coefficient A_3 vanishes identically")

    def __getitem__(self, i):
        return self._l_poly[i]

    def degree(self):
        return max(p.degree() for p in self._l_poly if not p.is_zero)

    def coefficientList(self, i):
        """
        Ascending rational coefficients of A_i
        """
        p = self._l_poly[i]
        if p.is_zero:
            return []
        return [arith.toFraction(c) for c in reversed(p.all_coeffs())]

    def __eq__(self, other):
        return (isinstance(other, OperatorCoeffs)
                and all(a == b for a, b in zip(self._l_poly, other._l_poly)))

    def toDict(self):
        return {"A{:}".format(i): str(p.as_expr())
                for i, p in enumerate(self._l_poly)}
