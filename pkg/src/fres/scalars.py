"""Exact coefficient arithmetic.

The ground field is Q, realised by ``fractions.Fraction``.  Presentations may
carry one formal parameter (e.g. the Rota-Baxter weight); coefficients are then
univariate polynomials over Q, implemented by :class:`ParamPoly`.  Division is
only ever needed by units, i.e. nonzero constants.
"""

from fractions import Fraction

from .errors import ParameterNotInvertible

ZERO = Fraction(0)
ONE = Fraction(1)


class ParamPoly:
    """Polynomial in one formal parameter with Fraction coefficients.

    Stored as a coefficient tuple (c0, c1, ...) with no trailing zeros.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        coeffs = [Fraction(c) for c in coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coeffs = tuple(coeffs)

    @staticmethod
    def param():
        return ParamPoly((0, 1))

    @staticmethod
    def const(c):
        return ParamPoly((c,))

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        other = _as_poly(other)
        return other is not None and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return ParamPoly([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
                          for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return ParamPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ParamPoly(())
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
        return ParamPoly(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        if not other.is_unit():
            raise ParameterNotInvertible(f"cannot divide by {other}")
        c = other.coeffs[0]
        return ParamPoly([a / c for a in self.coeffs])

    def __rtruediv__(self, other):
        if not self.is_unit():
            raise ParameterNotInvertible(f"cannot divide by {self}")
        return _as_poly(other) / self

    def is_unit(self):
        return len(self.coeffs) == 1 and self.coeffs[0] != 0

    def is_constant(self):
        return len(self.coeffs) <= 1

    def constant(self):
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def evaluate(self, value):
        value = Fraction(value)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append(f"{c}*t" if c != 1 else "t")
            else:
                parts.append(f"{c}*t^{i}" if c != 1 else f"t^{i}")
        return " + ".join(parts)


def _as_poly(x):
    if isinstance(x, ParamPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return ParamPoly((x,))
    return None


def is_unit(c):
    """True when c is invertible in the coefficient ring."""
    if isinstance(c, ParamPoly):
        return c.is_unit()
    return c != 0


def evaluate_coeff(c, value):
    """Instantiate the formal parameter; Fractions pass through."""
    if isinstance(c, ParamPoly):
        return c.evaluate(value)
    return Fraction(c)


def coeff_str(c):
    if isinstance(c, ParamPoly):
        return f"({c!r})" if not c.is_constant() else str(c.constant())
    return str(c)
