"""Exact arithmetic in the Eisenstein field Q(w), where w^2 + w + 1 = 0.

Elements are written on the basis {1, w} as a pair of rationals, and every
operation eagerly rewrites w^2 as -1 - w, so equality is plain component
equality.  The rational layer is fractions.Fraction, which already keeps
numerators and denominators coprime with a positive denominator.

Division uses the field norm N(a + b*w) = a^2 - a*b + b^2: the inverse of a
nonzero element is its conjugate divided by its norm.
"""

from __future__ import annotations

from fractions import Fraction

Rational = Fraction


class Eisenstein:
    """An element a + b*w of Q(w); immutable and hashable."""

    __slots__ = ("re", "om")

    def __init__(self, re=0, om=0):
        if not isinstance(re, (int, Fraction)) or not isinstance(om, (int, Fraction)):
            raise TypeError("field components must be int or Fraction")
        self.re = Fraction(re)
        self.om = Fraction(om)

    @classmethod
    def coerce(cls, value) -> "Eisenstein":
        """Accept int, Fraction, or Eisenstein; reject everything else."""
        if isinstance(value, Eisenstein):
            return value
        if isinstance(value, (int, Fraction)):
            return cls(value)
        raise TypeError(f"cannot interpret {value!r} as a field element")

    # -- ring structure --------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, (Eisenstein, int, Fraction)):
            return NotImplemented
        other = Eisenstein.coerce(other)
        return Eisenstein(self.re + other.re, self.om + other.om)

    __radd__ = __add__

    def __neg__(self):
        return Eisenstein(-self.re, -self.om)

    def __sub__(self, other):
        if not isinstance(other, (Eisenstein, int, Fraction)):
            return NotImplemented
        return self + (-Eisenstein.coerce(other))

    def __rsub__(self, other):
        if not isinstance(other, (Eisenstein, int, Fraction)):
            return NotImplemented
        return Eisenstein.coerce(other) + (-self)

    def __mul__(self, other):
        if not isinstance(other, (Eisenstein, int, Fraction)):
            return NotImplemented
        other = Eisenstein.coerce(other)
        a, b, c, d = self.re, self.om, other.re, other.om
        # (a + b*w)(c + d*w) = ac + (ad + bc)*w + bd*w^2,  w^2 = -1 - w
        return Eisenstein(a * c - b * d, a * d + b * c - b * d)

    __rmul__ = __mul__

    def conjugate(self) -> "Eisenstein":
        """The image under w -> w^2, the nontrivial field automorphism."""
        return Eisenstein(self.re - self.om, -self.om)

    def norm(self) -> Fraction:
        """N(a + b*w) = a^2 - a*b + b^2, multiplicative and 0 only at 0."""
        return self.re * self.re - self.re * self.om + self.om * self.om

    def inverse(self) -> "Eisenstein":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero in Q(w)")
        conj = self.conjugate()
        return Eisenstein(conj.re / n, conj.om / n)

    def __truediv__(self, other):
        if not isinstance(other, (Eisenstein, int, Fraction)):
            return NotImplemented
        return self * Eisenstein.coerce(other).inverse()

    def __rtruediv__(self, other):
        if not isinstance(other, (Eisenstein, int, Fraction)):
            return NotImplemented
        return Eisenstein.coerce(other) * self.inverse()

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            raise TypeError("exponent must be an integer")
        base = self
        if exponent < 0:
            base = self.inverse()
            exponent = -exponent
        result = ONE
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    # -- structure queries ------------------------------------------------

    def is_rational(self) -> bool:
        return self.om == 0

    def __bool__(self):
        return self.re != 0 or self.om != 0

    def __eq__(self, other):
        try:
            other = Eisenstein.coerce(other)
        except TypeError:
            return NotImplemented
        return self.re == other.re and self.om == other.om

    def __hash__(self):
        return hash((self.re, self.om))

    def sort_key(self):
        """Arbitrary but fixed total order, used for deterministic output."""
        return (self.re, self.om)

    def __repr__(self):
        return f"Eisenstein({self.re!r}, {self.om!r})"

    def __str__(self):
        if self.om == 0:
            return str(self.re)
        if self.om == 1:
            wpart = "w"
        elif self.om == -1:
            wpart = "-w"
        else:
            wpart = f"{self.om}*w"
        if self.re == 0:
            return wpart
        sign = "-" if self.om < 0 else "+"
        mag = wpart.lstrip("-")
        return f"{self.re} {sign} {mag}"


ZERO = Eisenstein(0)
ONE = Eisenstein(1)
OMEGA = Eisenstein(0, 1)
OMEGA_SQUARED = Eisenstein(-1, -1)
