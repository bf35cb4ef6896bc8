"""Sparse multivariate polynomials over Q(w) in the fixed variables x0..x5.

A polynomial is a map from exponent vectors (6-tuples of non-negative ints)
to nonzero Eisenstein coefficients; zero coefficients are pruned on every
operation, so structural equality is mathematical equality.  The ambient
variable set is fixed at six, matching the projective space P^5 all the
geometry lives in.

The monomial order used everywhere (leading terms, exact division, text
output) is lexicographic on the exponent vector with x0 most significant.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Sequence

from .eisenstein import Eisenstein, ONE, Rational, ZERO

NVARS = 6

Monomial = tuple  # 6-tuple of non-negative ints


def monomial_degree(m: Monomial) -> int:
    return sum(m)


def monomial_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def monomial_divides(a: Monomial, b: Monomial) -> bool:
    """True when a | b componentwise."""
    return all(x <= y for x, y in zip(a, b))


def monomial_div(numer: Monomial, denom: Monomial) -> Monomial:
    return tuple(n - d for n, d in zip(numer, denom))


_CONST = (0,) * NVARS


class Polynomial:
    """Immutable sparse polynomial; supports +, -, *, scalar /, ** and hashing."""

    __slots__ = ("terms", "_key")

    def __init__(self, terms: Mapping[Monomial, object] | None = None):
        clean = {}
        if terms:
            for mono, coeff in terms.items():
                mono = tuple(mono)
                if len(mono) != NVARS or any(
                    not isinstance(e, int) or e < 0 for e in mono
                ):
                    raise ValueError(f"bad exponent vector {mono!r}")
                c = Eisenstein.coerce(coeff)
                if c:
                    clean[mono] = c
        self.terms = clean
        self._key = None

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls()

    @classmethod
    def constant(cls, value) -> "Polynomial":
        return cls({_CONST: Eisenstein.coerce(value)})

    @classmethod
    def variable(cls, index: int) -> "Polynomial":
        if not 0 <= index < NVARS:
            raise ValueError(f"variable index {index} out of range")
        mono = tuple(1 if i == index else 0 for i in range(NVARS))
        return cls({mono: ONE})

    # -- ring structure -----------------------------------------------------

    def __add__(self, other):
        other = _coerce_poly(other)
        if other is NotImplemented:
            return NotImplemented
        terms = dict(self.terms)
        for mono, coeff in other.terms.items():
            acc = terms.get(mono, ZERO) + coeff
            if acc:
                terms[mono] = acc
            else:
                terms.pop(mono, None)
        return _raw(terms)

    __radd__ = __add__

    def __neg__(self):
        return _raw({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = _coerce_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce_poly(other)
        if other is NotImplemented:
            return NotImplemented
        terms: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = monomial_mul(m1, m2)
                acc = terms.get(mono, ZERO) + c1 * c2
                if acc:
                    terms[mono] = acc
                else:
                    terms.pop(mono, None)
        return _raw(terms)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        c = Eisenstein.coerce(scalar)
        return self * c.inverse()

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("polynomial exponent must be a non-negative integer")
        result = Polynomial.constant(1)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- queries -------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(m == _CONST for m in self.terms)

    def constant_value(self) -> Eisenstein:
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self.terms.get(_CONST, ZERO)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(monomial_degree(m) for m in self.terms)

    def is_homogeneous(self) -> bool:
        degs = {monomial_degree(m) for m in self.terms}
        return len(degs) <= 1

    def leading_monomial(self) -> Monomial:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        return max(self.terms)

    def leading_coefficient(self) -> Eisenstein:
        return self.terms[self.leading_monomial()]

    def coefficient(self, mono: Monomial) -> Eisenstein:
        return self.terms.get(tuple(mono), ZERO)

    def variables_used(self) -> set:
        return {
            i for m in self.terms for i in range(NVARS) if m[i] > 0
        }

    # -- calculus and actions --------------------------------------------------

    def evaluate(self, point: Sequence) -> Eisenstein:
        if len(point) != NVARS:
            raise ValueError(f"point must have {NVARS} coordinates")
        vals = [Eisenstein.coerce(c) for c in point]
        total = ZERO
        for mono, coeff in self.terms.items():
            acc = coeff
            for i, e in enumerate(mono):
                if e:
                    acc = acc * vals[i] ** e
            total = total + acc
        return total

    def partial_derivative(self, index: int) -> "Polynomial":
        if not 0 <= index < NVARS:
            raise ValueError(f"variable index {index} out of range")
        terms = {}
        for mono, coeff in self.terms.items():
            e = mono[index]
            if e == 0:
                continue
            lowered = tuple(
                v - 1 if i == index else v for i, v in enumerate(mono)
            )
            terms[lowered] = terms.get(lowered, ZERO) + coeff * e
        return Polynomial(terms)

    def gradient(self) -> tuple:
        return tuple(self.partial_derivative(i) for i in range(NVARS))

    def substitute_linear(self, assignments: Mapping[int, object]) -> "Polynomial":
        """Replace variables by polynomials of degree <= 1 (constants allowed)."""
        subs = {}
        for index, value in assignments.items():
            if not 0 <= index < NVARS:
                raise ValueError(f"variable index {index} out of range")
            p = value if isinstance(value, Polynomial) else Polynomial.constant(value)
            if p.degree() > 1:
                raise ValueError(
                    f"substitution for x{index} has degree {p.degree()} > 1"
                )
            subs[index] = p
        total = Polynomial.zero()
        for mono, coeff in self.terms.items():
            factor = Polynomial.constant(coeff)
            plain = list(_CONST)
            for i, e in enumerate(mono):
                if e and i in subs:
                    factor = factor * subs[i] ** e
                else:
                    plain[i] = e
            if any(plain):
                factor = factor * _raw({tuple(plain): ONE})
            total = total + factor
        return total

    def apply_permutation(self, index_map: Sequence[int]) -> "Polynomial":
        """Pushforward: replace x_j by x_{index_map[j]} everywhere."""
        m = tuple(index_map)
        if sorted(m) != list(range(NVARS)):
            raise ValueError(f"not a bijection of the variable indices: {m!r}")
        terms = {}
        for mono, coeff in self.terms.items():
            image = [0] * NVARS
            for i, e in enumerate(mono):
                image[m[i]] = e
            terms[tuple(image)] = coeff
        return _raw(terms)

    # -- identity ---------------------------------------------------------------

    def key(self):
        """Sorted term tuple; the canonical identity of the polynomial."""
        if self._key is None:
            self._key = tuple(
                (m, (c.re, c.om))
                for m, c in sorted(self.terms.items(), reverse=True)
            )
        return self._key

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.key() == other.key()
        if isinstance(other, (int, Fraction, Eisenstein)):
            return self == Polynomial.constant(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.key())

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"Polynomial({self})"

    def __str__(self):
        return format_polynomial(self)


def _raw(terms: dict) -> Polynomial:
    """Internal: wrap an already-clean term dict without re-validation."""
    p = Polynomial.__new__(Polynomial)
    p.terms = terms
    p._key = None
    return p


def _coerce_poly(value):
    if isinstance(value, Polynomial):
        return value
    if isinstance(value, (int, Fraction, Eisenstein)):
        return Polynomial.constant(value)
    return NotImplemented


X = tuple(Polynomial.variable(i) for i in range(NVARS))


# -- text output ------------------------------------------------------------
#
# format_polynomial is the inverse of parsing.parse_polynomial: terms are
# emitted most-significant first under the lex order, coefficients in a form
# the grammar accepts, so parse(format(P)) == P.

def _monomial_text(mono: Monomial) -> str:
    parts = []
    for i, e in enumerate(mono):
        if e == 1:
            parts.append(f"x{i}")
        elif e > 1:
            parts.append(f"x{i}^{e}")
    return "*".join(parts)


def _rational_text(q: Fraction) -> str:
    return str(q)


def _term_text(mono: Monomial, coeff: Eisenstein):
    """Return (sign, body) with sign in {+1, -1} and body free of a sign."""
    mtext = _monomial_text(mono)
    if coeff.om == 0:
        sign = 1 if coeff.re > 0 else -1
        mag = abs(coeff.re)
        if mtext and mag == 1:
            return sign, mtext
        ctext = _rational_text(mag)
        return sign, f"{ctext}*{mtext}" if mtext else ctext
    if coeff.re == 0:
        sign = 1 if coeff.om > 0 else -1
        mag = abs(coeff.om)
        ctext = "w" if mag == 1 else f"{_rational_text(mag)}*w"
        return sign, f"{ctext}*{mtext}" if mtext else ctext
    inner_sign = "+" if coeff.om > 0 else "-"
    om_mag = abs(coeff.om)
    wtext = "w" if om_mag == 1 else f"{_rational_text(om_mag)}*w"
    ctext = f"({_rational_text(coeff.re)} {inner_sign} {wtext})"
    return 1, f"{ctext}*{mtext}" if mtext else ctext


def format_polynomial(p: Polynomial) -> str:
    if not p.terms:
        return "0"
    pieces = []
    for mono, coeff in sorted(p.terms.items(), reverse=True):
        sign, body = _term_text(mono, coeff)
        if not pieces:
            pieces.append(body if sign > 0 else f"-{body}")
        else:
            pieces.append(f" + {body}" if sign > 0 else f" - {body}")
    return "".join(pieces)


# -- exact division -----------------------------------------------------------

def divide_exact(numerator: Polynomial, divisor: Polynomial):
    """Quotient with zero remainder, or None when the division is not exact.

    Single-divisor division under the lex order: at every step the divisor's
    leading term must divide the running remainder's leading term, otherwise
    no exact quotient exists (any cofactor would contribute that leading
    term).  The leading monomial strictly decreases, so this terminates.
    """
    if divisor.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    lead_mono = divisor.leading_monomial()
    lead_coeff = divisor.terms[lead_mono]
    remainder = dict(numerator.terms)
    quotient: dict = {}
    while remainder:
        top = max(remainder)
        if not monomial_divides(lead_mono, top):
            return None
        qm = monomial_div(top, lead_mono)
        qc = remainder[top] / lead_coeff
        quotient[qm] = qc
        for mono, coeff in divisor.terms.items():
            target = monomial_mul(qm, mono)
            acc = remainder.get(target, ZERO) - qc * coeff
            if acc:
                remainder[target] = acc
            else:
                remainder.pop(target, None)
    return _raw(quotient)


# -- the pencil of invariant quartics -----------------------------------------

def quartic_family(t) -> tuple:
    """The hyperplane L = sum x_i and the quartic t*sum x_i^4 - (sum x_i^2)^2."""
    t = Rational(t)
    linear = Polynomial.zero()
    fourth = Polynomial.zero()
    square = Polynomial.zero()
    for i in range(NVARS):
        linear = linear + X[i]
        fourth = fourth + X[i] ** 4
        square = square + X[i] ** 2
    return linear, fourth * t - square * square
