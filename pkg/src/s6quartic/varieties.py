"""Projective points and linear-slice varieties for the quartic family.

Everything here works over the exact field Q(w): points are normalized
coordinate vectors, varieties are linear forms plus higher-degree forms,
and the geometric questions (incidence, singularity, node type, the set
of parameters at which a point is singular) reduce to exact rank and
divisibility computations from the other modules.

The distinguished objects of the suite live here as module constants:
the plane spanned by two linear forms, the conjugate pair of quadric
surfaces on it, and the two distinguished singular points of the t = 6
family member.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product

from .eisenstein import Eisenstein, OMEGA, OMEGA_SQUARED, ONE
from .linalg import (
    Matrix,
    TSolutionSet,
    rref_linear_forms,
    solve_linear_in_t,
    solve_parametric_proportionality,
)
from .parsing import parse_point_coordinates
from .perms import PermGroup, Permutation
from .poly import NVARS, Polynomial, X, divide_exact, quartic_family

DEFAULT_SCAN_CAP = 10**7


class ProjectivePoint:
    """A point of P^5 over Q(w), stored with first nonzero coordinate 1.

    Normalization makes equality of points the same as equality of the
    stored coordinate tuples, so points can live in sets and dicts.
    """

    __slots__ = ("coords",)

    def __init__(self, coords):
        vals = tuple(Eisenstein.coerce(c) for c in coords)
        if len(vals) != NVARS:
            raise ValueError(f"a point needs {NVARS} homogeneous coordinates")
        pivot = next((c for c in vals if c), None)
        if pivot is None:
            raise ValueError("all coordinates are zero")
        if pivot != ONE:
            scale = pivot.inverse()
            vals = tuple(scale * c for c in vals)
        self.coords = vals

    @classmethod
    def from_text(cls, text: str) -> "ProjectivePoint":
        """Parse the bracketed point syntax, e.g. '[1, 1, w, w, w^2, w^2]'."""
        return cls(parse_point_coordinates(text))

    def __getitem__(self, index: int) -> Eisenstein:
        return self.coords[index]

    def __iter__(self):
        return iter(self.coords)

    def sort_key(self):
        return tuple(c.sort_key() for c in self.coords)

    def __eq__(self, other):
        if not isinstance(other, ProjectivePoint):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        return f"ProjectivePoint({[str(c) for c in self.coords]})"

    def __str__(self):
        return "[" + " : ".join(str(c) for c in self.coords) + "]"


def act_on_point(perm: Permutation, point: ProjectivePoint) -> ProjectivePoint:
    """Pushforward action on points: (g.p)_{g(i)} = p_i, re-normalized.

    This is the action dual to Polynomial.apply_permutation, so that
    evaluating a transformed polynomial at a transformed point gives the
    original value.
    """
    if perm.degree != NVARS:
        raise ValueError(f"need a permutation of the {NVARS} coordinates")
    m = perm.index_map()
    coords = [None] * NVARS
    for i, c in enumerate(point.coords):
        coords[m[i]] = c
    return ProjectivePoint(coords)


class LinearSliceVariety:
    """Common zero locus of linear forms and higher-degree forms in P^5.

    The linear forms are reduced to an echelon basis on construction, so
    the linear span is stored canonically.  Equality goes through
    canonicalize(), which additionally reduces the higher-degree forms.
    """

    __slots__ = ("linear_forms", "forms", "_canonical")

    def __init__(self, linear_forms, forms):
        self.linear_forms = tuple(rref_linear_forms(list(linear_forms)))
        checked = []
        for form in forms:
            if not isinstance(form, Polynomial):
                raise TypeError("forms must be Polynomial instances")
            if form.is_zero() or form.degree() < 2 or not form.is_homogeneous():
                raise ValueError(
                    f"not a homogeneous form of degree >= 2: {form}"
                )
            checked.append(form)
        self.forms = tuple(checked)
        self._canonical = None

    def contains(self, point: ProjectivePoint) -> bool:
        return all(
            not form.evaluate(point.coords)
            for form in self.linear_forms + self.forms
        )

    def canonical(self):
        if self._canonical is None:
            self._canonical = canonicalize(self)
        return self._canonical

    def __eq__(self, other):
        if not isinstance(other, LinearSliceVariety):
            return NotImplemented
        return self.canonical() == other.canonical()

    def __hash__(self):
        return hash(self.canonical())

    def __repr__(self):
        linears = ", ".join(str(f) for f in self.linear_forms)
        forms = ", ".join(str(f) for f in self.forms)
        return f"LinearSliceVariety([{linears}], [{forms}])"


def act_on_variety(
    perm: Permutation, variety: LinearSliceVariety
) -> LinearSliceVariety:
    """Pushforward of every defining form; the image is re-canonicalized."""
    if perm.degree != NVARS:
        raise ValueError(f"need a permutation of the {NVARS} coordinates")
    m = perm.index_map()
    return LinearSliceVariety(
        [f.apply_permutation(m) for f in variety.linear_forms],
        [f.apply_permutation(m) for f in variety.forms],
    )


def canonicalize(variety: LinearSliceVariety):
    """Canonical form deciding equality of slices.

    For the complete-intersection shape of two linear forms and one
    quadric the canonical form is exact: the two pivot variables of the
    echelon basis are substituted out of the quadric, and the reduced
    quadric is scaled to lex-leading coefficient 1.  A quadric that
    vanishes identically after reduction means the input was degenerate
    (the "quadric" contained the linear span) and is rejected.

    Other shapes get a structural canonical form: echelon linear forms
    plus the higher forms scaled monic, deduplicated, and sorted.
    """
    linear_key = tuple(f.key() for f in variety.linear_forms)
    if (
        len(variety.linear_forms) == 2
        and len(variety.forms) == 1
        and variety.forms[0].degree() == 2
    ):
        assignments = {}
        for f in variety.linear_forms:
            pivot = f.leading_monomial().index(1)
            assignments[pivot] = X[pivot] - f
        reduced = variety.forms[0].substitute_linear(assignments)
        if reduced.is_zero():
            raise ValueError(
                "degenerate slice: the quadric vanishes on the linear span"
            )
        monic = reduced / reduced.leading_coefficient()
        return (linear_key, (monic.key(),))
    monic_keys = {
        (form / form.leading_coefficient()).key() for form in variety.forms
    }
    return (linear_key, tuple(sorted(monic_keys)))


def variety_eq(v1: LinearSliceVariety, v2: LinearSliceVariety) -> bool:
    return canonicalize(v1) == canonicalize(v2)


@dataclass
class IncidenceMultiset:
    """How a group orbit of a variety meets a point.

    entries lists (group element, transformed variety, contains-point
    flag) for every group element; distinct_through_point lists the
    distinct transformed varieties containing the point in order of first
    appearance; multiplicity counts how many group elements land on each.
    """

    entries: tuple
    distinct_through_point: tuple
    multiplicity: dict

    @property
    def hit_count(self) -> int:
        return sum(1 for _, _, flag in self.entries if flag)


def incidence_table(
    group: PermGroup,
    dictionary,
    variety: LinearSliceVariety,
    point: ProjectivePoint,
) -> IncidenceMultiset:
    """Tabulate which group translates of the variety pass through the point.

    The group permutes the labels 1..5; the dictionary converts each
    element to its induced permutation of the six coordinates.
    """
    entries = []
    distinct = []
    counts = {}
    for gamma in group:
        induced = dictionary.induced_variable_permutation(gamma)
        image = act_on_variety(induced, variety)
        flag = image.contains(point)
        entries.append((gamma, image, flag))
        if flag:
            if image not in counts:
                counts[image] = 0
                distinct.append(image)
            counts[image] += 1
    return IncidenceMultiset(tuple(entries), tuple(distinct), counts)


def projective_orbit(group: PermGroup, point: ProjectivePoint) -> tuple:
    """Orbit of the point under a group of coordinate permutations,
    deduplicated projectively and sorted deterministically."""
    if group.degree != NVARS:
        raise ValueError(f"need a group permuting the {NVARS} coordinates")
    seen = {act_on_point(g, point) for g in group}
    return tuple(sorted(seen, key=ProjectivePoint.sort_key))


# -- the quartic family -------------------------------------------------------

_POWER_SUM_4 = X[0] ** 4 + X[1] ** 4 + X[2] ** 4 + X[3] ** 4 + X[4] ** 4 + X[5] ** 4
_NEG_SQUARE_SQ = -((X[0] ** 2 + X[1] ** 2 + X[2] ** 2 + X[3] ** 2 + X[4] ** 2 + X[5] ** 2) ** 2)
_P4_GRADIENT = _POWER_SUM_4.gradient()
_NSQ_GRADIENT = _NEG_SQUARE_SQ.gradient()
_ONES_ROW = tuple([ONE] * NVARS)


@lru_cache(maxsize=None)
def _family(t: Fraction):
    linear, quartic = quartic_family(t)
    return linear, quartic, quartic.gradient()


@lru_cache(maxsize=None)
def _family_second_partials(t: Fraction):
    _, _, grad = _family(t)
    return tuple(
        tuple(g.partial_derivative(j) for j in range(NVARS)) for g in grad
    )


def family_member(t) -> LinearSliceVariety:
    """The slice (hyperplane, degree-4 member) of the family at parameter t."""
    linear, quartic, _ = _family(Fraction(t))
    return LinearSliceVariety([linear], [quartic])


def is_singular_on_family(t, point: ProjectivePoint) -> bool:
    """Jacobian test on the pair (linear form, quartic) in P^5.

    The point is singular iff it lies on both forms and the 2x6 matrix of
    their gradients has rank at most 1.
    """
    linear, quartic, grad = _family(Fraction(t))
    coords = point.coords
    if linear.evaluate(coords) or quartic.evaluate(coords):
        return False
    rows = [_ONES_ROW, [g.evaluate(coords) for g in grad]]
    return Matrix(rows).rank() <= 1


def is_node(t, point: ProjectivePoint) -> bool:
    """Whether a singular point of the family member is an ordinary double
    point, by the rank of a 4x4 Hessian in a fixed affine chart.

    Chart rule: dehomogenize at the first nonzero coordinate, then
    eliminate the lowest-index remaining variable using the linear form.
    The Hessian rank of an isolated singularity does not depend on this
    choice; fixing it makes reports reproducible.  Calling this on a
    point that is not singular on the family member is an error.
    """
    t = Fraction(t)
    if not is_singular_on_family(t, point):
        raise ValueError(
            f"node test requires a singular point; {point} is smooth on the "
            f"t = {t} member"
        )
    coords = point.coords
    chart = next(i for i, c in enumerate(coords) if c)
    eliminated = next(i for i in range(NVARS) if i != chart)
    rest = [i for i in range(NVARS) if i not in (chart, eliminated)]
    # On the chart x_chart = 1 the linear form solves to x_eliminated =
    # -1 - sum(rest), an affine substitution.  The Hessian of the
    # substituted quartic is therefore A^T H A for the constant Jacobian A
    # whose column for the variable r is e_r - e_eliminated, i.e. entrywise
    # H[r][s] - H[r][e] - H[e][s] + H[e][e] on the full Hessian H at the
    # point.
    second = _family_second_partials(t)
    involved = rest + [eliminated]
    vals = {}
    for a, i in enumerate(involved):
        for j in involved[a:]:
            value = second[i][j].evaluate(coords)
            vals[i, j] = value
            vals[j, i] = value
    e = eliminated
    hessian = [
        [vals[r, s] - vals[r, e] - vals[e, s] + vals[e, e] for s in rest]
        for r in rest
    ]
    return Matrix(hessian).rank() == len(rest)


def singular_t_values(point: ProjectivePoint) -> TSolutionSet:
    """Exact set of parameters t at which the point is singular.

    Requires the point to lie on the hyperplane (the t-independent linear
    condition).  The singularity conditions are linear in t: the gradient
    of the quartic must be proportional to the all-ones vector, and the
    quartic itself must vanish.  Both are solved exactly and intersected.
    """
    coords = point.coords
    if sum(coords, Eisenstein(0)):
        raise ValueError(
            f"singular-parameter analysis requires the linear form to vanish "
            f"at {point}"
        )
    v0 = [g.evaluate(coords) for g in _NSQ_GRADIENT]
    v1 = [g.evaluate(coords) for g in _P4_GRADIENT]
    proportional = solve_parametric_proportionality(v0, v1, _ONES_ROW)
    alpha = _NEG_SQUARE_SQ.evaluate(coords)
    beta = _POWER_SUM_4.evaluate(coords)
    on_member = solve_linear_in_t([(alpha, beta)])
    return proportional.intersect(on_member)


def scan_alphabet(t, alphabet, cap: int = DEFAULT_SCAN_CAP) -> list:
    """All singular points of the t-member whose coordinates lie in the
    alphabet, deduplicated projectively and sorted deterministically."""
    letters = sorted(
        {Eisenstein.coerce(entry) for entry in alphabet},
        key=Eisenstein.sort_key,
    )
    if not letters:
        raise ValueError("the alphabet must be nonempty")
    if cap <= 0:
        raise ValueError("the enumeration cap must be positive")
    if len(letters) ** NVARS > cap:
        raise ValueError(
            f"scan space {len(letters)}^{NVARS} exceeds the cap {cap}"
        )
    t = Fraction(t)
    seen = set()
    found = []
    for tup in product(letters, repeat=NVARS):
        if not any(tup):
            continue
        p = ProjectivePoint(tup)
        if p in seen:
            continue
        seen.add(p)
        if is_singular_on_family(t, p):
            found.append(p)
    found.sort(key=ProjectivePoint.sort_key)
    return found


# -- the distinguished plane, quadrics, and points ----------------------------

PLANE_FORMS = (X[0] + X[2] + X[5], X[1] + X[3] + X[4])

_FRONT = X[0] ** 2 + X[0] * X[2] + X[2] ** 2
_BACK = X[1] ** 2 + X[1] * X[3] + X[3] ** 2

QUADRIC_PAIR = (_FRONT + OMEGA * _BACK, _FRONT + OMEGA_SQUARED * _BACK)

QUADRIC_SURFACES = (
    LinearSliceVariety(PLANE_FORMS, [QUADRIC_PAIR[0]]),
    LinearSliceVariety(PLANE_FORMS, [QUADRIC_PAIR[1]]),
)

CUBE_ROOT_POINT = ProjectivePoint(
    (ONE, ONE, OMEGA, OMEGA, OMEGA_SQUARED, OMEGA_SQUARED)
)
SIGN_POINT = ProjectivePoint((-1, -1, -1, 1, 1, 1))


def restrict_to_plane(poly: Polynomial) -> Polynomial:
    """Restriction to the distinguished plane: substitute the two echelon
    pivot variables, x5 -> -x0 - x2 and x4 -> -x1 - x3."""
    return poly.substitute_linear({5: -X[0] - X[2], 4: -X[1] - X[3]})


def quadric_pair_quotient(poly: Polynomial):
    """Exact quotient of poly by both distinguished quadrics, if it is a
    nonzero constant; None when the division fails or leaves a non-unit."""
    once = divide_exact(poly, QUADRIC_PAIR[0])
    if once is None:
        return None
    twice = divide_exact(once, QUADRIC_PAIR[1])
    if twice is None or twice.is_zero() or not twice.is_constant():
        return None
    return twice.constant_value()


@dataclass(frozen=True)
class FactorizationResult:
    factors: bool
    scalar: Eisenstein | None


def restriction_factorization_check(t) -> FactorizationResult:
    """Whether the t-member restricted to the distinguished plane splits as
    a scalar times the product of the two quadrics, and the scalar."""
    _, quartic, _ = _family(Fraction(t))
    scalar = quadric_pair_quotient(restrict_to_plane(quartic))
    return FactorizationResult(scalar is not None, scalar)
