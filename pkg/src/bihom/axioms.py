"""Exhaustive identity checkers for Hom-, BiHom-, type-B1 and colour algebras.

Every identity is multilinear, so it is checked on basis tuples only; the
first failing tuple in lexicographic order is reported together with its
exact residual.  Each identity is registered under a name (``"family:law"``)
so a witness can be re-evaluated with :func:`evaluate_identity`.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import product
from typing import Callable, Sequence

from .linalg import Matrix, Vector, is_zero_vector, lincomb, vadd, vsub
from .model import Algebra, CheckReport, InputError


class AxiomSet(str, Enum):
    commuting_maps = "commuting_maps"
    multiplicative = "multiplicative"
    hom_lie = "hom_lie"
    hom_lie_I2 = "hom_lie_I2"
    hom_lie_I3 = "hom_lie_I3"
    left_hom_leibniz = "left_hom_leibniz"
    right_hom_leibniz = "right_hom_leibniz"
    symmetric_hom_leibniz = "symmetric_hom_leibniz"
    bihom_lie = "bihom_lie"
    left_bihom_leibniz = "left_bihom_leibniz"
    right_bihom_leibniz = "right_bihom_leibniz"
    symmetric_bihom_leibniz = "symmetric_bihom_leibniz"
    bihom_lie_B1 = "bihom_lie_B1"
    left_bihom_leibniz_B1 = "left_bihom_leibniz_B1"
    right_bihom_leibniz_B1 = "right_bihom_leibniz_B1"
    symmetric_bihom_leibniz_B1 = "symmetric_bihom_leibniz_B1"
    bihom_associative_colour = "bihom_associative_colour"
    bihom_lie_colour = "bihom_lie_colour"
    left_bihom_leibniz_colour = "left_bihom_leibniz_colour"
    right_bihom_leibniz_colour = "right_bihom_leibniz_colour"
    symmetric_bihom_leibniz_colour = "symmetric_bihom_leibniz_colour"
    # Hom-type laws with the commutation factor (super case: Z_2 with signs)
    hom_lie_colour = "hom_lie_colour"
    left_hom_leibniz_colour = "left_hom_leibniz_colour"
    right_hom_leibniz_colour = "right_hom_leibniz_colour"
    symmetric_hom_leibniz_colour = "symmetric_hom_leibniz_colour"

    @property
    def is_colour(self) -> bool:
        return self.value.endswith("_colour")


AXIOM_NAMES = tuple(a.value for a in AxiomSet)


class _Ev:
    """Evaluation context: bracket, structure maps and commutation factor."""

    def __init__(self, L: Algebra, colour: bool):
        self.L = L
        self.n = L.dim
        self.colour = colour
        if colour:
            if L.grading is None:
                raise InputError("colour identities need a graded algebra")
            self._eps = L.grading.epsilon
            self._add = L.grading.group.add
        self._alpha = L.alpha
        self._beta = L.beta
        self._powers: dict = {}

    def br(self, x, y) -> Vector:
        return self.L.bracket(x, y)

    def a(self, x) -> Vector:
        return self._alpha @ x

    def b(self, x) -> Vector:
        return self._beta @ x

    def ab(self, x) -> Vector:
        return self._alpha @ (self._beta @ x)

    def b2(self, x) -> Vector:
        return self._beta @ (self._beta @ x)

    def power(self, k: int, l: int) -> Matrix:
        key = (k, l)
        if key not in self._powers:
            self._powers[key] = (self._alpha ** k) @ (self._beta ** l)
        return self._powers[key]

    def eps(self, d1, d2):
        if not self.colour:
            return 1
        return self._eps(d1, d2)

    def dsum(self, d1, d2):
        return self._add(d1, d2) if self.colour else ()


Residual = Callable[[_Ev, Sequence, Sequence], Vector]


@dataclass(frozen=True)
class Identity:
    name: str
    arity: int
    residual: Residual
    colour: bool = False


def _sum(*vs: Vector) -> Vector:
    out = vs[0]
    for v in vs[1:]:
        out = vadd(out, v)
    return out


def _scale(t, v: Vector) -> Vector:
    if t == 1:
        return v
    return tuple(t * a for a in v)


# --- structure-map laws -----------------------------------------------------

def _commuting(ev, xs, ds):
    (x,) = xs
    return vsub(ev.a(ev.b(x)), ev.b(ev.a(x)))


def _mult_alpha(ev, xs, ds):
    x, y = xs
    return vsub(ev.a(ev.br(x, y)), ev.br(ev.a(x), ev.a(y)))


def _mult_beta(ev, xs, ds):
    x, y = xs
    return vsub(ev.b(ev.br(x, y)), ev.br(ev.b(x), ev.b(y)))


# --- Hom-type ----------------------------------------------------------------

def _skew(ev, xs, ds):
    x, y = xs
    return vadd(ev.br(x, y), ev.br(y, x))


def _hom_jacobi(ev, xs, ds):
    x, y, z = xs
    br, a = ev.br, ev.a
    return _sum(br(a(x), br(y, z)), br(a(y), br(z, x)), br(a(z), br(x, y)))


def _jacobi_I(ev, xs, ds):
    x, y, z = xs
    br, a = ev.br, ev.a
    return _sum(br(x, br(y, a(z))), br(y, br(z, a(x))), br(z, br(x, a(y))))


def _left_hom(ev, xs, ds):
    x, y, z = xs
    br, a = ev.br, ev.a
    dx, dy, dz = ds
    return vsub(vsub(br(a(x), br(y, z)), br(br(x, y), a(z))),
                _scale(ev.eps(dx, dy), br(a(y), br(x, z))))


def _right_hom(ev, xs, ds):
    x, y, z = xs
    br, a = ev.br, ev.a
    dx, dy, dz = ds
    return vadd(vsub(br(a(x), br(y, z)), br(br(x, y), a(z))),
                _scale(ev.eps(dy, dz), br(br(x, z), a(y))))


def _colour_skew(ev, xs, ds):
    x, y = xs
    dx, dy = ds
    return vadd(ev.br(x, y), _scale(ev.eps(dx, dy), ev.br(y, x)))


def _colour_hom_jacobi(ev, xs, ds):
    x, y, z = xs
    dx, dy, dz = ds
    br, a = ev.br, ev.a
    return _sum(_scale(ev.eps(dz, dx), br(a(x), br(y, z))),
                _scale(ev.eps(dx, dy), br(a(y), br(z, x))),
                _scale(ev.eps(dy, dz), br(a(z), br(x, y))))


# --- BiHom-type --------------------------------------------------------------

def _bihom_skew(ev, xs, ds):
    x, y = xs
    dx, dy = ds
    return vadd(ev.br(ev.b(x), ev.a(y)), _scale(ev.eps(dx, dy), ev.br(ev.b(y), ev.a(x))))


def _bihom_jacobi(ev, xs, ds):
    x, y, z = xs
    dx, dy, dz = ds
    br, a, b, b2 = ev.br, ev.a, ev.b, ev.b2
    return _sum(_scale(ev.eps(dz, dx), br(b2(x), br(b(y), a(z)))),
                _scale(ev.eps(dx, dy), br(b2(y), br(b(z), a(x)))),
                _scale(ev.eps(dy, dz), br(b2(z), br(b(x), a(y)))))


def _left_bihom(ev, xs, ds):
    x, y, z = xs
    dx, dy, dz = ds
    br, a, b = ev.br, ev.a, ev.b
    return vsub(vsub(br(ev.ab(x), br(y, z)), br(br(b(x), y), b(z))),
                _scale(ev.eps(dx, dy), br(b(y), br(a(x), z))))


def _right_bihom(ev, xs, ds):
    x, y, z = xs
    dx, dy, dz = ds
    br, a, b = ev.br, ev.a, ev.b
    return vsub(vsub(br(br(x, y), ev.ab(z)), _scale(ev.eps(dy, dz), br(br(x, b(z)), a(y)))),
                br(a(x), br(y, a(z))))


def _symmetric_bihom(ev, xs, ds):
    x, y, z = xs
    dx, dy, dz = ds
    br, a, b = ev.br, ev.a, ev.b
    return vadd(br(b(y), br(a(x), a(z))),
                _scale(ev.eps(dy, ev.dsum(dx, dz)), br(br(b(x), b(z)), a(y))))


def _bihom_assoc(ev, xs, ds):
    x, y, z = xs
    br = ev.br
    return vsub(br(ev.a(x), br(y, z)), br(br(x, y), ev.b(z)))


# --- type B1 -----------------------------------------------------------------

def _b1_skew(ev, xs, ds):
    x, y = xs
    b, b2 = ev.b, ev.b2
    return vadd(ev.br(b(x), b2(y)), ev.br(b(y), b2(x)))


def _b1_jacobi(ev, xs, ds):
    x, y, z = xs
    br, a, b, b2 = ev.br, ev.a, ev.b, ev.b2
    return _sum(br(a(x), br(b(y), b2(z))), br(a(y), br(b(z), b2(x))), br(a(z), br(b(x), b2(y))))


def _b1_left(ev, xs, ds):
    x, y, z = xs
    br, a, b = ev.br, ev.a, ev.b
    return vsub(vsub(br(a(x), br(b(y), b(z))), br(br(x, b(y)), a(z))), br(a(y), br(b(x), b(z))))


def _b1_right(ev, xs, ds):
    x, y, z = xs
    br, a, b = ev.br, ev.a, ev.b
    return vsub(vsub(br(br(x, y), a(z)), br(br(x, z), a(y))), br(a(x), br(y, b(z))))


def _b1_symmetric(ev, xs, ds):
    x, y, z = xs
    br, a, b = ev.br, ev.a, ev.b
    return vadd(br(a(y), br(b(x), b(z))), br(br(x, z), ev.ab(y)))


# --- consequences ------------------------------------------------------------

def _cons_left_bihom(ev, xs, ds):
    x, y, z = xs
    dx, dy, dz = ds
    br, a, b = ev.br, ev.a, ev.b
    return vadd(br(br(b(x), a(y)), ev.ab(z)), _scale(ev.eps(dx, dy), br(br(b(y), a(x)), ev.ab(z))))


def _cons_right_bihom(ev, xs, ds):
    x, y, z = xs
    dx, dy, dz = ds
    br, a, b = ev.br, ev.a, ev.b
    if ev.colour:
        # [ab(z), [b(x), a(y)]] = -eps(x, y) [ab(z), [b(y), a(x)]]
        return vadd(br(ev.ab(z), br(b(x), a(y))), _scale(ev.eps(dx, dy), br(ev.ab(z), br(b(y), a(x)))))
    return vadd(br(ev.ab(x), br(b(y), a(z))), br(ev.ab(x), br(b(z), a(y))))


def _cons_left_b1(ev, xs, ds):
    x, y, z = xs
    br, a, b = ev.br, ev.a, ev.b
    return vadd(br(br(y, b(x)), a(z)), br(br(x, b(y)), a(z)))


def _cons_right_b1(ev, xs, ds):
    x, y, z = xs
    br, a, b = ev.br, ev.a, ev.b
    return vadd(br(a(x), br(z, b(y))), br(a(x), br(y, b(z))))


def _ident(name, arity, fn, colour=False):
    return Identity(name, arity, fn, colour)


IDENTITIES: dict[str, Identity] = {
    i.name: i
    for i in [
        _ident("commuting_maps", 1, _commuting),
        _ident("multiplicative:alpha", 2, _mult_alpha),
        _ident("multiplicative:beta", 2, _mult_beta),
        _ident("hom_lie:skew", 2, _skew),
        _ident("hom_lie:jacobi", 3, _hom_jacobi),
        _ident("hom_lie_I2:jacobi", 3, _jacobi_I),
        _ident("hom_lie_I3:jacobi", 3, _jacobi_I),
        _ident("left_hom_leibniz", 3, _left_hom),
        _ident("right_hom_leibniz", 3, _right_hom),
        _ident("bihom_lie:skew", 2, _bihom_skew),
        _ident("bihom_lie:jacobi", 3, _bihom_jacobi),
        _ident("left_bihom_leibniz", 3, _left_bihom),
        _ident("right_bihom_leibniz", 3, _right_bihom),
        _ident("symmetric_bihom_leibniz:cross", 3, _symmetric_bihom),
        _ident("bihom_lie_B1:skew", 2, _b1_skew),
        _ident("bihom_lie_B1:jacobi", 3, _b1_jacobi),
        _ident("left_bihom_leibniz_B1", 3, _b1_left),
        _ident("right_bihom_leibniz_B1", 3, _b1_right),
        _ident("symmetric_bihom_leibniz_B1:cross", 3, _b1_symmetric),
        _ident("bihom_associative_colour:assoc", 3, _bihom_assoc, True),
        _ident("bihom_lie_colour:skew", 2, _bihom_skew, True),
        _ident("bihom_lie_colour:jacobi", 3, _bihom_jacobi, True),
        _ident("left_bihom_leibniz_colour", 3, _left_bihom, True),
        _ident("right_bihom_leibniz_colour", 3, _right_bihom, True),
        _ident("symmetric_bihom_leibniz_colour:cross", 3, _symmetric_bihom, True),
        _ident("hom_lie_colour:skew", 2, _colour_skew, True),
        _ident("hom_lie_colour:jacobi", 3, _colour_hom_jacobi, True),
        _ident("left_hom_leibniz_colour", 3, _left_hom, True),
        _ident("right_hom_leibniz_colour", 3, _right_hom, True),
        _ident("consequence:left_bihom_leibniz", 3, _cons_left_bihom),
        _ident("consequence:right_bihom_leibniz", 3, _cons_right_bihom),
        _ident("consequence:left_bihom_leibniz_colour", 3, _cons_left_bihom, True),
        _ident("consequence:right_bihom_leibniz_colour", 3, _cons_right_bihom, True),
        _ident("consequence:left_bihom_leibniz_B1", 3, _cons_left_b1),
        _ident("consequence:right_bihom_leibniz_B1", 3, _cons_right_b1),
    ]
}

_MULT = ["multiplicative:alpha", "multiplicative:beta"]

# axiom set -> identities checked, in order
COMPOSITION: dict[AxiomSet, list[str]] = {
    AxiomSet.commuting_maps: ["commuting_maps"],
    AxiomSet.multiplicative: ["commuting_maps", *_MULT],
    AxiomSet.hom_lie: ["hom_lie:skew", "hom_lie:jacobi"],
    AxiomSet.hom_lie_I2: ["hom_lie:skew", "hom_lie_I2:jacobi"],
    AxiomSet.hom_lie_I3: ["hom_lie:skew", "hom_lie_I3:jacobi"],
    AxiomSet.left_hom_leibniz: ["left_hom_leibniz"],
    AxiomSet.right_hom_leibniz: ["right_hom_leibniz"],
    AxiomSet.symmetric_hom_leibniz: ["left_hom_leibniz", "right_hom_leibniz"],
    AxiomSet.bihom_lie: ["commuting_maps", *_MULT, "bihom_lie:skew", "bihom_lie:jacobi"],
    AxiomSet.left_bihom_leibniz: ["left_bihom_leibniz"],
    AxiomSet.right_bihom_leibniz: ["right_bihom_leibniz"],
    AxiomSet.symmetric_bihom_leibniz: ["left_bihom_leibniz", "symmetric_bihom_leibniz:cross"],
    AxiomSet.bihom_lie_B1: ["bihom_lie_B1:skew", "bihom_lie_B1:jacobi"],
    AxiomSet.left_bihom_leibniz_B1: ["left_bihom_leibniz_B1"],
    AxiomSet.right_bihom_leibniz_B1: ["right_bihom_leibniz_B1"],
    AxiomSet.symmetric_bihom_leibniz_B1: [
        "left_bihom_leibniz_B1", "right_bihom_leibniz_B1", "symmetric_bihom_leibniz_B1:cross",
    ],
    AxiomSet.bihom_associative_colour: ["commuting_maps", *_MULT, "bihom_associative_colour:assoc"],
    AxiomSet.bihom_lie_colour: ["commuting_maps", *_MULT, "bihom_lie_colour:skew", "bihom_lie_colour:jacobi"],
    AxiomSet.left_bihom_leibniz_colour: ["left_bihom_leibniz_colour"],
    AxiomSet.right_bihom_leibniz_colour: ["right_bihom_leibniz_colour"],
    AxiomSet.symmetric_bihom_leibniz_colour: [
        "left_bihom_leibniz_colour", "symmetric_bihom_leibniz_colour:cross",
    ],
    AxiomSet.hom_lie_colour: ["hom_lie_colour:skew", "hom_lie_colour:jacobi"],
    AxiomSet.left_hom_leibniz_colour: ["left_hom_leibniz_colour"],
    AxiomSet.right_hom_leibniz_colour: ["right_hom_leibniz_colour"],
    AxiomSet.symmetric_hom_leibniz_colour: ["left_hom_leibniz_colour", "right_hom_leibniz_colour"],
}


def _basis_degrees(L: Algebra, colour: bool):
    if not colour:
        return [()] * L.dim
    return list(L.grading.degrees)


def run_identities(L: Algebra, names: Sequence[str]) -> CheckReport:
    """Check the named identities in order; report the first failure."""
    contexts: dict[bool, _Ev] = {}
    units = [L.unit(i) for i in range(L.dim)]
    for name in names:
        ident = IDENTITIES[name]
        ev = contexts.get(ident.colour)
        if ev is None:
            ev = contexts[ident.colour] = _Ev(L, ident.colour)
        degs = _basis_degrees(L, ident.colour)
        for idx in product(range(L.dim), repeat=ident.arity):
            res = ident.residual(ev, [units[i] for i in idx], [degs[i] for i in idx])
            if not is_zero_vector(res):
                return CheckReport.fail(name, idx, res)
    return CheckReport.ok()


def evaluate_identity(L: Algebra, name: str, indices: Sequence[int]) -> Vector:
    """Residual of a named identity on one basis tuple."""
    ident = IDENTITIES[name]
    ev = _Ev(L, ident.colour)
    degs = _basis_degrees(L, ident.colour)
    return ident.residual(ev, [L.unit(i) for i in indices], [degs[i] for i in indices])


def identity_residual(L: Algebra, name: str, vectors: Sequence[Sequence], degrees=None) -> Vector:
    """Residual on arbitrary vectors (homogeneous ones, with degrees, for colour laws)."""
    ident = IDENTITIES[name]
    ev = _Ev(L, ident.colour)
    if degrees is None:
        if ident.colour:
            raise InputError("colour identities need the degrees of their arguments")
        degrees = [()] * len(vectors)
    return ident.residual(ev, [tuple(v) for v in vectors], list(degrees))


def _axiom(s) -> AxiomSet:
    try:
        return AxiomSet(s)
    except ValueError:
        raise InputError(f"unknown axiom set {s!r}; valid names: {', '.join(AXIOM_NAMES)}") from None


def check(L: Algebra, s) -> CheckReport:
    s = _axiom(s)
    if s.is_colour and L.grading is None:
        raise InputError(f"{s.value} needs a graded algebra")
    return run_identities(L, COMPOSITION[s])


def check_commuting_maps(L):
    return check(L, AxiomSet.commuting_maps)


def check_multiplicative(L):
    return check(L, AxiomSet.multiplicative)


def check_hom_lie(L):
    return check(L, AxiomSet.hom_lie)


def check_left_hom_leibniz(L):
    return check(L, AxiomSet.left_hom_leibniz)


def check_right_hom_leibniz(L):
    return check(L, AxiomSet.right_hom_leibniz)


def check_symmetric_hom_leibniz(L):
    return check(L, AxiomSet.symmetric_hom_leibniz)


def check_bihom_lie(L):
    return check(L, AxiomSet.bihom_lie)


def check_left_bihom_leibniz(L):
    return check(L, AxiomSet.left_bihom_leibniz)


def check_right_bihom_leibniz(L):
    return check(L, AxiomSet.right_bihom_leibniz)


def check_symmetric_bihom_leibniz(L):
    return check(L, AxiomSet.symmetric_bihom_leibniz)


def check_bihom_lie_B1(L):
    return check(L, AxiomSet.bihom_lie_B1)


def check_left_bihom_leibniz_B1(L):
    return check(L, AxiomSet.left_bihom_leibniz_B1)


def check_right_bihom_leibniz_B1(L):
    return check(L, AxiomSet.right_bihom_leibniz_B1)


def check_symmetric_bihom_leibniz_B1(L):
    return check(L, AxiomSet.symmetric_bihom_leibniz_B1)


def check_colour(L: Algebra, s) -> CheckReport:
    s = _axiom(s)
    if not s.is_colour:
        raise InputError(f"{s.value} is not a colour axiom set")
    return check(L, s)


# --- plain (untwisted) specializations ---------------------------------------

def untwisted(L: Algebra) -> Algebra:
    """Same bracket with alpha = beta = id."""
    ident = type(L.alpha).identity(L.dim)
    return L.replace(alpha=ident, beta=ident)


def is_lie(L: Algebra) -> bool:
    return check_hom_lie(untwisted(L)).passed


def is_symmetric_leibniz(L: Algebra) -> bool:
    return check_symmetric_hom_leibniz(untwisted(L)).passed


def is_left_leibniz(L: Algebra) -> bool:
    return check_left_hom_leibniz(untwisted(L)).passed


def is_right_leibniz(L: Algebra) -> bool:
    return check_right_hom_leibniz(untwisted(L)).passed


def is_endomorphism(L: Algebra, f: Matrix) -> CheckReport:
    """``f([x, y]) == [f(x), f(y)]`` on basis pairs."""
    n = L.dim
    for i, j in product(range(n), repeat=2):
        res = vsub(f @ L.c[i][j], L.bracket(f.col(i), f.col(j)))
        if not is_zero_vector(res):
            return CheckReport.fail("endomorphism", (i, j), res)
    return CheckReport.ok()


# --- Delta-triples -------------------------------------------------------------

def triple_delta_membership(L: Algebra, f: Matrix, f1: Matrix, f2: Matrix, k: int, l: int) -> CheckReport:
    """``[f(x), a^k b^l (y)] + [a^k b^l (x), f1(y)] == f2([x, y])`` on basis pairs."""
    if k < 0 or l < 0:
        raise InputError("powers of the structure maps must be non-negative")
    n = L.dim
    for m in (f, f1, f2):
        if m.shape != (n, n):
            raise InputError(f"maps must be {n}x{n}")
    phi = (L.alpha ** k) @ (L.beta ** l)
    for i, j in product(range(n), repeat=2):
        lhs = vadd(L.bracket(f.col(i), phi.col(j)), L.bracket(phi.col(i), f1.col(j)))
        res = vsub(lhs, f2 @ L.c[i][j])
        if not is_zero_vector(res):
            return CheckReport.fail("delta_triple", (i, j), res)
    return CheckReport.ok()


def left_multiplication(L: Algebra, a: Sequence) -> Matrix:
    """Matrix of x -> [a, x]."""
    return Matrix.from_columns([L.bracket(a, L.unit(j)) for j in range(L.dim)], L.dim)


def right_multiplication(L: Algebra, a: Sequence) -> Matrix:
    """Matrix of x -> [x, a]."""
    return Matrix.from_columns([L.bracket(L.unit(j), a) for j in range(L.dim)], L.dim)


# --- consequences --------------------------------------------------------------

_CONSEQUENCES = [
    (AxiomSet.left_bihom_leibniz, "consequence:left_bihom_leibniz"),
    (AxiomSet.right_bihom_leibniz, "consequence:right_bihom_leibniz"),
    (AxiomSet.left_bihom_leibniz_B1, "consequence:left_bihom_leibniz_B1"),
    (AxiomSet.right_bihom_leibniz_B1, "consequence:right_bihom_leibniz_B1"),
]

_COLOUR_CONSEQUENCES = [
    (AxiomSet.left_bihom_leibniz_colour, "consequence:left_bihom_leibniz_colour"),
    (AxiomSet.right_bihom_leibniz_colour, "consequence:right_bihom_leibniz_colour"),
]


def check_consequence_props(L: Algebra) -> CheckReport:
    """Derived identities, each asserted only when its hypothesis holds."""
    pairs = list(_CONSEQUENCES)
    if L.graded:
        pairs += _COLOUR_CONSEQUENCES
    notes = []
    for hypothesis, name in pairs:
        if not check(L, hypothesis).passed:
            notes.append(f"{name}: skipped ({hypothesis.value} fails)")
            continue
        report = run_identities(L, [name])
        if not report.passed:
            return CheckReport(False, report.witness, tuple(notes))
        notes.append(f"{name}: holds")
    return CheckReport.ok(*notes)
