"""Representation laws for type-B1 BiHom-Leibniz algebras.

Notation: ``l(x) v = [x, v]_V`` and ``r(x) v = [v, x]_V``.  Each law is a
named residual evaluated on basis tuples (x, y, v) or (x, v); the first
nonzero residual is reported, as in :mod:`bihom.axioms`.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import product
from typing import Callable, Sequence

from . import axioms
from .axioms import AxiomSet
from .linalg import Matrix, is_zero_vector, vadd, vsub
from .model import Algebra, CheckReport, InputError, Representation


class BetaReading(str, Enum):
    """How to read the beta_V compatibility: with l(alpha x) as printed, or l(beta x)."""

    verbatim = "verbatim"
    beta = "beta"


class _RepEv:
    def __init__(self, V: Representation):
        self.V = V
        L = V.algebra
        self.L = L
        self.a = lambda x: L.alpha @ x
        self.b = lambda x: L.beta @ x
        self.ab = lambda x: L.alpha @ (L.beta @ x)
        self.aV = lambda v: V.alphaV @ v
        self.bV = lambda v: V.betaV @ v
        self.br = L.bracket

    def l(self, x, v):
        return self.V.act_left(x, v)

    def r(self, x, v):
        return self.V.act_right(v, x)


@dataclass(frozen=True)
class RepLaw:
    name: str
    n_algebra_args: int
    residual: Callable


def _s(*terms):
    out = terms[0]
    for t in terms[1:]:
        out = vadd(out, t)
    return out


def _neg(v):
    return tuple(-a for a in v)


# --- compatibility -----------------------------------------------------------

def _compat(which: str, side: str, inner: str):
    def fn(ev, xs, v):
        (x,) = xs
        act = ev.l if side == "l" else ev.r
        outer = ev.aV if which == "alpha" else ev.bV
        twist = ev.a if inner == "alpha" else ev.b
        return vsub(outer(act(x, v)), act(twist(x), outer(v)))
    return fn


def _compat_laws(reading: BetaReading) -> list[RepLaw]:
    inner = "alpha" if reading == BetaReading.verbatim else "beta"
    return [
        RepLaw("compat:alphaV_l", 1, _compat("alpha", "l", "alpha")),
        RepLaw("compat:alphaV_r", 1, _compat("alpha", "r", "alpha")),
        RepLaw("compat:betaV_l", 1, _compat("beta", "l", inner)),
        RepLaw("compat:betaV_r", 1, _compat("beta", "r", inner)),
    ]


# --- left representation ---------------------------------------------------------

def _left1(ev, xs, v):
    # l([x, b y]) aV = l(a x) l(b y) bV - l(a y) l(b x) bV
    x, y = xs
    lhs = ev.l(ev.br(x, ev.b(y)), ev.aV(v))
    bv = ev.bV(v)
    return _s(lhs, _neg(ev.l(ev.a(x), ev.l(ev.b(y), bv))), ev.l(ev.a(y), ev.l(ev.b(x), bv)))


def _left2(ev, xs, v):
    # r(b[x, y]) aV = l(a x) r(b y) bV - r(a y) l(x) bV
    x, y = xs
    lhs = ev.r(ev.b(ev.br(x, y)), ev.aV(v))
    bv = ev.bV(v)
    return _s(lhs, _neg(ev.l(ev.a(x), ev.r(ev.b(y), bv))), ev.r(ev.a(y), ev.l(x, bv)))


def _left3(ev, xs, v):
    # r(b[x, y]) aV = r(a y) r(b x) + l(a x) r(b y) bV
    x, y = xs
    lhs = ev.r(ev.b(ev.br(x, y)), ev.aV(v))
    return _s(lhs, _neg(ev.r(ev.a(y), ev.r(ev.b(x), v))), _neg(ev.l(ev.a(x), ev.r(ev.b(y), ev.bV(v)))))


# --- right representation --------------------------------------------------------

def _right1(ev, xs, v):
    # l([x, y]) aV = l(a x) l(y) bV + r(a y) l(x)
    x, y = xs
    lhs = ev.l(ev.br(x, y), ev.aV(v))
    return _s(lhs, _neg(ev.l(ev.a(x), ev.l(y, ev.bV(v)))), _neg(ev.r(ev.a(y), ev.l(x, v))))


def _right2(ev, xs, v):
    # l([x, y]) aV = r(a y) l(x) - l(a x) r(b y)
    x, y = xs
    lhs = ev.l(ev.br(x, y), ev.aV(v))
    return _s(lhs, _neg(ev.r(ev.a(y), ev.l(x, v))), ev.l(ev.a(x), ev.r(ev.b(y), v)))


def _right3(ev, xs, v):
    # r([x, b y]) aV = r(a y) r(x) - r(a x) r(y)
    x, y = xs
    lhs = ev.r(ev.br(x, ev.b(y)), ev.aV(v))
    return _s(lhs, _neg(ev.r(ev.a(y), ev.r(x, v))), ev.r(ev.a(x), ev.r(y, v)))


def _right_consistency(ev, xs, v):
    # difference of the two expansions of l([x, y]) aV
    x, y = xs
    return vadd(ev.l(ev.a(x), ev.l(y, ev.bV(v))), ev.l(ev.a(x), ev.r(ev.b(y), v)))


# --- symmetric representation (equation list) -------------------------------------

def _equiv(which: str, side: str):
    def fn(ev, xs, v):
        (x,) = xs
        outer = ev.aV if which == "alpha" else ev.bV
        twist = ev.a if which == "alpha" else ev.b
        act = ev.l if side == "l" else ev.r
        return vsub(outer(act(x, v)), act(twist(x), outer(v)))
    return fn


def _sym5(ev, xs, v):
    # [[v,x],a y] = [[v,y],a x] + [aV v,[x, b y]]
    x, y = xs
    return _s(ev.r(ev.a(y), ev.r(x, v)), _neg(ev.r(ev.a(x), ev.r(y, v))), _neg(ev.r(ev.br(x, ev.b(y)), ev.aV(v))))


def _sym6(ev, xs, v):
    # [[x,y], aV v] = [[x,v],a y] + [a x,[y, bV v]]
    x, y = xs
    return _s(ev.l(ev.br(x, y), ev.aV(v)), _neg(ev.r(ev.a(y), ev.l(x, v))), _neg(ev.l(ev.a(x), ev.l(y, ev.bV(v)))))


def _sym7(ev, xs, v):
    # [[x,v],a y] = [[x,y], aV v] + [a x,[v, b y]]
    x, y = xs
    return _s(ev.r(ev.a(y), ev.l(x, v)), _neg(ev.l(ev.br(x, y), ev.aV(v))), _neg(ev.l(ev.a(x), ev.r(ev.b(y), v))))


def _sym8(ev, xs, v):
    # [a x,[b y, bV v]] = -[[y, bV v], ab x]
    x, y = xs
    return vadd(ev.l(ev.a(x), ev.l(ev.b(y), ev.bV(v))), ev.r(ev.ab(x), ev.l(y, ev.bV(v))))


def _sym9(ev, xs, v):
    # [a x,[bV v, b y]] = -[[v, y], ab x]
    x, y = xs
    return vadd(ev.l(ev.a(x), ev.r(ev.b(y), ev.bV(v))), ev.r(ev.ab(x), ev.r(y, v)))


def _sym10(ev, xs, v):
    # [a x,[b y, bV v]] = -[[y, v], ab x]
    x, y = xs
    return vadd(ev.l(ev.a(x), ev.l(ev.b(y), ev.bV(v))), ev.r(ev.ab(x), ev.l(y, v)))


# --- consequences ------------------------------------------------------------------

def _cons_left(ev, xs, v):
    # [[v, b x], a y] = -[[x, bV v], a y]
    x, y = xs
    return vadd(ev.r(ev.a(y), ev.r(ev.b(x), v)), ev.r(ev.a(y), ev.l(x, ev.bV(v))))


def _cons_right(ev, xs, v):
    # [a x,[y, bV v]] = -[a x,[v, b y]]
    x, y = xs
    return vadd(ev.l(ev.a(x), ev.l(y, ev.bV(v))), ev.l(ev.a(x), ev.r(ev.b(y), v)))


def _trivial_l(ev, xs, v):
    (x,) = xs
    return ev.l(x, ev.bV(v))


def _trivial_r(ev, xs, v):
    (x,) = xs
    return ev.r(ev.b(x), v)


REP_LAWS: dict[str, RepLaw] = {
    law.name: law
    for law in [
        *_compat_laws(BetaReading.verbatim),
        RepLaw("left_rep:1", 2, _left1),
        RepLaw("left_rep:2", 2, _left2),
        RepLaw("left_rep:3", 2, _left3),
        RepLaw("right_rep:1", 2, _right1),
        RepLaw("right_rep:2", 2, _right2),
        RepLaw("right_rep:3", 2, _right3),
        RepLaw("right_rep:consistency", 2, _right_consistency),
        RepLaw("symmetric_rep:alphaV_l", 1, _equiv("alpha", "l")),
        RepLaw("symmetric_rep:alphaV_r", 1, _equiv("alpha", "r")),
        RepLaw("symmetric_rep:betaV_l", 1, _equiv("beta", "l")),
        RepLaw("symmetric_rep:betaV_r", 1, _equiv("beta", "r")),
        RepLaw("symmetric_rep:5", 2, _sym5),
        RepLaw("symmetric_rep:6", 2, _sym6),
        RepLaw("symmetric_rep:7", 2, _sym7),
        RepLaw("symmetric_rep:8", 2, _sym8),
        RepLaw("symmetric_rep:9", 2, _sym9),
        RepLaw("symmetric_rep:10", 2, _sym10),
        RepLaw("consequence:left_rep", 2, _cons_left),
        RepLaw("consequence:right_rep", 2, _cons_right),
        RepLaw("trivial:l", 1, _trivial_l),
        RepLaw("trivial:r", 1, _trivial_r),
    ]
}

_BETA_COMPAT = {
    "compat:betaV_l:beta": RepLaw("compat:betaV_l:beta", 1, _compat("beta", "l", "beta")),
    "compat:betaV_r:beta": RepLaw("compat:betaV_r:beta", 1, _compat("beta", "r", "beta")),
}
REP_LAWS.update(_BETA_COMPAT)

LEFT_LAWS = ["left_rep:1", "left_rep:2", "left_rep:3"]
RIGHT_LAWS = ["right_rep:1", "right_rep:2", "right_rep:3"]
SYMMETRIC_LAWS = [
    "symmetric_rep:alphaV_l", "symmetric_rep:alphaV_r", "symmetric_rep:betaV_l", "symmetric_rep:betaV_r",
    "symmetric_rep:5", "symmetric_rep:6", "symmetric_rep:7",
    "symmetric_rep:8", "symmetric_rep:9", "symmetric_rep:10",
]


def compat_law_names(reading: BetaReading = BetaReading.verbatim) -> list[str]:
    reading = BetaReading(reading)
    if reading == BetaReading.verbatim:
        return ["compat:alphaV_l", "compat:alphaV_r", "compat:betaV_l", "compat:betaV_r"]
    return ["compat:alphaV_l", "compat:alphaV_r", "compat:betaV_l:beta", "compat:betaV_r:beta"]


def _unit(m: int, p: int) -> tuple:
    return tuple(Fraction(int(q == p)) for q in range(m))


def run_laws(V: Representation, names: Sequence[str]) -> CheckReport:
    ev = _RepEv(V)
    n, m = V.algebra.dim, V.dim
    for name in names:
        law = REP_LAWS[name]
        for idx in product(range(n), repeat=law.n_algebra_args):
            xs = [V.algebra.unit(i) for i in idx]
            for p in range(m):
                res = law.residual(ev, xs, _unit(m, p))
                if not is_zero_vector(res):
                    return CheckReport.fail(name, (*idx, p), res)
    return CheckReport.ok()


def evaluate_law(V: Representation, name: str, indices: Sequence[int]) -> tuple:
    """Residual of a named law on one tuple (algebra indices..., module index)."""
    law = REP_LAWS[name]
    *idx, p = indices
    return law.residual(_RepEv(V), [V.algebra.unit(i) for i in idx], _unit(V.dim, p))


def _precondition(V: Representation, s: AxiomSet) -> CheckReport | None:
    report = axioms.check(V.algebra, s)
    if not report.passed:
        w = report.witness
        return CheckReport(False, w, (f"algebra fails {s.value}",))
    return None


def check_compatibility(V: Representation, reading=BetaReading.verbatim) -> CheckReport:
    return run_laws(V, compat_law_names(reading))


def check_left_representation_B1(V: Representation, reading=BetaReading.verbatim) -> CheckReport:
    pre = _precondition(V, AxiomSet.left_bihom_leibniz_B1)
    if pre is not None:
        return pre
    return run_laws(V, compat_law_names(reading) + LEFT_LAWS)


def check_right_representation_B1(V: Representation, reading=BetaReading.verbatim) -> CheckReport:
    pre = _precondition(V, AxiomSet.right_bihom_leibniz_B1)
    if pre is not None:
        return pre
    return run_laws(V, compat_law_names(reading) + RIGHT_LAWS)


def check_right_consistency(V: Representation) -> CheckReport:
    """l(a x) l(y) bV + l(a x) r(b y) = 0, implied by the two expansions of l([x, y]) aV."""
    return run_laws(V, ["right_rep:consistency"])


def check_symmetric_representation_B1(V: Representation) -> CheckReport:
    pre = _precondition(V, AxiomSet.symmetric_bihom_leibniz_B1)
    if pre is not None:
        return pre
    return run_laws(V, SYMMETRIC_LAWS)


def is_trivial_representation(V: Representation) -> bool:
    """[x, bV v]_V = [v, b x]_V = 0 for all x, v."""
    return run_laws(V, ["trivial:l", "trivial:r"]).passed


def check_rep_consequences(V: Representation, reading=BetaReading.verbatim) -> CheckReport:
    notes = []
    for label, check, law in (
        ("left", check_left_representation_B1, "consequence:left_rep"),
        ("right", check_right_representation_B1, "consequence:right_rep"),
    ):
        if not check(V, reading).passed:
            notes.append(f"{law}: skipped ({label} representation laws fail)")
            continue
        report = run_laws(V, [law])
        if not report.passed:
            return CheckReport(False, report.witness, tuple(notes))
        notes.append(f"{law}: holds")
    return CheckReport.ok(*notes)


# --- builders ------------------------------------------------------------------------

def adjoint_representation(L: Algebra, n: int = 0, m: int = 0) -> Representation:
    """V = L with [a, x]_V = [a^n b^m (a), x] and [x, a]_V = [x, a^n b^m (a)]."""
    if n < 0 or m < 0:
        raise InputError("powers must be non-negative")
    phi = (L.alpha ** n) @ (L.beta ** m)
    d = L.dim
    l = [[L.bracket(phi.col(i), L.unit(a)) for a in range(d)] for i in range(d)]
    r = [[L.bracket(L.unit(a), phi.col(i)) for i in range(d)] for a in range(d)]
    return Representation(L, d, l=l, r=r, alphaV=L.alpha, betaV=L.beta, grading=L.grading)


def trivial_representation(L: Algebra, m: int = 1, alphaV=None, betaV=None) -> Representation:
    """Zero actions on an m-dimensional space."""
    return Representation(L, m, alphaV=alphaV, betaV=betaV)


def twisted_representation(V: Representation, n: int, m: int) -> Representation:
    """[x, v]' = [x, aV^n bV^m v]_V and [v, x]' = [aV^n bV^m v, x]_V."""
    phi = (V.alphaV ** n) @ (V.betaV ** m)
    L = V.algebra
    d = V.dim
    l = [[V.act_left(L.unit(i), phi.col(a)) for a in range(d)] for i in range(L.dim)]
    r = [[V.act_right(phi.col(a), L.unit(i)) for i in range(L.dim)] for a in range(d)]
    return V.replace(l=l, r=r)
