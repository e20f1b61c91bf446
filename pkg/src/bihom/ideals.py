"""Subalgebras, ideals, commutator subspaces, center, the square ideal and quotients.

A subspace H is a left ideal when [L, H] is contained in H and a right ideal
when [H, L] is; every kind also requires alpha(H) and beta(H) inside H.
"""

from __future__ import annotations

from enum import Enum
from itertools import product

from . import axioms
from .axioms import AxiomSet
from .linalg import Matrix, Subspace, image, null_space_of_rows, subspace_intersect, subspace_sum, vadd
from .model import Algebra, CheckReport, InputError


class IdealKind(str, Enum):
    subalgebra = "subalgebra"
    left_ideal = "left_ideal"
    right_ideal = "right_ideal"
    two_sided = "two_sided"


def _check(L: Algebra, H: Subspace) -> None:
    if H.ambient_dim != L.dim:
        raise InputError(f"subspace lives in dimension {H.ambient_dim}, algebra has {L.dim}")


def _full(L: Algebra) -> Subspace:
    return Subspace.full(L.dim)


def is_stable(H: Subspace, f: Matrix) -> bool:
    return all(H.contains(f @ v) for v in H.basis)


def _brackets_in(L: Algebra, A, B, H: Subspace) -> bool:
    return all(H.contains(L.bracket(a, b)) for a in A for b in B)


def classify_subspace(L: Algebra, H: Subspace) -> set[IdealKind]:
    """All kinds H satisfies; an empty set when H is not alpha- and beta-stable."""
    _check(L, H)
    if not (is_stable(H, L.alpha) and is_stable(H, L.beta)):
        return set()
    units = [L.unit(i) for i in range(L.dim)]
    kinds = set()
    if _brackets_in(L, H.basis, H.basis, H):
        kinds.add(IdealKind.subalgebra)
    left = _brackets_in(L, units, H.basis, H)
    right = _brackets_in(L, H.basis, units, H)
    if left:
        kinds.add(IdealKind.left_ideal)
    if right:
        kinds.add(IdealKind.right_ideal)
    if left and right:
        kinds.add(IdealKind.two_sided)
    return kinds


def is_two_sided_ideal(L: Algebra, H: Subspace) -> bool:
    return IdealKind.two_sided in classify_subspace(L, H)


def commutator_subspace(L: Algebra, H: Subspace, K: Subspace) -> Subspace:
    """span{[h, k], [k, h]} over bases of H and K."""
    _check(L, H)
    _check(L, K)
    vecs = []
    for h, k in product(H.basis, K.basis):
        vecs.append(L.bracket(h, k))
        vecs.append(L.bracket(k, h))
    return Subspace(L.dim, vecs)


def center(L: Algebra) -> Subspace:
    """{x : [x, y] = 0 = [y, x] for all y}."""
    n = L.dim
    rows = []
    for j, k in product(range(n), repeat=2):
        rows.append([L.c[i][j][k] for i in range(n)])
        rows.append([L.c[j][i][k] for i in range(n)])
    return null_space_of_rows(rows, n)


def squared(L: Algebra) -> Subspace:
    return commutator_subspace(L, _full(L), _full(L))


def ideal_IL(L: Algebra) -> Subspace:
    """span{[v, v]}, generated by [e_i, e_i] and [e_i, e_j] + [e_j, e_i] (polarization)."""
    n = L.dim
    vecs = [L.basis_bracket(i, i) for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            vecs.append(vadd(L.basis_bracket(i, j), L.basis_bracket(j, i)))
    return Subspace(n, vecs)


def twisted_square_span(L: Algebra) -> Subspace:
    """span{[beta v, alpha v]}, by polarization as for ideal_IL."""
    n, a, b = L.dim, L.alpha, L.beta
    vecs = [L.bracket(b.col(i), a.col(i)) for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            vecs.append(vadd(L.bracket(b.col(i), a.col(j)), L.bracket(b.col(j), a.col(i))))
    return Subspace(n, vecs)


def _pivots(H: Subspace) -> list[int]:
    return [next(j for j, a in enumerate(row) if a != 0) for row in H.basis]


def complement_coordinates(H: Subspace) -> list[int]:
    """Coordinates whose unit vectors complete the RREF basis of H to a basis of the ambient space."""
    piv = set(_pivots(H))
    return [j for j in range(H.ambient_dim) if j not in piv]


def project(H: Subspace, v) -> tuple:
    """Coordinates of v + H in the complement basis."""
    w = list(v)
    for row, p in zip(H.basis, _pivots(H)):
        t = w[p]
        if t != 0:
            w = [a - t * b for a, b in zip(w, row)]
    return tuple(w[j] for j in complement_coordinates(H))


def quotient_algebra(L: Algebra, H: Subspace, verify: AxiomSet | str | None = None) -> Algebra:
    """L/H on the complement basis; optionally re-check an axiom set on the result."""
    if not is_two_sided_ideal(L, H):
        raise InputError("quotient needs an alpha- and beta-stable two-sided ideal")
    comp = complement_coordinates(H)
    q = len(comp)
    c = [[project(H, L.basis_bracket(i, j)) for j in comp] for i in comp]
    alpha = Matrix.from_columns([project(H, L.alpha.col(i)) for i in comp], q) if q else Matrix([], 0)
    beta = Matrix.from_columns([project(H, L.beta.col(i)) for i in comp], q) if q else Matrix([], 0)
    grading = None
    if L.grading is not None:
        g = L.grading
        grading = type(g)(g.group, tuple(g.degrees[i] for i in comp), g.epsilon)
    Q = Algebra(q, c, alpha=alpha, beta=beta, grading=grading)
    if verify is not None:
        report = axioms.check(Q, AxiomSet(verify))
        if not report.passed:
            raise InputError(f"quotient fails {AxiomSet(verify).value}: {report.describe()}")
    return Q


def surjective(f: Matrix) -> bool:
    return f.rank() == f.rows


def _ideal_in(L: Algebra, W: Subspace, A: Subspace) -> bool:
    """W is a two-sided ideal of the subalgebra A (brackets with elements of A only)."""
    return _brackets_in(L, A.basis, W.basis, W) and _brackets_in(L, W.basis, A.basis, W)


def verify_ideal_lemma(L: Algebra, H: Subspace, K: Subspace) -> CheckReport:
    """Items (a)-(f) of the ideal lemma for two-sided ideals H, K.

    Items that need alpha and beta to be commuting bracket morphisms are only
    asserted when L is multiplicative; surjectivity-gated items are skipped as
    vacuous when the rank condition fails.
    """
    for name, S in (("H", H), ("K", K)):
        if not is_two_sided_ideal(L, S):
            raise InputError(f"{name} is not a two-sided ideal")
    notes = []
    HK = commutator_subspace(L, H, K)
    meet, join = subspace_intersect(H, K), subspace_sum(H, K)
    for label, S in (("a:intersection", meet), ("a:sum", join)):
        if not is_two_sided_ideal(L, S):
            return CheckReport.fail(f"ideal_lemma:{label}", (), (S.dim,))
    for v in HK.basis:
        if not meet.contains(v):
            return CheckReport.fail("ideal_lemma:b", (), v)
    mult = axioms.check_multiplicative(L).passed
    if not mult:
        notes.append("c, d, e, f: skipped (structure maps are not commuting morphisms)")
        return CheckReport.ok(*notes)
    for label, A in (("c:in_H", H), ("c:in_K", K)):
        if not (is_stable(HK, L.alpha) and is_stable(HK, L.beta) and _ideal_in(L, HK, A)):
            return CheckReport.fail(f"ideal_lemma:{label}", (), (HK.dim,))
    for label, f in (("d:alpha", L.alpha), ("d:beta", L.beta)):
        S = image(f)
        if IdealKind.subalgebra not in classify_subspace(L, S):
            return CheckReport.fail(f"ideal_lemma:{label}", (), (S.dim,))
    kinds = classify_subspace(L, HK)
    if axioms.check_left_bihom_leibniz(L).passed and surjective(L.beta):
        if IdealKind.left_ideal not in kinds:
            return CheckReport.fail("ideal_lemma:e:left", (), (HK.dim,))
        notes.append("e (left): holds")
    else:
        notes.append("e (left): skipped")
    if axioms.check_right_bihom_leibniz(L).passed and surjective(L.alpha):
        if IdealKind.right_ideal not in kinds:
            return CheckReport.fail("ideal_lemma:e:right", (), (HK.dim,))
        notes.append("e (right): holds")
    else:
        notes.append("e (right): skipped")
    if surjective(L.alpha) and surjective(L.beta):
        if IdealKind.two_sided not in kinds:
            return CheckReport.fail("ideal_lemma:f", (), (HK.dim,))
        notes.append("f: holds")
    else:
        notes.append("f: skipped")
    return CheckReport.ok(*notes)


def square_annihilation(L: Algebra, twisted: bool = False) -> CheckReport:
    """[I_L, L] = 0 for left algebras with surjective beta; [L, I_L] = 0 for right ones with surjective alpha.

    With ``twisted`` the span of [beta v, alpha v] replaces I_L.  The untwisted
    statement fails on genuine BiHom twists (alpha != beta on the square).
    """
    IL = twisted_square_span(L) if twisted else ideal_IL(L)
    units = [L.unit(i) for i in range(L.dim)]
    notes = []
    for side, check, f in (("left", axioms.check_left_bihom_leibniz, L.beta),
                           ("right", axioms.check_right_bihom_leibniz, L.alpha)):
        if not (check(L).passed and surjective(f)):
            notes.append(f"{side}: skipped")
            continue
        pairs = [(u, x) for u in IL.basis for x in units] if side == "left" else \
                [(x, u) for u in IL.basis for x in units]
        for a, b in pairs:
            w = L.bracket(a, b)
            if any(w):
                return CheckReport.fail(f"square_ideal:{side}", (), w)
        notes.append(f"{side}: holds")
    return CheckReport.ok(*notes)
