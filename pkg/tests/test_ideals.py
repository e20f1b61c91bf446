from fractions import Fraction
from itertools import combinations, product

import pytest
from hypothesis import given, strategies as st

import fixture_sets
import oracles
from bihom import axioms, corpus, ideals
from bihom.ideals import IdealKind
from bihom.linalg import Matrix, Subspace, subspace_intersect
from bihom.model import Algebra, InputError
from conftest import fractions

UNGRADED = fixture_sets.ungraded()


def _units(L):
    return [L.unit(i) for i in range(L.dim)]


def _polarization_vectors(L):
    n = L.dim
    return _units(L) + [tuple(a + b for a, b in zip(L.unit(i), L.unit(j)))
                        for i in range(n) for j in range(i + 1, n)]


def _candidate_ideals(L):
    n = L.dim
    cands = [ideals.center(L), ideals.squared(L), ideals.ideal_IL(L), Subspace.full(n), Subspace(n, [])]
    for r in range(1, n):
        for S in combinations(range(n), r):
            cands.append(Subspace(n, [L.unit(i) for i in S]))
    out = []
    for H in cands:
        if ideals.is_two_sided_ideal(L, H) and H not in out:
            out.append(H)
    return out


def test_abelian():
    A = Algebra.abelian(3)
    assert ideals.center(A) == Subspace.full(3)
    assert ideals.squared(A).dim == 0 and ideals.ideal_IL(A).dim == 0


def test_table_case1_squares():
    L = corpus.table_case1(1, 0)
    e2 = Subspace(2, [(0, 1)])
    assert ideals.squared(L) == e2
    assert ideals.ideal_IL(L) == e2
    grid = [(Fraction(p), Fraction(q)) for p, q in product(range(-2, 3), repeat=2)]
    assert oracles.span_of_squares(L, grid) == e2


def test_lie_fixtures_have_no_squares():
    for L in (corpus.lie2(), corpus.sl2(), corpus.heisenberg3(), corpus.table_case4(1, 1)):
        assert ideals.ideal_IL(L).dim == 0


def test_left_right_ideal_convention():
    # [e1, e2] = e2 only: span{e2} is a left and right ideal; span{e1} is neither
    L = corpus.lie2()
    assert ideals.classify_subspace(L, Subspace(2, [(0, 1)])) >= {IdealKind.left_ideal, IdealKind.right_ideal}
    assert ideals.classify_subspace(L, Subspace(2, [(1, 0)])) == {IdealKind.subalgebra}
    # one-sided: [e2, e1] = e2 is the only bracket, so span{e1} has [H, L] = 0 but [L, H] = span{e2}
    M = Algebra.from_brackets(2, {(1, 0): (0, 1)})
    kinds = ideals.classify_subspace(M, Subspace(2, [(1, 0)]))
    assert IdealKind.right_ideal in kinds and IdealKind.left_ideal not in kinds
    kinds = ideals.classify_subspace(M, Subspace(2, [(0, 1)]))
    assert IdealKind.two_sided in kinds


def test_unstable_subspace_has_no_kind():
    L = corpus.lie2().replace(alpha=Matrix([[1, 0], [1, 1]]))
    assert ideals.classify_subspace(L, Subspace(2, [(1, 0)])) == set()


def test_wrong_ambient():
    with pytest.raises(InputError):
        ideals.classify_subspace(corpus.lie2(), Subspace.full(3))


def test_commutator_containment_examples():
    L = corpus.direct_sum3()
    ids = _candidate_ideals(L)
    assert len(ids) >= 4
    for H, K in product(ids, repeat=2):
        HK = ideals.commutator_subspace(L, H, K)
        assert all(subspace_intersect(H, K).contains(v) for v in HK.basis)


def test_quotients():
    L = corpus.sl2()
    Q = ideals.quotient_algebra(L, Subspace(3, []))
    assert Q == L
    Z = ideals.quotient_algebra(L, Subspace.full(3))
    assert Z.dim == 0
    with pytest.raises(InputError):
        ideals.quotient_algebra(corpus.lie2(), Subspace(2, [(1, 0)]))


@pytest.mark.parametrize("name", sorted(UNGRADED))
def test_ideal_invariants(name):
    L = UNGRADED[name]
    ids = _candidate_ideals(L)
    for H in ids:
        kinds = ideals.classify_subspace(L, H)
        assert {IdealKind.subalgebra, IdealKind.left_ideal, IdealKind.right_ideal} <= kinds
        Q = ideals.quotient_algebra(L, H)
        assert Q.dim == L.dim - H.dim
    for H, K in product(ids, repeat=2):
        assert ideals.verify_ideal_lemma(L, H, K).passed
    full = Subspace.full(L.dim)
    assert ideals.verify_ideal_lemma(L, full, full).passed


@pytest.mark.parametrize("name", sorted(UNGRADED))
def test_square_span_by_polarization(name):
    L = UNGRADED[name]
    grid = [tuple(Fraction(t) for t in v) for v in product(range(-1, 2), repeat=L.dim)] if L.dim <= 4 else []
    assert ideals.ideal_IL(L) == oracles.span_of_squares(L, _polarization_vectors(L) + grid)


@given(st.lists(st.lists(fractions(), min_size=3, max_size=3), min_size=1, max_size=6))
def test_random_squares_stay_in_IL(vectors):
    L = UNGRADED["leibniz3"]
    IL = ideals.ideal_IL(L)
    assert all(IL.contains(L.bracket(v, v)) for v in vectors)


def test_lemma_gating_on_non_surjective_alpha():
    L = corpus.heisenberg3().replace(alpha=Matrix.diag([1, 0, 0]))
    assert axioms.check_multiplicative(L).passed and not ideals.surjective(L.alpha)
    full = Subspace.full(3)
    r = ideals.verify_ideal_lemma(L, full, full)
    assert r.passed
    assert "e (right): skipped" in r.notes and "f: skipped" in r.notes


def test_lemma_gating_on_non_multiplicative():
    L = corpus.table_case1(2, 1)
    full = Subspace.full(2)
    r = ideals.verify_ideal_lemma(L, full, full)
    assert r.passed and any("c, d, e, f: skipped" in n for n in r.notes)


def test_center_is_ideal_with_surjective_maps():
    for name, L in UNGRADED.items():
        if ideals.surjective(L.alpha) and ideals.surjective(L.beta) and axioms.check_multiplicative(L).passed:
            assert ideals.is_two_sided_ideal(L, ideals.center(L)), name


def test_square_ideal_quotient_is_bihom_lie():
    for name, L in fixture_sets.symmetric_b1().items():
        if not (axioms.check_symmetric_bihom_leibniz(L).passed and ideals.surjective(L.alpha)
                and ideals.surjective(L.beta)):
            continue
        IL = ideals.ideal_IL(L)
        assert ideals.is_two_sided_ideal(L, IL), name
        assert axioms.check_bihom_lie(ideals.quotient_algebra(L, IL)).passed, name


def test_bracket_square_of_symmetric_is_bihom_lie():
    for name, L in UNGRADED.items():
        if not axioms.check_symmetric_bihom_leibniz(L).passed:
            continue
        B = ideals.squared(L).basis
        for x, y in product(B, repeat=2):
            assert not any(axioms.identity_residual(L, "bihom_lie:skew", [x, y])), name
        for x, y, z in product(B, repeat=3):
            assert not any(axioms.identity_residual(L, "bihom_lie:jacobi", [x, y, z])), name


def test_square_annihilation_fails_on_genuine_twists():
    # [[u, u], z] = 0 needs alpha u and beta u to agree; with alpha = diag(1,2), beta = diag(1,3) on lie2
    # the left side fails while the twisted span [beta u, alpha u] still annihilates
    L = UNGRADED["yau_lie2_0"]
    r = ideals.square_annihilation(L)
    assert not r.passed and r.witness.axiom == "square_ideal:left"
    assert ideals.square_annihilation(L, twisted=True).passed


@pytest.mark.parametrize("name", sorted(fixture_sets.everything()))
def test_twisted_square_annihilation(name):
    L = fixture_sets.everything()[name]
    assert ideals.square_annihilation(L, twisted=True).passed


def test_square_annihilation_on_untwisted():
    for name in ("lie2", "sl2", "leibniz3", "leibniz_sum4", "nilpotent_leibniz2", "case1_x1_y0"):
        assert ideals.square_annihilation(UNGRADED[name]).passed
