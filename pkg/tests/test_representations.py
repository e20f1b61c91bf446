from fractions import Fraction
from itertools import product

import pytest

import fixture_sets
from bihom import corpus, representations as R
from bihom.linalg import Matrix
from bihom.model import InputError, Representation
from bihom.representations import BetaReading

SYM = fixture_sets.symmetric_b1()
POWERS = [(0, 0), (1, 0), (0, 1), (1, 1)]


def test_adjoint_shape():
    L = corpus.sl2()
    V = R.adjoint_representation(L)
    assert V.dim == 3 and V.alphaV == L.alpha and V.betaV == L.beta
    for i, a in product(range(3), repeat=2):
        assert V.act_left(L.unit(i), L.unit(a)) == L.basis_bracket(i, a)
        assert V.act_right(L.unit(a), L.unit(i)) == L.basis_bracket(a, i)
    with pytest.raises(InputError):
        R.adjoint_representation(L, -1, 0)


def test_adjoint_powers():
    L = fixture_sets.ungraded()["yau_heisenberg3_0"]
    V = R.adjoint_representation(L, 1, 1)
    phi = L.alpha @ L.beta
    for i, a in product(range(3), repeat=2):
        assert V.act_left(L.unit(i), L.unit(a)) == L.bracket(phi.col(i), L.unit(a))


@pytest.mark.parametrize("name", sorted(SYM))
def test_adjoint_passes_under_beta_reading(name):
    L = SYM[name]
    for n, m in POWERS:
        V = R.adjoint_representation(L, n, m)
        assert R.check_compatibility(V, BetaReading.beta).passed
        assert R.check_left_representation_B1(V, BetaReading.beta).passed
        assert R.check_right_representation_B1(V, BetaReading.beta).passed
        assert R.check_symmetric_representation_B1(V).passed
        assert R.check_right_consistency(V).passed
        r = R.check_rep_consequences(V, BetaReading.beta)
        assert r.passed and r.notes.count("consequence:left_rep: holds") == 1


@pytest.mark.parametrize("name", sorted(SYM))
def test_verbatim_reading_fails_iff_twist_difference_acts(name):
    # on the adjoint module the verbatim law reads beta[x, v] = [alpha x, beta v]; multiplicativity
    # turns it into [(alpha - beta) x, beta v] = 0
    L = SYM[name]
    V = R.adjoint_representation(L)
    diff = L.alpha - L.beta
    differ = any(any(L.bracket(diff.col(i), L.beta.col(p))) for i, p in product(range(L.dim), repeat=2))
    r = R.check_left_representation_B1(V)
    assert r.passed == (not differ)
    if differ:
        assert r.witness.axiom == "compat:betaV_l"
        assert R.evaluate_law(V, r.witness.axiom, r.witness.indices) == r.witness.residual


def test_heisenberg_twist_verbatim_witness():
    L = fixture_sets.ungraded()["yau_heisenberg3_0"]
    V = R.adjoint_representation(L)
    r = R.check_compatibility(V)
    assert not r.passed and r.witness.axiom == "compat:betaV_l"
    assert R.check_compatibility(V, "beta").passed


@pytest.mark.parametrize("name", sorted(SYM))
def test_trivial_modules(name):
    L = SYM[name]
    T = R.trivial_representation(L, 2)
    assert R.is_trivial_representation(T)
    assert R.check_symmetric_representation_B1(T).passed
    assert R.check_left_representation_B1(T).passed and R.check_right_representation_B1(T).passed


def test_precondition_failure_reports_algebra_witness():
    L = corpus.table_case1(1, 1)  # left but not right
    V = R.adjoint_representation(L)
    r = R.check_symmetric_representation_B1(V)
    assert not r.passed and "algebra fails" in r.notes[0]


def test_perturbed_module_fails_with_sound_witness():
    L = corpus.lie2()
    V = R.adjoint_representation(L)
    l = [[list(v) for v in row] for row in V.l]
    l[0][0][0] += 1
    bad = V.replace(l=l)
    for check in (R.check_left_representation_B1, R.check_symmetric_representation_B1):
        r = check(bad)
        assert not r.passed
        assert R.evaluate_law(bad, r.witness.axiom, r.witness.indices) == r.witness.residual
    assert not R.is_trivial_representation(bad)


def test_twisted_representation_matches_adjoint_powers():
    L = fixture_sets.ungraded()["yau_nilpotent_leibniz2_0"]
    V = R.twisted_representation(R.adjoint_representation(L), 1, 0)
    W = R.adjoint_representation(L)
    a = L.alpha
    for i, p in product(range(2), repeat=2):
        assert V.act_left(L.unit(i), L.unit(p)) == W.act_left(L.unit(i), a.col(p))


def test_compat_names():
    assert R.compat_law_names() == ["compat:alphaV_l", "compat:alphaV_r", "compat:betaV_l", "compat:betaV_r"]
    assert R.compat_law_names("beta")[2:] == ["compat:betaV_l:beta", "compat:betaV_r:beta"]
    with pytest.raises(ValueError):
        R.compat_law_names("other")
