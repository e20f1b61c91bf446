import random
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, strategies as st

import fixture_sets
import oracles
from bihom import axioms, cohomology as H, corpus
from bihom.cohomology import Reading
from bihom.linalg import Matrix, null_space_of_rows
from bihom.model import Algebra, Cochain, InputError
from bihom.representations import adjoint_representation, trivial_representation

U = fixture_sets.ungraded()
COMPLEX_OK = ["lie2", "sl2", "yau_nilpotent_leibniz2_0", "hom_lie2", "hom_sl2", "case3_a0_x1",
              "yau_table_case3_0", "leibniz3"]


def _reps(L):
    return {"adjoint": adjoint_representation(L), "trivial": trivial_representation(L, 1)}


def _random_cochain(space, rng):
    out = Cochain.zero(space.k, *_nm(space))
    for b in space.basis:
        out = out + b.scale(Fraction(rng.randint(-3, 3), rng.randint(1, 2)))
    return out


def _nm(space):
    c = space.basis[0]
    return c.n, c.m


# --- cochain spaces --------------------------------------------------------------------------

def test_cochain_space_full_when_maps_are_identity():
    L = corpus.sl2()
    V = adjoint_representation(L)
    assert [H.cochain_space(L, V, k).dim for k in range(3)] == [3, 9, 27]


def test_cochain_space_sign_example():
    A = Algebra.abelian(2, alpha=Matrix.diag([-1, 1]))
    T = trivial_representation(A, 1)
    assert H.cochain_space(A, T, 1).dim == 1
    # independent solve: f(a x, a y) = f(x, y) with a = diag(-1, 1) on the 4 coefficients
    signs = [(-1) ** ((i == 0) + (j == 0)) for i, j in product(range(2), repeat=2)]
    rows = [[int(p == q) * (s - 1) for q in range(4)] for p, s in enumerate(signs)]
    oracle = null_space_of_rows(rows, 4)
    assert oracle.dim == 2  # e1 (x) e1 and e2 (x) e2 both survive
    sp = H.cochain_space(A, T, 2)
    assert sp.dim == 2
    for c in sp.basis:
        assert oracle.contains(c.values)


def test_zero_cochains_are_fixed_vectors():
    L = U["yau_nilpotent_leibniz2_0"]
    V = adjoint_representation(L)
    C0 = H.cochain_space(L, V, 0)
    for c in C0.basis:
        assert V.alphaV @ c.values == tuple(c.values)
    with pytest.raises(InputError):
        H.cochain_space(L, V, -1)


# --- coboundary ------------------------------------------------------------------------------

def test_zero_cochain_maps_to_zero():
    L = corpus.sl2()
    V = adjoint_representation(L)
    assert H.coboundary(L, V, Cochain.zero(2, 3, 3)).is_zero()


@pytest.mark.parametrize("name", ["lie2", "sl2", "yau_nilpotent_leibniz2_0", "hom_sl2", "yau_heisenberg3_0"])
def test_coboundary_matches_hand_expansion(name):
    L = U[name]
    rng = random.Random(7)
    for rep, V in _reps(L).items():
        for n, m in [(0, 0), (1, 0)]:
            for k, oracle in ((0, None), (1, oracles.delta1), (2, oracles.delta2)):
                space = H.cochain_space(L, V, k)
                if not space.basis:
                    continue
                f = _random_cochain(space, rng)
                got = H.coboundary(L, V, f, n, m, Reading.alpha_group_one)
                if k == 0:
                    want = oracles.delta0(L, V, f.values, n, m)
                    assert [got.at((i,)) for i in range(L.dim)] == want
                else:
                    for idx, val in oracle(L, V, f, n, m).items():
                        assert got.at(idx) == val, (rep, n, m, k, idx)


def test_literal_and_variant_agree_at_degree_one():
    L = U["hom_sl2"]
    V = adjoint_representation(L)
    f = H.cochain_space(L, V, 1).basis[0]
    assert H.coboundary(L, V, f, reading="literal") == H.coboundary(L, V, f, reading="alpha_group_one")


def test_incompatible_cochain_rejected():
    L = U["hom_sl2"]
    V = adjoint_representation(L)
    bad = Cochain(1, 3, 3, tuple(Fraction(int(i == 1)) for i in range(9)))
    assert not H.is_compatible(L, V, bad)
    with pytest.raises(InputError):
        H.coboundary(L, V, bad)


@given(st.integers(0, 3), st.fractions(min_value=-4, max_value=4, max_denominator=3).filter(lambda t: t != 0))
def test_coboundary_is_linear(which, t):
    L = U["yau_nilpotent_leibniz2_0"]
    V = adjoint_representation(L)
    space = H.cochain_space(L, V, 1)
    f = space.basis[which % space.dim]
    g = space.basis[(which + 1) % space.dim]
    lhs = H.coboundary(L, V, f.scale(t) + g)
    rhs = H.coboundary(L, V, f).scale(t) + H.coboundary(L, V, g)
    assert lhs == rhs


# --- complex property ----------------------------------------------------------------------------

@pytest.mark.parametrize("name", COMPLEX_OK)
def test_complex_under_default_reading(name):
    L = U[name]
    for V in _reps(L).values():
        for k, (n, m) in product((1, 2), [(0, 0), (1, 0)]):
            assert H.verify_complex(L, V, k, n, m).passed


def test_default_reading_is_pinned():
    assert H.DEFAULT_READING == Reading.alpha_group_one


def test_hom_twist_needs_alpha_on_insertion_terms():
    L = U["hom_sl2"]
    for V in _reps(L).values():
        assert not H.verify_complex(L, V, 2, reading="literal").passed
        assert not H.verify_complex(L, V, 2, reading="shifted_power").passed
        assert H.verify_complex(L, V, 2, reading="alpha_group_one").passed


def test_heisenberg_twist_is_not_a_complex():
    L = U["yau_heisenberg3_0"]
    V = adjoint_representation(L)
    for reading in Reading:
        assert not H.verify_complex(L, V, 2, reading=reading).passed
    r = H.verify_complex(L, V, 2)
    assert r.witness.axiom == "complex:delta2_delta1"
    assert r.witness.indices == (3, 0, 0, 1) and r.witness.residual == (0, 0, 10)
    assert H.verify_complex(L, trivial_representation(L, 1), 2).passed
    with pytest.raises(InputError):
        H.cohomology_dims(L, V, 2)


def test_verify_complex_needs_positive_degree():
    with pytest.raises(InputError):
        H.verify_complex(corpus.lie2(), trivial_representation(corpus.lie2()), 0)


@pytest.mark.parametrize("name", COMPLEX_OK)
def test_images_are_compatible_and_coboundaries_are_cocycles(name):
    L = U[name]
    for V in _reps(L).values():
        for k in (1, 2):
            Z, B = H.cocycle_space(L, V, k), H.coboundary_space(L, V, k)
            assert all(Z.contains(v) for v in B.basis)
            for c in H.cochain_space(L, V, k - 1).basis:
                assert H.is_compatible(L, V, H.coboundary(L, V, c))


# --- dimensions ----------------------------------------------------------------------------------

def test_zero_bracket_zero_action():
    A = Algebra.abelian(2)
    T = trivial_representation(A, 1)
    for k in range(3):
        z, b, h = H.cohomology_dims(A, T, k)
        assert (z, b, h) == (2 ** k, 0, 2 ** k)
        assert H.coboundary_matrix(A, T, k).is_zero()


def test_one_dimensional_h1():
    A = Algebra.abelian(1)
    assert H.cohomology_dims(A, trivial_representation(A, 1), 1)[2] == 1


def test_lie2_regression_dims():
    L = corpus.lie2()
    assert [H.cohomology_dims(L, trivial_representation(L, 1), k) for k in range(3)] == [(1, 0, 1), (1, 0, 1), (2, 1, 1)]
    assert [H.cohomology_dims(L, adjoint_representation(L), k) for k in range(3)] == [(0, 0, 0), (2, 2, 0), (2, 2, 0)]


def test_rank_nullity_of_coboundary_matrix():
    for name in ("lie2", "sl2", "leibniz3"):
        L = U[name]
        V = adjoint_representation(L)
        for k in (1, 2):
            M = H.coboundary_matrix(L, V, k)
            assert H.cocycle_space(L, V, k).dim == H.cochain_space(L, V, k).dim - M.rank()


def test_empty_source_matrix():
    A = Algebra.abelian(2, alpha=Matrix.diag([-1, -1]))
    T = trivial_representation(A, 1)
    assert H.cochain_space(A, T, 1).dim == 0
    assert H.coboundary_matrix(A, T, 1).cols == 0


# --- Z1 and derivations --------------------------------------------------------------------------

def test_one_cocycles_vs_derivations():
    A = Algebra.abelian(2)
    assert H.one_cocycles_vs_derivations(A).passed
    for name in ("lie2", "sl2", "yau_lie2_0", "yau_nilpotent_leibniz2_0"):
        r = H.one_cocycles_vs_derivations(U[name])
        assert r.notes and r.notes[-1].startswith("dim Z1")


# --- extensions -------------------------------------------------------------------------------------

EXT = ["lie2", "sl2", "hom_sl2", "hom_lie2", "yau_nilpotent_leibniz2_0"]


def test_split_extension():
    L = corpus.sl2()
    V = adjoint_representation(L)
    f = Cochain.zero(2, 3, 3)
    assert H.is_coboundary(L, V, f)
    E = H.extension_from_cocycle(L, V, f)
    assert axioms.check_symmetric_bihom_leibniz_B1(E).passed
    from bihom import ideals
    from bihom.linalg import Subspace
    Vsub = Subspace(6, [E.unit(i) for i in range(3, 6)])
    assert ideals.is_two_sided_ideal(E, Vsub)
    assert ideals.quotient_algebra(E, Vsub) == L


@pytest.mark.parametrize("name", EXT)
def test_extension_passes_iff_cocycle(name):
    L = U[name]
    rng = random.Random(11)
    for V in _reps(L).values():
        C2 = H.cochain_space(L, V, 2)
        Z2 = H.cocycle_space(L, V, 2)
        samples = [_random_cochain(C2, rng) for _ in range(6)]
        samples += [Cochain(2, L.dim, V.dim, v) for v in Z2.basis]
        for f in samples:
            E = constructions_ext(L, V, f)
            assert axioms.check_symmetric_bihom_leibniz_B1(E).passed == H.is_cocycle(L, V, f)


def constructions_ext(L, V, f):
    from bihom.constructions import extension_direct_sum
    return extension_direct_sum(L, V, f)


def test_non_cocycle_refused():
    L = corpus.lie2()
    V = trivial_representation(L, 1)
    Z2 = H.cocycle_space(L, V, 2)
    f = next(Cochain(2, 2, 1, tuple(int(p == q) for p in range(4))) for q in range(4)
             if not Z2.contains(tuple(int(p == q) for p in range(4))))
    assert not H.is_cocycle(L, V, f)
    with pytest.raises(InputError):
        H.extension_from_cocycle(L, V, f)
    assert not axioms.check_symmetric_bihom_leibniz_B1(constructions_ext(L, V, f)).passed


@pytest.mark.parametrize("name", EXT)
def test_coboundary_extensions_are_equivalent(name):
    L = U[name]
    for V in _reps(L).values():
        split = H.extension_from_cocycle(L, V, Cochain.zero(2, L.dim, V.dim))
        for g in H.cochain_space(L, V, 1).basis:
            f = H.coboundary(L, V, g)
            assert H.is_coboundary(L, V, f)
            assert H.cocycles_equivalent(L, V, f, Cochain.zero(2, L.dim, V.dim))
            E = H.extension_from_cocycle(L, V, f)
            phi = H.shear_map(L, V, g)
            r = H.verify_extension_isomorphism(split, E, phi, L.dim)
            assert r.passed, r.describe()
            # preimage finds some g' with the same coboundary
            assert H.coboundary(L, V, H.preimage(L, V, f)) == f


def test_nontrivial_class():
    L = corpus.lie2()
    V = trivial_representation(L, 1)
    Z2, B2 = H.cocycle_space(L, V, 2), H.coboundary_space(L, V, 2)
    f = next(Cochain(2, 2, 1, v) for v in Z2.basis if not B2.contains(v))
    assert not H.is_coboundary(L, V, f)
    assert H.preimage(L, V, f) is None
    assert axioms.check_symmetric_bihom_leibniz_B1(H.extension_from_cocycle(L, V, f)).passed


@pytest.mark.parametrize("name,rep", [("nilpotent_leibniz2", "trivial"), ("nilpotent_leibniz2", "adjoint"),
                                      ("leibniz3", "adjoint"), ("yau_heisenberg3_0", "adjoint")])
def test_cocycle_whose_extension_fails(name, rep):
    # delta^2 encodes the right law only: a cocycle can break the left law of the extension
    L = U[name]
    V = _reps(L)[rep]
    bad = [v for v in H.cocycle_space(L, V, 2).basis
           if not axioms.check_symmetric_bihom_leibniz_B1(constructions_ext(L, V, Cochain(2, L.dim, V.dim, v))).passed]
    assert bad
    E = constructions_ext(L, V, Cochain(2, L.dim, V.dim, bad[0]))
    r = axioms.check_symmetric_bihom_leibniz_B1(E)
    assert r.witness.axiom.startswith("left_bihom_leibniz_B1")


def test_shear_fails_beta_on_heisenberg_twist():
    L = U["yau_heisenberg3_0"]
    V = adjoint_representation(L)
    split = constructions_ext(L, V, Cochain.zero(2, 3, 3))
    failures = set()
    for g in H.cochain_space(L, V, 1).basis:
        f = H.coboundary(L, V, g)
        r = H.verify_extension_isomorphism(split, constructions_ext(L, V, f), H.shear_map(L, V, g), 3)
        if not r.passed:
            failures.add(r.witness.axiom)
    assert failures == {"extension_iso:beta"}
