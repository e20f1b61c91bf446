from fractions import Fraction
from itertools import product

import pytest

import fixture_sets
from bihom import axioms, constructions as C, corpus
from bihom.axioms import AxiomSet, check, evaluate_identity
from bihom.linalg import Matrix, kron
from bihom.model import Algebra, Cochain, Grading, InputError, Representation
from bihom.representations import adjoint_representation, trivial_representation

d = Matrix.diag


@pytest.mark.parametrize("name", sorted(corpus.symmetric_leibniz_corpus()))
def test_yau_twist_closure(name):
    L, pairs = corpus.symmetric_leibniz_corpus()[name]
    assert pairs
    for a, b in pairs:
        T = C.bihom_yau_twist(L, a, b)
        assert axioms.check_symmetric_bihom_leibniz(T).passed
        assert T.alpha == a and T.beta == b
        # bracket is [a x, b y]
        for i, j in product(range(L.dim), repeat=2):
            assert T.basis_bracket(i, j) == L.bracket(a.col(i), b.col(j))


def test_yau_twist_preconditions():
    L = corpus.lie2()
    with pytest.raises(C.PreconditionError):
        C.bihom_yau_twist(L, Matrix([[0, 1], [1, 0]]), Matrix.identity(2))  # not an endomorphism
    with pytest.raises(C.PreconditionError):
        C.bihom_yau_twist(corpus.table_case1(1, 1), Matrix.identity(2), Matrix.identity(2))
    with pytest.raises(InputError):
        C.bihom_yau_twist(L, Matrix.identity(3), Matrix.identity(2))


def test_non_commuting_twist_rejected():
    A = Algebra.abelian(2)
    with pytest.raises(C.PreconditionError):
        C.bihom_yau_twist(A, Matrix([[1, 1], [0, 1]]), Matrix([[1, 0], [1, 1]]))


def test_hom_yau_twist():
    T = C.yau_twist_hom(corpus.sl2(), d([1, 2, Fraction(1, 2)]))
    assert axioms.check_hom_lie(T).passed
    assert axioms.check_symmetric_hom_leibniz(T).passed
    N = C.yau_twist_hom(corpus.nilpotent_leibniz2(), d([-1, 1]))
    assert axioms.check_symmetric_hom_leibniz(N).passed
    L1 = C.yau_twist_hom(corpus.table_case1(1, 1), Matrix.identity(2))
    assert axioms.check_left_hom_leibniz(L1).passed


def test_lie_tensor_is_right_leibniz_only():
    T = C.lie_tensor_to_leibniz(corpus.lie2())
    assert T.dim == 4
    assert axioms.check_right_hom_leibniz(T).passed
    r = axioms.check_left_hom_leibniz(T)
    assert not r.passed and r.witness.indices == (0, 1, 1)
    assert not axioms.check_hom_lie(T).passed
    with pytest.raises(C.PreconditionError):
        C.lie_tensor_to_leibniz(corpus.nilpotent_leibniz2())


def test_hom_lie_tensor_construction():
    G = corpus.sl2()
    a = d([1, -1, -1])
    T = C.hom_lie_tensor_construction(G, a)
    assert T.alpha == kron(a, a)
    assert axioms.check_right_hom_leibniz(T).passed
    # a = id reproduces the untwisted construction
    assert C.hom_lie_tensor_construction(G, Matrix.identity(3)) == C.lie_tensor_to_leibniz(G)
    with pytest.raises(C.PreconditionError):
        C.hom_lie_tensor_construction(G, d([1, 2, 3]))


def test_bihom_to_hom():
    for name, L in fixture_sets.yau_twists().items():
        H = C.bihom_to_hom_leibniz(L)
        assert H.alpha == L.alpha @ L.beta and H.beta == Matrix.identity(L.dim)
        assert axioms.check_symmetric_hom_leibniz(H).passed, name
    with pytest.raises(C.PreconditionError):
        C.bihom_to_hom_leibniz(corpus.lie2().replace(alpha=Matrix([[0, 1], [1, 0]])))


def test_verify_flag_does_not_change_output():
    args = (corpus.lie2(), d([1, 2]), d([1, 3]))
    assert C.bihom_yau_twist(*args, verify=False) == C.bihom_yau_twist(*args)


def _super_matrix_algebra():
    # 2x2 matrices with even E11, E22 and odd E12, E21
    idx = {(0, 0): 0, (1, 1): 1, (0, 1): 2, (1, 0): 3}
    br = {}
    for (i, j), p in idx.items():
        for (k, l), q in idx.items():
            if j == k:
                v = [0] * 4
                v[idx[(i, l)]] = 1
                br[(p, q)] = tuple(v)
    return Algebra.from_brackets(4, br, grading=Grading.super([0, 0, 1, 1]))


def test_colour_assoc_to_bihom():
    A = _super_matrix_algebra()
    a, b = d([1, 1, 2, Fraction(1, 2)]), d([1, 1, 3, Fraction(1, 3)])
    assoc, lie = C.colour_assoc_to_bihom(A, a, b, commutator_epsilon=True)
    assert check(assoc, AxiomSet.bihom_associative_colour).passed
    assert check(lie, AxiomSet.bihom_lie_colour).passed
    # the plain commutator is not a colour bracket on odd elements
    with pytest.raises(C.VerificationError) as exc:
        C.colour_assoc_to_bihom(A, a, b)
    assert exc.value.report.witness.axiom == "bihom_lie_colour:skew"
    with pytest.raises(C.PreconditionError):
        C.colour_assoc_to_bihom(A, Matrix.identity(4), Matrix([[1, 0, 0, 0], [0, 1, 0, 0],
                                                               [0, 0, 0, 1], [0, 0, 1, 0]]))
    with pytest.raises(InputError):
        C.colour_assoc_to_bihom(A.replace(grading=None), a, b)


def _two_heisenberg_supers():
    return Algebra.from_brackets(4, {(1, 1): (1, 0, 0, 0), (3, 3): (0, 0, 1, 0)},
                                 grading=Grading.super([0, 1, 0, 1]))


def test_colour_centroid_twists():
    S = _two_heisenberg_supers()
    P, I = d([1, 1, 0, 0]), Matrix.identity(4)
    assert C.in_colour_centroid(S, P).passed
    T = C.colour_centroid_idempotent_twist(S, P, I)
    assert check(T, AxiomSet.symmetric_bihom_leibniz_colour).passed
    assert T.basis_bracket(1, 1) == (1, 0, 0, 0) and T.basis_bracket(3, 3) == (0, 0, 0, 0)
    first, second = C.colour_centroid_double_twist(S, P, I - P)
    assert first.alpha == P and first.beta == P
    assert check(second, AxiomSet.symmetric_bihom_leibniz_colour).passed
    assert second.basis_bracket(3, 3) == (0, 0, 1, 0) and second.basis_bracket(1, 1) == (0, 0, 0, 0)
    with pytest.raises(C.PreconditionError):
        C.colour_centroid_idempotent_twist(S, d([2, 2, 0, 0]), I)  # not idempotent
    with pytest.raises(C.PreconditionError):
        C.colour_centroid_idempotent_twist(S, d([1, 0, 0, 0]), I)  # not in the centroid


def test_module_to_left_hom_leibniz():
    L = C.yau_twist_hom(corpus.sl2(), d([1, 2, Fraction(1, 2)]))
    V = adjoint_representation(L).replace(betaV=L.alpha, alphaV=L.alpha)
    assert C.check_hom_lie_module(V).passed
    out = C.module_to_left_hom_leibniz_super(V, Matrix.identity(3))
    assert axioms.check_left_hom_leibniz(out).passed
    # phi = 0 gives the abelian bracket
    zero = C.module_to_left_hom_leibniz_super(V, Matrix.zeros(3, 3))
    assert zero.is_abelian()
    with pytest.raises(C.PreconditionError):
        C.module_to_left_hom_leibniz_super(V, d([1, 2, 3]))
    with pytest.raises(InputError):
        C.module_to_left_hom_leibniz_super(V, Matrix.zeros(2, 3))


def test_extension_direct_sum_shape():
    L = corpus.lie2()
    V = trivial_representation(L, 1)
    f = Cochain(2, 2, 1, (0, 1, -1, 0))
    E = C.extension_direct_sum(L, V, f)
    assert E.dim == 3
    assert E.basis_bracket(0, 1) == (0, 1, 1)
    assert E.basis_bracket(1, 0) == (0, -1, -1)
    assert E.alpha == C.block_diag(L.alpha, V.alphaV)
    with pytest.raises(InputError):
        C.extension_direct_sum(L, V, Cochain(1, 2, 1, (0, 0)))


def test_verification_error_carries_witness():
    bad = Algebra.from_brackets(2, {(0, 0): (0, 1), (1, 1): (1, 0)})
    with pytest.raises(C.PreconditionError):
        C.bihom_yau_twist(bad, Matrix.identity(2), Matrix.identity(2))
    err = C.VerificationError("x", "left_hom_leibniz", axioms.check_left_hom_leibniz(bad))
    w = err.report.witness
    assert evaluate_identity(bad, w.axiom, w.indices) == w.residual


def test_hom_twist_functoriality():
    L = corpus.sl2()
    a, a2 = d([1, 2, Fraction(1, 2)]), d([1, 3, Fraction(1, 3)])
    once = C.yau_twist_hom(L, a @ a2)
    twice = C.yau_twist_hom(C.yau_twist_hom(L, a), a2, verify=False)
    assert once.c == twice.c


@pytest.mark.parametrize("name", ["lie2", "sl2", "yau_nilpotent_leibniz2_0"])
def test_split_extension_structure(name):
    from bihom import ideals
    from bihom.linalg import Subspace
    L = fixture_sets.ungraded()[name]
    V = adjoint_representation(L)
    E = C.extension_direct_sum(L, V, Cochain.zero(2, L.dim, V.dim))
    Vsub = Subspace(E.dim, [E.unit(L.dim + p) for p in range(V.dim)])
    assert ideals.is_two_sided_ideal(E, Vsub)
    assert all(not any(E.bracket(u, w)) for u in Vsub.basis for w in Vsub.basis)
    assert ideals.quotient_algebra(E, Vsub) == L
