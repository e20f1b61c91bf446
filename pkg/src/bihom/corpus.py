"""Fixture algebras used by the tests, the CLI and the shipped JSON corpus."""

from __future__ import annotations

from fractions import Fraction

from .linalg import Matrix, to_scalar
from .model import Algebra, Grading, InputError

_ALPHA2 = Matrix.diag([-1, 1])


def _v(*xs):
    return tuple(to_scalar(x) for x in xs)


def table_case1(x=1, y=0) -> Algebra:
    """[e1,e1] = x e2, [e1,e2] = y e2."""
    return Algebra.from_brackets(2, {(0, 0): _v(0, x), (0, 1): _v(0, y)}, alpha=_ALPHA2)


def table_case2(c=0, d=1) -> Algebra:
    """[e2,e1] = c e1, [e2,e2] = d e1."""
    return Algebra.from_brackets(2, {(1, 0): _v(c, 0), (1, 1): _v(d, 0)}, alpha=_ALPHA2)


def _case3_brackets(a, x, dim: int) -> dict:
    a, x = to_scalar(a), to_scalar(x)
    if x == 0:
        raise InputError("this family needs x != 0")
    w = (a, x) + (Fraction(0),) * (dim - 2)
    r = a / x
    return {
        (0, 0): w,
        (0, 1): tuple(-r * t for t in w),
        (1, 0): tuple(-r * t for t in w),
        (1, 1): tuple(r * r * t for t in w),
    }


def table_case3(a=1, x=1) -> Algebra:
    """[e1,e1] = a e1 + x e2, [e1,e2] = [e2,e1] = -(a/x)[e1,e1], [e2,e2] = (a/x)^2 [e1,e1]."""
    return Algebra.from_brackets(2, _case3_brackets(a, x, 2), alpha=_ALPHA2)


def table_case4(b=1, y=1) -> Algebra:
    """[e1,e2] = -[e2,e1] = b e1 + y e2."""
    return Algebra.from_brackets(2, {(0, 1): _v(b, y), (1, 0): _v(-to_scalar(b), -to_scalar(y))}, alpha=_ALPHA2)


def super3d(a=1, x=1, d=1, mu=1) -> Algebra:
    """Case 3 extended by an odd e3 with [e3,e3] = (d/x)[e1,e1]; alpha = diag(-1, 1, mu)."""
    br = _case3_brackets(a, x, 3)
    t = to_scalar(d) / to_scalar(x)
    br[(2, 2)] = tuple(t * s for s in br[(0, 0)])
    return Algebra.from_brackets(3, br, alpha=Matrix.diag([-1, 1, to_scalar(mu)]),
                                 grading=Grading.super([0, 0, 1]))


FAMILIES = {
    "table_case1": (table_case1, ("x", "y")),
    "table_case2": (table_case2, ("c", "d")),
    "table_case3": (table_case3, ("a", "x")),
    "table_case4": (table_case4, ("b", "y")),
    "super3d": (super3d, ("a", "x", "d", "mu")),
}


def tensor_gg(a: Matrix | None = None) -> Algebra:
    """9-dim bracket on G (x) G, basis x_i (x) x_j at index 3i + j, structure map a (x) a."""
    from .linalg import kron

    def idx(i, j):
        return 3 * (i - 1) + (j - 1)

    def unit(k):
        return tuple(Fraction(int(t == k)) for t in range(9))

    br = {
        (idx(1, 3), idx(1, 3)): unit(idx(1, 1)),
        (idx(2, 3), idx(1, 3)): unit(idx(2, 1)),
        (idx(2, 3), idx(2, 3)): unit(idx(2, 2)),
    }
    a = Matrix.identity(3) if a is None else a
    return Algebra.from_brackets(9, br, alpha=kron(a, a))


def lie2() -> Algebra:
    """Nonabelian 2-dim Lie algebra [e1,e2] = e2."""
    return Algebra.from_brackets(2, {(0, 1): _v(0, 1), (1, 0): _v(0, -1)})


def sl2() -> Algebra:
    """Basis (h, e, f): [h,e] = 2e, [h,f] = -2f, [e,f] = h."""
    return Algebra.from_brackets(3, {
        (0, 1): _v(0, 2, 0), (1, 0): _v(0, -2, 0),
        (0, 2): _v(0, 0, -2), (2, 0): _v(0, 0, 2),
        (1, 2): _v(1, 0, 0), (2, 1): _v(-1, 0, 0),
    })


def heisenberg3(alpha=None, beta=None) -> Algebra:
    """[e1,e2] = -[e2,e1] = e3; every double bracket vanishes."""
    return Algebra.from_brackets(3, {(0, 1): _v(0, 0, 1), (1, 0): _v(0, 0, -1)}, alpha=alpha, beta=beta)


def nilpotent_leibniz2() -> Algebra:
    """[e1,e1] = e2 (symmetric Leibniz, not Lie)."""
    return Algebra.from_brackets(2, {(0, 0): _v(0, 1)})


def leibniz_sum4() -> Algebra:
    """Direct sum of [e1,e1] = e2 and the Lie algebra [e3,e4] = e4."""
    return Algebra.from_brackets(4, {
        (0, 0): _v(0, 1, 0, 0),
        (2, 3): _v(0, 0, 0, 1), (3, 2): _v(0, 0, 0, -1),
    })


def direct_sum3() -> Algebra:
    """Lie algebra [e1,e2] = e2 plus a central e3."""
    return Algebra.from_brackets(3, {(0, 1): _v(0, 1, 0), (1, 0): _v(0, -1, 0)})


def leibniz3() -> Algebra:
    """3-dim left and right Leibniz algebra: [e1,e1] = e3, [e2,e2] = e3, [e1,e2] = e3."""
    return Algebra.from_brackets(3, {(0, 0): _v(0, 0, 1), (1, 1): _v(0, 0, 1), (0, 1): _v(0, 0, 1)})


# Symmetric Leibniz algebras (untwisted) with stored pairs of commuting endomorphisms.
def symmetric_leibniz_corpus() -> dict[str, tuple[Algebra, list[tuple[Matrix, Matrix]]]]:
    d = Matrix.diag
    return {
        "nilpotent_leibniz2": (nilpotent_leibniz2(), [
            (d([-1, 1]), Matrix.identity(2)),
            (d([2, 4]), d([-1, 1])),
            (d([0, 0]), d([3, 9])),
        ]),
        "table_case3": (table_case3(1, 1).replace(alpha=Matrix.identity(2)), [
            (Matrix([[2, 2], [0, 4]]), Matrix([[-1, 2], [0, 1]])),
            (Matrix([[-1, 2], [0, 1]]), Matrix.identity(2)),
        ]),
        "lie2": (lie2(), [
            (d([1, 2]), d([1, 3])),
            (d([1, 0]), d([1, 1])),
            (Matrix([[1, 0], [1, 1]]), Matrix.identity(2)),
        ]),
        "sl2": (sl2(), [
            (d([1, 2, Fraction(1, 2)]), d([1, -1, -1])),
        ]),
        "leibniz_sum4": (leibniz_sum4(), [
            (d([-1, 1, 1, 1]), d([1, 1, 1, 2])),
            (d([1, 1, 0, 0]), d([0, 0, 1, 1])),
        ]),
        "heisenberg3": (heisenberg3(), [
            (d([1, 2, 2]), d([3, 1, 3])),
        ]),
    }
