"""Named algebras shared by the test modules."""

from __future__ import annotations

from fractions import Fraction

from bihom import constructions, corpus
from bihom.linalg import Matrix
from bihom.model import Algebra


def yau_twists() -> dict[str, Algebra]:
    out = {}
    for name, (L, pairs) in corpus.symmetric_leibniz_corpus().items():
        for t, (a, b) in enumerate(pairs):
            out[f"yau_{name}_{t}"] = constructions.bihom_yau_twist(L, a, b)
    return out


def hom_twists() -> dict[str, Algebra]:
    d = Matrix.diag
    return {
        "hom_sl2": constructions.yau_twist_hom(corpus.sl2(), d([1, 2, Fraction(1, 2)])),
        "hom_lie2": constructions.yau_twist_hom(corpus.lie2(), d([1, 2])),
        "hom_nilpotent": constructions.yau_twist_hom(corpus.nilpotent_leibniz2(), d([-1, 1])),
    }


def plain() -> dict[str, Algebra]:
    return {
        "abelian2": Algebra.abelian(2),
        "lie2": corpus.lie2(),
        "sl2": corpus.sl2(),
        "heisenberg3": corpus.heisenberg3(),
        "nilpotent_leibniz2": corpus.nilpotent_leibniz2(),
        "leibniz_sum4": corpus.leibniz_sum4(),
        "direct_sum3": corpus.direct_sum3(),
        "leibniz3": corpus.leibniz3(),
    }


def table() -> dict[str, Algebra]:
    return {
        "case1_x1_y0": corpus.table_case1(1, 0),
        "case1_x2_y1": corpus.table_case1(2, 1),
        "case2_c0_d1": corpus.table_case2(0, 1),
        "case2_c1_d1": corpus.table_case2(1, 1),
        "case3_a0_x1": corpus.table_case3(0, 1),
        "case3_a1_x2": corpus.table_case3(1, 2),
        "case4_b1_y1": corpus.table_case4(1, 1),
        "case4_b0_y-1": corpus.table_case4(0, -1),
    }


def ungraded() -> dict[str, Algebra]:
    out = {}
    out.update(plain())
    out.update(table())
    out.update(yau_twists())
    out.update(hom_twists())
    return out


def graded() -> dict[str, Algebra]:
    return {
        "super3d_1111": corpus.super3d(1, 1, 1, 1),
        "super3d_1201m": corpus.super3d(1, 2, 0, -1),
    }


def everything() -> dict[str, Algebra]:
    out = ungraded()
    out.update(graded())
    out["tensor_gg"] = corpus.tensor_gg()
    out["tensor_gg_twisted"] = corpus.tensor_gg(Matrix.diag([1, -1, 1]))
    return out


def small(max_dim: int = 3) -> dict[str, Algebra]:
    return {k: v for k, v in ungraded().items() if v.dim <= max_dim}


def symmetric_b1() -> dict[str, Algebra]:
    """Multiplicative symmetric type-B1 fixtures (checked in the tests that use them)."""
    from bihom import axioms
    return {k: v for k, v in ungraded().items()
            if axioms.check_symmetric_bihom_leibniz_B1(v).passed and axioms.check_multiplicative(v).passed}
