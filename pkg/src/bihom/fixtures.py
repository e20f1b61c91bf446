"""The shipped JSON fixture corpus and its generator.

``python -m bihom.fixtures DIR`` rewrites every file; the test suite checks
that regeneration is byte-identical to the committed copies.
"""

from __future__ import annotations

import sys
from fractions import Fraction
from pathlib import Path

from . import cohomology, constructions, corpus, io
from .linalg import Matrix
from .model import Algebra, Cochain
from .representations import adjoint_representation


def _extension_lie2() -> Algebra:
    """lie2 extended by its adjoint module along the first basis 2-cocycle."""
    L = corpus.lie2()
    V = adjoint_representation(L)
    Z = cohomology.cocycle_space(L, V, 2)
    f = Cochain(2, L.dim, V.dim, Z.basis[0])
    return cohomology.extension_from_cocycle(L, V, f)


def fixture_objects() -> dict:
    d = Matrix.diag
    heis, _ = corpus.symmetric_leibniz_corpus()["heisenberg3"]
    return {
        "table_case1": corpus.table_case1(1, 0),
        "table_case2": corpus.table_case2(0, 1),
        "table_case3": corpus.table_case3(1, 1),
        "table_case4": corpus.table_case4(1, 1),
        "super3d": corpus.super3d(1, 1, 1, 1),
        "tensor_gg": corpus.tensor_gg(),
        "tensor_gg_twisted": corpus.tensor_gg(d([1, -1, 1])),
        "abelian2": Algebra.abelian(2),
        "lie2": corpus.lie2(),
        "sl2": corpus.sl2(),
        "yau_heisenberg3": constructions.bihom_yau_twist(heis, d([1, 2, 2]), d([3, 1, 3])),
        "yau_lie2_unipotent": constructions.bihom_yau_twist(corpus.lie2(), Matrix([[1, 0], [1, 1]]),
                                                            Matrix.identity(2)),
        "yau_nilpotent_leibniz2": constructions.bihom_yau_twist(corpus.nilpotent_leibniz2(), d([2, 4]),
                                                                d([-1, 1])),
        "hom_twist_sl2": constructions.yau_twist_hom(corpus.sl2(), d([1, 2, Fraction(1, 2)])),
        "extension_lie2": _extension_lie2(),
        "lie2_adjoint": adjoint_representation(corpus.lie2()),
    }


def render_all() -> dict[str, str]:
    return {f"{name}.json": io.dumps(obj) for name, obj in fixture_objects().items()}


def write_all(directory) -> list[Path]:
    out = Path(directory)
    out.mkdir(parents=True, exist_ok=True)
    written = []
    for name, text in render_all().items():
        path = out / name
        path.write_text(text)
        written.append(path)
    return written


if __name__ == "__main__":
    for p in write_all(sys.argv[1] if len(sys.argv) > 1 else "fixtures"):
        print(p)
