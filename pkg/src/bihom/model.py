"""Algebras, representations and cochains given by structure constants.

Conventions fixed for the whole package:

* ``c[i][j][k]`` is the coefficient of ``e_k`` in ``[e_i, e_j]``.
* A structure map is a matrix acting on column vectors: ``alpha(e_j)`` is
  column ``j`` of ``alpha``.
* ``l[i][a][b]`` is the coefficient of ``v_b`` in ``[e_i, v_a]_V`` and
  ``r[a][i][b]`` the coefficient of ``v_b`` in ``[v_a, e_i]_V``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Callable, Sequence

from .linalg import Matrix, Vector, is_zero_vector, to_scalar, unit_vector, zero_vector

Degree = tuple


class InputError(ValueError):
    """Malformed algebra, representation or cochain data."""


@dataclass(frozen=True)
class GradingGroup:
    """Finite abelian group Z_{m1} x ... x Z_{mr}; elements are residue tuples."""

    moduli: tuple[int, ...]

    def __post_init__(self):
        if any(m < 1 for m in self.moduli):
            raise InputError("grading moduli must be positive")

    def reduce(self, a: Sequence[int]) -> Degree:
        if len(a) != len(self.moduli):
            raise InputError(f"degree {tuple(a)} does not match moduli {self.moduli}")
        return tuple(x % m for x, m in zip(a, self.moduli))

    def add(self, a: Degree, b: Degree) -> Degree:
        return tuple((x + y) % m for x, y, m in zip(a, b, self.moduli))

    def neg(self, a: Degree) -> Degree:
        return tuple((-x) % m for x, m in zip(a, self.moduli))

    @property
    def zero(self) -> Degree:
        return (0,) * len(self.moduli)

    def elements(self) -> list[Degree]:
        return [tuple(t) for t in product(*(range(m) for m in self.moduli))]


@dataclass(frozen=True)
class Bicharacter:
    group: GradingGroup
    table: tuple  # sorted ((a, b), value) pairs over the full group

    @classmethod
    def from_function(cls, group: GradingGroup, fn: Callable[[Degree, Degree], object]) -> "Bicharacter":
        elems = group.elements()
        return cls(group, tuple(((a, b), to_scalar(fn(a, b))) for a in elems for b in elems))

    @classmethod
    def sign(cls, group: GradingGroup) -> "Bicharacter":
        """(-1)^(a.b) on a product of Z_2 factors (Z_2 gives the super case)."""
        if any(m != 2 for m in group.moduli):
            raise InputError("the sign bicharacter needs every modulus equal to 2")
        return cls.from_function(group, lambda a, b: (-1) ** sum(x * y for x, y in zip(a, b)))

    @classmethod
    def trivial(cls, group: GradingGroup) -> "Bicharacter":
        return cls.from_function(group, lambda a, b: 1)

    def __call__(self, a: Degree, b: Degree):
        return self._lookup[(tuple(a), tuple(b))]

    @property
    def _lookup(self) -> dict:
        cache = self.__dict__.get("_cache")
        if cache is None:
            cache = dict(self.table)
            object.__setattr__(self, "_cache", cache)
        return cache

    def violations(self):
        """Yield (law, (a, b, c)) for every failed bicharacter law."""
        g = self.group
        elems = g.elements()
        if set(self._lookup) != {(a, b) for a in elems for b in elems}:
            yield "bicharacter:table_incomplete", ()
            return
        for a, b in product(elems, repeat=2):
            if self(a, b) == 0:
                yield "bicharacter:nonzero", (a, b)
            if self(a, b) * self(b, a) != 1:
                yield "bicharacter:skew", (a, b)
        for a, b, c in product(elems, repeat=3):
            if self(a, g.add(b, c)) != self(a, b) * self(a, c):
                yield "bicharacter:right_additive", (a, b, c)
            if self(g.add(a, b), c) != self(a, c) * self(b, c):
                yield "bicharacter:left_additive", (a, b, c)


@dataclass(frozen=True)
class Grading:
    group: GradingGroup
    degrees: tuple[Degree, ...]
    epsilon: Bicharacter

    @classmethod
    def super(cls, parities: Sequence[int]) -> "Grading":
        group = GradingGroup((2,))
        return cls(group, tuple((p % 2,) for p in parities), Bicharacter.sign(group))

    @classmethod
    def trivial(cls, n: int) -> "Grading":
        group = GradingGroup(())
        return cls(group, ((),) * n, Bicharacter.trivial(group))


@dataclass(frozen=True)
class Witness:
    axiom: str
    indices: tuple
    residual: tuple

    def describe(self) -> str:
        res = "(" + ", ".join(_fmt(a) for a in self.residual) + ")"
        return f"{self.axiom} at {self.indices}: residual {res}"


def _fmt(a) -> str:
    from .linalg import fraction_str

    return fraction_str(a)


@dataclass(frozen=True)
class CheckReport:
    passed: bool
    witness: Witness | None = None
    notes: tuple[str, ...] = ()

    def __post_init__(self):
        if self.passed != (self.witness is None):
            raise ValueError("a report passes exactly when it carries no witness")

    def __bool__(self) -> bool:
        return self.passed

    @classmethod
    def ok(cls, *notes: str) -> "CheckReport":
        return cls(True, None, tuple(notes))

    @classmethod
    def fail(cls, axiom: str, indices: tuple, residual: Sequence, *notes: str) -> "CheckReport":
        return cls(False, Witness(axiom, tuple(indices), tuple(residual)), tuple(notes))

    def describe(self) -> str:
        head = "PASS" if self.passed else "FAIL " + self.witness.describe()
        return "; ".join([head, *self.notes])


def _as_tensor3(c, n: int, m: int | None = None, p: int | None = None) -> tuple:
    m = n if m is None else m
    p = n if p is None else p
    try:
        out = tuple(
            tuple(tuple(to_scalar(c[i][j][k]) for k in range(p)) for j in range(m)) for i in range(n)
        )
    except (IndexError, TypeError) as exc:
        raise InputError(f"structure tensor does not have shape {n}x{m}x{p}") from exc
    for i in range(n):
        if len(c[i]) != m or any(len(c[i][j]) != p for j in range(m)):
            raise InputError(f"structure tensor does not have shape {n}x{m}x{p}")
    if len(c) != n:
        raise InputError(f"structure tensor does not have shape {n}x{m}x{p}")
    return out


def _as_matrix(a, n: int, name: str) -> Matrix:
    if a is None:
        return Matrix.identity(n)
    mat = a if isinstance(a, Matrix) else Matrix(a, n)
    if mat.shape != (n, n):
        raise InputError(f"{name} must be {n}x{n}, got {mat.shape[0]}x{mat.shape[1]}")
    return mat


class Algebra:
    """Finite-dimensional algebra with twisting maps and an optional grading."""

    __slots__ = ("dim", "c", "alpha", "beta", "grading", "_nonzero")

    def __init__(self, dim: int, c, alpha=None, beta=None, grading: Grading | None = None):
        if dim < 0:
            raise InputError("dimension must be non-negative")
        self.dim = dim
        self.c = _as_tensor3(c, dim)
        self.alpha = _as_matrix(alpha, dim, "alpha")
        self.beta = _as_matrix(beta, dim, "beta")
        if grading is not None and len(grading.degrees) != dim:
            raise InputError("grading must assign a degree to every basis vector")
        self.grading = grading
        self._nonzero = {
            (i, j): self.c[i][j]
            for i in range(dim)
            for j in range(dim)
            if not is_zero_vector(self.c[i][j])
        }

    @classmethod
    def from_brackets(cls, dim: int, brackets: dict, **kwargs) -> "Algebra":
        """Build from ``{(i, j): vector}``; missing pairs are zero."""
        c = [[list(zero_vector(dim)) for _ in range(dim)] for _ in range(dim)]
        for (i, j), vec in brackets.items():
            if len(vec) != dim:
                raise InputError("bracket value has the wrong length")
            c[i][j] = list(vec)
        return cls(dim, c, **kwargs)

    @classmethod
    def abelian(cls, dim: int, **kwargs) -> "Algebra":
        return cls.from_brackets(dim, {}, **kwargs)

    def replace(self, **changes) -> "Algebra":
        kw = dict(c=self.c, alpha=self.alpha, beta=self.beta, grading=self.grading)
        kw.update(changes)
        return Algebra(changes.get("dim", self.dim), **kw)

    def bracket(self, x: Sequence, y: Sequence) -> Vector:
        n = self.dim
        if len(x) != n or len(y) != n:
            raise InputError(f"bracket arguments must have length {n}")
        out = [Fraction(0)] * n
        xs = [(i, a) for i, a in enumerate(x) if a != 0]
        ys = [(j, b) for j, b in enumerate(y) if b != 0]
        nz = self._nonzero
        for i, a in xs:
            for j, b in ys:
                vec = nz.get((i, j))
                if vec is None:
                    continue
                ab = a * b
                for k, ck in enumerate(vec):
                    if ck != 0:
                        out[k] += ab * ck
        return tuple(out)

    def basis_bracket(self, i: int, j: int) -> Vector:
        return self.c[i][j]

    def unit(self, i: int) -> Vector:
        return unit_vector(self.dim, i)

    def is_abelian(self) -> bool:
        return not self._nonzero

    @property
    def graded(self) -> bool:
        return self.grading is not None

    def degree(self, i: int) -> Degree:
        if self.grading is None:
            return ()
        return self.grading.degrees[i]

    def bracket_matrix(self) -> Matrix:
        """n x n^2 matrix B with B @ (x kron y) == [x, y] (row-major kron index)."""
        n = self.dim
        return Matrix([[self.c[i][j][k] for i in range(n) for j in range(n)] for k in range(n)], n * n)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Algebra):
            return NotImplemented
        return (self.dim, self.c, self.alpha, self.beta, self.grading) == (
            other.dim, other.c, other.alpha, other.beta, other.grading,
        )

    def __hash__(self) -> int:
        return hash((self.dim, self.c, self.alpha, self.beta))

    def __repr__(self) -> str:
        return f"Algebra(dim={self.dim}, nonzero_brackets={len(self._nonzero)}, graded={self.graded})"


def bracket_eval(L: Algebra, x: Sequence, y: Sequence) -> Vector:
    return L.bracket(x, y)


def epsilon_of(L: Algebra, i: int, j: int):
    if L.grading is None:
        raise InputError("epsilon_of needs a graded algebra")
    g = L.grading
    return g.epsilon(g.degrees[i], g.degrees[j])


def _map_is_degree_zero(mat: Matrix, degrees: Sequence[Degree]) -> tuple | None:
    for i, j in product(range(mat.rows), range(mat.cols)):
        if mat[i, j] != 0 and degrees[i] != degrees[j]:
            return (i, j)
    return None


def validate(L: Algebra) -> CheckReport:
    """Shape, grading-evenness, degree-zero maps and bicharacter laws."""
    n = L.dim
    if L.alpha.shape != (n, n) or L.beta.shape != (n, n):
        return CheckReport.fail("shape:maps", (), ())
    g = L.grading
    if g is None:
        return CheckReport.ok()
    for d in g.degrees:
        if g.group.reduce(d) != tuple(d):
            return CheckReport.fail("grading:unreduced_degree", (tuple(d),), ())
    for law, where in g.epsilon.violations():
        return CheckReport.fail(law, where, ())
    for i, j in product(range(n), repeat=2):
        target = g.group.add(g.degrees[i], g.degrees[j])
        vec = L.c[i][j]
        for k, a in enumerate(vec):
            if a != 0 and g.degrees[k] != target:
                return CheckReport.fail("grading:odd_bracket", (i, j, k), vec)
    for name, mat in (("alpha", L.alpha), ("beta", L.beta)):
        bad = _map_is_degree_zero(mat, g.degrees)
        if bad is not None:
            i, j = bad
            return CheckReport.fail(f"grading:{name}_not_even", bad, mat.col(j))
    return CheckReport.ok()


class Representation:
    """Module V over an algebra L: left/right action tensors and maps on V."""

    __slots__ = ("algebra", "dim", "l", "r", "alphaV", "betaV", "grading")

    def __init__(self, algebra: Algebra, dim: int, l=None, r=None, alphaV=None, betaV=None,
                 grading: Grading | None = None):
        n = algebra.dim
        self.algebra = algebra
        self.dim = dim
        zero = [[[0] * dim for _ in range(dim)] for _ in range(n)]
        self.l = _as_tensor3(zero if l is None else l, n, dim, dim)
        zero_r = [[[0] * dim for _ in range(n)] for _ in range(dim)]
        self.r = _as_tensor3(zero_r if r is None else r, dim, n, dim)
        self.alphaV = _as_matrix(alphaV, dim, "alphaV")
        self.betaV = _as_matrix(betaV, dim, "betaV")
        if grading is not None and len(grading.degrees) != dim:
            raise InputError("module grading must assign a degree to every basis vector")
        self.grading = grading

    def left_matrix(self, x: Sequence) -> Matrix:
        """Matrix of v -> [x, v]_V."""
        m = self.dim
        cols = []
        for a in range(m):
            col = [Fraction(0)] * m
            for i, xi in enumerate(x):
                if xi == 0:
                    continue
                for b, coef in enumerate(self.l[i][a]):
                    if coef != 0:
                        col[b] += xi * coef
            cols.append(col)
        return Matrix.from_columns(cols, m)

    def right_matrix(self, x: Sequence) -> Matrix:
        """Matrix of v -> [v, x]_V."""
        m = self.dim
        cols = []
        for a in range(m):
            col = [Fraction(0)] * m
            for i, xi in enumerate(x):
                if xi == 0:
                    continue
                for b, coef in enumerate(self.r[a][i]):
                    if coef != 0:
                        col[b] += xi * coef
            cols.append(col)
        return Matrix.from_columns(cols, m)

    def act_left(self, x: Sequence, v: Sequence) -> Vector:
        """[x, v]_V"""
        m = self.dim
        out = [Fraction(0)] * m
        for i, xi in enumerate(x):
            if xi == 0:
                continue
            for a, va in enumerate(v):
                if va == 0:
                    continue
                coef = xi * va
                for b, t in enumerate(self.l[i][a]):
                    if t != 0:
                        out[b] += coef * t
        return tuple(out)

    def act_right(self, v: Sequence, x: Sequence) -> Vector:
        """[v, x]_V"""
        m = self.dim
        out = [Fraction(0)] * m
        for a, va in enumerate(v):
            if va == 0:
                continue
            for i, xi in enumerate(x):
                if xi == 0:
                    continue
                coef = xi * va
                for b, t in enumerate(self.r[a][i]):
                    if t != 0:
                        out[b] += coef * t
        return tuple(out)

    def replace(self, **changes) -> "Representation":
        kw = dict(algebra=self.algebra, dim=self.dim, l=self.l, r=self.r, alphaV=self.alphaV,
                  betaV=self.betaV, grading=self.grading)
        kw.update(changes)
        return Representation(**kw)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Representation):
            return NotImplemented
        return (self.algebra, self.dim, self.l, self.r, self.alphaV, self.betaV) == (
            other.algebra, other.dim, other.l, other.r, other.alphaV, other.betaV,
        )

    def __repr__(self) -> str:
        return f"Representation(dim={self.dim}, algebra_dim={self.algebra.dim})"


@dataclass(frozen=True)
class Cochain:
    """k-linear map L^k -> V: ``values[t]`` is f on the t-th basis tuple.

    Basis tuples are enumerated lexicographically (slot-major, so the flat
    coordinate of output ``b`` on tuple ``(i1, ..., ik)`` is
    ``((i1 * n + i2) * n + ...) * m + b``).
    """

    k: int
    n: int
    m: int
    values: tuple = field(compare=True)

    def __post_init__(self):
        if len(self.values) != self.n ** self.k * self.m:
            raise InputError("cochain has the wrong number of coordinates")

    @classmethod
    def from_function(cls, k: int, n: int, m: int, fn: Callable[[tuple], Sequence]) -> "Cochain":
        values = []
        for idx in product(range(n), repeat=k):
            out = fn(idx)
            if len(out) != m:
                raise InputError("cochain value has the wrong length")
            values.extend(to_scalar(a) for a in out)
        return cls(k, n, m, tuple(values))

    @classmethod
    def zero(cls, k: int, n: int, m: int) -> "Cochain":
        return cls(k, n, m, zero_vector(n ** k * m))

    def at(self, idx: Sequence[int]) -> Vector:
        flat = 0
        for i in idx:
            flat = flat * self.n + i
        return self.values[flat * self.m:(flat + 1) * self.m]

    def __call__(self, *args: Sequence) -> Vector:
        """Multilinear evaluation on arbitrary vectors."""
        if len(args) != self.k:
            raise InputError(f"cochain takes {self.k} arguments")
        out = [Fraction(0)] * self.m
        supports = [[(i, a) for i, a in enumerate(x) if a != 0] for x in args]
        for combo in product(*supports):
            coef = Fraction(1)
            idx = []
            for i, a in combo:
                coef *= a
                idx.append(i)
            val = self.at(idx)
            for b, t in enumerate(val):
                if t != 0:
                    out[b] += coef * t
        return tuple(out)

    def __add__(self, other: "Cochain") -> "Cochain":
        return Cochain(self.k, self.n, self.m, tuple(a + b for a, b in zip(self.values, other.values)))

    def __sub__(self, other: "Cochain") -> "Cochain":
        return Cochain(self.k, self.n, self.m, tuple(a - b for a, b in zip(self.values, other.values)))

    def scale(self, t) -> "Cochain":
        return Cochain(self.k, self.n, self.m, tuple(t * a for a in self.values))

    def is_zero(self) -> bool:
        return is_zero_vector(self.values)
