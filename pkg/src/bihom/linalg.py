"""Exact dense linear algebra over the rationals (or a cyclotomic field).

Vectors are plain tuples of scalars; matrices are :class:`Matrix` values.
Every routine is exact: zero tests are ``x == 0``, never tolerances.

The vectorization convention used throughout the package is row-major:
``vec(X)[p * cols + q] == X[p, q]``.  Under it

    vec(A @ X @ C) == kron(A, C.T) @ vec(X)
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from typing import Iterable, Sequence

Vector = tuple


def to_scalar(value):
    """Coerce ints, fraction strings and Fractions to exact scalars.

    Non-rational scalars (e.g. cyclotomic elements) are passed through.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    if isinstance(value, float):
        raise TypeError("floating point scalars are not accepted; use 'p/q' strings")
    return value


def fraction_str(value) -> str:
    value = to_scalar(value)
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return str(value.numerator)
        return f"{value.numerator}/{value.denominator}"
    return str(value)


def zero_vector(n: int) -> Vector:
    return (Fraction(0),) * n


def unit_vector(n: int, i: int) -> Vector:
    v = [Fraction(0)] * n
    v[i] = Fraction(1)
    return tuple(v)


def vadd(u: Sequence, v: Sequence) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def vsub(u: Sequence, v: Sequence) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def vscale(t, v: Sequence) -> Vector:
    return tuple(t * a for a in v)


def is_zero_vector(v: Iterable) -> bool:
    return all(a == 0 for a in v)


def lincomb(terms: Iterable[tuple], n: int) -> Vector:
    """Sum of ``coeff * vector`` over ``(coeff, vector)`` pairs."""
    out = [Fraction(0)] * n
    for coeff, vec in terms:
        if coeff == 0:
            continue
        for i, a in enumerate(vec):
            if a != 0:
                out[i] += coeff * a
    return tuple(out)


class Matrix:
    """Immutable dense matrix of exact scalars."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, data: Iterable[Iterable], cols: int | None = None):
        rows = tuple(tuple(to_scalar(a) for a in row) for row in data)
        if cols is None:
            if not rows:
                raise ValueError("cannot infer column count of an empty matrix")
            cols = len(rows[0])
        for row in rows:
            if len(row) != cols:
                raise ValueError("ragged matrix rows")
        self.rows = len(rows)
        self.cols = cols
        self._data = rows

    # construction helpers
    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], n)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls([[0] * cols for _ in range(rows)], cols)

    @classmethod
    def diag(cls, entries: Sequence) -> "Matrix":
        n = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)], n)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int) -> "Matrix":
        return cls([[col[i] for col in columns] for i in range(rows)], len(columns))

    @classmethod
    def from_flat(cls, rows: int, cols: int, entries: Sequence) -> "Matrix":
        if len(entries) != rows * cols:
            raise ValueError(f"expected {rows * cols} entries, got {len(entries)}")
        return cls([entries[r * cols:(r + 1) * cols] for r in range(rows)], cols)

    # access
    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, idx):
        i, j = idx
        return self._data[i][j]

    def row(self, i: int) -> Vector:
        return self._data[i]

    def col(self, j: int) -> Vector:
        return tuple(row[j] for row in self._data)

    def tolist(self) -> list[list]:
        return [list(row) for row in self._data]

    def flat(self) -> Vector:
        return tuple(a for row in self._data for a in row)

    def __iter__(self):
        return iter(self._data)

    # arithmetic
    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self._data))

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other)
        return Matrix([vadd(a, b) for a, b in zip(self._data, other._data)], self.cols)

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other)
        return Matrix([vsub(a, b) for a, b in zip(self._data, other._data)], self.cols)

    def __neg__(self) -> "Matrix":
        return Matrix([[-a for a in row] for row in self._data], self.cols)

    def __mul__(self, t) -> "Matrix":
        if isinstance(t, Matrix):
            raise TypeError("use @ for matrix products")
        return Matrix([vscale(t, row) for row in self._data], self.cols)

    __rmul__ = __mul__

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if self.cols != other.rows:
                raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
            out = []
            for row in self._data:
                acc = [Fraction(0)] * other.cols
                for k, a in enumerate(row):
                    if a == 0:
                        continue
                    for j, b in enumerate(other._data[k]):
                        if b != 0:
                            acc[j] += a * b
                out.append(acc)
            return Matrix(out, other.cols)
        vec = tuple(other)
        if len(vec) != self.cols:
            raise ValueError(f"shape mismatch {self.shape} @ vector of length {len(vec)}")
        out = []
        for row in self._data:
            acc = Fraction(0)
            for a, b in zip(row, vec):
                if a != 0 and b != 0:
                    acc += a * b
            out.append(acc)
        return tuple(out)

    def __pow__(self, k: int) -> "Matrix":
        if k < 0:
            return self.inverse() ** (-k)
        if self.rows != self.cols:
            raise ValueError("power of a non-square matrix")
        result = Matrix.identity(self.rows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    @property
    def T(self) -> "Matrix":
        return Matrix(zip(*self._data), self.rows) if self.rows else Matrix.zeros(self.cols, 0)

    def is_zero(self) -> bool:
        return all(a == 0 for row in self._data for a in row)

    def rank(self) -> int:
        return rref(self)[1]

    def inverse(self) -> "Matrix":
        n = self.rows
        if n != self.cols:
            raise ValueError("inverse of a non-square matrix")
        aug = Matrix([list(self._data[i]) + list(unit_vector(n, i)) for i in range(n)], 2 * n)
        red, rank = rref(aug)
        if any(red[i, i] != 1 for i in range(n)) or rank < n:
            raise ZeroDivisionError("matrix is singular")
        return Matrix([red.row(i)[n:] for i in range(n)], n)

    def _check_same_shape(self, other: "Matrix") -> None:
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def __repr__(self) -> str:
        body = ", ".join("[" + ", ".join(fraction_str(a) for a in row) + "]" for row in self._data)
        return f"Matrix([{body}])"


def kron(a: Matrix, b: Matrix) -> Matrix:
    rows = []
    for i, j in product(range(a.rows), range(b.rows)):
        arow, brow = a.row(i), b.row(j)
        rows.append([x * y for x in arow for y in brow])
    return Matrix(rows, a.cols * b.cols)


def vstack(mats: Sequence[Matrix], cols: int) -> Matrix:
    rows = [row for m in mats for row in m]
    return Matrix(rows, cols)


# ---------------------------------------------------------------------------
# Row reduction


class _Reducer:
    """Incremental reduced row-echelon accumulator over sparse rows.

    Pivot rows are kept fully reduced, so reducing an incoming row only
    needs one pass over the pivots it touches.
    """

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.pivots: dict[int, dict[int, object]] = {}

    def add(self, row: Iterable) -> bool:
        sparse = {j: a for j, a in enumerate(row) if a != 0}
        return self.add_sparse(sparse)

    def add_sparse(self, sparse: dict) -> bool:
        for c in [c for c in sparse if c in self.pivots]:
            coeff = sparse.get(c, 0)
            if coeff == 0:
                continue
            for j, a in self.pivots[c].items():
                val = sparse.get(j, 0) - coeff * a
                if val == 0:
                    sparse.pop(j, None)
                else:
                    sparse[j] = val
        if not sparse:
            return False
        p = min(sparse)
        inv = 1 / sparse[p]
        new = {j: a * inv for j, a in sparse.items()}
        for prow in self.pivots.values():
            coeff = prow.get(p, 0)
            if coeff == 0:
                continue
            for j, a in new.items():
                val = prow.get(j, 0) - coeff * a
                if val == 0:
                    prow.pop(j, None)
                else:
                    prow[j] = val
        self.pivots[p] = new
        return True

    def reduce(self, row: Sequence) -> dict:
        """Residual of ``row`` modulo the accumulated span (sparse)."""
        sparse = {j: a for j, a in enumerate(row) if a != 0}
        for c in [c for c in sparse if c in self.pivots]:
            coeff = sparse.get(c, 0)
            if coeff == 0:
                continue
            for j, a in self.pivots[c].items():
                val = sparse.get(j, 0) - coeff * a
                if val == 0:
                    sparse.pop(j, None)
                else:
                    sparse[j] = val
        return sparse

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def rows(self) -> list[Vector]:
        zero = Fraction(0)
        out = []
        for p in sorted(self.pivots):
            dense = [zero] * self.ncols
            for j, a in self.pivots[p].items():
                dense[j] = a
            out.append(tuple(dense))
        return out


def rref(m: Matrix) -> tuple[Matrix, int]:
    """Reduced row-echelon form (zero rows appended) and rank."""
    red = _Reducer(m.cols)
    for row in m:
        red.add(row)
    rows = red.rows()
    rank = len(rows)
    rows += [zero_vector(m.cols)] * (m.rows - rank)
    return Matrix(rows, m.cols), rank


def _row_space(rows: Iterable[Sequence], ncols: int) -> list[Vector]:
    red = _Reducer(ncols)
    for row in rows:
        red.add(row)
    return red.rows()


def _null_space_rows(rref_rows: Sequence[Vector], ncols: int) -> list[Vector]:
    pivots = {}
    for r, row in enumerate(rref_rows):
        p = next(j for j, a in enumerate(row) if a != 0)
        pivots[p] = r
    basis = []
    for f in range(ncols):
        if f in pivots:
            continue
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for p, r in pivots.items():
            v[p] = -rref_rows[r][f]
        basis.append(tuple(v))
    return basis


# ---------------------------------------------------------------------------
# Subspaces


class Subspace:
    """Subspace of K^n stored by its canonical RREF basis."""

    __slots__ = ("ambient_dim", "basis")

    def __init__(self, ambient_dim: int, basis: Iterable[Sequence] = ()):
        self.ambient_dim = ambient_dim
        vectors = [tuple(to_scalar(a) for a in v) for v in basis]
        for v in vectors:
            if len(v) != ambient_dim:
                raise ValueError("basis vector has the wrong length")
        self.basis = tuple(_row_space(vectors, ambient_dim))

    @classmethod
    def span(cls, ambient_dim: int, vectors: Iterable[Sequence]) -> "Subspace":
        return cls(ambient_dim, vectors)

    @classmethod
    def full(cls, n: int) -> "Subspace":
        return cls(n, [unit_vector(n, i) for i in range(n)])

    @classmethod
    def zero(cls, n: int) -> "Subspace":
        return cls(n, [])

    @property
    def dim(self) -> int:
        return len(self.basis)

    def basis_matrix(self) -> Matrix:
        return Matrix(self.basis, self.ambient_dim)

    def contains(self, v: Sequence) -> bool:
        if len(v) != self.ambient_dim:
            raise ValueError("vector length does not match the ambient dimension")
        red = _Reducer(self.ambient_dim)
        for row in self.basis:
            red.pivots[next(j for j, a in enumerate(row) if a != 0)] = {
                j: a for j, a in enumerate(row) if a != 0
            }
        return not red.reduce(tuple(to_scalar(a) for a in v))

    def contains_subspace(self, other: "Subspace") -> bool:
        _check_ambient(self, other)
        return all(self.contains(v) for v in other.basis)

    def annihilator(self) -> list[Vector]:
        """Rows spanning the linear forms that vanish on the subspace."""
        return _null_space_rows(self.basis, self.ambient_dim)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.basis == other.basis

    def __hash__(self) -> int:
        return hash((self.ambient_dim, self.basis))

    def __repr__(self) -> str:
        return f"Subspace(ambient_dim={self.ambient_dim}, dim={self.dim})"


def _check_ambient(a: Subspace, b: Subspace) -> None:
    if a.ambient_dim != b.ambient_dim:
        raise ValueError(f"ambient dimension mismatch: {a.ambient_dim} vs {b.ambient_dim}")


def null_space(m: Matrix) -> Subspace:
    """Kernel ``{v : m @ v == 0}``."""
    rows = _row_space(m, m.cols)
    return Subspace(m.cols, _null_space_rows(rows, m.cols))


def null_space_of_rows(rows: Iterable[Sequence], ncols: int) -> Subspace:
    """Kernel of the system whose equations are ``rows`` (streamed, never stacked)."""
    red = _Reducer(ncols)
    for row in rows:
        red.add(row)
    return Subspace(ncols, _null_space_rows(red.rows(), ncols))


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    _check_ambient(a, b)
    return Subspace(a.ambient_dim, a.basis + b.basis)


def subspace_intersect(a: Subspace, b: Subspace) -> Subspace:
    _check_ambient(a, b)
    return null_space_of_rows(a.annihilator() + b.annihilator(), a.ambient_dim)


def subspace_equal(a: Subspace, b: Subspace) -> bool:
    _check_ambient(a, b)
    return a.basis == b.basis


def contains(a: Subspace, v: Sequence) -> bool:
    return a.contains(v)


def image(m: Matrix, s: Subspace | None = None) -> Subspace:
    """Image of ``s`` (default: the whole domain) under ``m``."""
    vectors = s.basis if s is not None else [unit_vector(m.cols, j) for j in range(m.cols)]
    return Subspace(m.rows, [m @ v for v in vectors])


def solve(m: Matrix, b: Sequence) -> Vector | None:
    """One exact solution of ``m @ x == b`` or None when inconsistent."""
    aug = Matrix([list(m.row(i)) + [b[i]] for i in range(m.rows)], m.cols + 1)
    red, rank = rref(aug)
    x = [Fraction(0)] * m.cols
    for r in range(rank):
        row = red.row(r)
        p = next(j for j, a in enumerate(row) if a != 0)
        if p == m.cols:
            return None
        x[p] = row[m.cols]
    return tuple(x)


def lift_commutant_system(a: Matrix) -> Matrix:
    """Matrix ``M`` with ``M @ vec(X) == 0`` iff ``X @ a == a @ X``.

    Row-major vec, so ``vec(X a - a X) = (I kron a.T - a kron I) vec(X)``.
    """
    if a.rows != a.cols:
        raise ValueError("commutant system needs a square matrix")
    ident = Matrix.identity(a.rows)
    return kron(ident, a.T) - kron(a, ident)


def vec(x: Matrix) -> Vector:
    return x.flat()


def unvec(v: Sequence, rows: int, cols: int | None = None) -> Matrix:
    return Matrix.from_flat(rows, rows if cols is None else cols, tuple(v))
