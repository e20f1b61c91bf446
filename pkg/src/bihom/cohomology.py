"""Cochain complex of a symmetric type-B1 BiHom-Leibniz algebra with coefficients in a module.

Cochains are k-linear maps f: L^k -> V with f(alpha x1, ..., alpha xk) = alphaV f(x1, ..., xk);
for k = 0 this is read as the fixed space of alphaV.  The coboundary of a
k-cochain is

    sum_{0<t<=k} (-1)^(t+1) f([x0, xt], x1, ..., ^xt, ..., xk)
  + sum_{0<s<t<=k} (-1)^(t+1) f(a x0, ..., a x_{s-1}, [xs, b xt], a x_{s+1}, ..., ^xt, ..., a xk)
  - [P x0, f(x1, b x2, ..., b xk)]_V
  + sum_{s=1..k} (-1)^s [f(x0, ..., ^xs, ..., xk), P xs]_V

with P = alpha^(n+k-1) beta^(m+k-1).  The ``Reading`` enum switches between
this literal form and two variants for comparison runs.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import product
from typing import Sequence

from .constructions import extension_direct_sum
from .linalg import Matrix, Subspace, kron, null_space, solve, vadd, vscale, vsub, zero_vector
from .model import Algebra, CheckReport, Cochain, InputError, Representation


class Reading(str, Enum):
    literal = "literal"
    # alpha on every untouched slot of the first sum
    alpha_group_one = "alpha_group_one"
    # action power n+k instead of n+k-1
    shifted_power = "shifted_power"


DEFAULT_READING = Reading.alpha_group_one


@dataclass(frozen=True)
class CochainSpaceBasis:
    k: int
    basis: tuple
    ambient_dim: int

    @property
    def dim(self) -> int:
        return len(self.basis)


def _check_pair(L: Algebra, V: Representation) -> None:
    if V.algebra.dim != L.dim:
        raise InputError("representation belongs to an algebra of another dimension")


def _tensor_power(a: Matrix, k: int) -> Matrix:
    out = Matrix.identity(1)
    for _ in range(k):
        out = kron(out, a)
    return out


def cochain_space(L: Algebra, V: Representation, k: int) -> CochainSpaceBasis:
    """Basis of {f : f o alpha^(x)k = alphaV o f}; for k = 0 the fixed vectors of alphaV."""
    _check_pair(L, V)
    if k < 0:
        raise InputError("cochain degree must be non-negative")
    n, m = L.dim, V.dim
    ak = _tensor_power(L.alpha, k)
    # G[idx, b] = f(idx)_b; condition ak^T G - G alphaV^T = 0 in row-major vec
    system = kron(ak.T, Matrix.identity(m)) - kron(Matrix.identity(n ** k), V.alphaV)
    sol = null_space(system)
    basis = tuple(Cochain(k, n, m, v) for v in sol.basis)
    return CochainSpaceBasis(k, basis, n ** k * m)


def compatibility_defect(L: Algebra, V: Representation, f: Cochain) -> tuple | None:
    """First basis tuple where f(alpha x1, ..., alpha xk) != alphaV f(x1, ..., xk), with the difference."""
    for idx in product(range(L.dim), repeat=f.k):
        lhs = f(*[L.alpha.col(i) for i in idx])
        rhs = V.alphaV @ f.at(idx)
        if lhs != rhs:
            return idx, tuple(x - y for x, y in zip(lhs, rhs))
    return None


def is_compatible(L: Algebra, V: Representation, f: Cochain) -> bool:
    return compatibility_defect(L, V, f) is None


def _power(L: Algebra, p: int, q: int) -> Matrix:
    try:
        return (L.alpha ** p) @ (L.beta ** q)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"alpha^{p} beta^{q} needs invertible structure maps") from exc


def action_power(L: Algebra, k: int, n: int, m: int, reading: Reading = DEFAULT_READING) -> Matrix:
    shift = k if Reading(reading) == Reading.shifted_power else k - 1
    return _power(L, n + shift, m + shift)


def coboundary(L: Algebra, V: Representation, f: Cochain, n: int = 0, m: int = 0,
               reading: Reading = DEFAULT_READING, check_input: bool = True) -> Cochain:
    """The (k+1)-cochain delta^k_{n,m}(f), evaluated on every basis tuple."""
    _check_pair(L, V)
    reading = Reading(reading)
    k, dim, mv = f.k, L.dim, V.dim
    if (f.n, f.m) != (dim, mv):
        raise InputError("cochain does not match the algebra and module dimensions")
    if check_input and not is_compatible(L, V, f):
        raise InputError("cochain is not compatible with alpha and alphaV")
    P = action_power(L, k, n, m, reading)
    a, b = L.alpha, L.beta
    twist_one = reading == Reading.alpha_group_one

    def value(idx):
        xs = [L.unit(i) for i in idx]
        out = zero_vector(mv)
        for t in range(1, k + 1):
            rest = [xs[u] for u in range(1, k + 1) if u != t]
            if twist_one:
                rest = [a @ x for x in rest]
            term = f(L.bracket(xs[0], xs[t]), *rest)
            out = vadd(out, vscale((-1) ** (t + 1), term))
        for t in range(2, k + 1):
            for s in range(1, t):
                args = []
                for u in range(k + 1):
                    if u == t:
                        continue
                    args.append(L.bracket(xs[s], b @ xs[t]) if u == s else a @ xs[u])
                out = vadd(out, vscale((-1) ** (t + 1), f(*args)))
        inner = f(*([xs[1]] + [b @ x for x in xs[2:]])) if k >= 1 else f.values
        out = vadd(out, vscale(-1, V.act_left(P @ xs[0], inner)))
        for s in range(1, k + 1):
            rest = [xs[u] for u in range(k + 1) if u != s]
            out = vadd(out, vscale((-1) ** s, V.act_right(f(*rest), P @ xs[s])))
        return out

    return Cochain.from_function(k + 1, dim, mv, value)


def _coords(space: CochainSpaceBasis, g: Cochain) -> tuple | None:
    if not space.basis:
        return () if g.is_zero() else None
    mat = Matrix.from_columns([c.values for c in space.basis], space.ambient_dim)
    return solve(mat, g.values)


def coboundary_matrix(L: Algebra, V: Representation, k: int, n: int = 0, m: int = 0,
                      reading: Reading = DEFAULT_READING) -> Matrix:
    """Matrix of delta^k in the bases of C^k and C^(k+1); columns are images of basis cochains."""
    src, dst = cochain_space(L, V, k), cochain_space(L, V, k + 1)
    cols = []
    for c in src.basis:
        coords = _coords(dst, coboundary(L, V, c, n, m, reading, check_input=False))
        if coords is None:
            raise InputError(f"coboundary of a degree-{k} cochain leaves the compatible space")
        cols.append(coords)
    if not cols:
        return Matrix([[]] * dst.dim, 0)
    return Matrix.from_columns(cols, dst.dim)


def verify_complex(L: Algebra, V: Representation, k: int, n: int = 0, m: int = 0,
                   reading: Reading = DEFAULT_READING) -> CheckReport:
    """delta^k o delta^(k-1) = 0 on a basis of C^(k-1); witness = (basis index, tuple index)."""
    if k < 1:
        raise InputError("composite needs k >= 1")
    src = cochain_space(L, V, k - 1)
    for pos, c in enumerate(src.basis):
        first = coboundary(L, V, c, n, m, reading, check_input=False)
        defect = compatibility_defect(L, V, first)
        if defect is not None:
            return CheckReport.fail(f"complex:delta{k - 1}_compatibility", (pos, *defect[0]), defect[1],
                                    f"delta^{k - 1} leaves the compatible space on basis cochain {pos}")
        second = coboundary(L, V, first, n, m, reading, check_input=False)
        if not second.is_zero():
            for idx in product(range(L.dim), repeat=k + 1):
                val = second.at(idx)
                if any(val):
                    return CheckReport.fail(f"complex:delta{k}_delta{k - 1}", (pos, *idx), val,
                                            f"basis cochain {pos} of degree {k - 1}")
    return CheckReport.ok()


def _images(L, V, k, n, m, reading) -> list:
    return [coboundary(L, V, c, n, m, reading, check_input=False).values
            for c in cochain_space(L, V, k).basis]


def cocycle_space(L: Algebra, V: Representation, k: int, n: int = 0, m: int = 0,
                  reading: Reading = DEFAULT_READING) -> Subspace:
    """Z^k as a subspace of the flat cochain coordinates."""
    space = cochain_space(L, V, k)
    if not space.basis:
        return Subspace.zero(space.ambient_dim)
    imgs = _images(L, V, k, n, m, reading)
    coeffs = null_space(Matrix.from_columns(imgs, L.dim ** (k + 1) * V.dim))
    vectors = [tuple(sum((ci * b.values[p] for ci, b in zip(c, space.basis)), Fraction(0))
                     for p in range(space.ambient_dim)) for c in coeffs.basis]
    return Subspace(space.ambient_dim, vectors)


def coboundary_space(L: Algebra, V: Representation, k: int, n: int = 0, m: int = 0,
                     reading: Reading = DEFAULT_READING) -> Subspace:
    """B^k = image of delta^(k-1); zero for k = 0."""
    ambient = L.dim ** k * V.dim
    if k == 0:
        return Subspace.zero(ambient)
    return Subspace(ambient, _images(L, V, k - 1, n, m, reading))


def cohomology_dims(L: Algebra, V: Representation, k: int, n: int = 0, m: int = 0,
                    reading: Reading = DEFAULT_READING) -> tuple[int, int, int]:
    """(dim Z^k, dim B^k, dim H^k); refuses when delta^k o delta^(k-1) is nonzero."""
    if k >= 1:
        report = verify_complex(L, V, k, n, m, reading)
        if not report.passed:
            raise InputError(f"not a complex at degree {k}: {report.describe()}")
    Z = cocycle_space(L, V, k, n, m, reading)
    B = coboundary_space(L, V, k, n, m, reading)
    return Z.dim, B.dim, Z.dim - B.dim


def one_cocycles_vs_derivations(L: Algebra, n: int = 0, m: int = 0,
                                reading: Reading = DEFAULT_READING) -> CheckReport:
    """Compare Z^1(L, L) for the adjoint module with the (1,1,1)-derivations for the same powers."""
    from .representations import adjoint_representation
    from .solvers import DerivationSpec, generalized_derivation_space

    V = adjoint_representation(L)
    Z = cocycle_space(L, V, 1, n, m, reading)
    # cochain coordinate (i, b) is d(e_i)_b, i.e. vec of d^T
    dim = L.dim
    Zmat = Subspace(dim * dim, [Matrix.from_flat(dim, dim, v).T.flat() for v in Z.basis])
    D = generalized_derivation_space(L, DerivationSpec(1, 1, 1, n, m))
    same = Zmat == D
    note = f"dim Z1 = {Zmat.dim}, dim Der = {D.dim}, equal = {same}"
    if same:
        return CheckReport.ok(note)
    extra = [v for v in Zmat.basis if not D.contains(v)]
    missing = [v for v in D.basis if not Zmat.contains(v)]
    w = extra[0] if extra else missing[0]
    label = "z1_not_derivation" if extra else "derivation_not_z1"
    return CheckReport.fail(label, (), w, note)


def cocycle_to_matrix(L: Algebra, f: Cochain) -> Matrix:
    """A 1-cochain L -> L as the matrix whose i-th column is f(e_i)."""
    return Matrix.from_columns([f.at((i,)) for i in range(L.dim)], f.m)


# --- extensions --------------------------------------------------------------------

def is_cocycle(L: Algebra, V: Representation, f: Cochain, n: int = 0, m: int = 0,
               reading: Reading = DEFAULT_READING) -> bool:
    return coboundary(L, V, f, n, m, reading, check_input=False).is_zero()


def extension_from_cocycle(L: Algebra, V: Representation, f: Cochain, n: int = 0, m: int = 0,
                           reading: Reading = DEFAULT_READING) -> Algebra:
    if not is_compatible(L, V, f):
        raise InputError("2-cochain is not compatible with alpha and alphaV")
    if not is_cocycle(L, V, f, n, m, reading):
        raise InputError("refusing to build an extension from a non-cocycle")
    return extension_direct_sum(L, V, f)


def is_coboundary(L: Algebra, V: Representation, f: Cochain, n: int = 0, m: int = 0,
                  reading: Reading = DEFAULT_READING) -> bool:
    return coboundary_space(L, V, f.k, n, m, reading).contains(f.values)


def preimage(L: Algebra, V: Representation, f: Cochain, n: int = 0, m: int = 0,
             reading: Reading = DEFAULT_READING) -> Cochain | None:
    """Some compatible g with delta(g) = f, or None."""
    space = cochain_space(L, V, f.k - 1)
    if not space.basis:
        return Cochain.zero(f.k - 1, L.dim, V.dim) if f.is_zero() else None
    imgs = _images(L, V, f.k - 1, n, m, reading)
    coeffs = solve(Matrix.from_columns(imgs, len(f.values)), f.values)
    if coeffs is None:
        return None
    out = Cochain.zero(f.k - 1, L.dim, V.dim)
    for c, b in zip(coeffs, space.basis):
        out = out + b.scale(c)
    return out


def cocycles_equivalent(L: Algebra, V: Representation, f: Cochain, g: Cochain, n: int = 0, m: int = 0,
                        reading: Reading = DEFAULT_READING) -> bool:
    return is_coboundary(L, V, f - g, n, m, reading)


def shear_map(L: Algebra, V: Representation, g: Cochain) -> Matrix:
    """(x, v) -> (x, v + g(x)) on L (+) V."""
    n, mv = L.dim, V.dim
    rows = []
    for r in range(n):
        rows.append([int(r == c) for c in range(n + mv)])
    for b in range(mv):
        rows.append([g.at((c,))[b] for c in range(n)] + [int(b == c) for c in range(mv)])
    return Matrix(rows, n + mv)


def verify_extension_isomorphism(E1: Algebra, E2: Algebra, phi: Matrix, n: int) -> CheckReport:
    """phi: E1 -> E2 is a bracket isomorphism intertwining the maps, fixing V and lying over L."""
    N = E1.dim
    if phi.rank() != N:
        return CheckReport.fail("extension_iso:rank", (), (phi.rank(),))
    for i, j in product(range(N), repeat=2):
        lhs = phi @ E1.bracket(E1.unit(i), E1.unit(j))
        rhs = E2.bracket(phi.col(i), phi.col(j))
        if lhs != rhs:
            return CheckReport.fail("extension_iso:bracket", (i, j), tuple(x - y for x, y in zip(lhs, rhs)))
    for label, a1, a2 in (("alpha", E1.alpha, E2.alpha), ("beta", E1.beta, E2.beta)):
        diff = phi @ a1 - a2 @ phi
        for j in range(N):
            if any(diff.col(j)):
                return CheckReport.fail(f"extension_iso:{label}", (j,), diff.col(j))
    for j in range(n, N):
        if phi.col(j) != E1.unit(j):
            return CheckReport.fail("extension_iso:fixes_module", (j,), vsub(phi.col(j), E1.unit(j)))
    for j in range(N):
        if tuple(phi.col(j)[:n]) != tuple(E1.unit(j)[:n]):
            return CheckReport.fail("extension_iso:over_base", (j,), vsub(phi.col(j)[:n], E1.unit(j)[:n]))
    return CheckReport.ok()

