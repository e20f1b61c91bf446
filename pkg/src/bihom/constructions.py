"""Builders producing new algebras from old ones.

Every builder checks its hypotheses and, unless ``verify=False``, re-checks
its output against the identity it is supposed to satisfy.  A failed output
check raises :class:`VerificationError` carrying the witness.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from typing import Sequence

from . import axioms
from .axioms import AxiomSet
from .linalg import Matrix, kron, vadd, zero_vector
from .model import Algebra, CheckReport, Cochain, InputError, Representation


class PreconditionError(InputError):
    """A builder's hypothesis does not hold for the given input."""


class VerificationError(Exception):
    """A builder's output failed the identity it should satisfy."""

    def __init__(self, builder: str, axiom: str, report: CheckReport):
        self.builder = builder
        self.axiom = axiom
        self.report = report
        super().__init__(f"{builder}: output fails {axiom}: {report.describe()}")


def _require(report: CheckReport, what: str) -> None:
    if not report.passed:
        raise PreconditionError(f"{what}: {report.describe()}")


def _verify(builder: str, L: Algebra, sets: Sequence, verify: bool) -> Algebra:
    if verify:
        for s in sets:
            report = axioms.check(L, s)
            if not report.passed:
                raise VerificationError(builder, AxiomSet(s).value, report)
    return L


def _square(a: Matrix, n: int, name: str) -> Matrix:
    if not isinstance(a, Matrix):
        a = Matrix(a, n)
    if a.shape != (n, n):
        raise InputError(f"{name} must be {n}x{n}")
    return a


def _twisted_tensor(L: Algebra, f: Matrix, g: Matrix) -> list:
    """Structure tensor of (x, y) -> [f x, g y]."""
    n = L.dim
    fc = [f.col(i) for i in range(n)]
    gc = [g.col(j) for j in range(n)]
    return [[L.bracket(fc[i], gc[j]) for j in range(n)] for i in range(n)]


def _commute(a: Matrix, b: Matrix) -> bool:
    return a @ b == b @ a


def _sidedness(L: Algebra, left: AxiomSet, right: AxiomSet) -> list[AxiomSet]:
    sides = [s for s in (left, right) if axioms.check(L, s).passed]
    return sides


# --- Hom-type ------------------------------------------------------------------

def yau_twist_hom(L: Algebra, a, verify: bool = True) -> Algebra:
    """Bracket [a x, a y] with structure map a (beta set to the identity)."""
    a = _square(a, L.dim, "a")
    _require(axioms.is_endomorphism(L, a), "twisting map is not a bracket endomorphism")
    plain = axioms.untwisted(L)
    out = L.replace(c=_twisted_tensor(L, a, a), alpha=a, beta=Matrix.identity(L.dim))
    sets = []
    if axioms.check_left_hom_leibniz(plain).passed:
        sets.append(AxiomSet.left_hom_leibniz)
    if axioms.check_right_hom_leibniz(plain).passed:
        sets.append(AxiomSet.right_hom_leibniz)
    return _verify("yau_twist_hom", out, sets, verify)


def _tensor_bracket(G: Algebra, a: Matrix) -> list:
    # [x (x) y, p (x) q] = [a x, [a p, a q]] (x) a y + a x (x) [a y, [a p, a q]]
    n = G.dim
    cols = [a.col(i) for i in range(n)]
    inner = {(p, q): G.bracket(cols[p], cols[q]) for p in range(n) for q in range(n)}
    c = []
    for i, j in product(range(n), repeat=2):
        row = []
        for p, q in product(range(n), repeat=2):
            w = inner[(p, q)]
            t1 = G.bracket(cols[i], w)
            t2 = G.bracket(cols[j], w)
            row.append(vadd(kron_vec(t1, cols[j]), kron_vec(cols[i], t2)))
        c.append(row)
    return c


def kron_vec(u: Sequence, v: Sequence) -> tuple:
    """u (x) v with index i * len(v) + j."""
    return tuple(a * b for a in u for b in v)


def lie_tensor_to_leibniz(G: Algebra, verify: bool = True) -> Algebra:
    """Leibniz bracket [x (x) y, a (x) b] = [x,[a,b]] (x) y + x (x) [y,[a,b]] on G (x) G."""
    _require(axioms.check_hom_lie(axioms.untwisted(G)), "input is not a Lie algebra")
    n = G.dim
    out = Algebra(n * n, _tensor_bracket(axioms.untwisted(G), Matrix.identity(n)))
    return _verify("lie_tensor_to_leibniz", out, [AxiomSet.right_hom_leibniz], verify)


def hom_lie_tensor_construction(G: Algebra, a, verify: bool = True) -> Algebra:
    """Twisted tensor bracket on G (x) G with structure map a (x) a."""
    a = _square(a, G.dim, "a")
    plain = axioms.untwisted(G)
    _require(axioms.check_hom_lie(plain), "input is not a Lie algebra")
    _require(axioms.is_endomorphism(plain, a), "twisting map is not a Lie endomorphism")
    n = G.dim
    out = Algebra(n * n, _tensor_bracket(plain, a), alpha=kron(a, a))
    return _verify("hom_lie_tensor_construction", out, [AxiomSet.right_hom_leibniz], verify)


# --- BiHom-type ----------------------------------------------------------------

def bihom_yau_twist(L: Algebra, a, b, verify: bool = True) -> Algebra:
    """Bracket {x, y} = [a x, b y] with structure maps (a, b)."""
    n = L.dim
    a, b = _square(a, n, "a"), _square(b, n, "b")
    plain = axioms.untwisted(L)
    _require(axioms.check_symmetric_hom_leibniz(plain), "input is not a symmetric Leibniz algebra")
    _require(axioms.is_endomorphism(plain, a), "a is not a bracket endomorphism")
    _require(axioms.is_endomorphism(plain, b), "b is not a bracket endomorphism")
    if not _commute(a, b):
        raise PreconditionError("twisting maps do not commute")
    out = L.replace(c=_twisted_tensor(plain, a, b), alpha=a, beta=b)
    return _verify("bihom_yau_twist", out, [AxiomSet.symmetric_bihom_leibniz], verify)


def bihom_to_hom_leibniz(L: Algebra, verify: bool = True) -> Algebra:
    """Bracket {x, y} = [beta x, alpha y] with structure map alpha beta."""
    sides = _sidedness(L, AxiomSet.left_bihom_leibniz, AxiomSet.right_bihom_leibniz)
    if not sides:
        raise PreconditionError("input is neither a left nor a right BiHom-Leibniz algebra")
    _require(axioms.check_multiplicative(L), "structure maps must commute and preserve the bracket")
    n = L.dim
    out = L.replace(c=_twisted_tensor(L, L.beta, L.alpha), alpha=L.alpha @ L.beta, beta=Matrix.identity(n))
    target = {
        AxiomSet.left_bihom_leibniz: AxiomSet.left_hom_leibniz,
        AxiomSet.right_bihom_leibniz: AxiomSet.right_hom_leibniz,
    }
    return _verify("bihom_to_hom_leibniz", out, [target[s] for s in sides], verify)


# --- colour --------------------------------------------------------------------

def _require_graded(L: Algebra) -> None:
    if L.grading is None:
        raise InputError("this construction needs a graded algebra")


def _is_even(L: Algebra, a: Matrix) -> bool:
    degs = L.grading.degrees
    return all(a[i, j] == 0 or degs[i] == degs[j] for i in range(L.dim) for j in range(L.dim))


def colour_assoc_to_bihom(A: Algebra, a, b, commutator_epsilon: bool = False,
                          verify: bool = True) -> tuple[Algebra, Algebra]:
    """BiHom-associative product mu(a x, b y) and the commutator bracket.

    The commutator is mu(a x, b y) - mu(b y, a x); with ``commutator_epsilon``
    the second term is multiplied by eps(x, y).
    """
    _require_graded(A)
    n = A.dim
    a, b = _square(a, n, "a"), _square(b, n, "b")
    ident = Matrix.identity(n)
    plain = A.replace(alpha=ident, beta=ident)
    _require(axioms.check(plain, AxiomSet.bihom_associative_colour), "input product is not associative")
    for name, m in (("a", a), ("b", b)):
        _require(axioms.is_endomorphism(plain, m), f"{name} does not preserve the product")
        if not _is_even(A, m):
            raise PreconditionError(f"{name} is not even")
    if not _commute(a, b):
        raise PreconditionError("twisting maps do not commute")
    prod = _twisted_tensor(plain, a, b)
    assoc = A.replace(c=prod, alpha=a, beta=b)
    g = A.grading
    c = []
    for i in range(n):
        row = []
        for j in range(n):
            first = prod[i][j]
            second = plain.bracket(b.col(j), a.col(i))
            t = g.epsilon(g.degrees[i], g.degrees[j]) if commutator_epsilon else 1
            row.append(tuple(p - t * s for p, s in zip(first, second)))
        c.append(row)
    lie = A.replace(c=c, alpha=a, beta=b)
    _verify("colour_assoc_to_bihom", assoc, [AxiomSet.bihom_associative_colour], verify)
    _verify("colour_assoc_to_bihom", lie, [AxiomSet.bihom_lie_colour], verify)
    return assoc, lie


def in_colour_centroid(L: Algebra, t: Matrix) -> CheckReport:
    """Degree-zero centroid: t[x,y] = [t x, y] = [x, t y] on basis pairs."""
    n = L.dim
    for i, j in product(range(n), repeat=2):
        lhs = t @ L.c[i][j]
        for res in (
            tuple(p - q for p, q in zip(lhs, L.bracket(t.col(i), L.unit(j)))),
            tuple(p - q for p, q in zip(lhs, L.bracket(L.unit(i), t.col(j)))),
        ):
            if any(res):
                return CheckReport.fail("centroid", (i, j), res)
    return CheckReport.ok()


_COLOUR_SIDES = (AxiomSet.left_bihom_leibniz_colour, AxiomSet.right_bihom_leibniz_colour)


def _colour_targets(L: Algebra) -> list[AxiomSet]:
    sides = _sidedness(L, *_COLOUR_SIDES)
    if len(sides) == 2:
        return [AxiomSet.symmetric_bihom_leibniz_colour, *sides]
    return sides


def colour_centroid_idempotent_twist(L: Algebra, a, b, verify: bool = True) -> Algebra:
    """Bracket {x, y} = [b x, a y] with structure maps (a, b), a and b centroid idempotents."""
    _require_graded(L)
    n = L.dim
    a, b = _square(a, n, "a"), _square(b, n, "b")
    ident = Matrix.identity(n)
    plain = L.replace(alpha=ident, beta=ident)
    targets = _colour_targets(plain)
    if not targets:
        raise PreconditionError("input is not a Leibniz colour algebra")
    for name, m in (("a", a), ("b", b)):
        if m @ m != m:
            raise PreconditionError(f"{name} is not idempotent")
        if not _is_even(L, m):
            raise PreconditionError(f"{name} is not even")
        _require(in_colour_centroid(plain, m), f"{name} is not in the centroid")
    if not _commute(a, b):
        raise PreconditionError("twisting maps do not commute")
    out = plain.replace(c=_twisted_tensor(plain, b, a), alpha=a, beta=b)
    return _verify("colour_centroid_idempotent_twist", out, targets, verify)


def colour_centroid_double_twist(L: Algebra, t, t1, verify: bool = True) -> tuple[Algebra, Algebra]:
    """(L with maps (t alpha, t beta), bracket [t1 x, y] with the same maps)."""
    _require_graded(L)
    n = L.dim
    t, t1 = _square(t, n, "t"), _square(t1, n, "t1")
    targets = _colour_targets(L)
    if not targets:
        raise PreconditionError("input is not a BiHom-Leibniz colour algebra")
    for name, m in (("t", t), ("t1", t1)):
        if m @ m != m:
            raise PreconditionError(f"{name} is not idempotent")
        if not _is_even(L, m):
            raise PreconditionError(f"{name} is not even")
        if not (_commute(m, L.alpha) and _commute(m, L.beta)):
            raise PreconditionError(f"{name} does not commute with the structure maps")
        _require(in_colour_centroid(L, m), f"{name} is not in the centroid")
    if not _commute(t, t1):
        raise PreconditionError("t and t1 do not commute")
    first = L.replace(alpha=t @ L.alpha, beta=t @ L.beta)
    second = first.replace(c=_twisted_tensor(L, t1, Matrix.identity(n)))
    _verify("colour_centroid_double_twist", first, targets, verify)
    _verify("colour_centroid_double_twist", second, targets, verify)
    return first, second


# --- modules and extensions ------------------------------------------------------

def check_hom_lie_module(V: Representation) -> CheckReport:
    """[[x,y], b(v)]_V = [a x, [y, v]_V]_V - eps(x, y) [a y, [x, v]_V]_V (left action only)."""
    L = V.algebra
    n, m = L.dim, V.dim
    eps = _eps_fn(L)
    for i, j, p in product(range(n), range(n), range(m)):
        x, y, v = L.unit(i), L.unit(j), _unit(m, p)
        lhs = V.act_left(L.c[i][j], V.betaV @ v)
        t1 = V.act_left(L.alpha @ x, V.act_left(y, v))
        t2 = V.act_left(L.alpha @ y, V.act_left(x, v))
        e = eps(i, j)
        res = tuple(a - b + e * c for a, b, c in zip(lhs, t1, t2))
        if any(res):
            return CheckReport.fail("hom_lie_module", (i, j, p), res)
    return CheckReport.ok()


def _eps_fn(L: Algebra):
    if L.grading is None:
        return lambda i, j: 1
    g = L.grading
    return lambda i, j: g.epsilon(g.degrees[i], g.degrees[j])


def _unit(m: int, p: int) -> tuple:
    return tuple(Fraction(int(q == p)) for q in range(m))


def module_to_left_hom_leibniz_super(V: Representation, phi, verify: bool = True) -> Algebra:
    """Bracket [u, v]' = [phi(u), v]_V on V with structure map beta_V."""
    L = V.algebra
    n, m = L.dim, V.dim
    phi = phi if isinstance(phi, Matrix) else Matrix(phi, m)
    if phi.shape != (n, m):
        raise InputError(f"phi must be {n}x{m} (V -> L)")
    lie_set = AxiomSet.hom_lie_colour if L.graded else AxiomSet.hom_lie
    _require(axioms.check(L, lie_set), "base algebra is not a Hom-Lie (super)algebra")
    _require(check_hom_lie_module(V), "V is not a module")
    if L.graded != (V.grading is not None):
        raise InputError("algebra and module must both be graded or both ungraded")
    if L.graded:
        for a in range(m):
            for i in range(n):
                if phi[i, a] != 0 and L.grading.degrees[i] != V.grading.degrees[a]:
                    raise PreconditionError("phi is not even")
    for i, a in product(range(n), range(m)):
        v = _unit(m, a)
        res = tuple(p - q for p, q in zip(phi @ V.act_left(L.unit(i), v), L.bracket(L.unit(i), phi @ v)))
        if any(res):
            raise PreconditionError(f"phi([x, v]_V) != [x, phi(v)] at {(i, a)}")
    if phi @ V.betaV != L.alpha @ phi:
        raise PreconditionError("phi does not intertwine beta_V and alpha")
    c = [[V.act_left(phi.col(a), _unit(m, b)) for b in range(m)] for a in range(m)]
    out = Algebra(m, c, alpha=V.betaV, grading=V.grading)
    target = AxiomSet.left_hom_leibniz_colour if out.graded else AxiomSet.left_hom_leibniz
    return _verify("module_to_left_hom_leibniz_super", out, [target], verify)


def extension_direct_sum(L: Algebra, V: Representation, f: Cochain) -> Algebra:
    """L (+) V with [(x,u),(y,v)] = ([x,y], [x,v]_V + [u,y]_V + f(x,y)).

    Basis: e_0..e_{n-1} from L, then e_n..e_{n+m-1} from V.  Structure maps
    are alpha (+) alpha_V and beta (+) beta_V.
    """
    n, m = L.dim, V.dim
    if V.algebra.dim != n:
        raise InputError("representation belongs to an algebra of another dimension")
    if (f.k, f.n, f.m) != (2, n, m):
        raise InputError(f"f must be a 2-cochain L x L -> V with n={n}, m={m}")
    N = n + m
    c = [[list(zero_vector(N)) for _ in range(N)] for _ in range(N)]
    for i, j in product(range(n), repeat=2):
        c[i][j] = list(L.c[i][j]) + list(f.at((i, j)))
    for i, a in product(range(n), range(m)):
        c[i][n + a] = [0] * n + list(V.l[i][a])
        c[n + a][i] = [0] * n + list(V.r[a][i])
    return Algebra(N, c, alpha=block_diag(L.alpha, V.alphaV), beta=block_diag(L.beta, V.betaV))


def block_diag(a: Matrix, b: Matrix) -> Matrix:
    n, m = a.rows, b.rows
    rows = [list(a.row(i)) + [0] * m for i in range(n)]
    rows += [[0] * n + list(b.row(i)) for i in range(m)]
    return Matrix(rows, n + m)
