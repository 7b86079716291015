"""Ground truth by exhaustive counting over small finite fields.

A representation is realised by explicit matrices, every arrow-stable tuple
of subspaces is enumerated, and sub/quotient representations are classified
back to iso-classes.  Hall numbers, automorphism counts and extension counts
are read off from these enumerations.
"""

from __future__ import annotations

import itertools
from collections import Counter
from fractions import Fraction
from functools import lru_cache

import numpy as np

from . import _kernels as K
from .cyclic import NilpotentModule, classes_of_dim, dim_hom as cyclic_dim_hom, aut_order as cyclic_aut_order
from .exact import InterpolationError, Poly, interpolate_polynomial
from .fields import SUPPORTED_ORDERS, FiniteField, field

MAX_TOTAL_DIM = 8


class GuardError(ValueError):
    """Raised when an enumeration would exceed the size guard."""


class QuiverShape:
    def __init__(self, n_vertices: int, arrows, nilpotent: bool = False):
        self.n_vertices = n_vertices
        self.arrows = tuple((int(s), int(t)) for s, t in arrows)
        self.nilpotent = nilpotent
        for s, t in self.arrows:
            if not (0 <= s < n_vertices and 0 <= t < n_vertices):
                raise ValueError(f"arrow {(s, t)} out of range")
        if self.has_cycle() and not nilpotent:
            raise ValueError("quiver with oriented cycles needs the nilpotency flag")

    @classmethod
    def cyclic(cls, l: int) -> "QuiverShape":
        n = l + 1
        return cls(n, [(i, (i + 1) % n) for i in range(n)], nilpotent=True)

    @classmethod
    def kronecker(cls) -> "QuiverShape":
        # two arrows 0 -> 1; vertex 0 carries the simple injective
        return cls(2, [(0, 1), (0, 1)])

    def has_cycle(self) -> bool:
        adj = {v: [t for s, t in self.arrows if s == v] for v in range(self.n_vertices)}
        state = [0] * self.n_vertices

        def visit(v):
            state[v] = 1
            for w in adj[v]:
                if state[w] == 1 or (state[w] == 0 and visit(w)):
                    return True
            state[v] = 2
            return False

        return any(state[v] == 0 and visit(v) for v in range(self.n_vertices))

    def is_sink(self, v: int) -> bool:
        return all(s != v for s, _ in self.arrows)

    def is_source(self, v: int) -> bool:
        return all(t != v for _, t in self.arrows)

    def __eq__(self, other):
        return (
            isinstance(other, QuiverShape)
            and (self.n_vertices, self.arrows, self.nilpotent) == (other.n_vertices, other.arrows, other.nilpotent)
        )

    def __hash__(self):
        return hash((self.n_vertices, self.arrows, self.nilpotent))

    def __repr__(self):
        return f"QuiverShape({self.n_vertices}, {list(self.arrows)})"


class MatrixRep:
    """Matrices ``mats[k]`` of shape ``(dims[t], dims[s])`` for arrow ``k = (s, t)``."""

    def __init__(self, shape: QuiverShape, dims, mats, fld: FiniteField, check: bool = True):
        self.shape = shape
        self.dims = tuple(int(d) for d in dims)
        self.fld = fld
        self.mats = tuple(np.asarray(m, dtype=np.int64).reshape(self.dims[t], self.dims[s]) for m, (s, t) in zip(mats, shape.arrows))
        if len(self.mats) != len(shape.arrows):
            raise ValueError("one matrix per arrow required")
        if check and shape.nilpotent and not self.is_nilpotent():
            raise ValueError("representation is not nilpotent")

    @property
    def total(self) -> int:
        return sum(self.dims)

    def block_operator(self) -> np.ndarray:
        offs = np.concatenate([[0], np.cumsum(self.dims)])
        T = np.zeros((self.total, self.total), dtype=np.int64)
        for m, (s, t) in zip(self.mats, self.shape.arrows):
            blk = T[offs[t] : offs[t + 1], offs[s] : offs[s + 1]]
            T[offs[t] : offs[t + 1], offs[s] : offs[s + 1]] = self.fld.add[blk, m]
        return T

    def is_nilpotent(self) -> bool:
        T = self.block_operator()
        P = np.eye(self.total, dtype=np.int64)
        for _ in range(self.total):
            P = K.matmul(T, P, self.fld)
        return not P.any()

    def key(self):
        return (self.dims, tuple(m.tobytes() for m in self.mats))

    def __repr__(self):
        return f"MatrixRep(dims={self.dims}, q={self.fld.q})"


# ---------------------------------------------------------------------------
# subspaces


@lru_cache(maxsize=None)
def subspaces(q: int, d: int, k: int):
    """All k-dim subspaces of F_q^d as RREF bases ``(N, k, d)`` and pivots ``(N, k)``."""
    bases, pivs = [], []
    for piv in itertools.combinations(range(d), k):
        free = [(r, c) for r in range(k) for c in range(piv[r] + 1, d) if c not in piv]
        template = np.zeros((k, d), dtype=np.int64)
        for r, c in enumerate(piv):
            template[r, c] = 1
        if free:
            vals = np.array(list(itertools.product(range(q), repeat=len(free))), dtype=np.int64)
            block = np.broadcast_to(template, (len(vals), k, d)).copy()
            rr = np.array([r for r, _ in free])
            cc = np.array([c for _, c in free])
            block[:, rr, cc] = vals
        else:
            block = template[None]
        bases.append(block)
        pivs.append(np.broadcast_to(np.array(piv, dtype=np.int64), (len(block), k)))
    if not bases:
        return np.zeros((0, k, d), dtype=np.int64), np.zeros((0, k), dtype=np.int64)
    b = np.concatenate(bases)
    p = np.ascontiguousarray(np.concatenate(pivs))
    b.setflags(write=False)
    p.setflags(write=False)
    return b, p


def subspace_count(q: int, d: int, k: int) -> int:
    return len(subspaces(q, d, k)[0])


class SubrepBatch:
    """Arrow-stable subspace tuples of a fixed dimension vector ``e``."""

    def __init__(self, X: MatrixRep, e, bases, pivots):
        self.X = X
        self.e = tuple(e)
        self.bases = bases  # per vertex (N, e_v, d_v)
        self.pivots = pivots  # per vertex (N, e_v)

    def __len__(self):
        return len(self.bases[0]) if self.bases else 0

    def sub_matrices(self):
        """Induced arrow matrices on Y, per arrow ``(N, e_t, e_s)``."""
        X, fld = self.X, self.X.fld
        out = []
        N = len(self)
        for m, (s, t) in zip(X.mats, X.shape.arrows):
            if self.e[s] == 0 or self.e[t] == 0:
                out.append(np.zeros((N, self.e[t], self.e[s]), dtype=np.int64))
                continue
            images = K.apply_rows(m, self.bases[s], fld)  # (N, e_s, d_t)
            coords = np.take_along_axis(images, self.pivots[t][:, None, :], axis=2)
            out.append(np.ascontiguousarray(coords.transpose(0, 2, 1)))
        return out

    def quotient_matrices(self):
        """Induced arrow matrices on X/Y in the basis of non-pivot unit vectors."""
        X, fld = self.X, self.X.fld
        N = len(self)
        comp = []
        for v in range(X.shape.n_vertices):
            d = X.dims[v]
            mask = np.ones((N, d), dtype=bool)
            if self.e[v]:
                np.put_along_axis(mask, self.pivots[v], False, axis=1)
            comp.append(np.nonzero(mask)[1].reshape(N, d - self.e[v]))
        out = []
        for m, (s, t) in zip(X.mats, X.shape.arrows):
            fs, ft = X.dims[s] - self.e[s], X.dims[t] - self.e[t]
            if fs == 0 or ft == 0:
                out.append(np.zeros((N, ft, fs), dtype=np.int64))
                continue
            cols = m.T[comp[s]]  # (N, fs, d_t): images of complement unit vectors
            if self.e[t]:
                cols = K.reduce_rows(cols, self.bases[t], self.pivots[t], fld)
            coords = np.take_along_axis(cols, comp[t][:, None, :], axis=2)
            out.append(np.ascontiguousarray(coords.transpose(0, 2, 1)))
        return out

    def quotient_dims(self):
        return tuple(d - e for d, e in zip(self.X.dims, self.e))


def _dim_vectors_below(dims):
    return itertools.product(*[range(d + 1) for d in dims])


def enumerate_subreps(X: MatrixRep, e=None, guard: int = MAX_TOTAL_DIM):
    """All subrepresentations, grouped into one :class:`SubrepBatch` per dimension vector.

    Subspaces are chosen vertex by vertex; after each choice every arrow
    whose endpoints are both fixed is checked, so unstable partial tuples
    are discarded early.
    """
    if X.total > guard:
        raise GuardError(f"total dimension {X.total} exceeds the enumeration guard {guard}")
    targets = [tuple(e)] if e is not None else list(_dim_vectors_below(X.dims))
    out = []
    for ev in targets:
        batch = _enumerate_fixed(X, ev)
        if batch is not None and len(batch):
            out.append(batch)
    return out


def _enumerate_fixed(X: MatrixRep, e):
    fld, q = X.fld, X.fld.q
    nv = X.shape.n_vertices
    if any(a > d for a, d in zip(e, X.dims)):
        return None
    spaces = [subspaces(q, X.dims[v], e[v]) for v in range(nv)]
    idx = np.zeros((1, 0), dtype=np.int64)
    for v in range(nv):
        n_here = len(spaces[v][0])
        idx = np.concatenate(
            [np.repeat(idx, n_here, axis=0), np.tile(np.arange(n_here), len(idx))[:, None]], axis=1
        )
        for m, (s, t) in zip(X.mats, X.shape.arrows):
            if max(s, t) != v or e[s] == 0 or len(idx) == 0:
                continue
            src = spaces[s][0][idx[:, s]]
            images = K.apply_rows(m, src, fld)
            if e[t] == 0:
                ok = ~images.reshape(len(idx), -1).any(axis=1)
            else:
                ok = K.reduce_zero_mask(images, spaces[t][0][idx[:, t]], spaces[t][1][idx[:, t]], fld)
            idx = idx[ok]
        if len(idx) == 0:
            return None
    bases = [spaces[v][0][idx[:, v]] for v in range(nv)]
    pivots = [spaces[v][1][idx[:, v]] for v in range(nv)]
    return SubrepBatch(X, e, bases, pivots)


def count_subreps(X: MatrixRep) -> int:
    return sum(len(b) for b in enumerate_subreps(X))


# ---------------------------------------------------------------------------
# linear algebra helpers


def nullspace(mat, fld: FiniteField) -> np.ndarray:
    """Basis (rows) of the right kernel of ``mat`` over ``fld``."""
    mat = np.asarray(mat, dtype=np.int64)
    ncols = mat.shape[1]
    if mat.shape[0] == 0:
        return np.eye(ncols, dtype=np.int64)
    r, piv = K.rref(mat, fld)
    piv = [int(p) for p in piv]
    free = [c for c in range(ncols) if c not in piv]
    basis = np.zeros((len(free), ncols), dtype=np.int64)
    for k, f in enumerate(free):
        basis[k, f] = 1
        for row, p in enumerate(piv):
            basis[k, p] = fld.neg[r[row, f]]
    return basis


def _hom_system(Y: MatrixRep, X: MatrixRep):
    """Linear equations for vertex maps f_v: Y_v -> X_v commuting with the arrows."""
    fld = X.fld
    nv = X.shape.n_vertices
    offs = [0]
    for v in range(nv):
        offs.append(offs[-1] + X.dims[v] * Y.dims[v])
    rows = []
    for my, mx, (s, t) in zip(Y.mats, X.mats, X.shape.arrows):
        # X_a f_s - f_t Y_a = 0, entry (r, c) with r in X_t, c in Y_s
        for r in range(X.dims[t]):
            for c in range(Y.dims[s]):
                row = np.zeros(offs[-1], dtype=np.int64)
                for j in range(X.dims[s]):
                    row[offs[s] + j * Y.dims[s] + c] = fld.add[row[offs[s] + j * Y.dims[s] + c], mx[r, j]]
                for j in range(Y.dims[t]):
                    pos = offs[t] + r * Y.dims[t] + j
                    row[pos] = fld.add[row[pos], fld.neg[my[j, c]]]
                rows.append(row)
    mat = np.array(rows, dtype=np.int64).reshape(len(rows), offs[-1])
    return mat, offs


def hom_dim(Y: MatrixRep, X: MatrixRep) -> int:
    mat, offs = _hom_system(Y, X)
    return offs[-1] - K.rank(mat, X.fld)


def aut_count(X: MatrixRep) -> int:
    """|Aut X| by enumerating End X and testing invertibility at every vertex."""
    fld = X.fld
    mat, offs = _hom_system(X, X)
    basis = nullspace(mat, fld)
    k = len(basis)
    if X.total == 0:
        return 1
    if fld.q ** k > 2_000_000:
        raise GuardError("endomorphism space too large to enumerate")
    combos = np.array(list(itertools.product(range(fld.q), repeat=k)), dtype=np.int64).reshape(-1, k)
    ends = np.zeros((len(combos), offs[-1]), dtype=np.int64)
    for j in range(k):
        ends = fld.add[ends, fld.mul[combos[:, j][:, None], basis[j][None, :]]]
    ok = np.ones(len(combos), dtype=bool)
    for v in range(X.shape.n_vertices):
        d = X.dims[v]
        if d == 0:
            continue
        blocks = ends[:, offs[v] : offs[v + 1]].reshape(-1, d, d)
        ok &= K.batch_rank(blocks, fld) == d
    return int(ok.sum())


# ---------------------------------------------------------------------------
# cyclic quivers: realisation and classification


class CyclicCategory:
    """Nilpotent representations of the cyclic quiver with ``l+1`` vertices."""

    kind = "cyclic"

    def __init__(self, l: int):
        self.l = l
        self.n = l + 1
        self.shape = QuiverShape.cyclic(l)

    def __repr__(self):
        return f"CyclicCategory(l={self.l})"

    def __eq__(self, other):
        return isinstance(other, CyclicCategory) and other.l == self.l

    def __hash__(self):
        return hash(("cyclic", self.l))

    def dim_vector(self, M: NilpotentModule):
        return M.dim_vector

    def classes(self, dim_vector):
        return classes_of_dim(tuple(dim_vector))

    def zero(self):
        return NilpotentModule(self.n)

    def direct_sum(self, M, N):
        return M + N

    def dim_hom(self, M, N) -> int:
        return cyclic_dim_hom(M, N)

    def aut_order(self, M, q=None):
        return cyclic_aut_order(M, q)

    def realize(self, M: NilpotentModule, fld: FiniteField) -> MatrixRep:
        n = self.n
        dims = [0] * n
        where = []  # (segment index, position) -> (vertex, local index)
        for i, a in M.segments:
            pos = []
            for t in range(a):
                v = (i + t) % n
                pos.append((v, dims[v]))
                dims[v] += 1
            where.append(pos)
        mats = [np.zeros((dims[(v + 1) % n], dims[v]), dtype=np.int64) for v in range(n)]
        for pos in where:
            for (v, x), (w, y) in zip(pos, pos[1:]):
                mats[v][y, x] = 1
        return MatrixRep(self.shape, dims, mats, fld)

    def classify(self, X: MatrixRep) -> NilpotentModule:
        return self.classify_batch(X.dims, [m[None] for m in X.mats], X.fld)[0]

    def classify_batch(self, dims, mats, fld) -> list:
        n = self.n
        N = len(mats[0]) if mats else 0
        total = sum(dims)
        if N == 0:
            return []
        if total == 0:
            return [self.zero()] * N
        D = max(dims)
        padded = np.zeros((N, n, D, D), dtype=np.int64)
        for v in range(n):
            w = (v + 1) % n
            padded[:, v, : dims[w], : dims[v]] = mats[v]
        ranks = K.batch_path_ranks(padded, total, fld)  # (N, n, total): lengths 1..total
        R = np.zeros((N, n, total + 2), dtype=np.int64)
        R[:, :, 0] = np.array(dims)[None, :]
        R[:, :, 1 : total + 1] = ranks
        # G[i, a] = #segments with top i of length >= a+1
        G = R[:, :, : total + 1] - np.roll(R, 1, axis=1)[:, :, 1 : total + 2]
        exact = G[:, :, :-1] - G[:, :, 1:]  # exact[:, i, a-1] = #segments S_i(a)
        out = []
        cache = {}
        for row in exact:
            key = row.tobytes()
            M = cache.get(key)
            if M is None:
                segs = [(i, a + 1) for i in range(n) for a in range(total) for _ in range(int(row[i, a]))]
                M = NilpotentModule(n, segs)
                cache[key] = M
            out.append(M)
        return out


# ---------------------------------------------------------------------------
# Hall numbers


_TABLES: dict = {}


def hall_table(cat, X, q: int) -> Counter:
    """``{(M, N): F^X_{MN}}`` for every sub ``Y ~ N`` with quotient ``X/Y ~ M``."""
    key = (cat, X, q)
    if key in _TABLES:
        return _TABLES[key]
    fld = field(q)
    rep = cat.realize(X, fld)
    table = Counter()
    for batch in enumerate_subreps(rep):
        subs = cat.classify_batch(batch.e, batch.sub_matrices(), fld)
        quots = cat.classify_batch(batch.quotient_dims(), batch.quotient_matrices(), fld)
        table.update(zip(quots, subs))
    _TABLES[key] = table
    return table


def clear_caches():
    _TABLES.clear()


def hall_number(cat, M, N, X, q: int) -> int:
    dm, dn, dx = cat.dim_vector(M), cat.dim_vector(N), cat.dim_vector(X)
    if tuple(a + b for a, b in zip(dm, dn)) != tuple(dx):
        raise ValueError(f"dimension mismatch: {dm} + {dn} != {dx}")
    return hall_table(cat, X, q).get((M, N), 0)


def product_counts(cat, M, N, q: int) -> dict:
    """``[M][N]`` over F_q as ``{X: F^X_{MN}}``."""
    dx = tuple(a + b for a, b in zip(cat.dim_vector(M), cat.dim_vector(N)))
    out = {}
    for X in cat.classes_at(dx, q) if hasattr(cat, "classes_at") else cat.classes(dx):
        c = hall_table(cat, X, q).get((M, N), 0)
        if c:
            out[X] = c
    return out


def hall_polynomial(cat, M, N, X, orders=SUPPORTED_ORDERS, degree_bound=None) -> Poly:
    """Interpolate F^X_{MN}(q) from brute counts, with a held-out check.

    The default degree bound is dim Hom(M+N, X).  If the held-out sample
    disagrees, the bound is raised by one and the fit retried once.
    """
    bound = cat.dim_hom(cat.direct_sum(M, N), X) if degree_bound is None else degree_bound
    for attempt in range(2):
        need = bound + 2
        if need > len(orders):
            raise GuardError(f"degree bound {bound} needs {need} field orders, only {len(orders)} available")
        samples = [(q, hall_number(cat, M, N, X, q)) for q in orders[:need]]
        try:
            return interpolate_polynomial(samples, bound)
        except InterpolationError:
            if attempt:
                raise
            bound += 1
    raise AssertionError("unreachable")


def riedtmann_epsilon(cat, M, N, X, q: int) -> Fraction:
    """eps = F |Aut M| |Aut N| |Hom(M, N)| / |Aut X|."""
    F = hall_number(cat, M, N, X, q)
    hom = q ** cat.dim_hom(M, N)
    return Fraction(F * cat.aut_order(M, q) * cat.aut_order(N, q) * hom, cat.aut_order(X, q))


def riedtmann_check(cat, M, N, X, q: int):
    eps = riedtmann_epsilon(cat, M, N, X, q)
    ok = eps.denominator == 1 and eps >= 0
    return (int(eps) if ok else eps), ok


def riedtmann_total(cat, M, N, q: int) -> int:
    """Sum of eps over all middle terms; should equal q^(dim Ext(M, N))."""
    dx = tuple(a + b for a, b in zip(cat.dim_vector(M), cat.dim_vector(N)))
    classes = cat.classes_at(dx, q) if hasattr(cat, "classes_at") else cat.classes(dx)
    total = Fraction(0)
    for X in classes:
        total += riedtmann_epsilon(cat, M, N, X, q)
    return total


def verify_riedtmann(l: int = 1, max_total: int = 4, q: int = 2, pairs=None):
    """Riedtmann's formula on the cyclic quiver: eps is a nonnegative integer
    and sums to q^dim Ext(M, N) over middle terms."""
    from .cyclic import classes_upto, dim_ext
    from .report import Report

    rep = Report("verify riedtmann", {"l": l, "max_total": max_total, "q": q})
    cat = CyclicCategory(l)
    n = l + 1
    if pairs is None:
        pairs = [
            (M, N)
            for M in classes_upto(n, max_total)
            for N in classes_upto(n, max_total - M.total)
            if not M.is_zero() and not N.is_zero()
        ]
    bad_int, bad_sum = [], []
    for M, N in pairs:
        dx = tuple(a + b for a, b in zip(M.dim_vector, N.dim_vector))
        total = 0
        for X in cat.classes(dx):
            eps, ok = riedtmann_check(cat, M, N, X, q)
            if not ok:
                bad_int.append(f"{M}, {N} -> {X}: {eps}")
            total += eps
        if total != q ** dim_ext(M, N):
            bad_sum.append(f"{M}, {N}: {total}")
    rep.check(f"eps integral on {len(pairs)} pairs", [], bad_int[:5], not bad_int)
    rep.check("sum of eps = q^dim Ext", [], bad_sum[:5], not bad_sum)
    return rep.finish()
