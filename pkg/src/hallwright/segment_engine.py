"""Hall products for nilpotent representations of a cyclic quiver, without matrices.

Two ingredients:

* Right multiplication by a semisimple ``[S_beta]``.  A submodule
  ``Y ~ S_beta`` lies in the socle of ``X``.  At a vertex ``i`` let ``V_j`` be
  the span of the socles of the segments of ``X`` ending at ``i`` with length
  ``>= j`` (``v_j = dim V_j``).  The quotient ``X/Y`` is determined by the
  numbers ``y_j = dim(Y_i cap V_j)``: exactly ``y_j - y_{j+1}`` segments of
  length ``j`` ending at ``i`` get shortened by one.  The number of ``Y_i``
  with prescribed ``y`` is
  ``prod_j q^{(y_j - y_{j+1})(v_{j+1} - y_{j+1})} [v_j - v_{j+1}, y_j - y_{j+1}]_q``.

* Every ``[N]`` is a combination of products of semisimples.  The socle-layer
  word of ``N`` determines ``N``, and the matrix of word products against
  iso-classes in a fixed degree is inverted exactly.

A general product ``x [N]`` is then assembled from chains of semisimple
right multiplications, shared through a prefix cache.
"""

from __future__ import annotations

import itertools
from collections import Counter, defaultdict
from fractions import Fraction

from .cyclic import NilpotentModule, classes_of_dim
from .exact import QRat, q_binomial


def _compositions(total: int, caps):
    """Tuples c with 0 <= c[k] <= caps[k] and sum(c) == total (caps[0] may be None)."""
    if not caps:
        if total == 0:
            yield ()
        return
    cap = total if caps[0] is None else min(caps[0], total)
    for first in range(cap + 1):
        for rest in _compositions(total - first, caps[1:]):
            yield (first,) + rest


class SegmentHallEngine:
    """Structure constants of the Hall algebra of the cyclic quiver with ``n`` vertices.

    ``q=None`` gives generic coefficients (:class:`QRat` in q), otherwise
    integers/fractions at ``q``.  ``d`` replaces the field size by its
    ``d``-th power (the algebra over F_{q^d}).
    """

    def __init__(self, n: int, q=None, d: int = 1):
        self.n = n
        self.q = q
        self.d = d
        self.generic = q is None
        if self.generic:
            self.base = QRat.q() ** d
            self.zero = QRat.coerce(0)
            self.one = QRat.coerce(1)
        else:
            self.base = int(q) ** d
            self.zero = 0
            self.one = 1
        self._qpow = {}
        self._qbin = {}
        self._ss = {}
        self._decomp = {}

    # -- scalars ---------------------------------------------------------

    def qpow(self, e: int):
        v = self._qpow.get(e)
        if v is None:
            v = self.base ** e
            self._qpow[e] = v
        return v

    def qbin(self, n: int, k: int):
        key = (n, k)
        v = self._qbin.get(key)
        if v is None:
            if self.generic:
                v = q_binomial(n, k)
                if self.d != 1:
                    v = v.substitute_power(self.d)
            else:
                v = q_binomial(n, k, self.base)
            self._qbin[key] = v
        return v

    # -- semisimple right multiplication ---------------------------------

    def times_semisimple_basis(self, M: NilpotentModule, beta: tuple) -> dict:
        """``[M][S_beta]`` as ``{X: F^X_{M, S_beta}}``."""
        key = (M, beta)
        hit = self._ss.get(key)
        if hit is not None:
            return hit
        n = self.n
        segs = Counter(M.segments)
        # per vertex i: available segments ending at i-1, by length
        ending = [defaultdict(int) for _ in range(n)]
        for (t, a), m in segs.items():
            ending[(t + a) % n][a] += m  # ends at t+a-1, so it can grow at vertex t+a
        per_vertex = []
        for i in range(n):
            lengths = sorted(ending[i])
            caps = [None] + [ending[i][a] for a in lengths]
            opts = []
            for c in _compositions(beta[i], caps):
                opts.append((c[0], tuple(zip(lengths, c[1:]))))
            per_vertex.append(opts)
        out = {}
        for choice in itertools.product(*per_vertex):
            new = Counter(segs)
            for i, (fresh, grow) in enumerate(choice):
                if fresh:
                    new[(i, 1)] += fresh
                for a, c in grow:
                    if c:
                        top = (i - a) % n
                        new[(top, a)] -= c
                        new[(top, a + 1)] += c
            X = NilpotentModule(n, [s for s, m in new.items() for _ in range(m)])
            coef = self.one
            for i, (fresh, grow) in enumerate(choice):
                coef = coef * self._vertex_count(X, i, fresh, grow)
            out[X] = out.get(X, self.zero) + coef
        self._ss[key] = out
        return out

    def _vertex_count(self, X: NilpotentModule, i: int, fresh: int, grow):
        n = self.n
        lens = Counter()
        for t, a in X.segments:
            if (t + a - 1) % n == i:
                lens[a] += 1
        if not lens:
            return self.one
        top = max(lens)
        # c[j] = number of length-j segments ending at i that are shortened
        c = defaultdict(int)
        c[1] = fresh
        for a, k in grow:
            c[a + 1] += k
        v = [0] * (top + 2)
        y = [0] * (top + 2)
        for j in range(top, 0, -1):
            v[j] = v[j + 1] + lens[j]
            y[j] = y[j + 1] + c[j]
        coef = self.one
        for j in range(1, top + 1):
            k = y[j] - y[j + 1]
            if k:
                coef = coef * self.qpow(k * (v[j + 1] - y[j + 1])) * self.qbin(v[j] - v[j + 1], k)
        return coef

    def times_semisimple(self, x: dict, beta: tuple) -> dict:
        out = {}
        zero = self.zero
        for M, a in x.items():
            for X, f in self.times_semisimple_basis(M, beta).items():
                out[X] = out.get(X, zero) + a * f
        return {X: c for X, c in out.items() if c != 0}

    # -- socle-layer words -----------------------------------------------

    def word_of(self, N: NilpotentModule) -> tuple:
        """Socle-layer dimension vectors of ``N``, top layer first."""
        n = self.n
        h = max((a for _, a in N.segments), default=0)
        layers = []
        for k in range(1, h + 1):
            L = [0] * n
            for t, a in N.segments:
                if a >= k:
                    L[(t + a - k) % n] += 1
            layers.append(tuple(L))
        return tuple(reversed(layers))

    def word_product(self, x: dict, word, cache: dict | None = None) -> dict:
        """``x * S_{w_1} * ... * S_{w_h}`` with prefix caching."""
        if cache is None:
            cache = {}
        cur = x
        for k in range(len(word)):
            pre = word[: k + 1]
            hit = cache.get(pre)
            if hit is None:
                hit = self.times_semisimple(cur, word[k])
                cache[pre] = hit
            cur = hit
        return cur

    def decomposition(self, alpha: tuple) -> dict:
        """``{N: {word: coefficient}}`` with ``[N] = sum coefficient * word product``."""
        alpha = tuple(alpha)
        hit = self._decomp.get(alpha)
        if hit is not None:
            return hit
        classes = classes_of_dim(alpha)
        zero_mod = NilpotentModule(self.n)
        one = {zero_mod: self.one}
        cache = {}
        words = [self.word_of(N) for N in classes]
        if len(set(words)) != len(words):
            raise AssertionError("socle-layer words do not separate classes")
        col = {N: j for j, N in enumerate(classes)}
        A = []
        for w in words:
            row = [self.zero] * len(classes)
            for X, c in self.word_product(one, w, cache).items():
                row[col[X]] = c
            A.append(row)
        inv = _exact_inverse(A, self.zero, self.one)
        # [N_j] = sum_i inv[j][i] W_i   since inv * A = I
        out = {}
        for j, N in enumerate(classes):
            out[N] = {words[i]: inv[j][i] for i in range(len(words)) if inv[j][i] != 0}
        self._decomp[alpha] = out
        return out

    # -- general products ------------------------------------------------

    def multiply(self, x: dict, y: dict, cache: dict | None = None) -> dict:
        """``x * y`` for elements given as ``{module: coefficient}``."""
        if cache is None:
            cache = {}
        word_coef = {}
        zero = self.zero
        for N, b in y.items():
            for w, c in self.decomposition(N.dim_vector)[N].items():
                word_coef[w] = word_coef.get(w, zero) + b * c
        out = {}
        for w, c in word_coef.items():
            if c == 0:
                continue
            for X, a in self.word_product(x, w, cache).items():
                out[X] = out.get(X, zero) + c * a
        return {X: c for X, c in out.items() if c != 0}

    def product_basis(self, M: NilpotentModule, N: NilpotentModule) -> dict:
        return self.multiply({M: self.one}, {N: self.one})


def _exact_inverse(A, zero, one):
    n = len(A)
    M = [list(row) + [one if i == j else zero for j in range(n)] for i, row in enumerate(A)]
    for c in range(n):
        p = next((r for r in range(c, n) if M[r][c] != 0), None)
        if p is None:
            raise ArithmeticError("word-product matrix is singular")
        M[c], M[p] = M[p], M[c]
        piv = M[c][c]
        if piv != one:
            inv = one / piv if not isinstance(piv, int) else Fraction(1, piv)
            M[c] = [v * inv for v in M[c]]
        for r in range(n):
            if r != c and M[r][c] != 0:
                f = M[r][c]
                M[r] = [a - f * b for a, b in zip(M[r], M[c])]
    return [row[n:] for row in M]
