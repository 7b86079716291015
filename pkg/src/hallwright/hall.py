"""Hall algebra elements, products, Green's comultiplication and the bilinear form.

An element lives in a *context*: a category of modules (cyclic quiver or
Kronecker quiver) together with a coefficient mode.  In generic mode the
coefficients are rational functions of q; in specialized mode q is a fixed
integer and coefficients are fractions.
"""

from __future__ import annotations

from fractions import Fraction

from .brute import CyclicCategory, hall_table
from .cyclic import (
    NilpotentModule,
    aut_order,
    classes_of_dim,
    dim_end,
    dim_hom,
    format_module,
    parse_module,
)
from .exact import QRat, parse_scalar, scalar_str
from .fields import SUPPORTED_ORDERS
from .segment_engine import SegmentHallEngine


class ContextMismatch(ValueError):
    pass


def _sub_vectors(alpha):
    if not alpha:
        yield ()
        return
    for a in range(alpha[0] + 1):
        for rest in _sub_vectors(alpha[1:]):
            yield (a,) + rest


class HallContext:
    """Common scalar handling; subclasses supply the module category."""

    kind = "abstract"

    def __init__(self, q=None):
        self.q = q
        self.mode = "generic" if q is None else "specialized"
        self._splits = {}

    # scalars
    def scalar(self, x):
        if self.q is None:
            return QRat.coerce(x)
        if isinstance(x, QRat):
            return x(self.q)
        return Fraction(x)

    @property
    def zero_scalar(self):
        return self.scalar(0)

    @property
    def one_scalar(self):
        return self.scalar(1)

    @property
    def qvalue(self):
        """The field size as a scalar (``q`` itself in generic mode)."""
        return QRat.q() if self.q is None else Fraction(self.q)

    def check_same(self, other: "HallContext"):
        if self != other:
            raise ContextMismatch(f"{self!r} vs {other!r}")

    # to be provided: n_vertices, zero_class, dim_vector, classes, aut_order,
    # dim_end, dim_hom, product_terms, format_class, parse_class, simple

    def splitting_table(self, alpha) -> dict:
        """``{X: {(M, N): F^X_{MN}}}`` for all classes X of dimension ``alpha``."""
        alpha = tuple(alpha)
        hit = self._splits.get(alpha)
        if hit is not None:
            return hit
        out = {X: {} for X in self.classes(alpha)}
        for beta in _sub_vectors(alpha):
            gamma = tuple(a - b for a, b in zip(alpha, beta))
            for N in self.classes(gamma):
                for M in self.classes(beta):
                    for X, c in self.product_terms({M: self.one_scalar}, {N: self.one_scalar}).items():
                        out[X][(M, N)] = c
        self._splits[alpha] = out
        return out

    def hall_number(self, M, N, X):
        return self.product_terms({M: self.one_scalar}, {N: self.one_scalar}).get(X, self.zero_scalar)


class CyclicContext(HallContext):
    """Nilpotent representations of the cyclic quiver with ``l+1`` vertices.

    ``d`` switches to the algebra over F_{q^d} (used for the loop quiver,
    ``l = 0``).  ``engine='brute'`` counts subrepresentations of explicit
    matrices instead of using the segment formulas (specialized mode only).
    """

    kind = "cyclic"

    def __init__(self, l: int, q=None, d: int = 1, engine: str = "segment"):
        super().__init__(q)
        self.l = l
        self.n = l + 1
        self.d = d
        self.engine_name = engine
        if engine == "segment":
            self.engine = SegmentHallEngine(self.n, q, d)
        elif engine == "brute":
            if q is None or d != 1 or q not in SUPPORTED_ORDERS:
                raise ValueError("brute engine needs a specialized supported field order and d=1")
            self.engine = None
            self.category = CyclicCategory(l)
        else:
            raise ValueError(f"unknown engine {engine!r}")

    def __repr__(self):
        return f"CyclicContext(l={self.l}, q={self.q}, d={self.d}, engine={self.engine_name!r})"

    def __eq__(self, other):
        return isinstance(other, CyclicContext) and (self.l, self.q, self.d, self.engine_name) == (
            other.l,
            other.q,
            other.d,
            other.engine_name,
        )

    def __hash__(self):
        return hash(("cyclic", self.l, self.q, self.d, self.engine_name))

    @property
    def quiver_name(self) -> str:
        return f"A~{self.l}"

    @property
    def n_vertices(self) -> int:
        return self.n

    @property
    def qvalue(self):
        base = super().qvalue
        return base ** self.d

    def zero_class(self):
        return NilpotentModule(self.n)

    def simple(self, i: int):
        return NilpotentModule(self.n, [(i, 1)])

    def dim_vector(self, M):
        return M.dim_vector

    def classes(self, alpha):
        return classes_of_dim(tuple(alpha))

    def aut_order(self, M):
        if self.q is None:
            a = aut_order(M)
            return a.substitute_power(self.d) if self.d != 1 else a
        return Fraction(aut_order(M, self.q ** self.d))

    def dim_end(self, M) -> int:
        return dim_end(M)

    def dim_hom(self, M, N) -> int:
        return dim_hom(M, N)

    def format_class(self, M) -> str:
        return format_module(M)

    def parse_class(self, text: str):
        return parse_module(text, self.n)

    def product_terms(self, x: dict, y: dict) -> dict:
        if self.engine is not None:
            out = self.engine.multiply(x, y)
            return {X: self.scalar(c) for X, c in out.items()}
        out = {}
        for M, a in x.items():
            for N, b in y.items():
                dx = tuple(u + v for u, v in zip(M.dim_vector, N.dim_vector))
                for X in classes_of_dim(dx):
                    f = hall_table(self.category, X, self.q).get((M, N), 0)
                    if f:
                        out[X] = out.get(X, 0) + a * b * f
        return {X: Fraction(c) for X, c in out.items() if c != 0}

    def right_multiplier(self, x: "HallElement"):
        """Callable ``y -> x * y`` sharing intermediate products across calls."""
        if self.engine is None:
            return lambda y: x * y
        cache = {}
        terms = dict(x.terms)

        def apply(y: "HallElement") -> "HallElement":
            out = self.engine.multiply(terms, y.terms, cache)
            return HallElement(self, {X: self.scalar(c) for X, c in out.items()})

        return apply

    def dual(self, M):
        from .cyclic import dual

        return dual(M)

    def with_q(self, q) -> "CyclicContext":
        return CyclicContext(self.l, q, self.d, "segment" if q is None else self.engine_name)


class HallElement:
    """Finite linear combination of iso-classes in a fixed context."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: HallContext, terms=None):
        self.ctx = ctx
        clean = {}
        if terms:
            for M, c in terms.items():
                c = ctx.scalar(c)
                if c != 0:
                    clean[M] = c
        self.terms = clean

    # construction
    @classmethod
    def basis(cls, ctx, M, coeff=1) -> "HallElement":
        return cls(ctx, {M: coeff})

    @classmethod
    def one(cls, ctx) -> "HallElement":
        return cls(ctx, {ctx.zero_class(): 1})

    @classmethod
    def zero(cls, ctx) -> "HallElement":
        return cls(ctx)

    @classmethod
    def parse(cls, ctx, text: str) -> "HallElement":
        return cls.basis(ctx, ctx.parse_class(text))

    # queries
    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, M):
        return self.terms.get(M, self.ctx.zero_scalar)

    def support(self) -> list:
        return sorted(self.terms)

    def degrees(self) -> list:
        return sorted({self.ctx.dim_vector(M) for M in self.terms})

    @property
    def degree(self):
        degs = self.degrees()
        return degs[0] if len(degs) == 1 else None

    def homogeneous_part(self, alpha) -> "HallElement":
        alpha = tuple(alpha)
        return HallElement(self.ctx, {M: c for M, c in self.terms.items() if self.ctx.dim_vector(M) == alpha})

    # arithmetic
    def _coerce_other(self, other):
        if isinstance(other, HallElement):
            self.ctx.check_same(other.ctx)
            return other
        return HallElement.one(self.ctx) * other

    def __eq__(self, other):
        if isinstance(other, HallElement):
            return self.ctx == other.ctx and self.terms == other.terms
        if isinstance(other, (int, Fraction, QRat)):
            return self == HallElement.one(self.ctx) * other
        return NotImplemented

    def __hash__(self):
        return hash((self.ctx, frozenset(self.terms.items())))

    def __add__(self, other):
        other = self._coerce_other(other)
        out = dict(self.terms)
        for M, c in other.terms.items():
            out[M] = out[M] + c if M in out else c
        return HallElement(self.ctx, out)

    __radd__ = __add__

    def __neg__(self):
        return HallElement(self.ctx, {M: -c for M, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce_other(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, HallElement):
            self.ctx.check_same(other.ctx)
            if not self.terms or not other.terms:
                return HallElement(self.ctx)
            return HallElement(self.ctx, self.ctx.product_terms(self.terms, other.terms))
        c = self.ctx.scalar(other)
        return HallElement(self.ctx, {M: a * c for M, a in self.terms.items()})

    def __rmul__(self, other):
        c = self.ctx.scalar(other)
        return HallElement(self.ctx, {M: c * a for M, a in self.terms.items()})

    def __truediv__(self, other):
        c = self.ctx.scalar(other)
        return self * (self.ctx.one_scalar / c)

    def __pow__(self, k: int):
        out = HallElement.one(self.ctx)
        for _ in range(k):
            out = out * self
        return out

    def map_coefficients(self, fn) -> "HallElement":
        return HallElement(self.ctx, {M: fn(c) for M, c in self.terms.items()})

    def specialize(self, q: int) -> "HallElement":
        """Evaluate a generic element at q (cyclic contexts only)."""
        if self.ctx.mode != "generic":
            raise ValueError("element is already specialized")
        ctx = self.ctx.with_q(q)
        return HallElement(ctx, {M: c(q) for M, c in self.terms.items()})

    # serialization
    def to_json(self) -> dict:
        degree = self.degree
        return {
            "degree": list(degree) if degree is not None else None,
            "terms": [
                {"module": self.ctx.format_class(M), "coeff": scalar_str(c)} for M, c in sorted(self.terms.items())
            ],
            "mode": self.ctx.mode,
        }

    @classmethod
    def from_json(cls, ctx, data: dict) -> "HallElement":
        terms = {}
        for t in data["terms"]:
            M = ctx.parse_class(t["module"])
            terms[M] = terms.get(M, 0) + parse_scalar(t["coeff"])
        el = cls(ctx, terms)
        if data.get("mode", ctx.mode) != ctx.mode:
            raise ContextMismatch("mode mismatch")
        return el

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = [f"({scalar_str(c)})[{self.ctx.format_class(M)}]" for M, c in sorted(self.terms.items())]
        return " + ".join(parts)


class TensorElement:
    """Finite sum of ``[M] (x) [N]`` with scalar coefficients."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx, terms=None):
        self.ctx = ctx
        self.terms = {k: ctx.scalar(c) for k, c in (terms or {}).items() if ctx.scalar(c) != 0}

    def __add__(self, other):
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out[k] + c if k in out else c
        return TensorElement(self.ctx, out)

    def __eq__(self, other):
        return isinstance(other, TensorElement) and self.terms == other.terms

    def __mul__(self, other):
        """Componentwise product ``(a (x) b)(c (x) d) = ac (x) bd``."""
        if not isinstance(other, TensorElement):
            c = self.ctx.scalar(other)
            return TensorElement(self.ctx, {k: v * c for k, v in self.terms.items()})
        out = TensorElement(self.ctx)
        for (M1, N1), a in self.terms.items():
            for (M2, N2), b in other.terms.items():
                left = HallElement.basis(self.ctx, M1) * HallElement.basis(self.ctx, M2)
                right = HallElement.basis(self.ctx, N1) * HallElement.basis(self.ctx, N2)
                out = out + tensor(left, right) * (a * b)
        return out

    def coefficient(self, M, N):
        return self.terms.get((M, N), self.ctx.zero_scalar)

    def left_factors(self) -> set:
        return {M for M, _ in self.terms}

    def __repr__(self):
        f = self.ctx.format_class
        return " + ".join(f"({scalar_str(c)})[{f(M)}](x)[{f(N)}]" for (M, N), c in sorted(self.terms.items()))


def tensor(x: HallElement, y: HallElement) -> TensorElement:
    return TensorElement(x.ctx, {(M, N): a * b for M, a in x.terms.items() for N, b in y.terms.items()})


# ---------------------------------------------------------------------------
# operations


def mul(x: HallElement, y: HallElement) -> HallElement:
    return x * y


def comultiply(x: HallElement) -> TensorElement:
    """Green's comultiplication."""
    ctx = x.ctx
    out = {}
    for X, c in x.terms.items():
        ax = ctx.aut_order(X)
        for (M, N), f in ctx.splitting_table(ctx.dim_vector(X))[X].items():
            v = c * f * ctx.aut_order(M) * ctx.aut_order(N) / ax
            out[(M, N)] = out.get((M, N), ctx.zero_scalar) + v
    return TensorElement(ctx, out)


def form(x: HallElement, y: HallElement):
    """``{[M], [N]} = delta_{MN} / |Aut M|``, extended bilinearly."""
    x.ctx.check_same(y.ctx)
    ctx = x.ctx
    acc = ctx.zero_scalar
    for M, a in x.terms.items():
        b = y.terms.get(M)
        if b is not None:
            acc = acc + a * b / ctx.aut_order(M)
    return acc


def tensor_form(t: TensorElement, y: HallElement, z: HallElement):
    """``{t, y (x) z}`` for the product form on the tensor square."""
    ctx = t.ctx
    acc = ctx.zero_scalar
    for (M, N), c in t.terms.items():
        a, b = y.terms.get(M), z.terms.get(N)
        if a is not None and b is not None:
            acc = acc + c * a * b / (ctx.aut_order(M) * ctx.aut_order(N))
    return acc


def e_prime(i: int, x: HallElement) -> HallElement:
    """Adjoint of left multiplication by ``[S_i]`` for the form.

    ``coeff_N(e_i' x) = sum_X x_X F^X_{S_i, N} |Aut N| / |Aut X|``.
    """
    ctx = x.ctx
    Si = ctx.simple(i)
    out = HallElement(ctx)
    for alpha in x.degrees():
        gamma = tuple(a - (1 if k == i else 0) for k, a in enumerate(alpha))
        if min(gamma) < 0:
            continue
        part = x.homogeneous_part(alpha)
        terms = {}
        for N in ctx.classes(gamma):
            prod = ctx.product_terms({Si: ctx.one_scalar}, {N: ctx.one_scalar})
            acc = ctx.zero_scalar
            for X, c in part.terms.items():
                f = prod.get(X)
                if f is not None:
                    acc = acc + c * f / ctx.aut_order(X)
            if acc != 0:
                terms[N] = acc * ctx.aut_order(N)
        out = out + HallElement(ctx, terms)
    return out


def commutator(x: HallElement, y: HallElement) -> HallElement:
    return x * y - y * x
