"""The composition subalgebra: graded dimensions and membership by exact rank."""

from __future__ import annotations

from .exact import in_row_span, rank
from .hall import HallElement
from .report import Report


def words(degree) -> list:
    """All sequences of vertices using vertex i exactly ``degree[i]`` times."""
    degree = list(degree)
    out = []

    def rec(left, acc):
        if not any(left):
            out.append(tuple(acc))
            return
        for i, k in enumerate(left):
            if k:
                left[i] -= 1
                acc.append(i)
                rec(left, acc)
                acc.pop()
                left[i] += 1

    rec(degree, [])
    return out


def monomials(ctx, degree) -> dict:
    """``{word: [S_w1] ... [S_wk]}`` for all words of the given degree."""
    simples = [HallElement.basis(ctx, ctx.simple(i)) for i in range(ctx.n_vertices)]
    cache = {(): HallElement.one(ctx)}

    def prod(w):
        hit = cache.get(w)
        if hit is None:
            hit = prod(w[:-1]) * simples[w[-1]]
            cache[w] = hit
        return hit

    return {w: prod(w) for w in words(degree)}


def _matrix(elements, classes) -> list:
    return [[x.coefficient(X) for X in classes] for x in elements]


def composition_graded_dim(ctx, degree) -> int:
    """Rank of the monomials in the simples of the given degree."""
    if ctx.q is None:
        raise ValueError("graded dimensions are computed in specialized mode")
    classes = list(ctx.classes(tuple(degree)))
    return rank(_matrix(monomials(ctx, degree).values(), classes))


def in_composition(x: HallElement) -> bool:
    """Whether a homogeneous element lies in the span of monomials of its degree."""
    ctx = x.ctx
    if ctx.q is None:
        raise ValueError("membership is decided in specialized mode")
    if x.is_zero():
        return True
    deg = x.degree
    if deg is None:
        raise ValueError("element is not homogeneous")
    classes = list(ctx.classes(deg))
    rows = _matrix(monomials(ctx, deg).values(), classes)
    return in_row_span(rows, [x.coefficient(X) for X in classes])


KRONECKER_DEGREES = ((1, 0), (0, 1), (1, 1), (2, 1), (1, 2), (2, 2))


def verify_graded_dim(qs=(2, 3), degrees=KRONECKER_DEGREES, imaginary_multiplicity=None) -> Report:
    """Graded dimensions of the Kronecker composition algebra against the PBW count.

    The main check uses ``root_multiplicity_dim`` with its default imaginary
    multiplicity.  A second check compares with multiplicity one, and a third
    records the number of words, which bounds the rank from above.
    """
    from .affine import context
    from .kronecker import IMAGINARY_MULTIPLICITY, root_multiplicity_dim

    mult = IMAGINARY_MULTIPLICITY if imaginary_multiplicity is None else imaginary_multiplicity
    rep = Report("verify graded-dim", {"q": list(qs), "degrees": [list(d) for d in degrees], "imaginary_multiplicity": mult})
    values = {}
    for q in qs:
        ctx = context(q)
        for alpha in degrees:
            got = composition_graded_dim(ctx, alpha)
            values.setdefault(alpha, []).append(got)
            nwords = len(words(alpha))
            rep.check(f"dim C{alpha} at q={q} = PBW dim (mult {mult})", root_multiplicity_dim(alpha, mult), got,
                      witness={"words": nwords})
            if mult != 1:
                rep.check(f"dim C{alpha} at q={q} = PBW dim (mult 1)", root_multiplicity_dim(alpha, 1), got)
    for alpha, vals in values.items():
        rep.check(f"dim C{alpha} independent of q", True, len(set(vals)) == 1, witness=vals)
    return rep.finish()


def verify_powersum(ns=(1, 2), qs=(2, 3), l: int = 1) -> Report:
    """``psi^(S_0)(p(n)) - psi^(S_1)(p(n))`` lies in the composition algebra; so do preprojectives."""
    from . import kronecker as kr
    from .affine import context
    from .psi import psi_S
    from .symfunc import basis_element

    rep = Report("verify powersum", {"n": list(ns), "q": list(qs), "l": l})
    for q in qs:
        for n in ns:
            p = basis_element("p", n)
            x = psi_S(p, 0, l, q) - psi_S(p, 1, l, q)
            rep.check(f"psi_S0(p({n})) - psi_S1(p({n})) in C, q={q}", True, in_composition(x))
            rep.check(f"psi_S0(p({n})) alone not in C, q={q}", False, in_composition(psi_S(p, 0, l, q)))
    ctx = context(2)
    for k in (1, 2):
        P = kr.KroneckerClass(2, preproj=(k,))
        rep.check(f"[{kr.format_class(P)}] in C, q=2", True, in_composition(HallElement.basis(ctx, P)))
    return rep.finish()
