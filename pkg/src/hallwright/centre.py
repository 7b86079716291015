"""Central elements of the Hall algebra of nilpotent cyclic-quiver representations."""

from __future__ import annotations

from .brute import CyclicCategory, hall_table
from .cyclic import (
    Z_module,
    classes_of_dim,
    classes_upto,
    dim_end,
    dim_hom,
    dim_vectors_of_total,
    is_Z_module,
    loewy_partition,
    z_support,
)
from .exact import nullspace, rank
from .hall import CyclicContext, HallElement, e_prime
from .partitions import Partition, cup, partitions, repeat_parts, rev_lex_less
from .report import Report


def z_generator(m: int, ctx: CyclicContext) -> HallElement:
    """``sum (-1)^dim End M |Aut M| [M]`` over M of dimension m*delta with square-free socle."""
    terms = {}
    for M in z_support(m, ctx.l):
        terms[M] = ctx.aut_order(M) * (-1) ** dim_end(M)
    return HallElement(ctx, terms)


def z_product(lam, ctx: CyclicContext) -> HallElement:
    out = HallElement.one(ctx)
    for part in lam:
        out = out * z_generator(part, ctx)
    return out


def partition_leq(lam, mu) -> bool:
    """``lam <= mu`` in the reverse lexicographic order."""
    return tuple(lam) == tuple(mu) or rev_lex_less(lam, mu)


def verify_central(z: HallElement, dim_bound: int, label: str = "z") -> Report:
    """``z [M] = [M] z`` for every class M of total dimension at most ``dim_bound``."""
    ctx = z.ctx
    rep = Report("verify central", {"element": label, "quiver": ctx.quiver_name, "q": ctx.q, "dim_bound": dim_bound})
    left = ctx.right_multiplier(z)
    bad = []
    count = 0
    for M in classes_upto(ctx.n, dim_bound):
        if M.is_zero():
            continue
        eM = HallElement.basis(ctx, M)
        diff = left(eM) - eM * z
        count += 1
        if not diff.is_zero():
            bad.append({"module": ctx.format_class(M), "commutator": diff.to_json()})
    rep.check(f"[{label}, M] = 0 for {count} classes", 0, len(bad), witness=bad[0] if bad else None)
    return rep.finish()


def verify_kernel(z: HallElement, label: str = "z") -> Report:
    ctx = z.ctx
    rep = Report("verify e_i' kernel", {"element": label, "quiver": ctx.quiver_name, "q": ctx.q})
    for i in range(ctx.n):
        img = e_prime(i, z)
        rep.check(f"e_{i}'({label}) = 0", "0", repr(img), img.is_zero())
    return rep.finish()


def verify_leading_terms(lam, ctx: CyclicContext) -> Report:
    """Every term of z_lam has Loewy partition <= lam^(l+1), and Z_lam occurs."""
    lam = Partition.from_parts(lam)
    rep = Report("verify leading terms", {"lambda": list(lam), "quiver": ctx.quiver_name, "q": ctx.q})
    z = z_product(lam, ctx)
    top = repeat_parts(lam, ctx.n)
    bad = [ctx.format_class(M) for M in z.terms if not partition_leq(loewy_partition(M), top)]
    rep.check("mu(M) <= lam^(l+1) on all terms", [], bad)
    tops = [M for M in z.terms if tuple(loewy_partition(M)) == tuple(top)]
    Zl = Z_module(lam, ctx.l)
    rep.check("unique term with mu = lam^(l+1)", [ctx.format_class(Zl)], [ctx.format_class(M) for M in tops])
    rep.check("coefficient of Z_lam nonzero", True, z.coefficient(Zl) != 0, witness=str(z.coefficient(Zl)))
    return rep.finish()


def verify_thmA_central(ls=(1, 2), ms=(1, 2), qs=(2, 3)) -> Report:
    rep = Report("verify thmA-central", {"l": list(ls), "m": list(ms), "q": list(qs)})
    for l in ls:
        for q in qs:
            ctx = CyclicContext(l, q)
            for m in ms:
                z = z_generator(m, ctx)
                rep.add(verify_central(z, 2 * (l + 1), f"z_{m}"))
                rep.add(verify_kernel(z, f"z_{m}"))
            rep.add(verify_leading_terms((2, 1) if l == 1 else (1, 1), ctx))
    return rep.finish()


# ---------------------------------------------------------------------------
# the commutant in a fixed degree


def commutant(ctx: CyclicContext, degree, dim_bound: int) -> tuple:
    """Basis of degree-``degree`` elements commuting with all [M], total dim <= ``dim_bound``.

    Returns ``(classes, vectors)`` with each vector a coefficient list on ``classes``.
    """
    if ctx.q is None:
        raise ValueError("the commutant is computed in specialized mode")
    basis = list(classes_of_dim(tuple(degree)))
    tests = [M for M in classes_upto(ctx.n, dim_bound) if not M.is_zero()]
    rows = []
    for M in tests:
        eM = HallElement.basis(ctx, M)
        cols = []
        for X in basis:
            eX = HallElement.basis(ctx, X)
            cols.append((eX * eM - eM * eX).terms)
        keys = sorted({Y for c in cols for Y in c})
        for Y in keys:
            rows.append([c.get(Y, 0) for c in cols])
    return basis, nullspace(rows, len(basis))


def centre_dimension(ctx: CyclicContext, degree, dim_bound: int) -> int:
    return len(commutant(ctx, degree, dim_bound)[1])


def _vector(x: HallElement, basis) -> list:
    return [x.coefficient(X) for X in basis]


def verify_centre_dim(qs=(2, 3), dim_bound: int = 4) -> Report:
    """On the cyclic quiver with two vertices: the commutant has dimension 1, 2
    in degrees delta, 2 delta, spanned by z_1 and {z_2, z_1^2}; other degrees give 0."""
    rep = Report("verify thmA-centre-dim", {"l": 1, "q": list(qs), "dim_bound": dim_bound})
    for q in qs:
        ctx = CyclicContext(1, q)
        sub = Report("centre dimensions", {"q": q})
        z1, z2 = z_generator(1, ctx), z_generator(2, ctx)
        expected = {(1, 1): [z1], (2, 2): [z2, z1 * z1]}
        for total in range(1, dim_bound + 1):
            for dv in dim_vectors_of_total(2, total):
                basis, vecs = commutant(ctx, dv, dim_bound)
                want = expected.get(dv, [])
                sub.check(f"dim Z{dv}", len(want), len(vecs))
                if want:
                    gens = [_vector(x, basis) for x in want]
                    sub.check(f"generators of degree {dv} independent", len(want), rank(gens))
                    sub.check(f"generators span degree {dv}", len(vecs), rank(vecs + gens))
        rep.add(sub.finish())
    return rep.finish()


# ---------------------------------------------------------------------------
# lemmas on extensions and on Z modules


def verify_ext_lemma(ls=(1, 2), max_total: int = 5, q: int = 2) -> Report:
    """If F^X_{MN} != 0 then mu(X) <= mu(M) cup mu(N), with equality iff X = M + N.

    Exhaustive over brute-force Hall numbers.
    """
    rep = Report("verify ext-lemma", {"l": list(ls), "max_total": max_total, "q": q})
    for l in ls:
        cat = CyclicCategory(l)
        n = l + 1
        bad, count, split_missing = [], 0, []
        for X in classes_upto(n, max_total):
            for (M, N), f in hall_table(cat, X, q).items():
                if not f:
                    continue
                count += 1
                top = cup(loewy_partition(M), loewy_partition(N))
                muX = loewy_partition(X)
                if not partition_leq(muX, top):
                    bad.append(f"{X} from {M}, {N}")
                elif (tuple(muX) == tuple(top)) != (X == M + N):
                    bad.append(f"equality case {X} from {M}, {N}")
        for M in classes_upto(n, max_total):
            for N in classes_upto(n, max_total - M.total):
                if hall_table(cat, M + N, q).get((M, N), 0) == 0:
                    split_missing.append(f"{M} + {N}")
        rep.check(f"A~{l}: {count} nonzero triples satisfy the bound", [], bad[:5], not bad)
        rep.check(f"A~{l}: split extension always occurs", [], split_missing[:5], not split_missing)
    return rep.finish()


def hom_symmetric(M, tests) -> bool:
    return all(dim_hom(M, N) == dim_hom(N, M) for N in tests)


def verify_Z_lemma(l: int = 1, max_total: int = 6) -> Report:
    """Modules with dim Hom(M, N) = dim Hom(N, M) for all N are exactly the Z_pi.

    Candidates have total dimension <= ``max_total``; they are tested against all
    modules up to ``max_total + l + 1`` so that truncation cannot fake symmetry.
    """
    rep = Report("verify Z-lemma", {"l": l, "max_total": max_total})
    n = l + 1
    tests = classes_upto(n, max_total + n)
    found = sorted(M for M in classes_upto(n, max_total) if hom_symmetric(M, tests))
    want = sorted(
        Z_module(pi, l) for k in range(0, max_total // n + 1) for pi in (partitions(k) if k else [Partition(())])
    )
    rep.check("Hom-symmetric modules = {Z_pi}", [str(M) for M in want], [str(M) for M in found])
    rep.check("all found are Z modules", True, all(is_Z_module(M) or M.is_zero() for M in found))
    return rep.finish()
