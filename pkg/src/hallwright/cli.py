"""Command line: ``hallwright mul | verify | report-all``."""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path

from .brute import GuardError
from .report import Report, validate_report

DEFAULT_SEED = 20240917
# largest total dimension of a product accepted by ``mul`` on cyclic quivers
MUL_GUARD = 12


# ---------------------------------------------------------------------------
# contexts and operands


def make_context(quiver: str, q):
    from .affine import context
    from .hall import CyclicContext

    name = quiver.strip()
    low = name.lower()
    if low in ("k", "kronecker"):
        if q is None:
            raise ValueError("the Kronecker quiver needs --q")
        return context(q)
    if low == "loop":
        return CyclicContext(0, q)
    for prefix in ("a~", "cyclic"):
        if low.startswith(prefix):
            try:
                l = int(low[len(prefix):])
            except ValueError:
                break
            if l < 0:
                break
            return CyclicContext(l, q)
    raise ValueError(f"unknown quiver {quiver!r}; use A~l (e.g. A~1), loop or K")


def parse_operand(ctx, text: str):
    from .hall import HallElement

    t = text.strip()
    if t in ("0", "0-module", "1"):
        return HallElement.one(ctx)
    return HallElement.parse(ctx, t)


def run_mul(args) -> Report:
    from .hall import CyclicContext

    ctx = make_context(args.quiver, args.q)
    x = parse_operand(ctx, args.lhs)
    y = parse_operand(ctx, args.rhs)
    if isinstance(ctx, CyclicContext):
        total = sum(sum(M.dim_vector) for M in (next(iter(x.terms)), next(iter(y.terms))))
        if total > MUL_GUARD:
            raise GuardError(f"product of total dimension {total} exceeds the guard {MUL_GUARD}")
    rep = Report("mul", {"quiver": args.quiver, "q": args.q, "lhs": args.lhs, "rhs": args.rhs})
    z = x * y
    rep.result = z.to_json()
    rep.check("product is homogeneous", True, len(z.degrees()) <= 1, witness=[list(a) for a in z.degrees()])
    return rep.finish()


# ---------------------------------------------------------------------------
# suites


def _vals(value, default):
    return default if value is None else [value]


def suite_steinitz(a):
    from .psi import verify_steinitz

    return verify_steinitz(a.weight or 6, a.q)


def suite_thmA_central(a):
    from .centre import verify_thmA_central

    return verify_thmA_central(_vals(a.l, [1, 2]), _vals(a.m, [1, 2]), _vals(a.q, [2, 3]))


def suite_thmA_centre_dim(a):
    from .centre import verify_centre_dim

    return verify_centre_dim(_vals(a.q, [2, 3]), a.bound or 4)


def suite_ext_lemma(a):
    from .centre import verify_ext_lemma

    return verify_ext_lemma(_vals(a.l, [1, 2]), a.bound or 5, a.q or 2)


def suite_thmB(a):
    from .affine import check_conventions, verify_thmB

    rep = Report("verify thmB", {"n": _vals(a.n, [1, 2]), "q": _vals(a.q, [2, 3])})
    for q in _vals(a.q, [2, 3]):
        rep.add(check_conventions(q))
        for n in _vals(a.n, [1, 2]):
            rep.add(verify_thmB(n, q))
    return rep.finish()


def suite_point_count(a):
    from .affine import verify_point_count

    ns = list(range(1, 6)) if a.n is None else [a.n]
    return verify_point_count(ns, _vals(a.q, [2, 3]))


def suite_series(a):
    from .affine import verify_p_generating
    from .psi import verify_generator_images, verify_series

    T = a.order or 5
    rep = Report("verify series", {"T": T})
    rep.add(verify_series(T, (1, 2)))
    rep.add(verify_generator_images(a.n or 4, 1))
    for q in _vals(a.q, [2, 3]):
        rep.add(verify_p_generating(q, 3))
    return rep.finish()


def suite_sigma(a):
    from .affine import verify_sigma

    rep = Report("verify sigma", {"r": _vals(a.r, [1, 2, 3]), "q": _vals(a.q, [2, 3])})
    for q in _vals(a.q, [2, 3]):
        for r in _vals(a.r, [1, 2, 3]):
            rep.add(verify_sigma(r, q))
    return rep.finish()


def suite_reflection(a):
    from .affine import verify_reflection

    return verify_reflection(a.q or 2)


def suite_graded_dim(a):
    from .composition import verify_graded_dim

    return verify_graded_dim(_vals(a.q, [2, 3]))


def suite_powersum(a):
    from .composition import verify_powersum

    return verify_powersum(_vals(a.n, [1, 2]), _vals(a.q, [2, 3]))


def suite_riedtmann(a):
    from .brute import verify_riedtmann
    from .cyclic import classes_upto

    ls = _vals(a.l, [0, 1, 2])
    bound = a.bound or 4
    rep = Report("verify riedtmann", {"l": ls, "q": _vals(a.q, [2, 3]), "bound": bound, "samples": a.samples, "seed": a.seed})
    rng = random.Random(a.seed)
    for l in ls:
        for q in _vals(a.q, [2, 3]):
            pairs = None
            if a.samples:
                pool = [
                    (M, N)
                    for M in classes_upto(l + 1, bound)
                    for N in classes_upto(l + 1, bound - M.total)
                    if not M.is_zero() and not N.is_zero()
                ]
                pairs = rng.sample(pool, min(a.samples, len(pool)))
            rep.add(verify_riedtmann(l, bound, q, pairs))
    return rep.finish()


SUITES = {
    "steinitz": suite_steinitz,
    "thmA-central": suite_thmA_central,
    "thmA-centre-dim": suite_thmA_centre_dim,
    "ext-lemma": suite_ext_lemma,
    "thmB": suite_thmB,
    "point-count": suite_point_count,
    "series": suite_series,
    "sigma": suite_sigma,
    "reflection": suite_reflection,
    "graded-dim": suite_graded_dim,
    "powersum": suite_powersum,
    "riedtmann": suite_riedtmann,
}

# parameters per scale; keys are flag names of ``verify``
SCALES = {
    "smoke": {
        "steinitz": {"weight": 4, "q": 2},
        "thmA-central": {"l": 1, "q": 2},
        "thmA-centre-dim": {"q": 2, "bound": 3},
        "ext-lemma": {"l": 1, "bound": 4},
        "thmB": {"n": 1, "q": 2},
        "point-count": {"q": 2},
        "series": {"order": 3, "n": 3, "q": 2},
        "sigma": {"r": 2, "q": 2},
        "reflection": {"q": 2},
        "graded-dim": {"q": 2},
        "powersum": {"n": 1, "q": 2},
        "riedtmann": {"l": 1, "q": 2, "bound": 3},
    },
    "full": {name: {} for name in SUITES},
}

FLAGS = ("n", "q", "l", "m", "r", "weight", "order", "bound", "samples")


def _namespace(seed: int, **values) -> argparse.Namespace:
    base = {k: None for k in FLAGS}
    base.update(values)
    return argparse.Namespace(seed=seed, **base)


def run_verify(args) -> Report:
    if args.name not in SUITES:
        raise KeyError(args.name)
    return SUITES[args.name](args)


def run_report_all(args) -> Report:
    rep = Report("report-all", {"scale": args.scale, "seed": args.seed})
    for name in sorted(SCALES[args.scale]):
        child = SUITES[name](_namespace(args.seed, **SCALES[args.scale][name]))
        child.command = f"verify {name}"
        rep.add(child)
    return rep.finish()


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hallwright", description="Hall algebras of affine quivers: products and verification suites.")
    sub = p.add_subparsers(dest="cmd", required=True)

    m = sub.add_parser("mul", help="multiply two basis elements")
    m.add_argument("--quiver", required=True, help="A~l (cyclic with l+1 vertices), loop, or K (Kronecker)")
    m.add_argument("--q", type=int, default=None, help="field size; omit for generic coefficients (cyclic only)")
    m.add_argument("--lhs", required=True)
    m.add_argument("--rhs", required=True)

    v = sub.add_parser("verify", help="run one verification suite")
    v.add_argument("name", help="suite name: " + ", ".join(SUITES))
    for flag in FLAGS:
        v.add_argument(f"--{flag}", type=int, default=None)
    v.add_argument("--seed", type=int, default=DEFAULT_SEED)

    r = sub.add_parser("report-all", help="run every suite at a preset scale")
    r.add_argument("--scale", choices=sorted(SCALES), default="smoke")
    r.add_argument("--output", default=None, help="report file (default: hallwright-report-<scale>.json)")
    r.add_argument("--seed", type=int, default=DEFAULT_SEED)

    for sp in (m, v):
        sp.add_argument("--output", default=None, help="also write the JSON report to this file")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.cmd == "mul":
            rep = run_mul(args)
        elif args.cmd == "verify":
            if args.name not in SUITES:
                print(f"unknown suite {args.name!r}; available suites: {', '.join(SUITES)}", file=sys.stderr)
                return 2
            rep = run_verify(args)
        else:
            rep = run_report_all(args)
            if args.output is None:
                args.output = f"hallwright-report-{args.scale}.json"
    except GuardError as exc:
        print(f"guard error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    data = rep.to_json()
    validate_report(data)
    text = json.dumps(data, indent=2)
    print(text)
    if args.output:
        Path(args.output).write_text(text + "\n")
    return 0 if rep.passed else 1


if __name__ == "__main__":
    sys.exit(main())
