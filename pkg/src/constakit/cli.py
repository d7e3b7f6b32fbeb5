"""Command-line interface.

Subcommands: factor, classes, dual, lcd, selfdual, mindist, verify-grid.
Output is deterministic: fixed JSON key order, factors in canonical
order, and a fixed default oracle seed (override with --seed or the
CONSTAKIT_SEED environment variable).

Exit codes: 0 success, 2 parameter validation, 3 verification mismatch,
4 budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import codes as codes_mod
from .equivalence import class_of, transversal
from .errors import BudgetExceededError, ConstakitError, ParameterError, VerificationError
from .factorizer import (
    DEFAULT_ORACLE_SEED,
    factorization_of,
    oracle_factor,
    oracle_is_irreducible,
)
from .gf import make_field
from .grid import GridPoint, default_grid, verify_grid
from .polyring import Poly

EXIT_OK = 0
EXIT_PARAMS = 2
EXIT_VERIFY = 3
EXIT_BUDGET = 4

DEFAULT_ENUM_BUDGET = 10**5


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _add_field_params(sub, with_class=False, with_exps=False):
    sub.add_argument("--p", type=int, required=True, help="odd prime characteristic")
    sub.add_argument("--a", type=int, default=1, help="extension degree (q = p^a)")
    sub.add_argument("--ell", type=int, required=True, help="odd prime l != p")
    sub.add_argument("--m", type=int, required=True, help="exponent of l")
    sub.add_argument("--n", type=int, required=True, help="exponent of p")
    if with_class:
        group = sub.add_mutually_exclusive_group()
        group.add_argument(
            "--class",
            dest="class_index",
            type=int,
            help="constant class index j (lambda = xi^(j p^n))",
        )
        group.add_argument(
            "--lambda-raw",
            help="explicit constant: an integer, or comma-separated coefficients",
        )
    if with_exps:
        sub.add_argument(
            "--exps",
            required=True,
            help="comma-separated factor exponents in [0, p^n]",
        )


def _resolve_field(args):
    return make_field(args.p, args.a)


def _resolve_lambda(F, args):
    """(lambda, class index) from --class / --lambda-raw; default class 0."""
    n_classes = len(transversal(F, args.ell, args.m, args.n))
    raw = getattr(args, "lambda_raw", None)
    if raw is not None:
        parts = [int(t) for t in raw.split(",")]
        lam = F.elem(parts[0] if len(parts) == 1 else parts)
        if lam.is_zero():
            raise ParameterError("lambda must be nonzero")
        return lam, class_of(F, args.ell, args.m, args.n, lam)
    j = args.class_index if args.class_index is not None else 0
    if j < 0 or j >= n_classes:
        raise ParameterError(
            f"class index {j} out of range: there are {n_classes} "
            f"equivalence classes (0..{n_classes - 1})"
        )
    return transversal(F, args.ell, args.m, args.n)[j].rep, j


def _seed(args) -> int:
    if getattr(args, "seed", None) is not None:
        return args.seed
    env = os.environ.get("CONSTAKIT_SEED")
    return int(env) if env else DEFAULT_ORACLE_SEED


def cmd_factor(args) -> int:
    F = _resolve_field(args)
    lam, j = _resolve_lambda(F, args)
    fact = factorization_of(F, args.ell, args.m, args.n, lam)
    if args.verify:
        target = Poly.binomial(F, fact.N, -lam)
        got = sorted(g.key() for g, _ in oracle_factor(target, seed=_seed(args)))
        want = sorted(g.key() for g in fact.factors)
        if got != want or any(not oracle_is_irreducible(g) for g in fact.factors):
            print("oracle cross-check FAILED", file=sys.stderr)
            return EXIT_VERIFY
    if args.json:
        print(_dump(fact.to_json()))
    else:
        print(f"X^{fact.N} - lambda over GF({F.q}), class j={j}, case {fact.case}")
        print(f"multiplicity {fact.multiplicity}, {len(fact.factors)} distinct factors:")
        for g in fact.factors:
            print(f"  deg {g.degree}: {g!r}")
        if args.verify:
            print("oracle cross-check passed")
    return EXIT_OK


def cmd_classes(args) -> int:
    F = _resolve_field(args)
    classes = transversal(F, args.ell, args.m, args.n)
    if args.json:
        print(_dump({"count": len(classes), "classes": [c.to_json() for c in classes]}))
    else:
        print(f"{len(classes)} equivalence classes for N = {classes[0].n}:")
        for c in classes:
            print(f"  j={c.index}: {c.rep!r}")
    return EXIT_OK


def _parse_exps(args, fact):
    exps = tuple(int(t) for t in args.exps.split(","))
    return codes_mod.make_code(fact, exps)


def cmd_dual(args) -> int:
    F = _resolve_field(args)
    lam, _ = _resolve_lambda(F, args)
    fact = factorization_of(F, args.ell, args.m, args.n, lam)
    C = _parse_exps(args, fact)
    D = codes_mod.dual(C)
    if args.json:
        print(_dump({"code": C.to_json(), "dual": D.to_json()}))
    else:
        print(f"code dim {C.dim}, dual dim {D.dim} (N = {C.N})")
        print(f"dual generator: {D.generator!r}")
    return EXIT_OK


def _emit_codes(args, items, predicted: int) -> int:
    budget = args.budget
    emitted = 0
    for C in items:
        if emitted >= budget:
            print(_dump({"truncated": True, "emitted": emitted, "predicted": predicted}))
            print(
                f"enumeration budget {budget} exceeded; output truncated",
                file=sys.stderr,
            )
            return EXIT_BUDGET
        print(_dump(C.to_json()))
        emitted += 1
    print(_dump({"count": emitted, "predicted": predicted}))
    if emitted != predicted:
        print(
            f"enumerated {emitted} codes but the closed form predicts {predicted}",
            file=sys.stderr,
        )
        return EXIT_VERIFY
    return EXIT_OK


def cmd_lcd(args) -> int:
    F = _resolve_field(args)
    lam = F.one if args.family == "cyclic" else -F.one
    fact = factorization_of(F, args.ell, args.m, args.n, lam)
    prof = fact.profile
    predicted = codes_mod.lcd_count_formula(args.family, F.q, prof.f, prof.e)
    return _emit_codes(args, codes_mod.iter_lcd_codes(fact), predicted)


def cmd_selfdual(args) -> int:
    F = _resolve_field(args)
    prof = factorization_of(F, args.ell, args.m, args.n, -F.one).profile
    predicted = codes_mod.self_dual_count_formula(F.q, F.p, args.n, prof.e)
    items = codes_mod.iter_self_dual_negacyclic(F, args.ell, args.m, args.n)
    rc = _emit_codes(args, items, predicted)
    if rc == EXIT_OK and predicted == 0:
        print(
            f"no self-dual negacyclic codes exist: q = {F.q} is 3 mod 4",
            file=sys.stderr,
        )
    return rc


def cmd_mindist(args) -> int:
    F = _resolve_field(args)
    lam, _ = _resolve_lambda(F, args)
    fact = factorization_of(F, args.ell, args.m, args.n, lam)
    C = _parse_exps(args, fact)
    d = codes_mod.min_distance_exhaustive(C, budget=args.budget)
    if args.json:
        print(_dump({"code": C.to_json(), "min_distance": d}))
    else:
        print(f"[{C.N}, {C.dim}] code: minimum distance {d}")
    return EXIT_OK


def cmd_verify_grid(args) -> int:
    if args.grid:
        with open(args.grid) as fh:
            raw = json.load(fh)
        points = [GridPoint(r["p"], r["a"], r["ell"], r["m"], r["n"]) for r in raw]
    else:
        points = default_grid()
    ok, records = verify_grid(
        points,
        with_oracle=not args.no_oracle,
        seed=_seed(args),
        inject_fault=args.inject_fault,
    )
    failures = [r for r in records if not r["ok"]]
    if args.json:
        for r in records:
            print(_dump(r))
        print(_dump({"checks": len(records), "failures": len(failures)}))
    else:
        for r in records:
            mark = "ok " if r["ok"] else "FAIL"
            pt = r["point"]
            print(
                f"[{mark}] q={pt['p']**pt['a']} ell={pt['ell']} m={pt['m']} "
                f"n={pt['n']} {r['check']}: {r['detail']}"
            )
        print(f"{len(records)} checks, {len(failures)} failures")
    if failures:
        print("first counterexample: " + _dump(failures[0]), file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="constakit",
        description="constacyclic codes of length 2 l^m p^n over GF(q): "
        "factorizations, duals, LCD and self-dual enumeration",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("factor", help="closed-form factorization of X^N - lambda")
    _add_field_params(sp, with_class=True)
    sp.add_argument("--json", action="store_true")
    sp.add_argument("--verify", action="store_true", help="cross-check with the oracle")
    sp.add_argument("--seed", type=int)
    sp.set_defaults(fn=cmd_factor)

    sp = sub.add_parser("classes", help="equivalence class transversal")
    _add_field_params(sp)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(fn=cmd_classes)

    sp = sub.add_parser("dual", help="dual code of an exponent vector")
    _add_field_params(sp, with_class=True, with_exps=True)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(fn=cmd_dual)

    sp = sub.add_parser("lcd", help="enumerate LCD cyclic/negacyclic codes")
    _add_field_params(sp)
    sp.add_argument("--family", choices=("cyclic", "negacyclic"), required=True)
    sp.add_argument("--budget", type=int, default=DEFAULT_ENUM_BUDGET)
    sp.set_defaults(fn=cmd_lcd)

    sp = sub.add_parser("selfdual", help="enumerate self-dual negacyclic codes")
    _add_field_params(sp)
    sp.add_argument("--budget", type=int, default=DEFAULT_ENUM_BUDGET)
    sp.set_defaults(fn=cmd_selfdual)

    sp = sub.add_parser("mindist", help="exhaustive minimum distance")
    _add_field_params(sp, with_class=True, with_exps=True)
    sp.add_argument("--budget", type=int, default=codes_mod.DEFAULT_DISTANCE_BUDGET)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(fn=cmd_mindist)

    sp = sub.add_parser("verify-grid", help="run all structural checks over a grid")
    sp.add_argument("--grid", help="JSON file with a list of {p,a,ell,m,n} points")
    sp.add_argument("--json", action="store_true")
    sp.add_argument("--no-oracle", action="store_true", help="skip oracle cross-checks")
    sp.add_argument("--seed", type=int)
    sp.add_argument(
        "--inject-fault",
        action="store_true",
        help="testing aid: corrupt one factor per class to prove checks fire",
    )
    sp.set_defaults(fn=cmd_verify_grid)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except ParameterError as exc:
        print(f"parameter error: {exc}", file=sys.stderr)
        return EXIT_PARAMS
    except BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except VerificationError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except ConstakitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VERIFY


if __name__ == "__main__":
    sys.exit(main())
