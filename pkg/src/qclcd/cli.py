"""Command-line surface: verify descriptors, factor x^n - 1, run searches.

Exit codes: 0 success, 2 descriptor/config error, 3 budget exceeded,
4 internal consistency failure (polynomial condition and hull oracle
disagree on a descriptor).
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import __version__
from .code import DescriptorError, QcDescriptor, assemble_qc, dual_code, make_descriptor
from .gf import FieldError, field as make_field
from .lcd import ORACLE_AUTO_LIMIT, check_hgen
from .metrics import (DEFAULT_ENUM_BUDGET, BudgetExceededError, MetricsError,
                      distribution_prefix, min_distance_bz, min_distance_exhaustive)
from .polyring import RingCtx, factor_xn_minus_1, is_self_reciprocal
from .search import SearchConfig, SearchConfigError, run_search

EXIT_OK = 0
EXIT_DESCRIPTOR = 2
EXIT_BUDGET = 3
EXIT_MISMATCH = 4

DEFAULT_SEED = 0


def _poly_terms(*terms):
    deg = max(e for e, _ in terms)
    cs = [0] * (deg + 1)
    for e, c in terms:
        cs[e] = c
    return cs


# The three worked constructions shipped as presets (GF(4): 2 = w, 3 = w + 1).
PRESETS = {
    "example1": {
        "q": 2, "n": 13, "ell": 3, "kind": "euclidean",
        "generators": [{
            "g": [1],
            "f": [
                [1],
                _poly_terms((12, 1), (7, 1), (3, 1), (1, 1), (0, 1)),
                _poly_terms((12, 1), (11, 1), (9, 1), (8, 1), (5, 1), (3, 1), (2, 1)),
            ],
        }],
    },
    "example2": {
        "q": 4, "modulus": [1, 1, 1], "n": 19, "ell": 2, "kind": "hermitian",
        "generators": [{
            "g": [1, 1],
            "f": [
                _poly_terms((18, 3), (17, 1), (16, 3), (15, 1), (14, 1), (13, 3),
                            (12, 2), (11, 2), (10, 3), (9, 1), (8, 1), (7, 3),
                            (6, 2), (5, 1), (4, 2), (3, 1), (2, 1), (1, 2), (0, 1)),
                _poly_terms((15, 1), (14, 3), (12, 2), (10, 3), (7, 2), (6, 1),
                            (5, 2), (4, 2), (3, 2), (2, 2), (1, 3), (0, 1)),
            ],
        }],
    },
    "example3": {
        "q": 2, "n": 21, "ell": 2, "kind": "symplectic",
        "generators": [{
            "g": [1, 0, 0, 1],
            "f": [
                _poly_terms((18, 1), (16, 1), (15, 1), (14, 1), (13, 1), (12, 1),
                            (8, 1), (7, 1), (3, 1), (0, 1)),
                _poly_terms((20, 1), (19, 1), (18, 1), (15, 1), (14, 1), (9, 1),
                            (7, 1), (5, 1), (3, 1), (2, 1), (0, 1)),
            ],
        }],
    },
}


def preset_descriptor(name):
    return QcDescriptor.from_json_dict(PRESETS[name])


GF4_NAMES = {0: "0", 1: "1", 2: "w", 3: "w+1"}


def format_element(v, fld):
    if fld.q == 4:
        return GF4_NAMES[v]
    return str(v)


def format_poly(p):
    if p.is_zero:
        return "0"
    fld = p.field
    parts = []
    for i in range(p.degree, -1, -1):
        c = p.coeff(i)
        if not c:
            continue
        cs = format_element(c, fld)
        if i == 0:
            parts.append(cs)
        else:
            xs = "x" if i == 1 else f"x^{i}"
            parts.append(xs if c == 1 else f"({cs}){xs}")
    return " + ".join(parts)


def _weight_kind(kind):
    return "symplectic" if kind == "symplectic" else "hamming"


def _simplify_details(details):
    out = {"g_self_reciprocal": details.get("g_self_reciprocal"),
           "g_all_equal": details.get("g_all_equal")}
    pairs = {}
    for (r, s), d in details.get("pairs", {}).items():
        pairs[f"{r},{s}"] = d
    out["pairs"] = pairs
    return out


def cmd_verify(args):
    if args.preset:
        desc = preset_descriptor(args.preset)
    elif args.descriptor:
        with open(args.descriptor) as fh:
            desc = QcDescriptor.from_json(fh.read())
    else:
        raise DescriptorError("provide a descriptor file or --preset")

    t0 = time.monotonic()
    oracle = {"auto": None, "on": True, "off": False}[args.oracle]
    verdict = check_hgen(desc, oracle=oracle)
    code = assemble_qc(desc)
    k = code.dim
    wkind = _weight_kind(desc.kind)

    report = {
        "tool": "qclcd",
        "version": __version__,
        "seed": args.seed,
        "descriptor": desc.to_json_dict(),
        "parameters": {"length": desc.length, "k": k, "weight_kind": wkind},
        "lcd": {
            "kind": desc.kind,
            "theorem": verdict.theorem,
            "oracle": verdict.oracle,
            "hull_dim": verdict.hull_dim,
            "details": _simplify_details(verdict.details),
        },
    }

    d = None
    if args.distance != "none":
        mode = args.distance
        if mode == "auto":
            mode = ("exhaustive" if desc.ring.field.q ** k <= args.budget
                    else "bz")
        if mode == "exhaustive":
            d, dist = min_distance_exhaustive(code, wkind, budget=args.budget)
            if args.prefix_weight is not None:
                report["distribution_prefix"] = {
                    str(w): c for w, c in dist.prefix(args.prefix_weight).items()}
        elif mode == "bz":
            if wkind != "hamming":
                raise BudgetExceededError(
                    "Brouwer-Zimmermann covers Hamming distance only")
            d = min_distance_bz(code)
        report["parameters"]["d"] = d
    if args.prefix_weight is not None and "distribution_prefix" not in report:
        dist = distribution_prefix(code, wkind, wstar=args.prefix_weight,
                                   budget=args.budget)
        report["distribution_prefix"] = {str(w): c for w, c in dist.counts.items()}

    if args.dual_distance:
        dual = dual_code(code, desc.kind)
        dk = dual.dim
        dual_rep = {"k": dk}
        if dual.field.q ** dk <= args.budget:
            dd, _ = min_distance_exhaustive(dual, wkind, budget=args.budget)
        else:
            if wkind != "hamming":
                raise BudgetExceededError(
                    "dual symplectic distance beyond the enumeration budget")
            dd = min_distance_bz(dual)
        dual_rep["d"] = dd
        report["dual"] = dual_rep

    report["timing"] = {"seconds": round(time.monotonic() - t0, 3)}
    _emit(report, args.output)
    if verdict.oracle is not None and verdict.oracle != verdict.theorem:
        print("error: polynomial condition and hull oracle disagree "
              "(degenerate descriptor outside the construction hypotheses)",
              file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_factor(args):
    try:
        fld = make_field(args.q, tuple(args.modulus) if args.modulus else None)
    except FieldError as exc:
        raise DescriptorError(str(exc)) from exc
    ring = RingCtx(fld, args.n)
    hermitian_ok = fld.sqrt_order is not None
    lines = []
    for irr, mult in factor_xn_minus_1(ring):
        tags = []
        if is_self_reciprocal(irr, "euclidean"):
            tags.append("self-reciprocal")
        if hermitian_ok and is_self_reciprocal(irr, "hermitian"):
            tags.append("conj-self-reciprocal")
        suffix = f"  [{', '.join(tags)}]" if tags else ""
        mstr = f" ^ {mult}" if mult > 1 else ""
        lines.append(f"({format_poly(irr)}){mstr}{suffix}")
    print(f"x^{args.n} - 1 over GF({args.q}):")
    for line in lines:
        print("  " + line)
    return EXIT_OK


def cmd_search(args):
    if args.config:
        with open(args.config) as fh:
            cfg = SearchConfig.from_json_dict(json.load(fh))
    else:
        if args.q is None or args.n is None or args.ell is None or args.kind is None:
            raise SearchConfigError("--q, --n, --ell and --kind are required")
        cfg = SearchConfig(q=args.q, n=args.n, ell=args.ell, kind=args.kind,
                           h=args.h, trials=args.trials, seed=args.seed,
                           exhaustive_degree=args.exhaustive_degree,
                           fix_f0=args.fix_f0,
                           distance_budget=args.budget,
                           time_budget=args.time_budget)
    result = run_search(cfg)
    out = sys.stdout if args.records in (None, "-") else open(args.records, "w")
    try:
        for rec in result.records:
            out.write(json.dumps(rec.to_json_dict(), sort_keys=True) + "\n")
    finally:
        if out is not sys.stdout:
            out.close()
    print(f"# trials: {result.trials_run}"
          + ("" if result.completed else " (time budget hit, partial)"),
          file=sys.stderr)
    print(f"# {'k':>4} {'d':>4}  parameters", file=sys.stderr)
    for rec in result.records:
        dstr = str(rec.d) if rec.d is not None else "?"
        star = "" if rec.d_exact else "*"
        print(f"  {rec.k:>4} {dstr:>4}{star} [{rec.length},{rec.k},{dstr}]_{cfg.q}",
              file=sys.stderr)
    if not result.completed:
        return EXIT_BUDGET
    return EXIT_OK


def _emit(report, output):
    text = json.dumps(report, indent=2, sort_keys=True)
    if output and output != "-":
        with open(output, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def build_parser():
    ap = argparse.ArgumentParser(prog="qclcd",
                                 description="quasi-cyclic LCD code toolkit")
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="check a descriptor and report parameters")
    v.add_argument("descriptor", nargs="?", help="descriptor JSON file")
    v.add_argument("--preset", choices=sorted(PRESETS))
    v.add_argument("--oracle", choices=["auto", "on", "off"], default="auto",
                   help=f"hull oracle (auto: on when length <= {ORACLE_AUTO_LIMIT})")
    v.add_argument("--distance", choices=["auto", "exhaustive", "bz", "none"],
                   default="auto")
    v.add_argument("--prefix-weight", type=int, default=None,
                   help="report exact codeword counts up to this weight")
    v.add_argument("--dual-distance", action="store_true",
                   help="also compute the dual code's dimension and distance")
    v.add_argument("--budget", type=int, default=DEFAULT_ENUM_BUDGET)
    v.add_argument("--seed", type=int, default=DEFAULT_SEED)
    v.add_argument("--threads", type=int, default=1)
    v.add_argument("--output", "-o", default=None)
    v.set_defaults(func=cmd_verify)

    f = sub.add_parser("factor", help="factor x^n - 1 over GF(q)")
    f.add_argument("--q", type=int, required=True)
    f.add_argument("--n", type=int, required=True)
    f.add_argument("--modulus", type=int, nargs="+", default=None,
                   help="field modulus coefficients, low to high")
    f.set_defaults(func=cmd_factor)

    s = sub.add_parser("search", help="search for good QC LCD codes")
    s.add_argument("--config", help="search config JSON file")
    s.add_argument("--q", type=int)
    s.add_argument("--n", type=int)
    s.add_argument("--ell", type=int)
    s.add_argument("--kind", choices=["euclidean", "hermitian", "symplectic"])
    s.add_argument("--h", type=int, default=1)
    s.add_argument("--trials", type=int, default=1000)
    s.add_argument("--seed", type=int, default=DEFAULT_SEED)
    s.add_argument("--exhaustive-degree", type=int, default=None)
    s.add_argument("--fix-f0", action="store_true")
    s.add_argument("--budget", type=int, default=DEFAULT_ENUM_BUDGET)
    s.add_argument("--time-budget", type=float, default=None)
    s.add_argument("--threads", type=int, default=1)
    s.add_argument("--records", default=None, help="JSON-lines output file ('-' = stdout)")
    s.set_defaults(func=cmd_search)
    return ap


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    if getattr(args, "threads", 1) > 1:
        print("note: worker pools are not implemented yet; running single-threaded",
              file=sys.stderr)
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (DescriptorError, SearchConfigError, FieldError, MetricsError,
            ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DESCRIPTOR


if __name__ == "__main__":
    sys.exit(main())
