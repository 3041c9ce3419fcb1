"""Command-line front end: one subcommand per capability, JSON on stdout.

Exit codes: 0 success, 1 validation error, 2 budget exceeded.  Exact
rationals are emitted as {"num", "den", "float"} objects.  All randomized
paths honor --seed, so identical invocations produce identical bytes.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import contexts as contexts_mod
from . import forbidden as forbidden_mod
from . import mds as mds_mod
from . import mykkeltveit as myk_mod
from . import paths, schemes
from .core import (
    BudgetError,
    DEFAULT_NODE_BUDGET,
    debruijn_sequence,
    necklace_count,
    necklaces,
)
from .kmerset import KmerSet


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse default exits with 2; that's our budget code
        raise ValueError(message)


def _rat(x: Fraction) -> dict:
    return {"num": x.numerator, "den": x.denominator, "float": float(x)}


def _density_json(res: schemes.DensityResult) -> dict:
    out = {
        "selected": res.selected,
        "windows": res.windows,
        "density": _rat(res.density),
        "mode": res.mode,
    }
    if res.stderr is not None:
        out["stderr"] = res.stderr
    return out


def _emit(obj: dict) -> None:
    print(json.dumps(obj))


def _save_set(kset: KmerSet, path: str, binary: bool) -> None:
    if binary:
        kset.save_binary(path)
    else:
        kset.save_text(path)


def _load_set(path: str, budget: int) -> KmerSet:
    with open(path, "rb") as fh:
        magic = fh.read(4)
    if magic == b"UHS1":
        return KmerSet.load_binary(path, budget=budget)
    return KmerSet.load_text(path, budget=budget)


def _resolve_set(spec: str, sigma: int, w: int, budget: int) -> KmerSet:
    if spec == "forbidden":
        return forbidden_mod.build_forbidden_set(sigma, w, budget=budget)
    if spec == "mykkeltveit":
        return myk_mod.build_mykkeltveit_set(sigma, w, budget=budget)
    kset = _load_set(spec, budget)
    if (kset.sigma, kset.w) != (sigma, w):
        raise ValueError(
            f"set file is sigma={kset.sigma} w={kset.w}, expected sigma={sigma} w={w}"
        )
    return kset


def _load_scheme(args) -> schemes.SelectionScheme:
    if getattr(args, "table", None):
        return schemes.load_scheme_table(args.table, budget=args.budget)
    if getattr(args, "order", None):
        return schemes.load_minimizer_order(args.order, args.sigma, args.w)
    if getattr(args, "compatible", None):
        U = _load_set(args.compatible, args.budget)
        return schemes.build_compatible_minimizer(U, args.w, budget=args.budget)
    if getattr(args, "minimizer", False):
        return schemes.lexicographic_minimizer(args.sigma, args.k, args.w)
    raise ValueError("no scheme given: use --minimizer, --order, --table or --compatible")


# -- subcommand handlers -----------------------------------------------------


def _cmd_necklaces(args) -> None:
    out = {
        "sigma": args.sigma,
        "w": args.w,
        "necklace_count": necklace_count(args.sigma, args.w),
    }
    if args.list:
        reps = []
        for word, period in necklaces(args.sigma, args.w):
            reps.append({"rep": "".join(str(s) for s in word), "size": period})
        out["classes"] = reps
    _emit(out)


def _cmd_debruijn_seq(args) -> None:
    seq = debruijn_sequence(args.sigma, args.n, cyclic=args.cyclic, budget=args.budget)
    _emit(
        {
            "sigma": args.sigma,
            "order": args.n,
            "cyclic": args.cyclic,
            "length": len(seq),
            "sequence": seq,
        }
    )


def _cmd_mykkeltveit(args) -> None:
    kset = myk_mod.build_mykkeltveit_set(args.sigma, args.w, budget=args.budget)
    if args.out:
        _save_set(kset, args.out, args.binary)
    report = paths.longest_remaining_path(kset, budget=args.budget)
    _emit(
        {
            "sigma": args.sigma,
            "w": args.w,
            "cardinality": kset.cardinality,
            "necklace_count": necklace_count(args.sigma, args.w),
            "decycling": report.kind == paths.ACYCLIC,
            "longest_path": report.longest_vertices,
        }
    )


def _cmd_forbidden(args) -> None:
    kset = forbidden_mod.build_forbidden_set(args.sigma, args.w, budget=args.budget)
    if args.out:
        _save_set(kset, args.out, args.binary)
    report = paths.longest_remaining_path(kset, budget=args.budget)
    _emit(
        {
            "sigma": args.sigma,
            "w": args.w,
            "d": forbidden_mod.forbidden_d(args.sigma, args.w),
            "cardinality": kset.cardinality,
            "relative_size": _rat(kset.relative_size()),
            "longest_path": report.longest_vertices,
        }
    )


def _cmd_contexts(args) -> None:
    scheme = _load_scheme(args)
    if args.variant == "local":
        cs = contexts_mod.build_context_set_local(scheme, budget=args.budget)
    else:
        cs = contexts_mod.build_context_set_forward(scheme, budget=args.budget)
    if args.out:
        _save_set(cs.kset, args.out, args.binary)
    _emit(
        {
            "sigma": scheme.sigma,
            "w": scheme.w,
            "k": scheme.k,
            "variant": args.variant,
            "context_symbols": cs.kset.w,
            "cardinality": cs.kset.cardinality,
            "relative_size": _rat(cs.relative_size()),
        }
    )


def _cmd_density(args) -> None:
    scheme = _load_scheme(args)
    out = {"sigma": scheme.sigma, "w": scheme.w, "k": scheme.k, "kind": scheme.kind}
    if args.seq is not None:
        res = schemes.particular_density(scheme, args.seq, cyclic=args.cyclic)
    elif args.estimate:
        res = schemes.estimate_density(scheme, sample_symbols=args.sample, seed=args.seed)
    else:
        res = schemes.expected_density(scheme, sample_symbols=args.sample, seed=args.seed)
    out.update(_density_json(res))
    if scheme.guarantee is not None:
        out["uhs_guarantee"] = scheme.guarantee
    _emit(out)


def _cmd_check_uhs(args) -> None:
    kset = _resolve_set(args.set, args.sigma, args.w, args.budget)
    report = paths.longest_remaining_path(kset, budget=args.budget)
    out = {
        "sigma": args.sigma,
        "w": args.w,
        "cardinality": kset.cardinality,
        "relative_size": _rat(kset.relative_size()),
        "kind": report.kind,
        "longest_path": report.longest_vertices,
    }
    if args.l is not None:
        out["l"] = args.l
        out["is_uhs"] = report.kind == paths.ACYCLIC and report.longest_vertices < args.l
    _emit(out)


def _cmd_longest_path(args) -> None:
    kset = _resolve_set(args.set, args.sigma, args.w, args.budget)
    report = paths.longest_remaining_path(kset, budget=args.budget)
    out = {
        "sigma": args.sigma,
        "w": args.w,
        "kind": report.kind,
        "longest_vertices": report.longest_vertices,
        "witness": [str(x) for x in report.witness],
        "cycle_witness": [str(x) for x in report.cycle_witness],
    }
    _emit(out)


def _cmd_long_path(args) -> None:
    lp = myk_mod.build_long_path(args.sigma, args.w, budget=args.budget)
    lines = "\n".join(str(x) for x in lp.vertices)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(lines + "\n")
    else:
        print(lines)
    if args.csv:
        with open(args.csv, "w") as fh:
            fh.write("step,re,im\n")
            for i, pt in enumerate(lp.embeddings):
                fh.write(f"{i},{pt.re!r},{pt.im!r}\n")
    _emit(
        {
            "sigma": args.sigma,
            "w": args.w,
            "vertices": len(lp.vertices),
            "quadruples": len(lp.quadruples),
            "validated": True,  # build_long_path raises on any failed check
            "all_im_positive": True,
            "min_im": min(pt.im for pt in lp.embeddings),
        }
    )


def _cmd_mds_count(args) -> None:
    census = mds_mod.enumerate_mds(args.sigma, args.w, emit_sets=bool(args.emit))
    if args.emit:
        os.makedirs(args.emit, exist_ok=True)
        width = len(str(max(census.mds_count - 1, 1)))
        for i, codes in enumerate(census.sets):
            kset = KmerSet.from_codes(args.sigma, args.w, codes)
            kset.save_text(os.path.join(args.emit, f"mds_{i:0{width}d}.txt"))
    _emit(
        {
            "sigma": args.sigma,
            "w": args.w,
            "mds_count": census.mds_count,
            "nodes_explored": census.nodes_explored,
            "prunes": census.prunes,
        }
    )


def _cmd_fsm(args) -> None:
    mat = forbidden_mod.fsm_matrix(args.sigma, args.d)
    out = {
        "sigma": args.sigma,
        "d": args.d,
        "matrix": [[_rat(v) for v in row] for row in mat.rows],
        "bracket_holds": forbidden_mod.bracket_holds(args.sigma, args.d),
    }
    if out["bracket_holds"]:
        root = forbidden_mod.dominant_root(args.sigma, args.d)
        out["dominant_root"] = float(root)
        out["eigenvector_residual"] = forbidden_mod.eigenpair_residual(
            args.sigma, args.d, root
        )
    if args.w is not None:
        out["w"] = args.w
        out["survival"] = _rat(
            forbidden_mod.survival_probability(args.sigma, args.d, args.w)
        )
    _emit(out)


# -- wiring ------------------------------------------------------------------


def _add_common(p, w=True):
    p.add_argument("--sigma", type=int, default=2)
    if w:
        p.add_argument("--w", type=int, required=True)
    p.add_argument("--budget", type=int, default=DEFAULT_NODE_BUDGET)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--threads", type=int, default=1, help="accepted for compatibility")


def _add_scheme_opts(p):
    p.add_argument("--minimizer", action="store_true", help="lexicographic k-mer order")
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--order", help="minimizer order file (one k-mer per line)")
    p.add_argument("--table", help="scheme table file")
    p.add_argument("--compatible", help="set file; members rank before non-members")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="uhspath")
    sub = parser.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("necklaces")
    _add_common(p)
    p.add_argument("--list", action="store_true")
    p.set_defaults(fn=_cmd_necklaces)

    p = sub.add_parser("debruijn-seq")
    _add_common(p, w=False)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--cyclic", action="store_true")
    p.set_defaults(fn=_cmd_debruijn_seq)

    for name, fn in (("mykkeltveit", _cmd_mykkeltveit), ("forbidden", _cmd_forbidden)):
        p = sub.add_parser(name)
        _add_common(p)
        p.add_argument("--out")
        p.add_argument("--binary", action="store_true")
        p.set_defaults(fn=fn)

    p = sub.add_parser("contexts")
    _add_common(p)
    _add_scheme_opts(p)
    p.add_argument("--variant", choices=["local", "forward"], default="local")
    p.add_argument("--out")
    p.add_argument("--binary", action="store_true")
    p.set_defaults(fn=_cmd_contexts)

    p = sub.add_parser("density")
    _add_common(p)
    _add_scheme_opts(p)
    p.add_argument("--seq", help="particular density on this string")
    p.add_argument("--cyclic", action="store_true")
    p.add_argument("--estimate", action="store_true", help="skip the exact path")
    p.add_argument("--sample", type=int, default=10**7)
    p.set_defaults(fn=_cmd_density)

    for name, fn in (("check-uhs", _cmd_check_uhs), ("longest-path", _cmd_longest_path)):
        p = sub.add_parser(name)
        _add_common(p)
        p.add_argument("--set", required=True, help="file path, 'forbidden' or 'mykkeltveit'")
        if name == "check-uhs":
            p.add_argument("--l", type=int)
        p.set_defaults(fn=fn)

    p = sub.add_parser("long-path")
    _add_common(p)
    p.add_argument("--out", help="vertex file (default: stdout)")
    p.add_argument("--csv", help="write per-step embeddings re,im")
    p.set_defaults(fn=_cmd_long_path)

    p = sub.add_parser("mds-count")
    _add_common(p)
    p.add_argument("--emit", help="directory to write every set as a text file")
    p.set_defaults(fn=_cmd_mds_count)

    p = sub.add_parser("fsm")
    _add_common(p, w=False)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--w", type=int)
    p.set_defaults(fn=_cmd_fsm)

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        args.fn(args)
    except BudgetError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except (ValueError, OSError, AssertionError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    return 0


def main() -> None:
    sys.exit(run())
