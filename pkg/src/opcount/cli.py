"""Command-line front door.

Exit codes: 0 = all checks passed; 2 = a mathematical violation was found
(the report is still written); 1 = usage or runtime error.
"""

from __future__ import annotations

import argparse
import csv
import io
import os
import sys
from typing import List, Optional

from . import dp, oracle, verify
from .graph import Graph, constrain, graph_from_graph6
from .mop import Mop
from .generate import enumerate_mops, enumerate_mops_canonical


class _Parser(argparse.ArgumentParser):
    """argparse exits with 2 on bad flags; 2 is reserved for violations."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _progress(msg: str) -> None:
    print(msg, file=sys.stderr, flush=True)


def _parse_cond(text: str):
    """Parse a membership condition like 'v+:3,v-:5'."""
    forced_in, forced_out = [], []
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        tag, _, idx = item.partition(":")
        if tag == "v+":
            forced_in.append(int(idx))
        elif tag == "v-":
            forced_out.append(int(idx))
        else:
            raise ValueError(f"bad condition item {item!r} (want v+:N or v-:N)")
    return constrain(forced_in=forced_in, forced_out=forced_out)


def _load_graph(args) -> tuple:
    """Returns (graph, mop-or-None) from --graph6/--mop flags."""
    if args.graph6:
        return graph_from_graph6(args.graph6), None
    m = Mop.from_text(args.mop)
    return m.graph, m


def _cmd_count(args) -> int:
    g, m = _load_graph(args)
    cond = _parse_cond(args.cond) if args.cond else None
    if args.method == "dp":
        if cond is not None:
            raise ValueError("--cond requires --method oracle")
        if m is not None:
            value = dp.count_is_fast(m) if args.what == "is" else dp.count_kds_fast(m, args.k)
        elif g.is_tree():
            value = dp.count_on_tree(g, args.what, args.k)
        else:
            raise ValueError("--method dp needs a --mop or a tree graph")
    else:
        if args.what == "is":
            value = oracle.count_is(g, cond)
        else:
            value = oracle.count_kds(g, args.k, cond)
    print(value)
    return 0


def _cmd_mop_enumerate(args) -> int:
    it = enumerate_mops_canonical(args.n) if args.canonical else enumerate_mops(args.n)
    lines = [m.to_text() for m in it]
    if args.out:
        with open(args.out, "w") as fh:
            fh.write("\n".join(lines) + "\n")
        _progress(f"wrote {len(lines)} Mops to {args.out}")
    else:
        for line in lines:
            print(line)
    return 0


def _cmd_mop_dual(args) -> int:
    m = Mop.from_text(args.mop)
    dual = m.weak_dual()
    for i, f in enumerate(dual.faces):
        print(f"face {i}: {f[0]},{f[1]},{f[2]}")
    for a, b in dual.links:
        print(f"link {a}-{b}")
    return 0


def _emit_report(rep: verify.VerifyReport, args) -> int:
    fmt = getattr(args, "format", "json")
    if fmt == "json":
        text = rep.to_json()
    elif fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf)
        w.writerow(["kind", "detail"])
        for v in rep.violations:
            w.writerow(["violation", repr(v)])
        for f in rep.findings:
            w.writerow(["finding", repr(f)])
        text = buf.getvalue().rstrip("\n")
    else:  # plain
        lines = [f"task={rep.task_id} checked={rep.checked_count} "
                 f"violations={len(rep.violations)} findings={len(rep.findings)} "
                 f"pass={rep.passed}"]
        lines += [f"violation: {v}" for v in rep.violations]
        lines += [f"finding: {f}" for f in rep.findings]
        text = "\n".join(lines)
    out = getattr(args, "out", None)
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0 if rep.passed else 2


def _workers(args) -> int:
    w = getattr(args, "workers", 1)
    return os.cpu_count() or 1 if w == 0 else w


def _cmd_verify(args) -> int:
    target = args.target
    if target == "theorem1":
        rep = verify.check_theorem1(args.max_n, workers=_workers(args),
                                    log=_progress)
    elif target == "theorem2":
        rep = verify.check_theorem2(args.max_n, log=_progress)
    elif target == "lemma1":
        rep = verify.check_lemma1(args.samples, args.seed, log=_progress)
    elif target == "lemma2":
        rep = verify.check_lemma2_surgery(args.samples, args.seed, log=_progress)
    elif target == "identities":
        rep = verify.check_decomposition_identities(args.samples, args.seed,
                                                    log=_progress)
    elif target == "gadgets":
        rep = verify.audit_gadgets(samples_per_gadget=args.samples,
                                   seed=args.seed, log=_progress)
    else:  # unreachable: argparse restricts choices
        raise ValueError(f"unknown verify target {target!r}")
    return _emit_report(rep, args)


def _cmd_scan(args) -> int:
    rep = verify.scan_conjecture(args.k, args.n, args.samples, args.seed,
                                 log=_progress)
    return _emit_report(rep, args)


def _add_report_flags(p) -> None:
    p.add_argument("--format", choices=["json", "csv", "plain"], default="json")
    p.add_argument("--out", help="write the report to a file instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="opcount",
                 description="exact counting and verification for maximal "
                             "outerplanar graphs")
    sub = ap.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    p = sub.add_parser("count", help="count IS or k-DS of one graph")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--graph6", help="graph in graph6 format")
    src.add_argument("--mop", help="Mop text, e.g. '6;0-2,0-4,2-4'")
    p.add_argument("--what", choices=["is", "kds"], required=True)
    p.add_argument("--k", type=int, default=4)
    p.add_argument("--method", choices=["oracle", "dp"], default="oracle")
    p.add_argument("--cond", help="membership condition, e.g. 'v+:3,v-:5'")
    p.set_defaults(func=_cmd_count)

    pm = sub.add_parser("mop", help="Mop enumeration and structure")
    msub = pm.add_subparsers(dest="mop_cmd", required=True, parser_class=_Parser)
    p = msub.add_parser("enumerate", help="all triangulations of the n-gon")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--canonical", action="store_true",
                   help="one representative per isomorphism class")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_mop_enumerate)
    p = msub.add_parser("dual", help="faces and weak dual links")
    p.add_argument("--mop", required=True)
    p.set_defaults(func=_cmd_mop_dual)

    p = sub.add_parser("verify", help="machine-check a theorem or lemma")
    p.add_argument("target", choices=["theorem1", "theorem2", "lemma1",
                                      "lemma2", "identities", "gadgets"])
    p.add_argument("--max-n", type=int, default=10)
    p.add_argument("--samples", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1,
                   help="0 = auto-detect; sharding is deterministic")
    _add_report_flags(p)
    p.set_defaults(func=_cmd_verify)

    ps = sub.add_parser("scan", help="randomized conjecture scans")
    ssub = ps.add_subparsers(dest="scan_cmd", required=True, parser_class=_Parser)
    p = ssub.add_parser("conjecture",
                        help="i(G) >= dk(G) for average degree <= k")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    _add_report_flags(p)
    p.set_defaults(func=_cmd_scan)
    return ap


def main(argv: Optional[List[str]] = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    if getattr(args, "cmd", None) == "verify" and args.samples is None:
        args.samples = 50 if args.target == "gadgets" else 1000
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"opcount: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
