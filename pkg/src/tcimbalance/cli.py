"""Command line front end.

Exit status: 0 for an optimum or a YES decision, 1 for a NO decision,
2 for parse, validation or size errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass, field

from .dp import DEFAULT_STATE_BUDGET, solve_xp
from .errors import ImbalanceError
from .generators import random_instance
from .graph import Decomposition, compress_to_succinct, expand_succinct, validate_twin_cover
from .ilp import build_ilp, solve_fpt
from .io import (
    parse_certificate, parse_cover, parse_graph, parse_succinct, read_text, sniff,
    write_certificate, write_graph, write_layout, write_succinct,
)
from .layout import CleanPlacement, build_layout_from_placement
from .oracle import brute_force_clean
from .succinct import (
    DEFAULT_K1_BUDGET, Certificate, lower_bound, iota, reduce_partition, solve_k1,
    verify_certificate,
)

MODES = ("auto", "oracle", "dp", "ilp", "k1")
ORACLE_MAX_BLOCKS = 10


@dataclass
class SolveResult:
    imbalance: int
    mode: str
    target: int | None = None
    certificate: Certificate | None = None
    layout: tuple | None = None
    stats: dict = field(default_factory=dict)

    @property
    def decision(self):
        if self.target is None:
            return "n/a"
        return "YES" if self.imbalance <= self.target else "NO"

    def exit_code(self):
        return 1 if self.decision == "NO" else 0

    def to_json(self):
        out = {"imbalance": str(self.imbalance), "mode": self.mode, "decision": self.decision}
        if self.target is not None:
            out["target"] = str(self.target)
        if self.certificate is not None:
            out["cover_order"] = list(self.certificate.cover_order)
            out["locations"] = list(self.certificate.locations)
        if self.layout is not None:
            out["layout"] = list(self.layout)
        out["stats"] = self.stats
        return out

    def to_text(self):
        lines = [f"imbalance {self.imbalance}", f"mode {self.mode}"]
        if self.target is not None:
            lines.append(f"decision {self.decision}")
        if self.certificate is not None:
            lines.append(write_certificate(self.certificate).rstrip("\n"))
        if self.layout is not None:
            lines.append("layout " + write_layout(self.layout).rstrip("\n"))
        return "\n".join(lines)


def pick_mode(d: Decomposition) -> str:
    if d.k == 1:
        return "k1"
    if d.k + d.r <= ORACLE_MAX_BLOCKS:
        return "oracle"
    if d.max_clique_size <= d.k + 2:
        return "ilp"
    return "dp"


def _placement_cert(d, placement):
    index = {v: i + 1 for i, v in enumerate(d.cover.members)}
    return Certificate(tuple(index[v] for v in placement.cover_order), placement.locations)


def solve_decomposition(d: Decomposition, mode="auto", target=None,
                        state_budget=DEFAULT_STATE_BUDGET, threads=1) -> SolveResult:
    """Solve an explicit instance; the certificate refers to cover positions 1..k."""
    if mode == "auto":
        mode = pick_mode(d)
    t0 = time.perf_counter()
    stats: dict = {}
    if mode == "k1":
        if d.k != 1:
            raise ImbalanceError(f"mode k1 needs a cover of size 1, got {d.k}")
        sol = solve_k1(compress_to_succinct(d))
        value = sol.imbalance
        placement = CleanPlacement(d.cover.members, sol.certificate(d.r).locations)
    elif mode == "oracle":
        value, placement = brute_force_clean(d, ORACLE_MAX_BLOCKS)
    elif mode == "dp":
        res = solve_xp(d, target=target, state_budget=state_budget, threads=threads)
        value, placement = res.imbalance, res.placement
        stats["states"] = res.states
    elif mode == "ilp":
        res = solve_fpt(d, threads=threads)
        value, placement = res.imbalance, res.placement
        stats["nodes"] = res.nodes
    else:
        raise ImbalanceError(f"unknown mode {mode!r}")
    stats["elapsed_s"] = round(time.perf_counter() - t0, 6)
    return SolveResult(
        value, mode, target, _placement_cert(d, placement),
        build_layout_from_placement(d, placement), stats,
    )


def _emit(args, result: SolveResult):
    if getattr(args, "json", False):
        print(json.dumps(result.to_json()))
    else:
        print(result.to_text())
    return result.exit_code()


def _load_explicit(args):
    g, file_cover = parse_graph(read_text(args.graph))
    cover = parse_cover(args.cover) if args.cover is not None else file_cover
    if cover is None:
        raise ImbalanceError("no twin cover given: pass --cover or add a 'cover' line")
    return validate_twin_cover(g, cover)


def cmd_solve(args):
    d = _load_explicit(args)
    if args.dump_model:
        with open(args.dump_model, "w") as fh:
            fh.write(build_ilp(d, d.cover.members, (1,) * d.k).dump())
    result = solve_decomposition(d, args.mode, args.target, args.state_budget, args.threads)
    return _emit(args, result)


def cmd_solve_succinct(args):
    sg = parse_succinct(read_text(args.input))
    mode = args.mode
    if (mode in ("auto", "k1")) and sg.k == 1:
        t0 = time.perf_counter()
        sol = solve_k1(sg, args.budget)
        result = SolveResult(sol.imbalance, "k1", args.target, sol.certificate(sg.r),
                             stats={"elapsed_s": round(time.perf_counter() - t0, 6)})
        return _emit(args, result)
    g, cover = expand_succinct(sg)
    d = validate_twin_cover(g, cover)
    return _emit(args, solve_decomposition(d, mode, args.target, args.state_budget, args.threads))


def cmd_verify(args):
    sg = parse_succinct(read_text(args.input))
    cert = parse_certificate(read_text(args.cert))
    value = verify_certificate(sg, cert)
    result = SolveResult(value, "verify", args.target)
    if args.json:
        out = result.to_json()
        out.pop("stats")
        print(json.dumps(out))
    else:
        print(f"imbalance {value}")
        if args.target is not None:
            print(f"decision {result.decision}")
    return result.exit_code()


def _write_out(args, text):
    if args.output:
        with open(args.output, "w", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_gen(args):
    if args.kind == "partition":
        numbers = [int(x) for x in args.numbers.replace(",", " ").split()]
        sg, t = reduce_partition(numbers)
        _write_out(args, write_succinct(sg))
        print(f"t={t}", file=sys.stdout if args.output else sys.stderr)
    else:
        if args.n is None or args.n < 0 or args.k < 0 or args.k > args.n:
            raise ImbalanceError("gen random needs 0 <= --k <= --n")
        g, cover = random_instance(args.n, args.k, args.max_clique, args.seed)
        _write_out(args, write_graph(g, cover))
    return 0


def cmd_convert(args):
    text = read_text(args.input)
    if sniff(text) == "succinct":
        g, cover = expand_succinct(parse_succinct(text))
        _write_out(args, write_graph(g, cover))
    else:
        args.graph = args.input
        d = _load_explicit(args)
        _write_out(args, write_succinct(compress_to_succinct(d)))
    return 0


def cmd_bound(args):
    text = read_text(args.input)
    if sniff(text) == "succinct":
        sg = parse_succinct(text)
    else:
        args.graph = args.input
        sg = compress_to_succinct(_load_explicit(args))
    print(f"iota {iota(sg)}")
    if sg.k == 1:
        print(f"parity_bound {lower_bound(sg)}")
    return 0


def _common_solve_flags(p):
    p.add_argument("--mode", choices=MODES, default="auto")
    p.add_argument("--target", type=int)
    p.add_argument("--json", action="store_true")
    p.add_argument("--state-budget", type=int, default=DEFAULT_STATE_BUDGET)
    p.add_argument("--threads", type=int, default=os.cpu_count() or 1)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="tcimbalance", description="Exact imbalance for graphs with a twin cover"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="solve an explicit graph")
    p.add_argument("--graph", required=True)
    p.add_argument("--cover", help="comma-separated cover ids (overrides the file)")
    p.add_argument("--dump-model", metavar="FILE",
                   help="write the integer programme for the given cover order")
    _common_solve_flags(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("solve-succinct", help="solve a succinct instance")
    p.add_argument("--input", required=True)
    p.add_argument("--budget", type=int, default=DEFAULT_K1_BUDGET,
                   help="subset-sum table budget for k = 1")
    _common_solve_flags(p)
    p.set_defaults(func=cmd_solve_succinct)

    p = sub.add_parser("verify", help="evaluate a certificate on a succinct instance")
    p.add_argument("--input", required=True)
    p.add_argument("--cert", required=True)
    p.add_argument("--target", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="generate instances")
    gsub = p.add_subparsers(dest="kind", required=True)
    gp = gsub.add_parser("partition")
    gp.add_argument("--numbers", required=True)
    gp.add_argument("--output")
    gp.set_defaults(func=cmd_gen)
    gr = gsub.add_parser("random")
    gr.add_argument("--n", type=int, required=True)
    gr.add_argument("--k", type=int, default=1)
    gr.add_argument("--max-clique", type=int, default=3)
    gr.add_argument("--seed", type=int, default=0)
    gr.add_argument("--output")
    gr.set_defaults(func=cmd_gen)

    p = sub.add_parser("convert", help="explicit <-> succinct")
    p.add_argument("--input", required=True)
    p.add_argument("--cover")
    p.add_argument("--output")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("bound", help="lower bounds")
    p.add_argument("--input", required=True)
    p.add_argument("--cover")
    p.set_defaults(func=cmd_bound)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code else 0
    try:
        return args.func(args)
    except (ImbalanceError, OSError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
