"""Command-line front end.

Exit status: 0 on success, 1 on a negative verdict, 2 on any error.
"""

from __future__ import annotations

import argparse
import random
import sys

from . import formats
from .errors import CircnetError, NotElectrical
from .grassmann import is_tnn_point, omega_matrix, pluecker_coordinates
from .kalmanson import characterize, is_circular_response_matrix, is_kalmanson, split_decomposition
from .matrix_tree import DEFAULT_MAX_VERTICES, resistance_via_matrix_tree
from .medial import is_minimal, strand_permutation
from .network import effective_resistance_matrix, response_matrix
from .reconstruction import reconstruct_topology, tau_from_resistance

NETWORK_COMMANDS = {
    "response": "boundary response matrix",
    "resistance": "effective resistance matrix",
    "oracle": "effective resistances by spanning-forest enumeration",
    "medial": "strand permutation, strand crossings and minimality defects",
}
MATRIX_COMMANDS = {
    "omega": "the n x 2n embedding matrix of a resistance matrix",
    "pluecker": "maximal minors of the embedding, colex order",
    "check-tnn": "total non-negativity of the embedded point",
    "check-kalmanson": "Kalmanson inequalities",
    "split": "split-decomposition matrix",
    "dual-response": "negated split matrix and its circular-response check",
    "characterize": "full planar-electrical report",
    "tau": "strand permutation from the column rank pattern",
    "reconstruct": "canonical minimal network realizing the resistances' topology",
}


def _b(x) -> str:
    return "true" if x else "false"


def _idx(I) -> str:
    return ",".join(str(i) for i in I)


def report_text(rep) -> str:
    lines = [f"n: {rep.n}", f"metric: {_b(rep.is_metric)}"]
    if not rep.is_metric:
        lines.append(f"metric_witness: {' '.join(map(str, rep.is_metric.witness))}")
    lines.append(f"kalmanson: {_b(rep.is_kalmanson)}")
    if not rep.is_kalmanson:
        lines.append(f"kalmanson_witness: {' '.join(map(str, rep.is_kalmanson.witness))}")
    lines.append(f"tnn: {_b(rep.tnn_verdict)}")
    if rep.tnn_verdict.witness:
        pos, neg = rep.tnn_verdict.witness
        lines.append(f"tnn_witness: +{_idx(pos)} -{_idx(neg)}")
    lines.append(f"delta_even: {formats.format_rational(rep.delta_even)}")
    lines.append(f"dual_response_valid: {_b(rep.dual_response_valid)}")
    lines.append(f"routes_agree: {_b(rep.routes_agree)}")
    lines.append(f"electrical: {_b(rep.electrical)}")
    return "\n".join(lines) + "\n"


def _run(args) -> tuple[str, int]:
    cmd = args.command
    if cmd == "random-network":
        from .generate import random_planar_network
        rng = random.Random(args.seed)
        net = random_planar_network(args.boundary, args.inner, rng)
        return formats.serialize_network(net), 0

    with open(args.input, encoding="utf-8") as fh:
        text = fh.read()

    if cmd in NETWORK_COMMANDS:
        net = formats.parse_network(text)
        if cmd == "response":
            return formats.serialize_matrix(response_matrix(net)), 0
        if cmd == "resistance":
            return formats.serialize_matrix(effective_resistance_matrix(net)), 0
        if cmd == "oracle":
            cap = args.max_n if args.max_n is not None else DEFAULT_MAX_VERTICES
            return formats.serialize_matrix(resistance_via_matrix_tree(net, cap)), 0
        rep = is_minimal(net)
        lines = [f"tau: {strand_permutation(net)}", f"minimal: {_b(rep.minimal)}"]
        for s in rep.trace.strands:
            ends = f"{s.endpoints[0]} {s.endpoints[1]}" if s.endpoints else "closed"
            lines.append(f"strand {ends}: {' '.join(map(str, s.crossings))}".rstrip())
        for d in rep.defects:
            lines.append(f"defect {d}")
        return "\n".join(lines) + "\n", 0

    D = formats.parse_matrix(text, "metric")
    if cmd == "omega":
        return formats.serialize_matrix(omega_matrix(D).as_lists()), 0
    if cmd == "pluecker":
        pt = pluecker_coordinates(omega_matrix(D), threads=args.threads, max_n=args.max_n)
        return "".join(f"{_idx(I)} {formats.format_rational(v)}\n" for I, v in pt.items()), 0
    if cmd == "check-tnn":
        v = is_tnn_point(omega_matrix(D), threads=args.threads)
        out = f"tnn: {_b(v)}\nrank: {v.rank}\n"
        if v.witness:
            out += f"witness: +{_idx(v.witness[0])} -{_idx(v.witness[1])}\n"
        return out, 0 if v else 1
    if cmd == "check-kalmanson":
        v = is_kalmanson(D)
        out = f"kalmanson: {_b(v)}\n"
        if not v:
            out += f"witness: {' '.join(map(str, v.witness))}\n"
        return out, 0 if v else 1
    if cmd == "split":
        return formats.serialize_matrix(split_decomposition(D)), 0
    if cmd == "dual-response":
        dual = [[-x for x in row] for row in split_decomposition(D)]
        v = is_circular_response_matrix(dual)
        return formats.serialize_matrix(dual) + f"# circular-response: {_b(v)}\n", 0 if v else 1
    if cmd == "characterize":
        rep = characterize(D, threads=args.threads)
        return report_text(rep), 0 if rep.electrical else 1
    if cmd == "tau":
        return f"{tau_from_resistance(D)}\n", 0
    if cmd == "reconstruct":
        try:
            rec = reconstruct_topology(D, threads=args.threads)
        except NotElectrical as exc:
            return report_text(exc.report), 1
        head = f"# tau: {rec.tau}\n# g: {rec.pattern}\n# round-trip: {_b(rec.round_trip)}\n"
        return head + formats.serialize_network(rec.network), 0
    raise AssertionError(cmd)


_DEFAULTS = {"output": None, "max_n": None, "seed": 0, "threads": 1}


def _common_options(p: argparse.ArgumentParser) -> None:
    # SUPPRESS lets the flags appear before or after the subcommand
    s = argparse.SUPPRESS
    p.add_argument("-o", "--output", default=s, help="write output to this file instead of stdout")
    p.add_argument("--max-n", type=int, default=s, help="enumeration cap (oracle vertices, Plücker n)")
    p.add_argument("--seed", type=int, default=s, help="seed for random-network")
    p.add_argument("--threads", type=int, default=s, help="worker threads for minor enumeration")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="circnet", description="Circular planar electrical networks.")
    _common_options(p)
    sub = p.add_subparsers(dest="command", required=True)
    for name in sorted(NETWORK_COMMANDS):
        sp = sub.add_parser(name, help=NETWORK_COMMANDS[name])
        sp.add_argument("input", help="network file")
        _common_options(sp)
    for name in sorted(MATRIX_COMMANDS):
        sp = sub.add_parser(name, help=MATRIX_COMMANDS[name])
        sp.add_argument("input", help="matrix file")
        _common_options(sp)
    rn = sub.add_parser("random-network", help="emit a random circular planar network")
    rn.add_argument("-n", "--boundary", type=int, default=4)
    rn.add_argument("--inner", type=int, default=2)
    _common_options(rn)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for key, value in _DEFAULTS.items():
        if not hasattr(args, key):
            setattr(args, key, value)
    try:
        out, status = _run(args)
    except FileNotFoundError as exc:
        print(f"circnet: file not found: {exc.filename}", file=sys.stderr)
        return 2
    except (CircnetError, OSError, ValueError) as exc:
        print(f"circnet: error: {exc}", file=sys.stderr)
        return 2
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    return status


if __name__ == "__main__":
    sys.exit(main())
