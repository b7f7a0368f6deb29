"""Command-line front end: build, simulate, verify and compare.

Exit codes: 0 on success or verified, 1 on verification failure, 2 on usage
errors (including malformed inputs and netlist files).
"""

import argparse
import os
import sys

from . import analysis, io as revio, sim, synth
from .metrics import structural_metrics

BUILDERS = {
    "mul": lambda args: synth.build_multiplier(args.n),
    "addnop": lambda args: synth.build_addnop(args.n),
    "ror": lambda args: synth.build_ror(args.width),
    "cror": lambda args: synth.build_controlled_ror(args.width),
}

SIZE_FLAG = {"mul": "n", "addnop": "n", "ror": "width", "cror": "width"}


def _size(args) -> int:
    flag = SIZE_FLAG[args.block]
    value = getattr(args, flag)
    if value is None:
        raise ValueError(f"{args.block} requires --{flag}")
    return value


def _default_seed() -> int:
    return int(os.environ.get("REVMUL_SEED", "0"), 0)


def _register_order(layout):
    # result register first, then the rest in layout order
    names = [r.name for r in layout.registers]
    if "P" in names:
        names.remove("P")
        names.insert(0, "P")
    return names


def _format_state(layout, bits) -> str:
    return " ".join(
        f"{name}={sim.register_value(layout, bits, name)}" for name in _register_order(layout)
    )


def cmd_build(args) -> int:
    size = _size(args)
    circuit = BUILDERS[args.block](args)
    ext = "qasm" if args.format == "qasm" else "rev"
    path = args.out or f"{args.block}{size}.{ext}"
    text = revio.export_qasm(circuit) if args.format == "qasm" else revio.write_netlist(circuit)
    with open(path, "w") as handle:
        handle.write(text)
    m = structural_metrics(circuit)
    print(f"wrote {path} ({m.gate_count} gates)")
    print(f"quantum cost: {m.quantum_cost}")
    print(f"ancilla inputs: {m.ancilla_inputs}")
    print(f"stages: {circuit.stage_count}")
    print(f"staged delay: {m.staged_delay}")
    print(f"asap depth: {m.asap_depth}")
    return 0


def cmd_sim(args) -> int:
    with open(args.file) as handle:
        circuit = revio.parse_netlist(handle.read())
    values = {}
    for item in args.set or []:
        name, eq, raw = item.partition("=")
        if not eq or not name:
            raise ValueError(f"input assignment must look like NAME=VALUE, got {item!r}")
        values[name] = int(raw, 0)
    state = sim.pack_state(circuit.layout, values)
    if args.trace:
        final, snapshots = sim.run(circuit, state, trace=True)
        for number, snap in enumerate(snapshots, 1):
            print(f"stage {number}: {_format_state(circuit.layout, snap)}")
    else:
        final = sim.run(circuit, state)
    print(_format_state(circuit.layout, final))
    return 0


def cmd_verify(args) -> int:
    size = _size(args)
    if args.exhaustive and args.random is not None:
        raise ValueError("choose one of --exhaustive / --random")
    if args.exhaustive:
        mode, count = "exhaustive", 0
    elif args.random is not None:
        mode, count = "random", args.random
    else:
        # default: exhaustive while the sweep stays small, randomized above
        threshold = 5 if args.block == "mul" else 12
        mode, count = ("exhaustive", 0) if size <= threshold else ("random", 1000)
    seed = args.seed if args.seed is not None else _default_seed()
    if args.block == "mul":
        report = sim.verify_multiplier(size, mode=mode, count=count, seed=seed)
        label = f"mul n={size}"
    else:
        report = sim.verify_rotate(
            size, mode=mode, count=count, seed=seed, controlled=(args.block == "cror")
        )
        label = f"{args.block} width={size}"
    if args.json:
        print(revio.metrics_json(report), end="")
    else:
        extra = f" seed={report.seed}" if report.mode == "random" else ""
        verdict = "ok" if report.ok else f"FAILED ({len(report.counterexamples)} counterexamples)"
        print(f"{label}: mode={report.mode}{extra} checked={report.checked} {verdict}")
        for ce in report.counterexamples:
            print(f"  counterexample: {ce}")
    return 0 if report.ok else 1


def cmd_compare(args) -> int:
    if args.which == "ancilla":
        rows = analysis.ancilla_rows(args.max_n)
        flags = analysis.flag_deviations(rows)
    else:
        rows = analysis.garbage_rows(args.max_n)
        flags = []
    if args.format == "md":
        text = analysis.render_markdown(rows, args.which)
    elif args.format == "csv":
        text = analysis.render_csv(rows, args.which)
    else:
        text = revio.metrics_json(rows)
    if args.out:
        with open(args.out, "w") as handle:
            handle.write(text)
        print(f"wrote {args.out} ({len(rows)} rows)")
    else:
        print(text, end="")
    for flag in flags:
        print(f"deviates from the published table: {flag}", file=sys.stderr)
    return 1 if flags else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="revmul",
        description="Build, simulate and verify garbage-free reversible multiplier circuits.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_size_flags(p):
        p.add_argument("--n", type=int, help="operand width (mul, addnop)")
        p.add_argument("--width", type=int, help="register width (ror, cror)")

    p = sub.add_parser("build", help="generate a circuit and write its netlist")
    p.add_argument("block", choices=sorted(BUILDERS))
    add_size_flags(p)
    p.add_argument("--format", choices=("rev", "qasm"), default="rev")
    p.add_argument("--out", help="output path (default <block><size>.<ext>)")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("sim", help="run a netlist file on given register values")
    p.add_argument("file")
    p.add_argument(
        "--set",
        action="append",
        metavar="NAME=VALUE",
        help="register assignment; decimal, 0x or 0b (repeatable)",
    )
    p.add_argument("--trace", action="store_true", help="print the state at each stage")
    p.set_defaults(func=cmd_sim)

    p = sub.add_parser("verify", help="check a generated circuit against its oracle")
    p.add_argument("block", choices=("mul", "ror", "cror"))
    add_size_flags(p)
    p.add_argument("--exhaustive", action="store_true", help="sweep every input")
    p.add_argument("--random", type=int, metavar="COUNT", help="seeded random sweep")
    p.add_argument("--seed", type=int, help="seed for --random (default $REVMUL_SEED or 0)")
    p.add_argument("--json", action="store_true", help="print the report as JSON")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("compare", help="regenerate the ancilla/garbage comparison tables")
    p.add_argument("--max-n", type=int, default=1024, dest="max_n")
    p.add_argument("--which", choices=("ancilla", "garbage"), default="ancilla")
    p.add_argument("--format", choices=("md", "csv", "json"), default="md")
    p.add_argument("--out", help="output path (default stdout)")
    p.set_defaults(func=cmd_compare)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
