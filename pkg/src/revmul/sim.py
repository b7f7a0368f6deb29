"""Bit-exact simulation, behavioral oracles and the verification harness.

Simulation is restricted to classical basis states: every supported gate
permutes them, so bit-level execution is exact and exhaustive sweeps over all
inputs are cheap at small widths.
"""

import itertools
import random
from dataclasses import dataclass, field

from .circuit import Circuit, RegisterLayout
from .gates import CNOT, FREDKIN, SWAP, TOFFOLI, Gate
from .synth import build_controlled_ror, build_multiplier, build_ror, multiplier_layout

MAX_COUNTEREXAMPLES = 16
EXHAUSTIVE_ROTATE_LIMIT = 20  # 2^20 states; beyond that use randomized mode


def _apply(bits: list[int], gate: Gate) -> None:
    kind = gate.kind
    ln = gate.lines
    if kind == TOFFOLI:
        bits[ln[2]] ^= bits[ln[0]] & bits[ln[1]]
    elif kind == FREDKIN:
        if bits[ln[0]]:
            bits[ln[1]], bits[ln[2]] = bits[ln[2]], bits[ln[1]]
    elif kind == SWAP:
        bits[ln[0]], bits[ln[1]] = bits[ln[1]], bits[ln[0]]
    else:  # CNOT
        bits[ln[1]] ^= bits[ln[0]]


def apply_gate(state: list[int], gate: Gate) -> list[int]:
    """Result of one gate on a basis state (the input list is not modified)."""
    out = list(state)
    _apply(out, gate)
    return out


def run(circuit: Circuit, state: list[int], trace: bool = False):
    """Apply the circuit's gates in order to a basis state.

    Returns the final state, or (final state, snapshots) with one snapshot of
    the state at each stage boundary when trace is set.
    """
    if len(state) != circuit.width:
        raise ValueError(f"state has {len(state)} bits, circuit width is {circuit.width}")
    bits = list(state)
    if not trace:
        for gate in circuit.gates:
            _apply(bits, gate)
        return bits
    snapshots = []
    for stage in circuit.stages():
        for gate in stage:
            _apply(bits, gate)
        snapshots.append(list(bits))
    return bits, snapshots


def pack_state(layout: RegisterLayout, values: dict[str, int]) -> list[int]:
    """Entry state from per-register integers.

    Every data register must be assigned. Ancilla registers default to their
    declared constant but may be overridden, e.g. to drive a block in
    isolation with a non-trivial window.
    """
    unknown = set(values) - {r.name for r in layout.registers}
    if unknown:
        raise ValueError(f"no register named {sorted(unknown)[0]!r}")
    bits = [0] * layout.width
    for reg in layout.registers:
        if reg.name in values:
            value = values[reg.name]
            if not 0 <= value < (1 << reg.size):
                raise ValueError(
                    f"value {value} does not fit register {reg.name} ({reg.size} bits)"
                )
        elif reg.is_ancilla:
            value = -reg.const & ((1 << reg.size) - 1)  # constant replicated per line
        else:
            raise ValueError(f"missing value for data register {reg.name}")
        for bit in range(reg.size):
            bits[reg.start + bit] = (value >> bit) & 1
    return bits


def register_value(layout: RegisterLayout, state: list[int], name: str) -> int:
    """Integer held by a named register in a basis state (bit 0 = LSB)."""
    reg = layout[name]
    return sum(state[reg.start + bit] << bit for bit in range(reg.size))


def oracle_rotate_right(bits: list[int]) -> list[int]:
    """Rotate a bit list right by one place: entry p moves to p-1, entry 0
    wraps to the top."""
    return list(bits[1:]) + list(bits[:1])


def _window_add(p: int, b: int, n: int) -> int:
    # Add b into the (n+1)-bit slice of p starting at bit n-1. The schedule
    # keeps the slice's top bit 0 on entry, so the sum cannot overflow it.
    low = p & ((1 << (n - 1)) - 1)
    window = (p >> (n - 1)) + b
    assert window < (1 << (n + 1)), "window overflow: carry slot was not clear"
    return (window << (n - 1)) | low


def oracle_multiply(n: int, a: int, b: int) -> int:
    """Register-level add-and-rotate product of two n-bit integers.

    This is the behavioral model the gate-level multiplier is checked
    against; it must agree with native integer multiplication everywhere.
    """
    if n < 1:
        raise ValueError(f"operand width must be >= 1, got {n}")
    if not 0 <= a < (1 << n):
        raise ValueError(f"operand a={a} out of range for {n} bits")
    if not 0 <= b < (1 << n):
        raise ValueError(f"operand b={b} out of range for {n} bits")
    p = 0
    for i in range(n - 1):
        if (a >> i) & 1:
            p = _window_add(p, b, n)
        p = (p >> 1) | ((p & 1) << (2 * n - 1))
    if (a >> (n - 1)) & 1:
        p = _window_add(p, b, n)
    return p


@dataclass
class VerifyReport:
    """Outcome of a verification sweep.

    garbage_outputs is 0 once the sweep passes: every non-result line came
    back holding its entry value on every tested input, so no output had to be
    discarded. It stays None on failure.
    """

    ok: bool
    checked: int
    mode: str  # "exhaustive" or "random"
    seed: int | None = None
    counterexamples: list = field(default_factory=list)
    garbage_outputs: int | None = None


def _finish(report: VerifyReport) -> VerifyReport:
    report.ok = not report.counterexamples
    report.garbage_outputs = 0 if report.ok else None
    return report


def verify_multiplier(
    n: int,
    mode: str = "exhaustive",
    count: int = 1000,
    seed: int = 0,
    circuit: Circuit | None = None,
) -> VerifyReport:
    """Check the gate-level multiplier against products and restoration.

    For each operand pair: load A, B with the operands and P, Zcin with 0,
    run the circuit and require P = A*B with A, B and Zcin unchanged. The
    behavioral oracle is cross-checked on the same pairs. Exhaustive mode
    sweeps all 2^(2n) pairs and is limited to n <= 6; random mode draws
    `count` seeded pairs. Pass `circuit` to point the harness at a
    replacement netlist (for example a deliberately damaged one).
    """
    if mode == "exhaustive":
        if n > 6:
            raise ValueError("exhaustive verification is limited to n <= 6")
        pairs = itertools.product(range(1 << n), repeat=2)
        report = VerifyReport(ok=False, checked=0, mode=mode)
    elif mode == "random":
        if count < 1:
            raise ValueError(f"random mode needs a positive count, got {count}")
        rng = random.Random(seed)
        pairs = ((rng.randrange(1 << n), rng.randrange(1 << n)) for _ in range(count))
        report = VerifyReport(ok=False, checked=0, mode=mode, seed=seed)
    else:
        raise ValueError(f"unknown verification mode {mode!r}")

    if circuit is None:
        circuit = build_multiplier(n)
    layout = circuit.layout
    for a, b in pairs:
        report.checked += 1
        out = run(circuit, pack_state(layout, {"A": a, "B": b}))
        got = {name: register_value(layout, out, name) for name in ("P", "A", "B", "Zcin")}
        expected = {"P": a * b, "A": a, "B": b, "Zcin": 0}
        if got != expected or oracle_multiply(n, a, b) != a * b:
            if len(report.counterexamples) < MAX_COUNTEREXAMPLES:
                report.counterexamples.append(
                    {"a": a, "b": b, "expected": expected, "got": got}
                )
    return _finish(report)


def verify_rotate(
    width: int,
    mode: str = "exhaustive",
    count: int = 1000,
    seed: int = 0,
    controlled: bool = False,
) -> VerifyReport:
    """Check a rotate circuit against the rotate-right-by-one oracle.

    The plain network must equal the oracle on every tested state; the
    controlled variant must equal it when the control is 1 and the identity
    when it is 0, with the control line itself preserved.
    """
    circuit = build_controlled_ror(width) if controlled else build_ror(width)
    if mode == "exhaustive":
        if width > EXHAUSTIVE_ROTATE_LIMIT:
            raise ValueError(
                f"exhaustive rotate verification is limited to width <= {EXHAUSTIVE_ROTATE_LIMIT}"
            )
        values = range(1 << width)
        report = VerifyReport(ok=False, checked=0, mode=mode)
    elif mode == "random":
        if count < 1:
            raise ValueError(f"random mode needs a positive count, got {count}")
        rng = random.Random(seed)
        values = (rng.getrandbits(width) for _ in range(count))
        report = VerifyReport(ok=False, checked=0, mode=mode, seed=seed)
    else:
        raise ValueError(f"unknown verification mode {mode!r}")

    controls = (0, 1) if controlled else (None,)
    for value in values:
        window = [(value >> i) & 1 for i in range(width)]
        for control in controls:
            report.checked += 1
            state = window + ([control] if controlled else [])
            out = run(circuit, state)
            want = oracle_rotate_right(window) if (control is None or control) else list(window)
            if controlled:
                want = want + [control]
            if out != want:
                if len(report.counterexamples) < MAX_COUNTEREXAMPLES:
                    report.counterexamples.append(
                        {"input": value, "control": control, "expected": want, "got": out}
                    )
    return _finish(report)
