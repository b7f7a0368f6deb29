"""Circuit intermediate representation: register layout, gate list, stage marks."""

from dataclasses import dataclass

from .gates import Gate


@dataclass(frozen=True)
class Register:
    """A named contiguous span of lines. Bit 0 of the span is the LSB.

    ``const`` is None for a data input, or the constant bit (0 or 1) every
    line of the register must carry at circuit entry (an ancilla register).
    """

    name: str
    start: int
    size: int
    const: int | None = None

    def __post_init__(self):
        if not self.name or any(ch.isspace() for ch in self.name):
            raise ValueError(f"bad register name {self.name!r}")
        if self.start < 0 or self.size < 1:
            raise ValueError(f"bad register span {self.name}: start={self.start} size={self.size}")
        if self.const not in (None, 0, 1):
            raise ValueError(f"ancilla constant must be 0 or 1, got {self.const!r}")

    @property
    def end(self) -> int:
        return self.start + self.size

    @property
    def is_ancilla(self) -> bool:
        return self.const is not None

    def line(self, bit: int) -> int:
        """Line index of the register's bit (0 = LSB)."""
        if not 0 <= bit < self.size:
            raise ValueError(f"register {self.name} has no bit {bit}")
        return self.start + bit

    @property
    def lines(self) -> range:
        return range(self.start, self.end)


class RegisterLayout:
    """Named registers that cover [0, width) exactly, with no overlap."""

    def __init__(self, registers):
        regs = tuple(registers)
        names = [r.name for r in regs]
        if len(set(names)) != len(names):
            raise ValueError("duplicate register name in layout")
        edge = 0
        for reg in sorted(regs, key=lambda r: r.start):
            if reg.start < edge:
                raise ValueError(f"register {reg.name} overlaps a previous register")
            if reg.start > edge:
                raise ValueError(f"layout gap before register {reg.name} at line {edge}")
            edge = reg.end
        self.registers = regs
        self.width = edge
        self._by_name = {r.name: r for r in regs}

    def __getitem__(self, name: str) -> Register:
        try:
            return self._by_name[name]
        except KeyError:
            raise KeyError(f"no register named {name!r}") from None

    def __contains__(self, name: str) -> bool:
        return name in self._by_name

    def __eq__(self, other):
        return isinstance(other, RegisterLayout) and self.registers == other.registers

    def __repr__(self):
        spans = ", ".join(f"{r.name}[{r.start}:{r.end}]" for r in self.registers)
        return f"RegisterLayout({spans})"

    @property
    def ancilla_inputs(self) -> int:
        """Number of lines that must enter holding a declared constant."""
        return sum(r.size for r in self.registers if r.is_ancilla)

    @property
    def data_registers(self) -> tuple[Register, ...]:
        return tuple(r for r in self.registers if not r.is_ancilla)


class Circuit:
    """An ordered gate list over a fixed layout, with optional stage marks.

    A stage is a declared block of gates that execute as one parallel layer;
    mark_stage() closes the stage ending at the current last gate. Gates in a
    stage must act on pairwise disjoint lines, which is what makes the staged
    delay accounting (cost of a stage = its most expensive gate) sound.
    Circuits are built by appending and treated as immutable afterwards.
    """

    def __init__(self, layout: RegisterLayout):
        self.layout = layout
        self.gates: list[Gate] = []
        self.stage_marks: list[int] = []

    @property
    def width(self) -> int:
        return self.layout.width

    def __len__(self):
        return len(self.gates)

    def __iter__(self):
        return iter(self.gates)

    def __eq__(self, other):
        return (
            isinstance(other, Circuit)
            and self.layout == other.layout
            and self.gates == other.gates
            and self.stage_marks == other.stage_marks
        )

    def __repr__(self):
        return f"Circuit(width={self.width}, gates={len(self.gates)}, stages={self.stage_count})"

    def append(self, gate: Gate) -> None:
        if any(line >= self.width for line in gate.lines):
            raise ValueError(
                f"gate {gate.kind} {gate.lines} out of range for width {self.width}"
            )
        self.gates.append(gate)

    def extend(self, gates) -> None:
        for gate in gates:
            self.append(gate)

    def mark_stage(self) -> None:
        """Close the stage ending after the most recently appended gate."""
        first = self.stage_marks[-1] if self.stage_marks else 0
        if len(self.gates) == first:
            raise ValueError("empty stage")
        used: set[int] = set()
        for gate in self.gates[first:]:
            if used.intersection(gate.lines):
                raise ValueError("stage gates must act on pairwise disjoint lines")
            used.update(gate.lines)
        self.stage_marks.append(len(self.gates))

    def stages(self) -> list[list[Gate]]:
        """Gate list partitioned into stages.

        Gates after the last mark (or all gates, if nothing was marked) carry
        no parallelism declaration and are returned as one stage each.
        """
        out = []
        start = 0
        for mark in self.stage_marks:
            out.append(self.gates[start:mark])
            start = mark
        for gate in self.gates[start:]:
            out.append([gate])
        return out

    @property
    def stage_count(self) -> int:
        return len(self.stages())


def new_circuit(layout: RegisterLayout) -> Circuit:
    """Empty circuit over a validated layout."""
    return Circuit(layout)
