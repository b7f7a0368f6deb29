"""Circuit generators: controlled adder, rotate-right networks, full multiplier.

The multiplier follows the add-and-rotate scheme: the product register rotates
right instead of the multiplicand shifting left, so the multiplicand survives
intact and nothing is thrown away. Its two building blocks are the ADD/NOP
block (add B into a window of P when one multiplier qubit is set, do nothing
otherwise) and a constant-depth rotate-right-by-one network.
"""

from .circuit import Circuit, Register, RegisterLayout
from .gates import fredkin, swap, toffoli


def multiplier_layout(n: int) -> RegisterLayout:
    """Line plan for the n x n multiplier: 4n+1 lines.

    A and B are data inputs; the 2n product lines P and the carry line Zcin
    enter as ancilla 0, so ancilla_inputs = 2n+1.
    """
    if n < 1:
        raise ValueError(f"operand width must be >= 1, got {n}")
    return RegisterLayout(
        [
            Register("A", 0, n),
            Register("B", n, n),
            Register("P", 2 * n, 2 * n, const=0),
            Register("Zcin", 4 * n, 1, const=0),
        ]
    )


def addnop_layout(n: int) -> RegisterLayout:
    """Standalone ADD/NOP layout: control line A, operand B, an (n+1)-line
    product window P entering as 0, and the carry line Zcin. 2n+3 lines,
    ancilla_inputs = n+2."""
    if n < 1:
        raise ValueError(f"operand width must be >= 1, got {n}")
    return RegisterLayout(
        [
            Register("A", 0, 1),
            Register("B", 1, n),
            Register("P", n + 1, n + 1, const=0),
            Register("Zcin", 2 * n + 2, 1, const=0),
        ]
    )


def ror_layout(width: int) -> RegisterLayout:
    if width < 2:
        raise ValueError(f"rotate width must be >= 2, got {width}")
    return RegisterLayout([Register("P", 0, width)])


def controlled_ror_layout(width: int) -> RegisterLayout:
    if width < 2:
        raise ValueError(f"rotate width must be >= 2, got {width}")
    return RegisterLayout([Register("P", 0, width), Register("C", width, 1)])


def _emit_addnop(circ: Circuit, a: int, b: list[int], w: list[int], z: int) -> None:
    """Controlled add of the n-line register b into the (n+1)-line window w.

    When line a is 1 the window gains the value of b; the top window line must
    enter as 0 and receives the final carry, so the sum never overflows. When
    a is 0 every line is left untouched. b and z exit with their entry values;
    z must enter as 0.

    The carry travels on z. Going up, the Toffoli at position i first mixes
    the incoming carry into w[i]; w[i] then reads (p XOR carry), which is 1
    exactly when b[i] is the majority of (p, b[i], carry), i.e. when b[i] is
    the carry out. The Fredkin it controls therefore moves the correct carry
    out onto z (swapping b[i] and z, parking the old carry in b[i]) precisely
    when needed. The top position computes its carry into b[n-1] between a
    Fredkin pair and stores it on w[n]. Going back down, the same Fredkins
    undo the swaps in reverse order, restoring b and handing each position its
    carry-in back on z just in time for the closing half-add Toffoli.

    Budget: 2n+1 Toffoli + 2n Fredkin in 3n+2 stages, each stage a layer of
    line-disjoint gates.
    """
    n = len(b)
    if n == 1:
        stages = [
            [toffoli(a, b[0], w[0])],
            [fredkin(w[0], b[0], z)],
            [toffoli(a, b[0], w[1])],
            [fredkin(w[0], b[0], z)],
            [toffoli(a, z, w[0])],
        ]
    else:
        stages = []
        for i in range(n - 1):  # upward carry sweep
            stages.append([toffoli(a, z, w[i])])
            layer = [fredkin(w[i], b[i], z)]
            if i == n - 2:
                layer.append(toffoli(a, b[n - 1], w[n - 1]))
            stages.append(layer)
        stages += [
            [fredkin(w[n - 1], b[n - 1], z)],
            [toffoli(a, b[n - 1], w[n])],  # final carry lands on the top window line
            [fredkin(w[n - 1], b[n - 1], z)],
            [toffoli(a, z, w[n - 1])],
            [fredkin(w[n - 2], b[n - 2], z)],
        ]
        for i in range(n - 2, 0, -1):  # downward unwind
            stages.append([toffoli(a, b[i], w[i]), fredkin(w[i - 1], b[i - 1], z)])
        stages.append([toffoli(a, b[0], w[0])])
    for stage in stages:
        circ.extend(stage)
        circ.mark_stage()


def build_addnop(n: int, layout: RegisterLayout | None = None, m: int = 0) -> Circuit:
    """ADD/NOP block: add B into the top n+1 lines of P when A[m] is 1.

    With the default standalone layout A holds a single control line (m = 0).
    A wider layout (the multiplier's) may be passed, in which case the window
    is the top n+1 lines of its P register.
    """
    if n < 1:
        raise ValueError(f"operand width must be >= 1, got {n}")
    if layout is None:
        layout = addnop_layout(n)
    for name in ("A", "B", "P", "Zcin"):
        if name not in layout:
            raise ValueError(f"layout is missing register {name}")
    if layout["B"].size != n:
        raise ValueError(f"register B must have {n} lines, has {layout['B'].size}")
    if layout["P"].size < n + 1:
        raise ValueError(f"register P must have at least {n + 1} lines")
    if layout["Zcin"].size != 1:
        raise ValueError("register Zcin must have exactly 1 line")
    a = layout["A"].line(m)
    b = list(layout["B"].lines)
    window = list(layout["P"].lines)[-(n + 1):]
    circ = Circuit(layout)
    _emit_addnop(circ, a, b, window, layout["Zcin"].start)
    return circ


def _ror_stages(lines: list[int]) -> list[list[tuple[int, int]]]:
    """Two layers of disjoint transpositions realizing rotate-right-by-one.

    Works for even and odd spans; a span of 2 degenerates to a single swap.
    """
    k = len(lines)
    half = k // 2
    first = [(lines[i], lines[k - 1 - i]) for i in range(half)]
    second_count = half - 1 if k % 2 == 0 else half
    second = [(lines[i], lines[k - 2 - i]) for i in range(second_count)]
    return [first, second] if second else [first]


def _emit_ror(circ: Circuit, lines: list[int]) -> None:
    for stage in _ror_stages(lines):
        circ.extend(swap(x, y) for x, y in stage)
        circ.mark_stage()


def build_ror(width: int) -> Circuit:
    """Rotate-right-by-one over `width` lines: the bit on line p moves to line
    p-1 and line 0 wraps to the top. width-1 Swap gates in at most two
    parallel stages, so the depth stays 6 (3 at width 2) at any size."""
    circ = Circuit(ror_layout(width))
    _emit_ror(circ, list(range(width)))
    return circ


def build_controlled_ror(width: int, control_line: int | None = None) -> Circuit:
    """Rotate-right gated on a control line: the rejected design alternative.

    width-1 Fredkin gates share the control, so they serialize and cost 5
    units each; kept for the cost/delay trade-off numbers, never used by the
    multiplier.
    """
    layout = controlled_ror_layout(width)
    if control_line is None:
        control_line = width
    if 0 <= control_line < width:
        raise ValueError(f"control line {control_line} lies inside the rotated window")
    if control_line != width:
        raise ValueError(f"control line must be line {width}, got {control_line}")
    circ = Circuit(layout)
    for i in range(width - 1):
        circ.append(fredkin(control_line, i, i + 1))
        circ.mark_stage()
    return circ


def build_multiplier(n: int) -> Circuit:
    """Gate-level n x n multiplier over 4n+1 lines.

    One ADD/NOP per multiplier qubit, with a rotate of the full product
    register between consecutive blocks; the window alignment makes the final
    rotate unnecessary. P exits holding A*B, A and B exit unchanged and Zcin
    exits 0, so no output is garbage.
    """
    layout = multiplier_layout(n)
    b = list(layout["B"].lines)
    p = list(layout["P"].lines)
    window = p[-(n + 1):]
    z = layout["Zcin"].start
    circ = Circuit(layout)
    for m in range(n - 1):
        _emit_addnop(circ, layout["A"].line(m), b, window, z)
        _emit_ror(circ, p)
    _emit_addnop(circ, layout["A"].line(n - 1), b, window, z)
    return circ
