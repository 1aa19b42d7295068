"""Deterministic text rendering of circuits.

One wire row per qubit, gates boxed per execution layer (the same layering the
depth metric uses). Two-qubit gates get a vertical connector through the rows
in between; measurements render as [M→cK] and conditioned gates carry a ?cK
tag (?cK=0 when the gate fires on zero).
"""

from __future__ import annotations

from .circuit import GATE, MEASURE, Circuit, Instruction
from .lang.common import QUIL_NAMES


def _cell_text(instr: Instruction) -> str:
    if instr.op == MEASURE:
        return f"[M→c{instr.clbit}]"
    if instr.op == GATE:
        name = QUIL_NAMES[instr.gate.name]
        if instr.gate.params:
            name += "(" + ",".join(f"{p:.3g}" for p in instr.gate.params) + ")"
        if instr.condition is not None:
            c, expected = instr.condition
            name += f"?c{c}" if expected == 1 else f"?c{c}=0"
        return f"[{name}]"
    return "[RST]"


def _two_qubit_cells(instr: Instruction) -> dict[int, str]:
    name = instr.gate.name
    a, b = instr.qubits
    if instr.condition is None:
        if name == "CNOT":
            return {a: "●", b: "[X]"}
        if name == "CZ":
            return {a: "●", b: "●"}
        if name == "SWAP":
            return {a: "×", b: "×"}
    return {a: "●", b: _cell_text(instr)}


def _columns(circuit: Circuit) -> list[list[int]]:
    """Column packing for drawing: like the depth layering, but a two-qubit
    gate also occupies every row its connector crosses, so nothing is ever
    drawn on top of a vertical line."""
    row_col = [0] * circuit.num_qubits
    cl_col = [0] * circuit.num_clbits
    out: list[list[int]] = []
    for idx, instr in enumerate(circuit.instructions):
        if len(instr.qubits) == 2:
            lo, hi = sorted(instr.qubits)
            rows = range(lo, hi + 1)
        else:
            rows = instr.qubits
        col = 0
        for r in rows:
            col = max(col, row_col[r])
        for c in instr.clbits:
            col = max(col, cl_col[c])
        for r in rows:
            row_col[r] = col + 1
        for c in instr.clbits:
            cl_col[c] = col + 1
        while len(out) <= col:
            out.append([])
        out[col].append(idx)
    return out


def draw_ascii(circuit: Circuit) -> str:
    """Render the circuit; identical circuits yield byte-identical text."""
    n = circuit.num_qubits
    labels = [f"q{q}:" for q in range(n)]
    label_w = max((len(s) for s in labels), default=0)
    if not circuit.instructions:
        return "".join(label + "\n" for label in labels)

    cols = _columns(circuit)
    ncols = len(cols)
    cells = [["" for _ in range(ncols)] for _ in range(n)]
    # verticals[b][col] marks a connector crossing the gap below qubit row b
    verticals = [[False] * ncols for _ in range(max(0, n - 1))]

    for col, members in enumerate(cols):
        for idx in members:
            instr = circuit.instructions[idx]
            if len(instr.qubits) == 2:
                for q, text in _two_qubit_cells(instr).items():
                    cells[q][col] = text
                lo, hi = sorted(instr.qubits)
                for q in range(lo + 1, hi):
                    cells[q][col] = "│"
                for b in range(lo, hi):
                    verticals[b][col] = True
            else:
                cells[instr.qubits[0]][col] = _cell_text(instr)

    widths = [
        max(max((len(cells[q][col]) for q in range(n)), default=1), 1)
        for col in range(ncols)
    ]
    lines = []
    for q in range(n):
        row = labels[q].ljust(label_w) + " ─"
        for col in range(ncols):
            row += (cells[q][col] or "").center(widths[col], "─") + "─"
        lines.append(row)
        if q < n - 1:
            gap = " " * (label_w + 2)
            for col in range(ncols):
                gap += ("│" if verticals[q][col] else "").center(widths[col]) + " "
            if gap.strip():
                lines.append(gap.rstrip())
    return "".join(line + "\n" for line in lines)
