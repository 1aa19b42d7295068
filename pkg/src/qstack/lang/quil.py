"""Quil subset: gate lines, MEASURE/RESET, and an IF..THEN conditional extension.

Supported forms, one instruction per line, '#' comments:

    NAME q...               e.g.  H 0
    NAME(a, ...) q...       e.g.  RZ(1.5707963267948966) 2
    MEASURE q [c]
    RESET q
    IF [c] THEN <gate line>     (applies the gate when classical bit c == 1;
                                 nonstandard, stands in for Quil's jump forms)

Register sizes are inferred: 1 + the largest index referenced.
"""

from __future__ import annotations

import re

from ..circuit import Circuit, GateKind, Instruction, conditional, gate, measure, reset
from .common import QUIL_GATES, QUIL_NAMES, format_angle, parse_angle
from .errors import ParseError, UnsupportedConstructError

_GATE_RE = re.compile(r"^(?P<name>[A-Za-z][A-Za-z0-9\-]*)(?P<params>\([^)]*\))?")
_INT_RE = re.compile(r"^\d+$")
_BRACKET_RE = re.compile(r"^\[(\d+)\]$")


def _parse_gate_app(text: str, lineno: int, col0: int) -> tuple[GateKind, tuple[int, ...]]:
    m = _GATE_RE.match(text)
    if m is None:
        raise ParseError(lineno, col0, f"expected a gate name, got {text.split()[:1]!r}")
    name_tok = m.group("name")
    canonical = QUIL_GATES.get(name_tok.upper())
    if canonical is None:
        raise ParseError(lineno, col0, f"unknown gate {name_tok!r}")
    params: tuple[float, ...] = ()
    if m.group("params"):
        inner = m.group("params")[1:-1]
        col = col0 + m.start("params") + 1
        params = tuple(
            parse_angle(p, lineno, col) for p in inner.split(",")
        ) if inner.strip() else ()
    rest = text[m.end():]
    if rest and not rest[0].isspace():
        raise ParseError(lineno, col0 + m.end(), f"unexpected {rest.split()[0]!r}")
    qubits = []
    for tok in rest.split():
        if not _INT_RE.match(tok):
            raise ParseError(lineno, col0 + text.find(tok), f"bad qubit index {tok!r}")
        qubits.append(int(tok))
    try:
        kind = GateKind(canonical, params)
        instr = gate(kind, *qubits)
    except ValueError as exc:
        raise ParseError(lineno, col0, str(exc)) from None
    return instr.gate, instr.qubits


def parse_quil(text: str) -> Circuit:
    """Parse Quil source into a Circuit; raises ParseError on rejection."""
    instrs: list[Instruction] = []
    max_q = -1
    max_c = -1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        stripped = line.strip()
        if not stripped:
            continue
        col0 = line.index(stripped[0]) + 1
        toks = stripped.split()
        head = toks[0].upper()
        if head == "MEASURE":
            if len(toks) != 3:
                raise ParseError(lineno, col0, "MEASURE takes a qubit and [clbit]")
            if not _INT_RE.match(toks[1]):
                raise ParseError(lineno, col0, f"bad qubit index {toks[1]!r}")
            mb = _BRACKET_RE.match(toks[2])
            if mb is None:
                raise ParseError(lineno, col0, f"bad classical address {toks[2]!r}")
            q, c = int(toks[1]), int(mb.group(1))
            instrs.append(measure(q, c))
            max_q, max_c = max(max_q, q), max(max_c, c)
        elif head == "RESET":
            if len(toks) != 2 or not _INT_RE.match(toks[1]):
                raise ParseError(lineno, col0, "RESET takes one qubit index")
            q = int(toks[1])
            instrs.append(reset(q))
            max_q = max(max_q, q)
        elif head == "IF":
            if len(toks) < 4 or toks[2].upper() != "THEN":
                raise ParseError(lineno, col0, "expected IF [c] THEN GATE q...")
            mb = _BRACKET_RE.match(toks[1])
            if mb is None:
                raise ParseError(lineno, col0, f"bad classical address {toks[1]!r}")
            c = int(mb.group(1))
            tail = stripped.split(None, 3)[3]
            kind, qubits = _parse_gate_app(tail, lineno, col0 + stripped.find(tail))
            instrs.append(conditional(c, 1, kind, *qubits))
            max_q = max(max_q, *qubits)
            max_c = max(max_c, c)
        else:
            kind, qubits = _parse_gate_app(stripped, lineno, col0)
            instrs.append(gate(kind, *qubits))
            if qubits:
                max_q = max(max_q, *qubits)
    return Circuit(max_q + 1, max_c + 1, instrs)


def emit_quil(circuit: Circuit) -> str:
    """Emit one instruction per line; parse_quil(emit_quil(c)) == c."""
    lines = []
    for idx, instr in enumerate(circuit.instructions):
        if instr.op == "measure":
            lines.append(f"MEASURE {instr.qubits[0]} [{instr.clbit}]")
        elif instr.op == "reset":
            lines.append(f"RESET {instr.qubits[0]}")
        else:
            app = _gate_line(instr.gate, instr.qubits)
            if instr.condition is None:
                lines.append(app)
            else:
                c, expected = instr.condition
                if expected != 1:
                    raise UnsupportedConstructError(
                        idx, "Quil subset has no conditional on bit == 0"
                    )
                lines.append(f"IF [{c}] THEN {app}")
    return "".join(line + "\n" for line in lines)


def _gate_line(kind: GateKind, qubits) -> str:
    name = QUIL_NAMES[kind.name]
    params = ""
    if kind.params:
        params = "(" + ",".join(format_angle(p) for p in kind.params) + ")"
    return name + params + " " + " ".join(str(q) for q in qubits)
