"""Pieces shared by the Quil and OpenQASM front-ends."""

from __future__ import annotations

from math import pi

from .errors import ParseError

# Quil gate token <-> canonical GateKind name (Quil side is uppercase; SQRTX,
# U1/U2/U3 and IF..THEN are documented extensions of the real language)
QUIL_GATES = {
    "I": "I",
    "X": "X",
    "Y": "Y",
    "Z": "Z",
    "H": "H",
    "S": "S",
    "T": "T",
    "SQRTX": "SqrtX",
    "RX": "Rx",
    "RY": "Ry",
    "RZ": "Rz",
    "U1": "U1",
    "U2": "U2",
    "U3": "U3",
    "CNOT": "CNOT",
    "CZ": "CZ",
    "SWAP": "SWAP",
}
QUIL_NAMES = {v: k for k, v in QUIL_GATES.items()}

# OpenQASM 2.0 gate token <-> canonical name; the subset has no spelling for
# I or SqrtX, so those circuits are Quil-only
QASM_GATES = {
    "h": "H",
    "x": "X",
    "y": "Y",
    "z": "Z",
    "s": "S",
    "t": "T",
    "rx": "Rx",
    "ry": "Ry",
    "rz": "Rz",
    "u1": "U1",
    "u2": "U2",
    "u3": "U3",
    "cx": "CNOT",
    "cz": "CZ",
    "swap": "SWAP",
}
QASM_NAMES = {v: k for k, v in QASM_GATES.items()}


def format_angle(value: float) -> str:
    """Shortest round-trip decimal form; parsers read it back exactly."""
    return repr(float(value))


def parse_angle(text: str, line: int, column: int) -> float:
    """Evaluate a numeric angle term: literals and simple pi expressions.

    Grammar: [+|-] primary (('*'|'/') primary)* with primary = number | pi.
    """
    s = text.strip()
    if not s:
        raise ParseError(line, column, "empty angle")
    sign = 1.0
    if s[0] in "+-":
        if s[0] == "-":
            sign = -1.0
        s = s[1:].strip()
    parts: list[str] = []
    ops: list[str] = []
    start = 0
    for i, ch in enumerate(s):
        if ch in "*/":
            parts.append(s[start:i])
            ops.append(ch)
            start = i + 1
    parts.append(s[start:])

    def primary(tok: str) -> float:
        tok = tok.strip()
        if tok.lower() == "pi":
            return pi
        try:
            return float(tok)
        except ValueError:
            raise ParseError(line, column, f"malformed angle {text.strip()!r}") from None

    value = primary(parts[0])
    for op, tok in zip(ops, parts[1:]):
        rhs = primary(tok)
        if op == "*":
            value *= rhs
        else:
            if rhs == 0.0:
                raise ParseError(line, column, "division by zero in angle")
            value /= rhs
    return sign * value
