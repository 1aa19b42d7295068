"""OpenQASM 2.0 subset: header, qreg/creg, the qelib1 gate names we map, measure,
reset, and single-bit if() conditionals.

Registers are flattened into one qubit index space and one classical index
space in declaration order. Emission always writes a single ``q0``/``c0``
register pair; conditionals are written in the bit-indexed form
``if(c0[k]==v) ...;`` (real OpenQASM 2.0 conditions whole registers, which the
subset does not model; a bare register name is accepted on parse when the
register has size 1).
"""

from __future__ import annotations

import re

from ..circuit import Circuit, GateKind, Instruction, conditional, gate, measure, reset
from .common import QASM_GATES, QASM_NAMES, format_angle, parse_angle
from .errors import ParseError, UnsupportedConstructError

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<comment>//[^\n]*)
  | (?P<string>"[^"\n]*")
  | (?P<number>\d+\.\d*(?:[eE][+-]?\d+)?|\.\d+(?:[eE][+-]?\d+)?|\d+(?:[eE][+-]?\d+)?)
  | (?P<name>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<arrow>->)
  | (?P<eq>==)
  | (?P<sym>[;,()\[\]*/+-])
    """,
    re.VERBOSE,
)


class _Token:
    __slots__ = ("kind", "text", "line", "col")

    def __init__(self, kind: str, text: str, line: int, col: int):
        self.kind = kind
        self.text = text
        self.line = line
        self.col = col


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(line, pos - line_start + 1, f"stray character {text[pos]!r}")
        kind = m.lastgroup
        tok_text = m.group()
        if kind not in ("ws", "comment"):
            tokens.append(_Token(kind, tok_text, line, m.start() - line_start + 1))
        newlines = tok_text.count("\n")
        if newlines:
            line += newlines
            line_start = m.start() + tok_text.rfind("\n") + 1
        pos = m.end()
    tokens.append(_Token("eof", "", line, max(1, len(text) - line_start + 1)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.qregs: dict[str, tuple[int, int]] = {}  # name -> (offset, size)
        self.cregs: dict[str, tuple[int, int]] = {}
        self.num_qubits = 0
        self.num_clbits = 0
        self.instrs: list[Instruction] = []

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def next(self) -> _Token:
        tok = self.tokens[self.pos]
        if tok.kind != "eof":
            self.pos += 1
        return tok

    def expect(self, kind: str, text: str | None = None) -> _Token:
        tok = self.next()
        if tok.kind != kind or (text is not None and tok.text != text):
            want = text if text is not None else kind
            raise ParseError(tok.line, tok.col, f"expected {want!r}, got {tok.text!r}")
        return tok

    def error(self, tok: _Token, message: str):
        raise ParseError(tok.line, tok.col, message)

    def parse(self) -> Circuit:
        self.header()
        while self.peek().kind != "eof":
            self.statement()
        return Circuit(self.num_qubits, self.num_clbits, self.instrs)

    def header(self) -> None:
        tok = self.peek()
        if tok.kind != "name" or tok.text != "OPENQASM":
            self.error(tok, 'missing "OPENQASM 2.0;" header')
        self.next()
        ver = self.expect("number")
        if ver.text != "2.0":
            self.error(ver, f"unsupported OpenQASM version {ver.text}")
        self.expect("sym", ";")

    def statement(self) -> None:
        tok = self.next()
        if tok.kind != "name":
            self.error(tok, f"expected a statement, got {tok.text!r}")
        if tok.text == "include":
            self.expect("string")
            self.expect("sym", ";")
        elif tok.text in ("qreg", "creg"):
            self.register(tok.text)
        elif tok.text == "measure":
            q = self.operand(self.qregs, "qubit")
            self.expect("arrow")
            c = self.operand(self.cregs, "classical bit")
            self.expect("sym", ";")
            self.instrs.append(measure(q, c))
        elif tok.text == "reset":
            q = self.operand(self.qregs, "qubit")
            self.expect("sym", ";")
            self.instrs.append(reset(q))
        elif tok.text == "if":
            self.conditional_stmt(tok)
        else:
            self.instrs.append(self.gate_app(tok, condition=None))

    def register(self, which: str) -> None:
        name = self.expect("name")
        self.expect("sym", "[")
        size_tok = self.expect("number")
        try:
            size = int(size_tok.text)
        except ValueError:
            self.error(size_tok, f"bad register size {size_tok.text!r}")
        self.expect("sym", "]")
        self.expect("sym", ";")
        regs = self.qregs if which == "qreg" else self.cregs
        if name.text in self.qregs or name.text in self.cregs:
            self.error(name, f"register {name.text!r} already declared")
        if which == "qreg":
            regs[name.text] = (self.num_qubits, size)
            self.num_qubits += size
        else:
            regs[name.text] = (self.num_clbits, size)
            self.num_clbits += size

    def operand(self, regs: dict, what: str) -> int:
        name = self.expect("name")
        if name.text not in regs:
            self.error(name, f"undeclared {what} register {name.text!r}")
        offset, size = regs[name.text]
        if self.peek().kind == "sym" and self.peek().text == "[":
            self.next()
            idx_tok = self.expect("number")
            try:
                idx = int(idx_tok.text)
            except ValueError:
                self.error(idx_tok, f"bad index {idx_tok.text!r}")
            self.expect("sym", "]")
            if idx >= size:
                self.error(idx_tok, f"index {idx} out of range for {name.text}[{size}]")
            return offset + idx
        if size != 1:
            self.error(name, f"register {name.text!r} has size {size}; index it")
        return offset

    def conditional_stmt(self, if_tok: _Token) -> None:
        self.expect("sym", "(")
        bit = self.operand(self.cregs, "classical bit")
        self.expect("eq")
        val_tok = self.expect("number")
        if val_tok.text not in ("0", "1"):
            self.error(val_tok, "subset conditions compare a single bit to 0 or 1")
        self.expect("sym", ")")
        head = self.next()
        if head.kind != "name" or head.text not in QASM_GATES:
            self.error(head, "if() must guard a gate application")
        self.instrs.append(self.gate_app(head, condition=(bit, int(val_tok.text))))

    def gate_app(self, head: _Token, condition) -> Instruction:
        canonical = QASM_GATES.get(head.text)
        if canonical is None:
            self.error(head, f"unknown gate {head.text!r}")
        params: tuple[float, ...] = ()
        if self.peek().kind == "sym" and self.peek().text == "(":
            params = self.params()
        qubits = [self.operand(self.qregs, "qubit")]
        while self.peek().kind == "sym" and self.peek().text == ",":
            self.next()
            qubits.append(self.operand(self.qregs, "qubit"))
        self.expect("sym", ";")
        try:
            kind = GateKind(canonical, params)
            if condition is None:
                return gate(kind, *qubits)
            return conditional(condition[0], condition[1], kind, *qubits)
        except ValueError as exc:
            raise ParseError(head.line, head.col, str(exc)) from None

    def params(self) -> tuple[float, ...]:
        self.expect("sym", "(")
        out = []
        while True:
            out.append(self.angle_term())
            tok = self.next()
            if tok.kind == "sym" and tok.text == ")":
                break
            if not (tok.kind == "sym" and tok.text == ","):
                self.error(tok, f"expected ',' or ')', got {tok.text!r}")
        return tuple(out)

    def angle_term(self) -> float:
        # collect raw token texts up to , or ) and hand to the shared evaluator
        # (space-joined so adjacent literals cannot fuse into one number)
        pieces = []
        first = self.peek()
        while True:
            tok = self.peek()
            if tok.kind == "eof" or (tok.kind == "sym" and tok.text in ",)"):
                break
            if tok.kind == "sym" and tok.text in "([]":
                self.error(tok, f"unexpected {tok.text!r} in angle")
            pieces.append(self.next().text)
        return parse_angle(" ".join(pieces), first.line, first.col)


def parse_qasm(text: str) -> Circuit:
    """Parse OpenQASM 2.0 source into a Circuit; raises ParseError on rejection."""
    return _Parser(text).parse()


def emit_qasm(circuit: Circuit) -> str:
    """Emit header + registers + body; parse_qasm(emit_qasm(c)) == c."""
    lines = ["OPENQASM 2.0;", 'include "qelib1.inc";']
    if circuit.num_qubits:
        lines.append(f"qreg q0[{circuit.num_qubits}];")
    if circuit.num_clbits:
        lines.append(f"creg c0[{circuit.num_clbits}];")
    for idx, instr in enumerate(circuit.instructions):
        if instr.op == "measure":
            lines.append(f"measure q0[{instr.qubits[0]}] -> c0[{instr.clbit}];")
        elif instr.op == "reset":
            lines.append(f"reset q0[{instr.qubits[0]}];")
        else:
            name = QASM_NAMES.get(instr.gate.name)
            if name is None:
                raise UnsupportedConstructError(
                    idx, f"gate {instr.gate.name} has no OpenQASM spelling in the subset"
                )
            app = name
            if instr.gate.params:
                app += "(" + ",".join(format_angle(p) for p in instr.gate.params) + ")"
            app += " " + ",".join(f"q0[{q}]" for q in instr.qubits) + ";"
            if instr.condition is not None:
                c, expected = instr.condition
                app = f"if(c0[{c}]=={expected}) " + app
            lines.append(app)
    return "".join(line + "\n" for line in lines)
