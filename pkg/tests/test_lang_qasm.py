"""OpenQASM front-end: golden text, register flattening, round-trips, errors."""

from math import pi

import pytest

import qstack.circuit as qc
from qstack.algos import random_bit_circuit, teleportation_circuit
from qstack.lang import ParseError, UnsupportedConstructError, emit_qasm, parse_qasm

from conftest import random_circuit

LISTING_6 = (
    "OPENQASM 2.0;\n"
    'include "qelib1.inc";\n'
    "qreg q0[1];\n"
    "creg c0[1];\n"
    "h q0[0];\n"
    "measure q0[0] -> c0[0];\n"
)


class TestGolden:
    def test_random_bit_emits_listing6(self):
        assert emit_qasm(random_bit_circuit()) == LISTING_6

    def test_listing6_parses_back(self):
        assert parse_qasm(LISTING_6) == random_bit_circuit()


class TestParse:
    def test_header_and_include_only(self):
        c = parse_qasm('OPENQASM 2.0;\ninclude "qelib1.inc";\n')
        assert (c.num_qubits, c.num_clbits, len(c)) == (0, 0, 0)

    def test_registers_flatten_in_declaration_order(self):
        src = (
            "OPENQASM 2.0;\n"
            "qreg a[2];\nqreg b[1];\ncreg m[2];\n"
            "x a[1];\nx b[0];\nmeasure b[0] -> m[1];\n"
        )
        c = parse_qasm(src)
        assert c.num_qubits == 3 and c.num_clbits == 2
        assert c.instructions[0].qubits == (1,)
        assert c.instructions[1].qubits == (2,)
        assert c.instructions[2].clbit == 1

    def test_conditional_bare_size1_register(self):
        src = "OPENQASM 2.0;\nqreg q[3];\ncreg c0[1];\nif(c0==1) z q[2];\n"
        instr = parse_qasm(src).instructions[0]
        assert instr.condition == (0, 1)
        assert instr.gate.name == "Z" and instr.qubits == (2,)

    def test_conditional_bit_indexed(self):
        src = "OPENQASM 2.0;\nqreg q[1];\ncreg c[3];\nif(c[2]==0) x q[0];\n"
        instr = parse_qasm(src).instructions[0]
        assert instr.condition == (2, 0)

    def test_whitespace_and_comments(self):
        src = "// leading\nOPENQASM 2.0; qreg q[2];\n\n  cx q[0] , q[1] ; // pair\n"
        c = parse_qasm(src)
        assert c.instructions[0].gate.name == "CNOT"

    def test_pi_angles(self):
        src = "OPENQASM 2.0;\nqreg q[1];\nu2(0,pi) q[0];\nrz(pi/2) q[0];\nrx(-pi) q[0];\n"
        c = parse_qasm(src)
        assert c.instructions[0].gate.params == (0.0, pi)
        assert c.instructions[1].gate.params == (pi / 2,)
        assert c.instructions[2].gate.params == (-pi,)

    def test_reset(self):
        c = parse_qasm("OPENQASM 2.0;\nqreg q[1];\nreset q[0];\n")
        assert c.instructions[0].op == "reset"


class TestParseErrors:
    @pytest.mark.parametrize(
        "src",
        [
            "",                                              # no header
            "qreg q[1];",                                    # header missing
            "OPENQASM 3.0;\n",                               # wrong version
            "OPENQASM 2.0;\nfoo q[0];",                      # unknown statement
            "OPENQASM 2.0;\nh q[0];",                        # undeclared register
            "OPENQASM 2.0;\nqreg q[1];\nh q[2];",            # index out of range
            "OPENQASM 2.0;\nqreg q[2];\nh q;",               # bare multi-bit register
            "OPENQASM 2.0;\nqreg q[2];\ncx q[0];",           # arity mismatch
            "OPENQASM 2.0;\nqreg q[1];\nrz() q[0];",         # empty params
            "OPENQASM 2.0;\nqreg q[1];\nrz(zz) q[0];",       # malformed angle
            "OPENQASM 2.0;\nqreg q[1];\nrz(1 2) q[0];",      # adjacent literals
            "OPENQASM 2.0;\nqreg q[1];\nh q[0]",             # missing semicolon
            "OPENQASM 2.0;\nqreg q[1];\nqreg q[1];",         # redeclared register
            "OPENQASM 2.0;\nqreg q[1];\ncreg c[2];\nif(c==1) x q[0];",  # multi-bit cond
            "OPENQASM 2.0;\nqreg q[1];\ncreg c[1];\nif(c==3) x q[0];",  # non-bit value
            "OPENQASM 2.0;\nqreg q[1];\ncreg c[1];\nif(c==1) measure q[0] -> c[0];",
            "OPENQASM 2.0;\nqreg q[1];\nh q[0];;;@",         # stray character
        ],
    )
    def test_rejected_with_position(self, src):
        with pytest.raises(ParseError) as info:
            parse_qasm(src)
        assert info.value.line >= 1 and info.value.column >= 1


class TestRoundTrip:
    def test_teleportation(self):
        c = teleportation_circuit([qc.X])
        assert parse_qasm(emit_qasm(c)) == c

    def test_bell_body(self):
        c = qc.new_circuit(2, 0).h(0).cnot(0, 1)
        text = emit_qasm(c)
        assert "h q0[0];\ncx q0[0],q0[1];\n" in text
        assert parse_qasm(text) == c

    def test_empty_zero_qubit_circuit(self):
        text = emit_qasm(qc.new_circuit(0, 0))
        assert text == 'OPENQASM 2.0;\ninclude "qelib1.inc";\n'
        assert parse_qasm(text) == qc.new_circuit(0, 0)

    def test_conditional_on_zero(self):
        c = qc.new_circuit(1, 2).conditional(1, 0, qc.X, 0)
        assert parse_qasm(emit_qasm(c)) == c

    def test_random_circuits(self, rng):
        skipped = 0
        for _ in range(30):
            c = random_circuit(rng, 4, 6)
            if any(i.gate.name in ("I", "SqrtX") for i in c.instructions):
                skipped += 1
                continue
            assert parse_qasm(emit_qasm(c)) == c
        assert skipped < 30  # the generator covers expressible circuits too


class TestEmitErrors:
    def test_sqrtx_not_expressible(self):
        c = qc.new_circuit(1, 0).gate(qc.SQRTX, 0)
        with pytest.raises(UnsupportedConstructError, match="instruction 0"):
            emit_qasm(c)

    def test_identity_not_expressible(self):
        c = qc.new_circuit(1, 0).gate(qc.I, 0)
        with pytest.raises(UnsupportedConstructError):
            emit_qasm(c)
