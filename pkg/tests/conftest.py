"""Shared test helpers: independent matrix oracles and random circuit generators.

The embedding oracle here builds full 2**n matrices entry by entry from the
definition of a local operator, so it shares no code with either simulator
backend.
"""

from __future__ import annotations

import numpy as np
import pytest

from qstack.circuit import GATE_SPECS, Circuit, GateKind, gate_matrix


def embed_oracle(small: np.ndarray, qubits, n: int) -> np.ndarray:
    """Explicit dense embedding of a 2x2/4x4 matrix acting on the given qubits
    (first listed qubit = more significant bit of the small index)."""
    dim = 1 << n
    k = len(qubits)
    full = np.zeros((dim, dim), dtype=complex)
    for col in range(dim):
        small_col = 0
        for q in qubits:
            small_col = (small_col << 1) | ((col >> q) & 1)
        base = col
        for q in qubits:
            base &= ~(1 << q)
        for small_row in range(1 << k):
            amp = small[small_row, small_col]
            if amp == 0:
                continue
            row, bits = base, small_row
            for q in reversed(qubits):
                row |= (bits & 1) << q
                bits >>= 1
            full[row, col] += amp
    return full


def unitary_oracle(circuit: Circuit) -> np.ndarray:
    """Circuit unitary via the explicit embedding, for small n only."""
    dim = 1 << circuit.num_qubits
    u = np.eye(dim, dtype=complex)
    for instr in circuit.instructions:
        u = embed_oracle(gate_matrix(instr.gate), instr.qubits, circuit.num_qubits) @ u
    return u


def phase_distance(a: np.ndarray, b: np.ndarray) -> float:
    return float(1.0 - abs(np.trace(a.conj().T @ b)) / a.shape[0])


_PARAM_KINDS = [name for name, (arity, _) in GATE_SPECS.items() if arity > 0]
_FIXED_1Q = [n for n, (a, q) in GATE_SPECS.items() if a == 0 and q == 1]
_TWO_QUBIT = [n for n, (a, q) in GATE_SPECS.items() if q == 2]


def random_gate(rng: np.random.Generator, two_qubit_ok: bool) -> GateKind:
    pool = _FIXED_1Q + _PARAM_KINDS + (_TWO_QUBIT if two_qubit_ok else [])
    name = pool[rng.integers(len(pool))]
    arity = GATE_SPECS[name][0]
    params = tuple(float(a) for a in rng.uniform(-2 * np.pi, 2 * np.pi, arity))
    return GateKind(name, params)


def random_circuit(rng: np.random.Generator, num_qubits: int, max_layers: int) -> Circuit:
    """Measurement-free circuit with at most max_layers scheduling layers."""
    c = Circuit(num_qubits, 0)
    for _ in range(int(rng.integers(1, max_layers + 1))):
        order = list(rng.permutation(num_qubits))
        while order:
            two = len(order) >= 2 and rng.random() < 0.4
            kind = random_gate(rng, two_qubit_ok=two)
            if kind.num_qubits == 2:
                c.gate(kind, int(order.pop()), int(order.pop()))
            else:
                c.gate(kind, int(order.pop()))
    return c


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20260810)


# one line per acceptance criterion, echoed after the run (outside capture)
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


_QUIL_VOCAB = [
    "H", "X", "RZ", "RX", "U3", "CNOT", "SWAP", "MEASURE", "RESET", "IF", "THEN",
    "0", "1", "2", "17", "[0]", "[3]", "(", ")", "(pi/2)", "(1.5,2.5)", "#", "-1",
    "3.14", "pi", ",", "\n", " ", "\t", "q", "[", "]",
]
_QASM_VOCAB = [
    "OPENQASM", "2.0", "include", '"qelib1.inc"', "qreg", "creg", "measure",
    "reset", "if", "h", "x", "rz", "u2", "cx", "swap", "q", "c", "q0", "c0",
    "[0]", "[2]", "(", ")", ";", "->", "==", ",", "pi", "0.5", "1", "7", "\n",
    " ", "//x", "[", "]", '"', "-",
]

_VALID_SEEDS = {
    "quil": "H 0\nCNOT 0 1\nRZ(1.5) 1\nMEASURE 0 [0]\nIF [0] THEN X 1\nRESET 0\n",
    "qasm": (
        'OPENQASM 2.0;\ninclude "qelib1.inc";\nqreg q0[2];\ncreg c0[2];\n'
        "h q0[0];\ncx q0[0],q0[1];\nrz(0.5) q0[1];\nmeasure q0[0] -> c0[0];\n"
        "if(c0[0]==1) x q0[1];\nreset q0[0];\n"
    ),
}


def fuzz_inputs(dialect: str, count: int, seed: int):
    """Deterministic stream of hostile inputs: token soup, mutations of valid
    programs, and raw byte/unicode noise."""
    rng = np.random.default_rng(seed)
    vocab = _QUIL_VOCAB if dialect == "quil" else _QASM_VOCAB
    base = _VALID_SEEDS[dialect]
    for i in range(count):
        mode = i % 4
        if mode == 0:  # token soup
            k = int(rng.integers(1, 40))
            sep = rng.choice([" ", "", "\n"], size=k)
            toks = rng.choice(vocab, size=k)
            yield "".join(t + s for t, s in zip(toks, sep))
        elif mode == 1:  # mutate a valid program
            text = list(base)
            for _ in range(int(rng.integers(1, 6))):
                pos = int(rng.integers(0, len(text)))
                action = int(rng.integers(0, 3))
                if action == 0:
                    text[pos] = chr(int(rng.integers(32, 127)))
                elif action == 1:
                    del text[pos]
                else:
                    text.insert(pos, chr(int(rng.integers(0, 0x300))))
            yield "".join(text)
        elif mode == 2:  # printable ASCII noise
            n = int(rng.integers(0, 120))
            yield "".join(chr(int(c)) for c in rng.integers(32, 127, size=n))
        else:  # arbitrary unicode incl. control characters
            n = int(rng.integers(0, 60))
            yield "".join(chr(int(c)) for c in rng.integers(0, 0x2500, size=n))
