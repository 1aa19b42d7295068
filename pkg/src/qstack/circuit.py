"""Circuit intermediate representation: gates, instructions, structural queries.

Conventions used throughout the package:
  - qubit and classical bit indices are zero-based integers
  - state index bit k is qubit k (little-endian); for a two-qubit gate matrix
    the FIRST listed qubit is the more significant bit of the 4x4 index, so
    ``CNOT`` on (c, t) has its control in the first slot
  - angles are float radians
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import cos, pi, sin

import numpy as np

# gate name -> (parameter arity, qubit arity)
GATE_SPECS: dict[str, tuple[int, int]] = {
    "I": (0, 1),
    "X": (0, 1),
    "Y": (0, 1),
    "Z": (0, 1),
    "H": (0, 1),
    "S": (0, 1),
    "T": (0, 1),
    "SqrtX": (0, 1),
    "Rx": (1, 1),
    "Ry": (1, 1),
    "Rz": (1, 1),
    "U1": (1, 1),
    "U2": (2, 1),
    "U3": (3, 1),
    "CNOT": (0, 2),
    "CZ": (0, 2),
    "SWAP": (0, 2),
}


@dataclass(frozen=True)
class GateKind:
    """A gate name with bound parameters, e.g. ``GateKind("Rz", (0.5,))``."""

    name: str
    params: tuple[float, ...] = ()

    def __post_init__(self) -> None:
        spec = GATE_SPECS.get(self.name)
        if spec is None:
            raise ValueError(f"unknown gate {self.name!r}")
        object.__setattr__(self, "params", tuple(float(p) for p in self.params))
        if len(self.params) != spec[0]:
            raise ValueError(
                f"{self.name} takes {spec[0]} parameter(s), got {len(self.params)}"
            )

    @property
    def num_qubits(self) -> int:
        return GATE_SPECS[self.name][1]


# fixed single/two-qubit gates as module constants
I = GateKind("I")
X = GateKind("X")
Y = GateKind("Y")
Z = GateKind("Z")
H = GateKind("H")
S = GateKind("S")
T = GateKind("T")
SQRTX = GateKind("SqrtX")
CNOT = GateKind("CNOT")
CZ = GateKind("CZ")
SWAP = GateKind("SWAP")


def Rx(theta: float) -> GateKind:
    return GateKind("Rx", (theta,))


def Ry(theta: float) -> GateKind:
    return GateKind("Ry", (theta,))


def Rz(theta: float) -> GateKind:
    return GateKind("Rz", (theta,))


def U1(lam: float) -> GateKind:
    return GateKind("U1", (lam,))


def U2(phi: float, lam: float) -> GateKind:
    return GateKind("U2", (phi, lam))


def U3(theta: float, phi: float, lam: float) -> GateKind:
    return GateKind("U3", (theta, phi, lam))


_INVSQRT2 = 1.0 / np.sqrt(2.0)

_FIXED_MATRICES: dict[str, np.ndarray] = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
    "H": np.array([[1, 1], [1, -1]], dtype=complex) * _INVSQRT2,
    "S": np.array([[1, 0], [0, 1j]], dtype=complex),
    "T": np.array([[1, 0], [0, np.exp(1j * pi / 4)]], dtype=complex),
    # principal square root of X
    "SqrtX": np.array([[1 + 1j, 1 - 1j], [1 - 1j, 1 + 1j]], dtype=complex) / 2,
    "CNOT": np.array(
        [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=complex
    ),
    "CZ": np.diag([1, 1, 1, -1]).astype(complex),
    "SWAP": np.array(
        [[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]], dtype=complex
    ),
}

for _m in _FIXED_MATRICES.values():
    _m.setflags(write=False)


def gate_matrix(kind: GateKind) -> np.ndarray:
    """Unitary matrix of a gate (2x2 for single-qubit, 4x4 for two-qubit)."""
    fixed = _FIXED_MATRICES.get(kind.name)
    if fixed is not None:
        return fixed
    if kind.name == "Rx":
        (t,) = kind.params
        c, s = cos(t / 2), sin(t / 2)
        return np.array([[c, -1j * s], [-1j * s, c]], dtype=complex)
    if kind.name == "Ry":
        (t,) = kind.params
        c, s = cos(t / 2), sin(t / 2)
        return np.array([[c, -s], [s, c]], dtype=complex)
    if kind.name == "Rz":
        (t,) = kind.params
        return np.array(
            [[np.exp(-0.5j * t), 0], [0, np.exp(0.5j * t)]], dtype=complex
        )
    if kind.name == "U1":
        (lam,) = kind.params
        return np.array([[1, 0], [0, np.exp(1j * lam)]], dtype=complex)
    if kind.name == "U2":
        phi, lam = kind.params
        return (
            np.array(
                [
                    [1, -np.exp(1j * lam)],
                    [np.exp(1j * phi), np.exp(1j * (lam + phi))],
                ],
                dtype=complex,
            )
            * _INVSQRT2
        )
    if kind.name == "U3":
        t, phi, lam = kind.params
        c, s = cos(t / 2), sin(t / 2)
        return np.array(
            [
                [c, -np.exp(1j * lam) * s],
                [np.exp(1j * phi) * s, np.exp(1j * (lam + phi)) * c],
            ],
            dtype=complex,
        )
    raise ValueError(f"no matrix for gate {kind.name!r}")


GATE = "gate"
MEASURE = "measure"
RESET = "reset"


@dataclass(frozen=True)
class Instruction:
    """One gate application, measurement, reset, or classically-conditioned gate.

    ``condition`` is a (classical bit, expected value) pair and is only legal on
    gate instructions.
    """

    op: str
    qubits: tuple[int, ...]
    gate: GateKind | None = None
    clbit: int | None = None
    condition: tuple[int, int] | None = None

    def __post_init__(self) -> None:
        if self.op not in (GATE, MEASURE, RESET):
            raise ValueError(f"unknown instruction op {self.op!r}")
        object.__setattr__(self, "qubits", tuple(int(q) for q in self.qubits))
        if len(set(self.qubits)) != len(self.qubits):
            raise ValueError(f"duplicate qubit in {self.qubits}")
        if any(q < 0 for q in self.qubits):
            raise ValueError(f"negative qubit index in {self.qubits}")
        if self.op == GATE:
            if self.gate is None:
                raise ValueError("gate instruction needs a GateKind")
            if self.gate.num_qubits != len(self.qubits):
                raise ValueError(
                    f"{self.gate.name} acts on {self.gate.num_qubits} qubit(s), "
                    f"got {len(self.qubits)}"
                )
            if self.condition is not None:
                c, expected = self.condition
                if c < 0 or expected not in (0, 1):
                    raise ValueError(f"bad condition {self.condition}")
        else:
            if self.gate is not None or self.condition is not None:
                raise ValueError(f"{self.op} cannot carry a gate or condition")
            if len(self.qubits) != 1:
                raise ValueError(f"{self.op} acts on exactly one qubit")
            if self.op == MEASURE and (self.clbit is None or self.clbit < 0):
                raise ValueError("measure needs a classical bit index")

    @property
    def clbits(self) -> tuple[int, ...]:
        """Classical bits this instruction touches."""
        if self.op == MEASURE:
            return (self.clbit,)
        if self.condition is not None:
            return (self.condition[0],)
        return ()


def gate(kind: GateKind, *qubits: int) -> Instruction:
    return Instruction(GATE, qubits, gate=kind)


def measure(qubit: int, clbit: int) -> Instruction:
    return Instruction(MEASURE, (qubit,), clbit=clbit)


def reset(qubit: int) -> Instruction:
    return Instruction(RESET, (qubit,))


def conditional(clbit: int, expected: int, kind: GateKind, *qubits: int) -> Instruction:
    return Instruction(GATE, qubits, gate=kind, condition=(clbit, expected))


@dataclass
class Circuit:
    """An ordered instruction list over a qubit and a classical register."""

    num_qubits: int
    num_clbits: int
    instructions: list[Instruction] = field(default_factory=list)

    def __post_init__(self) -> None:
        if self.num_qubits < 0 or self.num_clbits < 0:
            raise ValueError("register sizes must be nonnegative")
        for instr in self.instructions:
            self._check(instr)

    def _check(self, instr: Instruction) -> None:
        for q in instr.qubits:
            if q >= self.num_qubits:
                raise ValueError(
                    f"qubit index {q} out of range for {self.num_qubits}-qubit circuit"
                )
        for c in instr.clbits:
            if c >= self.num_clbits:
                raise ValueError(
                    f"classical index {c} out of range for {self.num_clbits} bits"
                )

    def append(self, instr: Instruction) -> "Circuit":
        self._check(instr)
        self.instructions.append(instr)
        return self

    def extend(self, instrs) -> "Circuit":
        for instr in instrs:
            self.append(instr)
        return self

    # builder shorthand, chainable
    def gate(self, kind: GateKind, *qubits: int) -> "Circuit":
        return self.append(gate(kind, *qubits))

    def h(self, q: int) -> "Circuit":
        return self.append(gate(H, q))

    def x(self, q: int) -> "Circuit":
        return self.append(gate(X, q))

    def y(self, q: int) -> "Circuit":
        return self.append(gate(Y, q))

    def z(self, q: int) -> "Circuit":
        return self.append(gate(Z, q))

    def rx(self, theta: float, q: int) -> "Circuit":
        return self.append(gate(Rx(theta), q))

    def ry(self, theta: float, q: int) -> "Circuit":
        return self.append(gate(Ry(theta), q))

    def rz(self, theta: float, q: int) -> "Circuit":
        return self.append(gate(Rz(theta), q))

    def u1(self, lam: float, q: int) -> "Circuit":
        return self.append(gate(U1(lam), q))

    def cnot(self, c: int, t: int) -> "Circuit":
        return self.append(gate(CNOT, c, t))

    def cz(self, a: int, b: int) -> "Circuit":
        return self.append(gate(CZ, a, b))

    def swap(self, a: int, b: int) -> "Circuit":
        return self.append(gate(SWAP, a, b))

    def measure(self, q: int, c: int) -> "Circuit":
        return self.append(measure(q, c))

    def reset(self, q: int) -> "Circuit":
        return self.append(reset(q))

    def conditional(self, c: int, expected: int, kind: GateKind, *qubits: int) -> "Circuit":
        return self.append(conditional(c, expected, kind, *qubits))

    def copy(self) -> "Circuit":
        return Circuit(self.num_qubits, self.num_clbits, list(self.instructions))

    def is_unitary_only(self) -> bool:
        """True when the circuit contains no measure/reset/conditional."""
        return all(
            ins.op == GATE and ins.condition is None for ins in self.instructions
        )

    def depth(self) -> int:
        return depth(self)

    def __len__(self) -> int:
        return len(self.instructions)


def new_circuit(num_qubits: int, num_clbits: int) -> Circuit:
    return Circuit(num_qubits, num_clbits)


def depth(circuit: Circuit) -> int:
    """Longest chain of instructions under greedy as-soon-as-possible layering.

    Two instructions conflict iff they share a qubit; measurements and
    conditionals additionally conflict through their classical bit.
    """
    q_layer = [0] * circuit.num_qubits
    c_layer = [0] * circuit.num_clbits
    deepest = 0
    for instr in circuit.instructions:
        layer = 0
        for q in instr.qubits:
            layer = max(layer, q_layer[q])
        for c in instr.clbits:
            layer = max(layer, c_layer[c])
        layer += 1
        for q in instr.qubits:
            q_layer[q] = layer
        for c in instr.clbits:
            c_layer[c] = layer
        deepest = max(deepest, layer)
    return deepest


@dataclass
class ResourceReport:
    """Per-kind gate counts plus measurement count and depth."""

    gate_counts: dict[str, int]
    measurement_count: int
    depth: int

    def total_gates(self) -> int:
        return sum(self.gate_counts.values())


def estimate_resources(circuit: Circuit) -> ResourceReport:
    """Exact gate/measurement tallies; conditionals count under their inner gate."""
    counts: dict[str, int] = {}
    measurements = 0
    for instr in circuit.instructions:
        if instr.op == GATE:
            counts[instr.gate.name] = counts.get(instr.gate.name, 0) + 1
        elif instr.op == MEASURE:
            measurements += 1
    return ResourceReport(counts, measurements, depth(circuit))
