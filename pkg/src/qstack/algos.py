"""Reference circuits: random bit, teleportation, Deutsch-Jozsa,
Bernstein-Vazirani, QFT, and Grover search.

Bitstring arguments and counts keys share one convention: bit k of the string
(counting from the right) is qubit k.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import pi

from .circuit import Circuit, GateKind, X, Z

_VALID_ORACLES = ("constant-0", "constant-1", "balanced-mask", "bv-secret")


@dataclass(frozen=True)
class Oracle:
    """Black-box function spec for the query algorithms."""

    kind: str
    width: int
    pattern: str = ""

    def __post_init__(self) -> None:
        if self.kind not in _VALID_ORACLES:
            raise ValueError(f"unknown oracle kind {self.kind!r}")
        if self.width < 1:
            raise ValueError("oracle width must be >= 1")
        if self.kind in ("balanced-mask", "bv-secret"):
            if len(self.pattern) != self.width or set(self.pattern) - {"0", "1"}:
                raise ValueError(
                    f"{self.kind} needs a {self.width}-bit pattern, got {self.pattern!r}"
                )


def _bit(pattern: str, qubit: int) -> int:
    """Bit of the pattern addressing ``qubit`` (rightmost character = qubit 0)."""
    return int(pattern[len(pattern) - 1 - qubit])


def random_bit_circuit() -> Circuit:
    """One Hadamard, one measurement: the quantum coin flip."""
    return Circuit(1, 1).h(0).measure(0, 0)


def teleportation_circuit(prep: list[GateKind] | None = None) -> Circuit:
    """Teleport the state prepared on qubit 0 to qubit 2.

    ``prep`` is applied to qubit 0 first; the Bell pair lives on qubits 1-2,
    the corrections are Z conditioned on c0 and X conditioned on c1, and the
    teleported qubit is measured into c2.
    """
    c = Circuit(3, 3)
    for kind in prep or []:
        if kind.num_qubits != 1:
            raise ValueError(f"prep gate {kind.name} is not single-qubit")
        c.gate(kind, 0)
    c.h(1).cnot(1, 2)
    c.cnot(0, 1).h(0)
    c.measure(0, 0).measure(1, 1)
    c.conditional(0, 1, Z, 2)
    c.conditional(1, 1, X, 2)
    c.measure(2, 2)
    return c


def _query_prelude(n: int) -> Circuit:
    """n query qubits, |-> ancilla on qubit n, Hadamards everywhere."""
    c = Circuit(n + 1, n)
    c.x(n)
    for q in range(n + 1):
        c.h(q)
    return c


def _query_epilogue(c: Circuit, n: int) -> Circuit:
    for q in range(n):
        c.h(q)
    for q in range(n):
        c.measure(q, q)
    return c


def deutsch_jozsa_circuit(oracle: Oracle) -> Circuit:
    """Constant oracles measure all-zeros with certainty; balanced ones never do."""
    if oracle.kind == "bv-secret":
        raise ValueError("Deutsch-Jozsa takes constant-* or balanced-mask oracles")
    n = oracle.width
    c = _query_prelude(n)
    if oracle.kind == "constant-1":
        c.x(n)
    elif oracle.kind == "balanced-mask":
        for q in range(n):
            if _bit(oracle.pattern, q):
                c.cnot(q, n)
    return _query_epilogue(c, n)


def bernstein_vazirani_circuit(secret: str) -> Circuit:
    """Measurement recovers the secret mask in a single query."""
    if not secret or set(secret) - {"0", "1"}:
        raise ValueError(f"secret must be a nonempty bitstring, got {secret!r}")
    n = len(secret)
    c = _query_prelude(n)
    for q in range(n):
        if _bit(secret, q):
            c.cnot(q, n)
    return _query_epilogue(c, n)


def _controlled_phase(c: Circuit, theta: float, control: int, target: int) -> None:
    """diag(1,1,1,e^{i theta}) up to global phase, from CNOT and Rz."""
    c.cnot(control, target)
    c.rz(-theta / 2, target)
    c.cnot(control, target)
    c.rz(theta / 2, target)
    c.rz(theta / 2, control)


def qft_circuit(n: int) -> Circuit:
    """Quantum Fourier transform matching the DFT matrix over little-endian
    state indices (includes the final qubit-reversal swaps)."""
    if n < 1:
        raise ValueError("qft needs at least one qubit")
    c = Circuit(n, 0)
    for j in range(n - 1, -1, -1):
        c.h(j)
        for k in range(j - 1, -1, -1):
            _controlled_phase(c, pi / (1 << (j - k)), k, j)
    for i in range(n // 2):
        c.swap(i, n - 1 - i)
    return c


def inverse_qft_circuit(n: int) -> Circuit:
    """Adjoint of qft_circuit: reversed instruction order, negated angles."""
    fwd = qft_circuit(n)
    inv = Circuit(n, 0)
    for instr in reversed(fwd.instructions):
        kind = instr.gate
        if kind.params:
            kind = GateKind(kind.name, tuple(-p for p in kind.params))
        inv.gate(kind, *instr.qubits)
    return inv


MAX_GROVER_QUBITS = 4


def _multi_controlled_z(c: Circuit, qubits: list[int]) -> None:
    """Phase flip on the all-ones state, built ancilla-free from parity
    gadgets: a phase of +/- pi/2^(n-1) on the parity of every nonempty subset."""
    n = len(qubits)
    angle_unit = pi / (1 << (n - 1))
    for mask in range(1, 1 << n):
        subset = [qubits[i] for i in range(n) if (mask >> i) & 1]
        sign = 1.0 if len(subset) % 2 == 1 else -1.0
        last = subset[-1]
        for q in subset[:-1]:
            c.cnot(q, last)
        c.u1(sign * angle_unit, last)
        for q in reversed(subset[:-1]):
            c.cnot(q, last)


def grover_circuit(marked: str, iterations: int) -> Circuit:
    """Standard Grover search for the marked bitstring.

    Width is capped at 4 qubits (the ancilla-free diffusion construction);
    iterations must be >= 1.
    """
    if not marked or set(marked) - {"0", "1"}:
        raise ValueError(f"marked must be a nonempty bitstring, got {marked!r}")
    if iterations < 1:
        raise ValueError("iterations must be >= 1")
    n = len(marked)
    if n > MAX_GROVER_QUBITS:
        raise ValueError(f"grover supports at most {MAX_GROVER_QUBITS} qubits")
    c = Circuit(n, n)
    qubits = list(range(n))
    for q in qubits:
        c.h(q)
    for _ in range(iterations):
        # phase oracle: flip the sign of |marked>
        for q in qubits:
            if not _bit(marked, q):
                c.x(q)
        _multi_controlled_z(c, qubits)
        for q in qubits:
            if not _bit(marked, q):
                c.x(q)
        # diffusion about the mean
        for q in qubits:
            c.h(q)
        for q in qubits:
            c.x(q)
        _multi_controlled_z(c, qubits)
        for q in qubits:
            c.x(q)
        for q in qubits:
            c.h(q)
    for q in qubits:
        c.measure(q, q)
    return c
