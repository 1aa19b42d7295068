"""Phase-invariant equivalence checking for compiled circuits.

The metric is d = 1 - |tr(a^dagger b)| / dim, zero exactly when the two
unitaries agree up to a global phase. Compiled circuits live on the whole
device, so the check restricts to the wires the compiled circuit actually
touches and corrects for the routing permutation.
"""

from __future__ import annotations

import numpy as np

from ..circuit import Circuit, Instruction
from ..sim.unitary import MAX_UNITARY_QUBITS, circuit_unitary


def verify_equivalence(a: np.ndarray, b: np.ndarray) -> float:
    a = np.asarray(a)
    b = np.asarray(b)
    if a.shape != b.shape or a.shape[0] != a.shape[1]:
        raise ValueError(f"dimension mismatch: {a.shape} vs {b.shape}")
    dim = a.shape[0]
    return float(1.0 - abs(np.trace(a.conj().T @ b)) / dim)


def permutation_unitary(wire_of_slot: list[int], num_qubits: int) -> np.ndarray:
    """Unitary relabeling map: bit k of the input index moves to bit
    wire_of_slot[k] of the output index."""
    dim = 1 << num_qubits
    p = np.zeros((dim, dim), dtype=np.complex128)
    for x in range(dim):
        y = 0
        for k in range(num_qubits):
            y |= ((x >> k) & 1) << wire_of_slot[k]
        p[y, x] = 1.0
    return p


def _support(circuit: Circuit, extra) -> list[int]:
    wires = set(extra)
    for instr in circuit.instructions:
        wires.update(instr.qubits)
    return sorted(wires)


def _restrict(circuit: Circuit, wires: list[int]) -> Circuit:
    local = {w: i for i, w in enumerate(wires)}
    out = Circuit(len(wires), circuit.num_clbits)
    for instr in circuit.instructions:
        out.append(
            Instruction(
                instr.op,
                tuple(local[q] for q in instr.qubits),
                gate=instr.gate,
                clbit=instr.clbit,
                condition=instr.condition,
            )
        )
    return out


def compiled_phase_distance(
    original: Circuit,
    compiled: Circuit,
    initial_layout: dict[int, int],
    final_layout: dict[int, int],
) -> float:
    """Distance between the original circuit and the routed/translated one,
    corrected for the layout permutation, on the compiled circuit's support.

    Raises ValueError when either side exceeds the unitary backend's cap.
    """
    n = original.num_qubits
    logical_wires = [initial_layout[i] for i in range(n)]
    wires = _support(compiled, logical_wires + [final_layout[i] for i in range(n)])
    if len(wires) > MAX_UNITARY_QUBITS or n > MAX_UNITARY_QUBITS:
        raise ValueError(
            f"support spans {len(wires)} qubits, beyond the "
            f"{MAX_UNITARY_QUBITS}-qubit verification cap"
        )
    local = {w: i for i, w in enumerate(wires)}
    k = len(wires)

    u_compiled = circuit_unitary(_restrict(compiled, wires))
    u_original = circuit_unitary(original)

    ancilla_wires = [w for w in wires if w not in set(logical_wires)]
    slots_in = logical_wires + ancilla_wires
    slots_out = [final_layout[i] for i in range(n)] + [
        final_layout[w] for w in ancilla_wires
    ]
    p_in = permutation_unitary([local[w] for w in slots_in], k)
    p_out = permutation_unitary([local[w] for w in slots_out], k)

    expected = np.kron(np.eye(1 << (k - n)), u_original)
    expected = p_out @ expected @ p_in.conj().T
    return verify_equivalence(u_compiled, expected)
