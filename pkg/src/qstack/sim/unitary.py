"""Full-unitary backend: multiplies embedded gate matrices, memory Theta(4**n).

Deliberately implemented with numpy tensor reshapes only (never the compiled
state-vector kernels) so it stays an independent cross-check of the
state-vector path.
"""

from __future__ import annotations

import numpy as np

from ..circuit import GATE, Circuit, gate_matrix
from .statevector import Counts, RunConfig, StateVector, _key, _shot_rng

MAX_UNITARY_QUBITS = 12


def _apply_to_axes(mat: np.ndarray, small: np.ndarray, qubits, n: int) -> np.ndarray:
    """Left-multiply ``small`` acting on the given row-index qubits of ``mat``.

    ``mat`` has shape (2**n, cols); qubit k is bit k of the row index and the
    first listed qubit is the more significant bit of ``small``'s index.
    """
    cols = mat.shape[1]
    view = mat.reshape([2] * n + [cols])
    axes = tuple(n - 1 - q for q in qubits)
    sub = np.moveaxis(view, axes, range(len(qubits)))
    shape = sub.shape
    res = small @ sub.reshape(small.shape[0], -1)
    sub[...] = res.reshape(shape)
    return mat


def circuit_unitary(circuit: Circuit) -> np.ndarray:
    """Product of embedded gate matrices in execution order."""
    n = circuit.num_qubits
    if n > MAX_UNITARY_QUBITS:
        raise ValueError(
            f"unitary backend is capped at {MAX_UNITARY_QUBITS} qubits, got {n}"
        )
    if not circuit.is_unitary_only():
        raise ValueError("circuit contains measure/reset/conditional instructions")
    dim = 1 << n
    u = np.eye(dim, dtype=np.complex128)
    for instr in circuit.instructions:
        assert instr.op == GATE
        _apply_to_axes(u, gate_matrix(instr.gate), instr.qubits, n)
    return u


def run_unitary(circuit: Circuit, cfg: RunConfig) -> Counts:
    """Counts from sampling every qubit of U|0...0> once per shot.

    Only defined for measurement-free circuits; keys have num_qubits bits.
    """
    if cfg.backend != "unitary":
        raise ValueError("run_unitary requires backend='unitary'")
    u = circuit_unitary(circuit)
    probs = np.abs(u[:, 0]) ** 2
    probs = probs / probs.sum()
    cum = np.cumsum(probs)
    n = circuit.num_qubits
    counts: dict[str, int] = {}
    for shot in range(cfg.shots):
        rng = _shot_rng(cfg.seed, shot)
        idx = int(np.searchsorted(cum, rng.random(), side="right"))
        idx = min(idx, len(probs) - 1)
        key = _key([(idx >> q) & 1 for q in range(n)])
        counts[key] = counts.get(key, 0) + 1
    return Counts(counts, cfg.shots)


def statevector_from_unitary(circuit: Circuit) -> StateVector:
    """U|0...0> as a StateVector (oracle-side accessor)."""
    u = circuit_unitary(circuit)
    return StateVector(circuit.num_qubits, u[:, 0].copy())
