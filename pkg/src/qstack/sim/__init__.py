from .kernels import HAVE_NATIVE, get_kernels
from .statevector import (
    Counts,
    RunConfig,
    StateVector,
    amplitudes_csv,
    apply_gate,
    counts_from_json,
    counts_to_json,
    get_statevector,
    run,
    run_shots,
    run_statevector,
)
from .unitary import MAX_UNITARY_QUBITS, circuit_unitary, run_unitary, statevector_from_unitary

__all__ = [
    "Counts",
    "RunConfig",
    "StateVector",
    "HAVE_NATIVE",
    "MAX_UNITARY_QUBITS",
    "amplitudes_csv",
    "apply_gate",
    "circuit_unitary",
    "counts_from_json",
    "counts_to_json",
    "get_kernels",
    "get_statevector",
    "run",
    "run_shots",
    "run_statevector",
    "run_unitary",
    "statevector_from_unitary",
]
