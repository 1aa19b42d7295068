"""qstack: a gate-level quantum software stack.

Circuit IR, Quil and OpenQASM 2.0 front-ends, a retargetable ISA compiler,
state-vector and unitary simulators, reference algorithms, and a benchmark
harness.
"""

from .circuit import (
    Circuit,
    GateKind,
    Instruction,
    ResourceReport,
    conditional,
    depth,
    estimate_resources,
    gate,
    gate_matrix,
    measure,
    new_circuit,
    reset,
)

__version__ = "0.1.0"

__all__ = [
    "Circuit",
    "GateKind",
    "Instruction",
    "ResourceReport",
    "conditional",
    "depth",
    "estimate_resources",
    "gate",
    "gate_matrix",
    "measure",
    "new_circuit",
    "reset",
    "__version__",
]
