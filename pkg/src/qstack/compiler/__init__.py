from .isa import BUILTIN_ISAS, BasisGate, Isa, load_isa
from .pipeline import CompiledCircuit, compile_circuit, validate_compiled
from .route import RoutedCircuit, route, shortest_path
from .synth import decompose_1q, translate_2q, zyz_angles
from .verify import compiled_phase_distance, verify_equivalence

__all__ = [
    "BUILTIN_ISAS",
    "BasisGate",
    "CompiledCircuit",
    "Isa",
    "RoutedCircuit",
    "compile_circuit",
    "compiled_phase_distance",
    "decompose_1q",
    "load_isa",
    "route",
    "shortest_path",
    "translate_2q",
    "validate_compiled",
    "verify_equivalence",
    "zyz_angles",
]
