"""The compile pipeline: route -> translate two-qubit gates -> synthesize
single-qubit gates -> merge adjacent phase rotations.

Measurements and conditionals pass through untouched apart from qubit
relabeling; everything else lands in the target basis on legal edges.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..circuit import GATE, Circuit, GateKind, Instruction
from .isa import Isa
from .route import route
from .synth import decompose_1q, normalize_angle, translate_2q
from .verify import compiled_phase_distance

VERIFY_QUBIT_CAP = 8


@dataclass
class CompiledCircuit:
    """Basis-conforming circuit plus the layout maps and, when the input was
    measurement-free and small enough to verify, the phase-invariant distance
    to the original (None = not computed)."""

    circuit: Circuit
    initial_layout: dict[int, int]
    final_layout: dict[int, int]
    phase_distance: float | None


def _merge_phase_gates(circuit: Circuit, isa: Isa) -> Circuit:
    """Sum runs of adjacent Rz (or U1) on one qubit mod 2pi; drop zero angles.

    Rz is a frame change, so merging is exact up to global phase; conditionals
    are never merged and flush any pending rotation on their qubit.
    """
    names = isa.basis_names()
    phase_name = "Rz" if "Rz" in names else ("U1" if "U1" in names else None)
    if phase_name is None:
        return circuit
    out = Circuit(circuit.num_qubits, circuit.num_clbits)
    pending: dict[int, float] = {}

    def flush(q: int) -> None:
        angle = pending.pop(q, None)
        if angle is None:
            return
        angle = normalize_angle(angle)
        if angle != 0.0:
            out.gate(GateKind(phase_name, (angle,)), q)

    for instr in circuit.instructions:
        if (
            instr.op == GATE
            and instr.condition is None
            and instr.gate.name == phase_name
        ):
            q = instr.qubits[0]
            pending[q] = pending.get(q, 0.0) + instr.gate.params[0]
            continue
        for q in instr.qubits:
            flush(q)
        out.append(instr)
    for q in sorted(pending):
        flush(q)
    return out


def compile_circuit(circuit: Circuit, isa: Isa) -> CompiledCircuit:
    """Lower a circuit to the ISA. Verifies equivalence when the input is
    measurement-free and within the small-matrix cap."""
    routed = route(circuit, isa)
    out = Circuit(isa.num_qubits, circuit.num_clbits)
    for instr in routed.circuit.instructions:
        if instr.op != GATE or instr.condition is not None:
            out.append(instr)
            continue
        if len(instr.qubits) == 2:
            out.extend(translate_2q(instr.gate, instr.qubits, isa))
        else:
            q = instr.qubits[0]
            out.extend(
                Instruction(GATE, (q,), gate=g) for g in decompose_1q(instr.gate, isa)
            )
    merged = _merge_phase_gates(out, isa)

    phase_distance: float | None = None
    if circuit.is_unitary_only() and circuit.num_qubits <= VERIFY_QUBIT_CAP:
        try:
            phase_distance = compiled_phase_distance(
                circuit, merged, routed.initial_layout, routed.final_layout
            )
        except ValueError:
            phase_distance = None
    return CompiledCircuit(
        merged, routed.initial_layout, routed.final_layout, phase_distance
    )


def validate_compiled(circuit: Circuit, isa: Isa) -> list[str]:
    """Pure basis/topology closure check, no simulation.

    Unconditioned gates must be in the basis and on a legal (directed) edge.
    Conditionals pass through compilation untouched, so only their topology is
    checked.
    """
    problems = []
    for idx, instr in enumerate(circuit.instructions):
        if instr.op != GATE:
            continue
        where = f"instruction {idx}"
        if instr.condition is None and not isa.allows(instr.gate):
            problems.append(
                f"{where}: {instr.gate.name}{instr.gate.params} not in {isa.name} basis"
            )
        if len(instr.qubits) == 2:
            a, b = instr.qubits
            if instr.condition is None:
                symmetric = instr.gate.name in ("CZ", "SWAP")
                ok = isa.adjacent(a, b) if symmetric else isa.has_edge(a, b)
            else:
                ok = isa.adjacent(a, b)
            if not ok:
                problems.append(f"{where}: pair ({a}, {b}) not a legal edge on {isa.name}")
    return problems
