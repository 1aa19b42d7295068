"""State-vector simulation: 2**n amplitudes, gates applied in place.

Bit order is little-endian everywhere: qubit 0 is the least-significant bit of
a state index, and classical bit 0 is the rightmost character of a counts key.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from ..circuit import GATE, MEASURE, RESET, Circuit, GateKind, gate_matrix
from .kernels import DEFAULT as DEFAULT_KERNELS

_X = gate_matrix(GateKind("X"))


@dataclass
class StateVector:
    """Amplitudes of an n-qubit pure state, index bit k = qubit k."""

    num_qubits: int
    amplitudes: np.ndarray = field(default=None)

    def __post_init__(self) -> None:
        if self.amplitudes is None:
            amps = np.zeros(1 << self.num_qubits, dtype=np.complex128)
            amps[0] = 1.0
            self.amplitudes = amps
        else:
            self.amplitudes = np.ascontiguousarray(self.amplitudes, dtype=np.complex128)
            if self.amplitudes.size != 1 << self.num_qubits:
                raise ValueError("amplitude count must be 2**num_qubits")

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))


def apply_gate(state: StateVector, kind: GateKind, qubits, kernels=None) -> StateVector:
    """Apply a gate in place and return the same StateVector."""
    k = kernels or DEFAULT_KERNELS
    qubits = tuple(qubits)
    if len(set(qubits)) != len(qubits):
        raise ValueError(f"duplicate qubit in {qubits}")
    for q in qubits:
        if not 0 <= q < state.num_qubits:
            raise ValueError(f"qubit {q} out of range")
    if kind.num_qubits != len(qubits):
        raise ValueError(f"{kind.name} expects {kind.num_qubits} qubit(s)")
    _dispatch(k, state.amplitudes, kind, qubits)
    return state


def _dispatch(kernels, amps: np.ndarray, kind: GateKind, qubits) -> None:
    if kind.name == "CNOT":
        kernels.apply_cnot(amps, qubits[0], qubits[1])
    elif kind.name == "CZ":
        kernels.apply_cz(amps, qubits[0], qubits[1])
    elif kind.name == "SWAP":
        kernels.apply_swap(amps, qubits[0], qubits[1])
    elif len(qubits) == 1:
        kernels.apply_1q(amps, gate_matrix(kind), qubits[0])
    else:
        kernels.apply_2q(amps, gate_matrix(kind), qubits[0], qubits[1])


@dataclass(frozen=True)
class RunConfig:
    """Execution parameters. Identical (circuit, config) gives identical Counts."""

    shots: int = 1
    seed: int = 0
    backend: str = "statevector"
    fusion: bool = False

    def __post_init__(self) -> None:
        if self.shots < 1:
            raise ValueError("shots must be >= 1")
        if self.backend not in ("statevector", "unitary"):
            raise ValueError(f"unknown backend {self.backend!r}")


@dataclass
class Counts:
    """Measured bitstrings over repeated shots (bit 0 rightmost in keys)."""

    counts: dict[str, int]
    shots: int

    def __post_init__(self) -> None:
        if sum(self.counts.values()) != self.shots:
            raise ValueError("counts must sum to shots")

    def frequency(self, key: str) -> float:
        return self.counts.get(key, 0) / self.shots

    def to_json_dict(self) -> dict:
        out = dict(sorted(self.counts.items()))
        out["shots"] = self.shots
        return out


def _shot_rng(seed: int, shot: int) -> np.random.Generator:
    # per-shot stream: shots are order-independent and parallel-safe
    return np.random.Generator(np.random.PCG64((seed ^ shot) & 0xFFFFFFFFFFFFFFFF))


def _key(bits: list[int]) -> str:
    return "".join(str(b) for b in reversed(bits))


class _FusedOp:
    """A run of single-qubit gates on one qubit premultiplied into one matrix."""

    __slots__ = ("qubit", "matrix")

    def __init__(self, qubit: int, matrix: np.ndarray):
        self.qubit = qubit
        self.matrix = matrix


def _fuse(circuit: Circuit) -> list:
    """Fuse maximal runs of unconditioned single-qubit gates per qubit.

    A run on qubit q is broken by anything else touching q (two-qubit gate,
    measure, reset, or a conditional). Fused matrices are emitted at the
    position of the run's last gate, which is safe because every instruction
    skipped over acts on disjoint qubits.
    """
    out: list = []
    pending: dict[int, _FusedOp] = {}

    def flush(q: int) -> None:
        op = pending.pop(q, None)
        if op is not None:
            out.append(op)

    for instr in circuit.instructions:
        simple_1q = (
            instr.op == GATE and instr.condition is None and len(instr.qubits) == 1
        )
        if simple_1q:
            q = instr.qubits[0]
            m = gate_matrix(instr.gate)
            if q in pending:
                pending[q] = _FusedOp(q, m @ pending[q].matrix)
            else:
                pending[q] = _FusedOp(q, m)
        else:
            for q in instr.qubits:
                flush(q)
            out.append(instr)
    for q in sorted(pending):
        flush(q)
    return out


def _execute_shot(ops: list, n: int, num_clbits: int, rng, kernels) -> list[int]:
    state = StateVector(n)
    amps = state.amplitudes
    clbits = [0] * num_clbits
    for instr in ops:
        if isinstance(instr, _FusedOp):
            kernels.apply_1q(amps, instr.matrix, instr.qubit)
        elif instr.op == GATE:
            if instr.condition is not None:
                c, expected = instr.condition
                if clbits[c] != expected:
                    continue
            _dispatch(kernels, amps, instr.gate, instr.qubits)
        elif instr.op == MEASURE:
            clbits[instr.clbit] = _measure_qubit(kernels, amps, instr.qubits[0], rng)
        elif instr.op == RESET:
            if _measure_qubit(kernels, amps, instr.qubits[0], rng) == 1:
                kernels.apply_1q(amps, _X, instr.qubits[0])
    return clbits


def _measure_qubit(kernels, amps: np.ndarray, q: int, rng) -> int:
    p1 = kernels.prob_one(amps, q)
    outcome = 1 if rng.random() < p1 else 0
    prob = p1 if outcome == 1 else 1.0 - p1
    kernels.collapse(amps, q, outcome, prob)
    return outcome


def run_shots(circuit: Circuit, cfg: RunConfig, kernels=None) -> list[list[int]]:
    """Per-shot classical registers, [c0, c1, ...] per shot in shot order."""
    if cfg.backend != "statevector":
        raise ValueError("run_statevector requires backend='statevector'")
    k = kernels or DEFAULT_KERNELS
    ops = _fuse(circuit) if cfg.fusion else circuit.instructions
    return [
        _execute_shot(ops, circuit.num_qubits, circuit.num_clbits, _shot_rng(cfg.seed, shot), k)
        for shot in range(cfg.shots)
    ]


def run_statevector(circuit: Circuit, cfg: RunConfig, kernels=None) -> Counts:
    """Run shot-by-shot from |0...0>, sampling measurements with true collapse."""
    counts: dict[str, int] = {}
    for bits in run_shots(circuit, cfg, kernels=kernels):
        key = _key(bits)
        counts[key] = counts.get(key, 0) + 1
    return Counts(counts, cfg.shots)


def get_statevector(circuit: Circuit, fusion: bool = False, kernels=None) -> StateVector:
    """Final amplitudes of a measurement-free circuit applied to |0...0>."""
    if not circuit.is_unitary_only():
        raise ValueError("circuit contains measure/reset/conditional instructions")
    k = kernels or DEFAULT_KERNELS
    ops = _fuse(circuit) if fusion else circuit.instructions
    state = StateVector(circuit.num_qubits)
    amps = state.amplitudes
    for instr in ops:
        if isinstance(instr, _FusedOp):
            k.apply_1q(amps, instr.matrix, instr.qubit)
        else:
            _dispatch(k, amps, instr.gate, instr.qubits)
    return state


def run(circuit: Circuit, cfg: RunConfig, kernels=None) -> Counts:
    """Dispatch on cfg.backend; the unitary backend samples all qubits at the end."""
    if cfg.backend == "statevector":
        return run_statevector(circuit, cfg, kernels=kernels)
    from .unitary import run_unitary

    return run_unitary(circuit, cfg)


def counts_to_json(counts: Counts) -> str:
    return json.dumps(counts.to_json_dict())


def counts_from_json(text: str) -> Counts:
    raw = json.loads(text)
    shots = raw.pop("shots")
    return Counts({str(k): int(v) for k, v in raw.items()}, shots)


def amplitudes_csv(state: StateVector) -> str:
    """Amplitude dump, one ``index,re,im`` row per basis state."""
    lines = ["index,re,im"]
    for i, a in enumerate(state.amplitudes):
        lines.append(f"{i},{float(a.real)!r},{float(a.imag)!r}")
    return "\n".join(lines) + "\n"
