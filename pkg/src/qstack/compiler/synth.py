"""Single-qubit synthesis and two-qubit basis translation.

Any 2x2 unitary factors as U3(theta, phi, lam) up to global phase; the angles
come from atan2 on the matrix entries. The pulse form then follows from the
frame-change identities

    u2(phi, lam) = Rz(phi + pi/2) Rx(pi/2) Rz(lam - pi/2)
    u3(theta, phi, lam) = Rz(phi + 3pi) Rx(pi/2) Rz(theta + pi) Rx(pi/2) Rz(lam)

(matrix products; emitted sequences are in execution order, rightmost factor
first).
"""

from __future__ import annotations

from math import atan2, pi

import numpy as np

from ..circuit import GateKind, Instruction, Rz, U1, U2, U3, gate, gate_matrix
from .isa import Isa

_ANGLE_TOL = 1e-12


def normalize_angle(theta: float) -> float:
    """Map into (-pi, pi]; values this close to 0 merge/drop exactly."""
    t = theta % (2 * pi)
    if t > pi:
        t -= 2 * pi
    if abs(t) < _ANGLE_TOL or abs(t - 2 * pi) < _ANGLE_TOL:
        return 0.0
    return t


def zyz_angles(matrix: np.ndarray) -> tuple[float, float, float]:
    """Extract (theta, phi, lam) with U ~ U3(theta, phi, lam) up to phase.

    Degenerate |m00| in {0, 1}: lam is fixed to 0 and the whole z-rotation
    folds into phi.
    """
    m = np.asarray(matrix, dtype=complex)
    theta = 2.0 * atan2(abs(m[1, 0]), abs(m[0, 0]))
    if abs(m[1, 0]) < _ANGLE_TOL:
        return 0.0, float(np.angle(m[1, 1]) - np.angle(m[0, 0])), 0.0
    if abs(m[0, 0]) < _ANGLE_TOL:
        return pi, float(np.angle(m[1, 0]) - np.angle(-m[0, 1])), 0.0
    alpha = np.angle(m[0, 0])
    return (
        theta,
        float(np.angle(m[1, 0]) - alpha),
        float(np.angle(-m[0, 1]) - alpha),
    )


def decompose_1q(kind: GateKind, isa: Isa) -> list[GateKind]:
    """Rewrite a single-qubit gate into the ISA basis, up to global phase.

    Returns gates in execution order. Basis gates pass through unchanged;
    otherwise the u-basis gets the sparsest single u-gate and the pulse basis
    gets at most Rz Rx(pi/2) Rz Rx(pi/2) Rz with zero-angle Rz dropped.
    """
    if kind.num_qubits != 1:
        raise ValueError(f"{kind.name} is not a single-qubit gate")
    if isa.allows(kind):
        return [kind]
    theta, phi, lam = zyz_angles(gate_matrix(kind))
    style = isa.one_qubit_style()
    if style == "u":
        if abs(theta) < _ANGLE_TOL:
            total = normalize_angle(phi + lam)
            return [] if total == 0.0 else [U1(total)]
        if abs(theta - pi / 2) < _ANGLE_TOL:
            return [U2(phi, lam)]
        return [U3(theta, phi, lam)]
    # pulse basis: Rz is free, Rx comes in quarter turns
    if abs(theta) < _ANGLE_TOL:
        total = normalize_angle(phi + lam)
        return [] if total == 0.0 else [Rz(total)]
    rx_quarter = GateKind("Rx", (pi / 2,))
    if abs(theta - pi / 2) < _ANGLE_TOL:
        # one pulse suffices, via the u2 identity
        seq = [
            Rz(normalize_angle(lam - pi / 2)),
            rx_quarter,
            Rz(normalize_angle(phi + pi / 2)),
        ]
    else:
        seq = [
            Rz(normalize_angle(lam)),
            rx_quarter,
            Rz(normalize_angle(theta + pi)),
            rx_quarter,
            Rz(normalize_angle(phi + 3 * pi)),
        ]
    return [g for g in seq if not (g.name == "Rz" and g.params[0] == 0.0)]


def translate_2q(kind: GateKind, qubits: tuple[int, int], isa: Isa) -> list[Instruction]:
    """Rewrite a two-qubit gate on an adjacent pair into the native gate plus
    basis single-qubit gates, up to global phase."""
    if kind.num_qubits != 2:
        raise ValueError(f"{kind.name} is not a two-qubit gate")
    a, b = qubits
    if not isa.adjacent(a, b):
        raise ValueError(
            f"qubits ({a}, {b}) are not coupled on {isa.name}; route first"
        )
    native = isa.two_qubit_native()
    out: list[Instruction] = []
    for g, qs in _raw_translate(kind.name, a, b, native, isa):
        if g.num_qubits == 2:
            out.append(gate(g, *qs))
        else:
            out.extend(gate(part, qs[0]) for part in decompose_1q(g, isa))
    return out


def _oriented(native: str, a: int, b: int, isa: Isa) -> list[tuple[GateKind, tuple]]:
    """Native gate on (a, b), reversing via H conjugation when only the
    opposite direction exists."""
    g = GateKind(native)
    h = GateKind("H")
    if isa.has_edge(a, b):
        return [(g, (a, b))]
    if native == "CZ":
        # symmetric gate: use the stored orientation
        return [(g, (b, a))]
    return [
        (h, (a,)),
        (h, (b,)),
        (g, (b, a)),
        (h, (a,)),
        (h, (b,)),
    ]


def _raw_translate(name: str, a: int, b: int, native: str, isa: Isa):
    h = GateKind("H")
    if name == "SWAP":
        seq = []
        seq += _raw_translate("CNOT", a, b, native, isa)
        seq += _raw_translate("CNOT", b, a, native, isa)
        seq += _raw_translate("CNOT", a, b, native, isa)
        return seq
    if name == native:
        return _oriented(native, a, b, isa)
    if name == "CNOT" and native == "CZ":
        return [(h, (b,))] + _oriented("CZ", a, b, isa) + [(h, (b,))]
    if name == "CZ" and native == "CNOT":
        # CZ is symmetric: sandwich H on whichever side gives a native direction
        if isa.has_edge(a, b):
            return [(h, (b,)), (GateKind("CNOT"), (a, b)), (h, (b,))]
        return [(h, (a,)), (GateKind("CNOT"), (b, a)), (h, (a,))]
    raise ValueError(f"cannot translate {name} into native {native}")
