"""Compiler targets: a named basis gate set plus a coupling graph.

Descriptor files are JSON with fields name, num_qubits, directed, edges, and
basis (a list of {"gate": name, "params": "free" | "quarter-pi" | [numbers]}).
``load_isa`` resolves builtin names, literal paths, and names found on the
``QSTACK_ISA_PATH`` search path.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from importlib import resources
from math import pi

from ..circuit import GATE_SPECS, GateKind

BUILTIN_ISAS = ("agave", "ibmqx5")

_QUARTER = pi / 2


@dataclass(frozen=True)
class BasisGate:
    """One basis entry: gate name plus its parameter constraint."""

    gate: str
    params: str | tuple[float, ...] = "free"

    def allows(self, kind: GateKind) -> bool:
        if kind.name != self.gate:
            return False
        if not kind.params:
            return True
        if self.params == "free":
            return True
        if self.params == "quarter-pi":
            return all(
                abs(p / _QUARTER - round(p / _QUARTER)) < 1e-9 for p in kind.params
            )
        return all(
            any(abs(p - allowed) < 1e-12 for allowed in self.params)
            for p in kind.params
        )


@dataclass(frozen=True)
class Isa:
    name: str
    num_qubits: int
    edges: tuple[tuple[int, int], ...]
    directed: bool
    basis: tuple[BasisGate, ...]

    def __post_init__(self) -> None:
        seen = set()
        canon = []
        for a, b in self.edges:
            if a == b:
                raise ValueError(f"self-loop edge ({a}, {b})")
            if not (0 <= a < self.num_qubits and 0 <= b < self.num_qubits):
                raise ValueError(f"edge ({a}, {b}) out of range for {self.num_qubits} qubits")
            if not self.directed and a > b:
                a, b = b, a
            if (a, b) not in seen:
                seen.add((a, b))
                canon.append((a, b))
        object.__setattr__(self, "edges", tuple(canon))
        for bg in self.basis:
            if bg.gate not in GATE_SPECS:
                raise ValueError(f"unknown basis gate {bg.gate!r}")

    @property
    def edge_set(self) -> frozenset:
        return frozenset(self.edges)

    def has_edge(self, a: int, b: int) -> bool:
        """Native orientation check (order matters when directed)."""
        if self.directed:
            return (a, b) in self.edge_set
        return (min(a, b), max(a, b)) in self.edge_set

    def adjacent(self, a: int, b: int) -> bool:
        return self.has_edge(a, b) or self.has_edge(b, a)

    def neighbors(self, q: int) -> list[int]:
        out = set()
        for a, b in self.edges:
            if a == q:
                out.add(b)
            elif b == q:
                out.add(a)
        return sorted(out)

    def allows(self, kind: GateKind) -> bool:
        return any(bg.allows(kind) for bg in self.basis)

    def basis_names(self) -> set[str]:
        return {bg.gate for bg in self.basis}

    def two_qubit_native(self) -> str:
        native = [n for n in self.basis_names() if GATE_SPECS[n][1] == 2]
        if len(native) != 1:
            raise ValueError(
                f"ISA {self.name!r} must expose exactly one two-qubit basis gate, "
                f"found {sorted(native)}"
            )
        return native[0]

    def one_qubit_style(self) -> str:
        """Single-qubit synthesis family: 'pulse' (Rz/Rx) or 'u' (U1/U2/U3)."""
        names = self.basis_names()
        if {"Rx", "Rz"} <= names:
            return "pulse"
        if {"U1", "U2", "U3"} <= names:
            return "u"
        raise ValueError(
            f"ISA {self.name!r} has no supported single-qubit basis family"
        )


def _from_dict(raw: dict, source: str) -> Isa:
    try:
        name = raw["name"]
        num_qubits = int(raw["num_qubits"])
        directed = bool(raw["directed"])
        edges = tuple((int(a), int(b)) for a, b in raw["edges"])
        basis = []
        for entry in raw["basis"]:
            params = entry.get("params", [])
            if isinstance(params, list):
                params = tuple(float(p) for p in params)
            elif params not in ("free", "quarter-pi"):
                raise ValueError(f"bad params constraint {params!r}")
            basis.append(BasisGate(entry["gate"], params))
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed ISA descriptor {source}: {exc}") from exc
    return Isa(name, num_qubits, edges, directed, tuple(basis))


def _load_json(text: str, source: str) -> Isa:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(
            f"malformed ISA descriptor {source}: line {exc.lineno}, "
            f"column {exc.colno}: {exc.msg}"
        ) from exc
    return _from_dict(raw, source)


def load_isa(descriptor: str) -> Isa:
    """Resolve ``descriptor`` as a builtin name, a file path, or a name on
    QSTACK_ISA_PATH, and load it."""
    if descriptor in BUILTIN_ISAS:
        text = (
            resources.files("qstack.compiler").joinpath(f"data/{descriptor}.json").read_text()
        )
        return _load_json(text, f"builtin:{descriptor}")
    if os.path.exists(descriptor):
        with open(descriptor, encoding="utf-8") as fh:
            return _load_json(fh.read(), descriptor)
    search = os.environ.get("QSTACK_ISA_PATH", "")
    for directory in filter(None, search.split(os.pathsep)):
        candidate = os.path.join(directory, f"{descriptor}.json")
        if os.path.exists(candidate):
            with open(candidate, encoding="utf-8") as fh:
                return _load_json(fh.read(), candidate)
    raise ValueError(
        f"unknown ISA {descriptor!r}: not a builtin ({', '.join(BUILTIN_ISAS)}), "
        "not a file, and not found on QSTACK_ISA_PATH"
    )
