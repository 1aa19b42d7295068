"""Routing: SWAP insertion along BFS shortest paths.

Deterministic by construction: shortest paths break ties lexicographically,
and swaps always move the first operand toward the second, with no lookahead.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from ..circuit import GATE, Circuit, GateKind, Instruction
from .isa import Isa

_SWAP = GateKind("SWAP")


@dataclass
class RoutedCircuit:
    circuit: Circuit
    initial_layout: dict[int, int]
    final_layout: dict[int, int]


def shortest_path(isa: Isa, start: int, goal: int) -> list[int]:
    """Lexicographically smallest shortest path on the undirected coupling graph."""
    if start == goal:
        return [start]
    dist = {goal: 0}
    frontier = deque([goal])
    while frontier:
        v = frontier.popleft()
        for nb in isa.neighbors(v):
            if nb not in dist:
                dist[nb] = dist[v] + 1
                frontier.append(nb)
    if start not in dist:
        raise ValueError(
            f"no path between qubits {start} and {goal} on {isa.name}"
        )
    path = [start]
    current = start
    while current != goal:
        current = min(nb for nb in isa.neighbors(current) if dist.get(nb) == dist[current] - 1)
        path.append(current)
    return path


def route(circuit: Circuit, isa: Isa) -> RoutedCircuit:
    """Remap onto physical qubits, inserting SWAP chains for non-adjacent pairs.

    The initial placement is the identity; ``final_layout`` records the net
    permutation over all device qubits after the inserted swaps.
    """
    n = circuit.num_qubits
    if n > isa.num_qubits:
        raise ValueError(
            f"circuit needs {n} qubits but {isa.name} has {isa.num_qubits}"
        )
    size = isa.num_qubits
    l2p = list(range(size))
    p2l = list(range(size))
    out = Circuit(size, circuit.num_clbits)

    def do_swap(pa: int, pb: int) -> None:
        out.append(Instruction(GATE, (pa, pb), gate=_SWAP))
        la, lb = p2l[pa], p2l[pb]
        p2l[pa], p2l[pb] = lb, la
        l2p[la], l2p[lb] = pb, pa

    for instr in circuit.instructions:
        phys = tuple(l2p[q] for q in instr.qubits)
        if len(phys) == 2 and not isa.adjacent(*phys):
            path = shortest_path(isa, phys[0], phys[1])
            for i in range(len(path) - 2):
                do_swap(path[i], path[i + 1])
            phys = (path[-2], path[-1])
        out.append(
            Instruction(
                instr.op,
                phys,
                gate=instr.gate,
                clbit=instr.clbit,
                condition=instr.condition,
            )
        )
    return RoutedCircuit(
        out,
        {i: i for i in range(size)},
        {i: l2p[i] for i in range(size)},
    )
