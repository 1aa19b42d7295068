"""Benchmark harness: the layered H / sqrt(X) / CNOT-fan circuit family and
timed sweeps over (qubits, depth).

Each level applies H to every qubit, sqrt(X) to every qubit, then CNOT(q, q0)
for every q != q0; measurements of all qubits come after the last level. Only
the execute phase is timed (circuit construction is excluded), so numbers are
comparable in kind across machines, never in value.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from statistics import median

from .circuit import SQRTX, Circuit
from .sim.kernels import get_kernels
from .sim.statevector import RunConfig, run_statevector

CSV_HEADER = "n,depth,runtime_s,backend,fusion"


@dataclass
class BenchRow:
    n: int
    depth: int
    runtime: float | None
    backend: str
    fusion: bool
    error: str | None = None

    def csv_line(self) -> str:
        rt = "" if self.runtime is None else repr(self.runtime)
        return f"{self.n},{self.depth},{rt},{self.backend},{str(self.fusion).lower()}"


def benchmark_circuit(n: int, levels: int) -> Circuit:
    if n < 2:
        raise ValueError("benchmark circuit needs at least 2 qubits")
    if levels < 1:
        raise ValueError("levels must be >= 1")
    c = Circuit(n, n)
    for _ in range(levels):
        for q in range(n):
            c.h(q)
        for q in range(n):
            c.gate(SQRTX, q)
        for q in range(1, n):
            c.cnot(q, 0)
    for q in range(n):
        c.measure(q, q)
    return c


def run_sweep(
    n_range,
    depth_range,
    cfg: RunConfig,
    fusion: bool = False,
    reps: int = 3,
    kernel: str = "auto",
) -> list[BenchRow]:
    """One row per grid point in row-major order (n outer, depth inner).

    Each point runs ``reps`` timed single-shot executions and reports the
    median. Out-of-memory points produce a row with runtime None instead of
    crashing the sweep.
    """
    n_range = list(n_range)
    depth_range = list(depth_range)
    if not n_range or not depth_range:
        raise ValueError("sweep ranges must be nonempty")
    if cfg.backend != "statevector":
        raise ValueError("sweeps run on the statevector backend")
    kernels = get_kernels(kernel)
    backend_id = f"statevector-{kernels.NAME}"
    shot_cfg = RunConfig(shots=1, seed=cfg.seed, backend="statevector", fusion=fusion)
    rows = []
    for n in n_range:
        for depth in depth_range:
            try:
                circuit = benchmark_circuit(n, depth)
                times = []
                for _ in range(max(1, reps)):
                    start = time.perf_counter()
                    run_statevector(circuit, shot_cfg, kernels=kernels)
                    times.append(time.perf_counter() - start)
                rows.append(BenchRow(n, depth, median(times), backend_id, fusion))
            except MemoryError as exc:
                rows.append(
                    BenchRow(n, depth, None, backend_id, fusion, error=f"out of memory: {exc}")
                )
    return rows


def rows_to_csv(rows: list[BenchRow]) -> str:
    return "".join(line + "\n" for line in [CSV_HEADER] + [r.csv_line() for r in rows])
