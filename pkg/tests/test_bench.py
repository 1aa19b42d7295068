"""Benchmark harness: circuit family shape, sweep grid, CSV format."""

import pytest

import qstack.circuit as qc
from qstack.bench import CSV_HEADER, BenchRow, benchmark_circuit, rows_to_csv, run_sweep
from qstack.sim import RunConfig, run_statevector
from qstack.sim.kernels import HAVE_NATIVE


class TestBenchmarkCircuit:
    def test_n4_level1_counts(self):
        r = qc.estimate_resources(benchmark_circuit(4, 1))
        assert r.gate_counts == {"H": 4, "SqrtX": 4, "CNOT": 3}
        assert r.measurement_count == 4

    def test_n2_levels3_counts(self):
        r = qc.estimate_resources(benchmark_circuit(2, 3))
        assert r.gate_counts == {"H": 6, "SqrtX": 6, "CNOT": 3}

    def test_n16_levels10_shape(self):
        c = benchmark_circuit(16, 10)
        r = qc.estimate_resources(c)
        assert c.num_qubits == 16
        assert r.gate_counts == {"H": 160, "SqrtX": 160, "CNOT": 150}
        assert r.measurement_count == 16

    def test_gate_depth_excludes_measurements(self):
        # the unmeasured single level on 4 qubits schedules to 5 layers
        c = benchmark_circuit(4, 1)
        unmeasured = qc.Circuit(4, 0)
        for instr in c.instructions:
            if instr.op == "gate":
                unmeasured.gate(instr.gate, *instr.qubits)
        assert unmeasured.depth() == 5

    def test_minimum_size(self):
        with pytest.raises(ValueError):
            benchmark_circuit(1, 1)
        with pytest.raises(ValueError):
            benchmark_circuit(4, 0)


class TestRunSweep:
    def test_grid_complete_row_major(self):
        rows = run_sweep(range(2, 5), range(1, 3), RunConfig(shots=1, seed=0), reps=1)
        assert [(r.n, r.depth) for r in rows] == [
            (2, 1), (2, 2), (3, 1), (3, 2), (4, 1), (4, 2)
        ]
        assert all(r.runtime > 0 for r in rows)

    def test_empty_range_rejected(self):
        with pytest.raises(ValueError):
            run_sweep([], [1], RunConfig(shots=1, seed=0))

    def test_backend_must_be_statevector(self):
        with pytest.raises(ValueError):
            run_sweep([2], [1], RunConfig(shots=1, seed=0, backend="unitary"))

    @pytest.mark.skipif(not HAVE_NATIVE, reason="compiled kernels not built")
    def test_kernel_choice_changes_backend_id(self):
        cfg = RunConfig(shots=1, seed=0)
        nat = run_sweep([2], [1], cfg, kernel="native")[0]
        py = run_sweep([2], [1], cfg, kernel="python")[0]
        assert nat.backend == "statevector-native"
        assert py.backend == "statevector-python"

    def test_fusion_changes_runtime_not_counts(self):
        c = benchmark_circuit(6, 4)
        cfg = RunConfig(shots=64, seed=123)
        plain = run_statevector(c, RunConfig(shots=64, seed=123, fusion=False))
        fused = run_statevector(c, RunConfig(shots=64, seed=123, fusion=True))
        assert plain.counts == fused.counts


class TestCsv:
    def test_header_and_layout(self):
        rows = [BenchRow(2, 1, 0.5, "statevector-native", False)]
        text = rows_to_csv(rows)
        lines = text.splitlines()
        assert lines[0] == CSV_HEADER == "n,depth,runtime_s,backend,fusion"
        assert lines[1] == "2,1,0.5,statevector-native,false"

    def test_absent_runtime_serializes_empty(self):
        row = BenchRow(30, 1, None, "statevector-native", True, error="out of memory")
        assert row.csv_line() == "30,1,,statevector-native,true"

    def test_decimal_point_not_locale(self):
        row = BenchRow(2, 1, 1.25, "b", False)
        assert "1.25" in row.csv_line() and "," not in row.csv_line().split(",")[2]
