"""CLI: exit codes, pipeline safety, subcommand behavior."""

import json

import pytest

from qstack.cli import main

LISTING_4 = "H 0\nMEASURE 0 [0]\n"
LISTING_6 = (
    "OPENQASM 2.0;\n"
    'include "qelib1.inc";\n'
    "qreg q0[1];\n"
    "creg c0[1];\n"
    "h q0[0];\n"
    "measure q0[0] -> c0[0];\n"
)


@pytest.fixture
def rb_quil(tmp_path):
    p = tmp_path / "rb.quil"
    p.write_text(LISTING_4)
    return str(p)


@pytest.fixture
def bell_qasm(tmp_path):
    p = tmp_path / "bell.qasm"
    p.write_text(
        'OPENQASM 2.0;\ninclude "qelib1.inc";\nqreg q0[2];\n'
        "h q0[0];\ncx q0[0],q0[1];\n"
    )
    return str(p)


class TestExitCodes:
    def test_success(self, rb_quil, capsys):
        assert main(["parse", "--in", rb_quil]) == 0

    def test_usage_error_unknown_flag(self, capsys):
        assert main(["parse", "--nope"]) == 1

    def test_usage_error_missing_dialect(self, tmp_path, capsys):
        p = tmp_path / "circ.txt"
        p.write_text(LISTING_4)
        assert main(["parse", "--in", str(p)]) == 1
        err = capsys.readouterr().err
        assert "dialect" in err

    def test_parse_error_exits_2(self, tmp_path, capsys):
        p = tmp_path / "bad.quil"
        p.write_text("FROB 0\n")
        assert main(["parse", "--in", str(p)]) == 2
        out, err = capsys.readouterr()
        assert out == ""            # diagnostics never touch stdout
        assert "FROB" in err

    def test_missing_file_exits_2(self, capsys):
        assert main(["parse", "--in", "/no/such/file.quil"]) == 2


class TestSubcommands:
    def test_parse_summary(self, rb_quil, capsys):
        assert main(["parse", "--in", rb_quil]) == 0
        out = json.loads(capsys.readouterr().out)
        assert out == {"qubits": 1, "clbits": 1, "instructions": 2}

    def test_emit_listing6(self, rb_quil, capsys):
        assert main(["emit", "--in", rb_quil, "--dialect", "qasm"]) == 0
        assert capsys.readouterr().out == LISTING_6

    def test_emit_requires_dialect(self, rb_quil, capsys):
        assert main(["emit", "--in", rb_quil]) == 1

    def test_run_counts_json(self, rb_quil, capsys):
        assert main(["run", "--in", rb_quil, "--shots", "1", "--seed", "7"]) == 0
        out = json.loads(capsys.readouterr().out)
        assert out["shots"] == 1
        assert set(out) - {"shots"} <= {"0", "1"}

    def test_run_pyquil_style(self, rb_quil, capsys):
        assert main(["run", "--in", rb_quil, "--shots", "3", "--seed", "7",
                     "--pyquil-style"]) == 0
        records = json.loads(capsys.readouterr().out)
        assert len(records) == 3 and all(r in ([0], [1]) for r in records)

    def test_run_amplitudes_rejects_measured(self, rb_quil, capsys):
        assert main(["run", "--in", rb_quil, "--amplitudes"]) == 2

    def test_run_amplitudes(self, bell_qasm, capsys):
        assert main(["run", "--in", bell_qasm, "--amplitudes"]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "index,re,im" and len(lines) == 5

    def test_compile_to_file(self, bell_qasm, tmp_path, capsys):
        out = tmp_path / "bell-agave.quil"
        assert main(["compile", "--in", bell_qasm, "--isa", "agave",
                     "--out", str(out)]) == 0
        text = out.read_text()
        assert "CZ 0 1" in text
        assert set(l.split()[0].split("(")[0] for l in text.splitlines()) <= {"RZ", "RX", "CZ"}
        # compiled output parses as quil and passes the validator
        from qstack.compiler import load_isa, validate_compiled
        from qstack.lang import parse_quil

        compiled = parse_quil(text)
        assert validate_compiled(compiled, load_isa("agave")) == []

    def test_compile_report_on_stderr(self, bell_qasm, capsys):
        assert main(["compile", "--in", bell_qasm, "--isa", "ibmqx5",
                     "--dialect", "qasm", "--report"]) == 0
        out, err = capsys.readouterr()
        assert out.startswith("OPENQASM 2.0;")
        report = json.loads(err.strip().splitlines()[-1])
        assert report["phase_distance"] < 1e-10

    def test_compile_unknown_isa(self, bell_qasm, capsys):
        assert main(["compile", "--in", bell_qasm, "--isa", "fantasy"]) == 2

    def test_draw(self, rb_quil, capsys):
        assert main(["draw", "--in", rb_quil]) == 0
        assert capsys.readouterr().out == "q0: ─[H]─[M→c0]─\n"

    def test_resources_text_and_json(self, rb_quil, capsys):
        assert main(["resources", "--in", rb_quil]) == 0
        text = capsys.readouterr().out
        assert "gates.H:" in text and "depth:" in text
        assert main(["resources", "--in", rb_quil, "--json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload == {
            "gate_counts": {"H": 1},
            "measurement_count": 1,
            "depth": 2,
        }

    def test_bench_csv(self, capsys):
        assert main(["bench", "--qubits", "2:3", "--depth", "1", "--reps", "1"]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "n,depth,runtime_s,backend,fusion"
        assert len(lines) == 3

    def test_bench_large_guard(self, capsys):
        assert main(["bench", "--qubits", "25", "--depth", "1"]) == 1

    def test_determinism_across_invocations(self, rb_quil, capsys):
        main(["run", "--in", rb_quil, "--shots", "50", "--seed", "9"])
        first = capsys.readouterr().out
        main(["run", "--in", rb_quil, "--shots", "50", "--seed", "9"])
        assert capsys.readouterr().out == first
