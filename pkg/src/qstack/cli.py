"""Command-line entry point: parse, emit, compile, run, bench, draw, resources.

Exit codes: 0 success, 1 usage error, 2 parse/compile/run error. Data goes to
stdout (or --out); diagnostics go to stderr only.
"""

from __future__ import annotations

import argparse
import json
import sys

from .bench import rows_to_csv, run_sweep
from .circuit import Circuit, estimate_resources
from .compiler import compile_circuit, load_isa, validate_compiled
from .draw import draw_ascii
from .lang import ParseError, UnsupportedConstructError, emit_qasm, emit_quil, parse_qasm, parse_quil
from .sim import (
    RunConfig,
    amplitudes_csv,
    get_statevector,
    run_shots,
    run_statevector,
    run_unitary,
    statevector_from_unitary,
)

USAGE_ERROR = 1
WORK_ERROR = 2


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage problems; the CLI contract wants 1
    def error(self, message):
        raise _UsageError(message)


def _infer_dialect(path: str) -> str | None:
    if path.endswith(".quil"):
        return "quil"
    if path.endswith(".qasm"):
        return "qasm"
    return None


def _read_circuit(path: str, dialect: str | None) -> Circuit:
    dialect = dialect or _infer_dialect(path)
    if dialect is None:
        raise _UsageError(
            f"cannot infer dialect from {path!r}; pass --dialect/--from quil|qasm"
        )
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise RuntimeError(f"cannot read {path}: {exc}") from exc
    return parse_quil(text) if dialect == "quil" else parse_qasm(text)


def _emit(circuit: Circuit, dialect: str) -> str:
    return emit_quil(circuit) if dialect == "quil" else emit_qasm(circuit)


def _write_output(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _parse_range(spec: str) -> range:
    lo, sep, hi = spec.partition(":")
    try:
        if sep:
            return range(int(lo), int(hi) + 1)
        return range(int(lo), int(lo) + 1)
    except ValueError:
        raise _UsageError(f"bad range {spec!r}; use A or A:B") from None


def _add_io(p: argparse.ArgumentParser, dialect_help: str) -> None:
    p.add_argument("--in", dest="input", required=True, help="input circuit file")
    p.add_argument("--out", help="output file (default: stdout)")
    p.add_argument("--dialect", choices=("quil", "qasm"), help=dialect_help)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="qstack", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("parse", help="parse and validate a circuit file")
    _add_io(sp, "input dialect override (default: from extension)")

    sp = sub.add_parser("emit", help="re-emit a circuit in a chosen dialect")
    _add_io(sp, "target dialect (required)")
    sp.add_argument("--from", dest="from_dialect", choices=("quil", "qasm"),
                    help="input dialect override (default: from extension)")

    sp = sub.add_parser("compile", help="lower a circuit onto an ISA")
    _add_io(sp, "output dialect (default: from --out extension, else input)")
    sp.add_argument("--from", dest="from_dialect", choices=("quil", "qasm"),
                    help="input dialect override (default: from extension)")
    sp.add_argument("--isa", required=True, help="agave, ibmqx5, or a descriptor path")
    sp.add_argument("--report", action="store_true",
                    help="print layout/phase-distance JSON to stderr")

    sp = sub.add_parser("run", help="simulate a circuit")
    _add_io(sp, "input dialect override (default: from extension)")
    sp.add_argument("--shots", type=int, default=1024)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--backend", choices=("statevector", "unitary"), default="statevector")
    sp.add_argument("--fusion", action="store_true", help="fuse single-qubit gate runs")
    sp.add_argument("--pyquil-style", action="store_true",
                    help="print a list of per-shot classical registers instead of counts")
    sp.add_argument("--amplitudes", action="store_true",
                    help="print the final state as CSV (measurement-free circuits only)")

    sp = sub.add_parser("bench", help="timed sweep over the benchmark circuit family")
    sp.add_argument("--qubits", required=True, help="qubit range A or A:B")
    sp.add_argument("--depth", required=True, help="depth range A or A:B")
    sp.add_argument("--reps", type=int, default=3)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--fusion", action="store_true")
    sp.add_argument("--kernel", choices=("auto", "native", "python", "both"), default="auto")
    sp.add_argument("--large", action="store_true",
                    help="allow more than 24 qubits (needs several GB of RAM)")
    sp.add_argument("--out", help="output CSV file (default: stdout)")

    sp = sub.add_parser("draw", help="render a circuit as text")
    _add_io(sp, "input dialect override (default: from extension)")

    sp = sub.add_parser("resources", help="gate counts, measurements, depth")
    _add_io(sp, "input dialect override (default: from extension)")
    sp.add_argument("--json", action="store_true", dest="as_json")

    return p


def _cmd_parse(args) -> None:
    circuit = _read_circuit(args.input, args.dialect)
    summary = {
        "qubits": circuit.num_qubits,
        "clbits": circuit.num_clbits,
        "instructions": len(circuit.instructions),
    }
    _write_output(json.dumps(summary) + "\n", args.out)


def _cmd_emit(args) -> None:
    if args.dialect is None:
        raise _UsageError("emit needs --dialect quil|qasm")
    circuit = _read_circuit(args.input, args.from_dialect)
    _write_output(_emit(circuit, args.dialect), args.out)


def _cmd_compile(args) -> None:
    out_dialect = args.dialect
    if out_dialect is None and args.out:
        out_dialect = _infer_dialect(args.out)
    circuit = _read_circuit(args.input, args.from_dialect)
    if out_dialect is None:
        out_dialect = args.from_dialect or _infer_dialect(args.input)
    isa = load_isa(args.isa)
    compiled = compile_circuit(circuit, isa)
    problems = validate_compiled(compiled.circuit, isa)
    if problems:
        raise RuntimeError("compiled circuit failed validation: " + "; ".join(problems))
    if args.report:
        report = {
            "isa": isa.name,
            "phase_distance": compiled.phase_distance,
            "initial_layout": {str(k): v for k, v in sorted(compiled.initial_layout.items())},
            "final_layout": {str(k): v for k, v in sorted(compiled.final_layout.items())},
        }
        print(json.dumps(report), file=sys.stderr)
    _write_output(_emit(compiled.circuit, out_dialect), args.out)


def _cmd_run(args) -> None:
    circuit = _read_circuit(args.input, args.dialect)
    cfg = RunConfig(
        shots=args.shots, seed=args.seed, backend=args.backend, fusion=args.fusion
    )
    if args.amplitudes:
        if args.backend == "statevector":
            state = get_statevector(circuit, fusion=args.fusion)
        else:
            state = statevector_from_unitary(circuit)
        _write_output(amplitudes_csv(state), args.out)
        return
    if args.pyquil_style:
        if args.backend != "statevector":
            raise _UsageError("--pyquil-style needs the statevector backend")
        records = run_shots(circuit, cfg)
        _write_output(json.dumps(records) + "\n", args.out)
        return
    if args.backend == "statevector":
        counts = run_statevector(circuit, cfg)
    else:
        counts = run_unitary(circuit, cfg)
    _write_output(json.dumps(counts.to_json_dict()) + "\n", args.out)


def _cmd_bench(args) -> None:
    n_range = _parse_range(args.qubits)
    depth_range = _parse_range(args.depth)
    if not args.large and n_range and max(n_range) > 24:
        raise _UsageError("sweeps above 24 qubits need --large (several GB of RAM)")
    cfg = RunConfig(shots=1, seed=args.seed)
    kernels = ("native", "python") if args.kernel == "both" else (args.kernel,)
    rows = []
    for kernel in kernels:
        rows.extend(
            run_sweep(n_range, depth_range, cfg, fusion=args.fusion,
                      reps=args.reps, kernel=kernel)
        )
    for row in rows:
        if row.error:
            print(f"n={row.n} depth={row.depth}: {row.error}", file=sys.stderr)
    _write_output(rows_to_csv(rows), args.out)


def _cmd_draw(args) -> None:
    circuit = _read_circuit(args.input, args.dialect)
    _write_output(draw_ascii(circuit), args.out)


def _cmd_resources(args) -> None:
    circuit = _read_circuit(args.input, args.dialect)
    report = estimate_resources(circuit)
    if args.as_json:
        payload = {
            "gate_counts": dict(sorted(report.gate_counts.items())),
            "measurement_count": report.measurement_count,
            "depth": report.depth,
        }
        _write_output(json.dumps(payload) + "\n", args.out)
        return
    rows = [("qubits", circuit.num_qubits), ("clbits", circuit.num_clbits)]
    rows += [(f"gates.{name}", count) for name, count in sorted(report.gate_counts.items())]
    rows += [
        ("gates.total", report.total_gates()),
        ("measurements", report.measurement_count),
        ("depth", report.depth),
    ]
    width = max(len(k) for k, _ in rows) + 1
    text = "".join(f"{(k + ':').ljust(width)} {v}\n" for k, v in rows)
    _write_output(text, args.out)


_COMMANDS = {
    "parse": _cmd_parse,
    "emit": _cmd_emit,
    "compile": _cmd_compile,
    "run": _cmd_run,
    "bench": _cmd_bench,
    "draw": _cmd_draw,
    "resources": _cmd_resources,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"qstack: {exc}", file=sys.stderr)
        return USAGE_ERROR
    try:
        _COMMANDS[args.command](args)
    except _UsageError as exc:
        print(f"qstack: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except (ParseError, UnsupportedConstructError, ValueError, RuntimeError) as exc:
        print(f"qstack: {exc}", file=sys.stderr)
        return WORK_ERROR
    except MemoryError:
        print("qstack: out of memory", file=sys.stderr)
        return WORK_ERROR
    return 0


if __name__ == "__main__":
    sys.exit(main())
