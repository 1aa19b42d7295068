from .errors import ParseError, UnsupportedConstructError
from .qasm import emit_qasm, parse_qasm
from .quil import emit_quil, parse_quil

__all__ = [
    "ParseError",
    "UnsupportedConstructError",
    "emit_qasm",
    "emit_quil",
    "parse_qasm",
    "parse_quil",
]
