"""Pure-numpy gate application kernels (fallback for the compiled extension).

All kernels mutate ``state`` (a C-contiguous complex128 array of length 2**n)
in place. Qubit k is bit k of the state index. For two-qubit kernels the first
listed qubit is the more significant bit of the 4x4 matrix index.
"""

from __future__ import annotations

import numpy as np

NAME = "python"


def _split(state: np.ndarray, q: int) -> np.ndarray:
    """View shaped (high, 2, low) with axis 1 = qubit q."""
    n = state.size
    low = 1 << q
    return state.reshape(n // (2 * low), 2, low)


def apply_1q(state: np.ndarray, m: np.ndarray, q: int) -> None:
    v = _split(state, q)
    a0 = m[0, 0] * v[:, 0, :] + m[0, 1] * v[:, 1, :]
    a1 = m[1, 0] * v[:, 0, :] + m[1, 1] * v[:, 1, :]
    v[:, 0, :] = a0
    v[:, 1, :] = a1


def apply_2q(state: np.ndarray, m: np.ndarray, qa: int, qb: int) -> None:
    n = state.size.bit_length() - 1
    v = state.reshape([2] * n)
    # axis n-1-k corresponds to qubit k; qa goes first (more significant)
    sub = np.moveaxis(v, (n - 1 - qa, n - 1 - qb), (0, 1))
    flat = sub.reshape(4, -1)  # copies when non-contiguous; result written back below
    sub[...] = (m @ flat).reshape(sub.shape)


def apply_cnot(state: np.ndarray, c: int, t: int) -> None:
    n = state.size.bit_length() - 1
    v = state.reshape([2] * n)
    ac, at = n - 1 - c, n - 1 - t
    idx0 = [slice(None)] * n
    idx1 = [slice(None)] * n
    idx0[ac] = idx1[ac] = 1
    idx0[at], idx1[at] = 0, 1
    i0, i1 = tuple(idx0), tuple(idx1)
    tmp = v[i0].copy()
    v[i0] = v[i1]
    v[i1] = tmp


def apply_cz(state: np.ndarray, a: int, b: int) -> None:
    n = state.size.bit_length() - 1
    v = state.reshape([2] * n)
    idx = [slice(None)] * n
    idx[n - 1 - a] = 1
    idx[n - 1 - b] = 1
    v[tuple(idx)] *= -1.0


def apply_swap(state: np.ndarray, a: int, b: int) -> None:
    n = state.size.bit_length() - 1
    v = state.reshape([2] * n)
    aa, ab = n - 1 - a, n - 1 - b
    idx0 = [slice(None)] * n
    idx1 = [slice(None)] * n
    idx0[aa], idx0[ab] = 0, 1
    idx1[aa], idx1[ab] = 1, 0
    i0, i1 = tuple(idx0), tuple(idx1)
    tmp = v[i0].copy()
    v[i0] = v[i1]
    v[i1] = tmp


def prob_one(state: np.ndarray, q: int) -> float:
    v = _split(state, q)
    branch = v[:, 1, :]
    return float(np.real(branch * branch.conj()).sum())


def collapse(state: np.ndarray, q: int, outcome: int, prob: float) -> None:
    """Project qubit q onto ``outcome`` and renormalize by 1/sqrt(prob)."""
    v = _split(state, q)
    v[:, 1 - outcome, :] = 0.0
    v[:, outcome, :] *= 1.0 / np.sqrt(prob)
