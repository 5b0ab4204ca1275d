"""Hot kernels for batched modular power sums, with numba and numpy backends.

The workhorse is `power_sums`: for an odd prime p and per-residue coefficients
c_1..c_(p-1)/2 it returns

    S(2n) = sum_j c_j * j**(2n-1)  mod p      for 2n = 2, 4, ..., p-3,

maintained as a running geometric progression per j so the inner loop is one
multiply-add plus one modular multiply.

Backend selection: set GENOCCHI_BACKEND=numpy to force the pure-numpy path,
GENOCCHI_BACKEND=numba to require the jitted path; by default numba is used
when importable. Both paths are exact integer arithmetic (the jitted kernel
works in float64, which is exact here: all products stay below p**2 and the
accumulator below p**3/2, hence below 2**53 for p <= MAX_KERNEL_PRIME).
"""

from __future__ import annotations

import os

import numpy as np

__all__ = [
    "MAX_KERNEL_PRIME",
    "active_backend",
    "half_coefficients",
    "power_sums",
    "power_sums_numpy",
]

#: largest supported prime: p**3 / 2 must stay below 2**53
MAX_KERNEL_PRIME = 250_000

_FORCED = os.environ.get("GENOCCHI_BACKEND", "").strip().lower()
if _FORCED not in ("", "numba", "numpy"):
    raise RuntimeError(f"GENOCCHI_BACKEND must be 'numba' or 'numpy', got {_FORCED!r}")

if _FORCED == "numpy":
    _HAVE_NUMBA = False
else:
    try:
        from numba import njit

        _HAVE_NUMBA = True
    except ImportError:
        if _FORCED == "numba":
            raise
        _HAVE_NUMBA = False


def active_backend() -> str:
    """Name of the backend `power_sums` dispatches to ('numba' or 'numpy')."""
    return "numba" if _HAVE_NUMBA else "numpy"


def half_coefficients(p: int, mult: int) -> np.ndarray:
    """Folded coefficient vector for the power sums of an odd prime p.

    Pairing j with p - j turns sum_{j<p} j**(2n-1) * floor(j*mult/p) into a
    half-range sum with coefficients (2*floor(j*mult/p) - mult + 1) mod p.
    """
    if p < 3 or p % 2 == 0:
        raise ValueError(f"p must be an odd prime, got {p}")
    j = np.arange(1, (p + 1) // 2, dtype=np.int64)
    floors = (j * mult) // p
    return ((2 * floors - mult + 1) % p).astype(np.int64)


def power_sums_numpy(p: int, coeffs: np.ndarray) -> np.ndarray:
    """Pure-numpy power sums, exact in uint64."""
    _check_kernel_args(p, coeffs)
    m = (p - 3) // 2
    out = np.empty(m, dtype=np.int64)
    j = np.arange(1, (p + 1) // 2, dtype=np.uint64)
    pw = j.copy()
    sq = (j * j) % p
    c = coeffs.astype(np.uint64)
    for n in range(m):
        # products < 2**36 and the half-range has < 2**17 terms: no overflow
        out[n] = int((c * pw).sum() % p)
        pw = (pw * sq) % p
    return out


if _HAVE_NUMBA:

    @njit("int64[:](int64, int64[:])", cache=True, nogil=True, fastmath=True)
    def _power_sums_numba(p, coeffs):  # pragma: no cover - exercised via wrapper
        half = coeffs.shape[0]
        m = (p - 3) // 2
        out = np.empty(m, np.int64)
        pf = float(p)
        inv_p = 1.0 / pf
        c = coeffs.astype(np.float64)
        pw = np.empty(half, np.float64)
        sq = np.empty(half, np.float64)
        for i in range(half):
            j = float(i + 1)
            pw[i] = j
            t = j * j
            t -= np.floor(t * inv_p) * pf
            if t >= pf:
                t -= pf
            sq[i] = t
        for n in range(m):
            acc = 0.0
            for i in range(half):
                acc += c[i] * pw[i]
                t = pw[i] * sq[i]
                t -= np.floor(t * inv_p) * pf
                if t >= pf:
                    t -= pf
                pw[i] = t
            out[n] = np.int64(acc) % p
        return out


def power_sums(p: int, coeffs: np.ndarray) -> np.ndarray:
    """S(2n) mod p for 2n = 2 .. p-3, dispatched to the active backend."""
    if _HAVE_NUMBA:
        _check_kernel_args(p, coeffs)
        return _power_sums_numba(np.int64(p), np.ascontiguousarray(coeffs, dtype=np.int64))
    return power_sums_numpy(p, coeffs)


def _check_kernel_args(p: int, coeffs: np.ndarray) -> None:
    if p < 3 or p % 2 == 0:
        raise ValueError(f"p must be an odd prime, got {p}")
    if p > MAX_KERNEL_PRIME:
        raise ValueError(f"p={p} exceeds the kernel exactness bound {MAX_KERNEL_PRIME}")
    if coeffs.shape[0] != (p - 1) // 2:
        raise ValueError(f"expected {(p - 1) // 2} coefficients, got {coeffs.shape[0]}")
