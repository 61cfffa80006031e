"""Spin operators for a single site of arbitrary spin s.

All matrices live in the eigenbasis of Sz with magnetic quantum numbers
ordered descending, m = s, s-1, ..., -s.  Units have hbar = 1, so a
spin-1/2 site gets the Pauli matrices over two.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

_HALF_INT_TOL = 1e-9


@dataclass(frozen=True)
class SpinOperators:
    """The triple (Sx, Sy, Sz) for one site, plus the spin value itself."""

    s: float
    sx: np.ndarray
    sy: np.ndarray
    sz: np.ndarray

    @property
    def dim(self) -> int:
        return self.sz.shape[0]


def spin_dimension(s) -> int:
    """Multiplet size 2s+1, validating that s is a positive half-integer."""
    two_s = 2.0 * float(s)
    if abs(two_s - round(two_s)) > _HALF_INT_TOL or round(two_s) < 1:
        raise ValueError(f"spin must be a positive half-integer, got {s!r}")
    return int(round(two_s)) + 1


def make_spin_operators(s) -> SpinOperators:
    """Build (Sx, Sy, Sz) for spin s from the ladder operators.

    S+ has matrix elements <m+1|S+|m> = sqrt(s(s+1) - m(m+1)); with the
    descending-m ordering these sit on the superdiagonal.  Then
    Sx = (S+ + S-)/2 and Sy = (S+ - S-)/(2i), both Hermitian, and Sz is
    diagonal with entries s, s-1, ..., -s.
    """
    dim = spin_dimension(s)
    sval = float(s)
    m = sval - np.arange(dim)  # descending: s, s-1, ..., -s

    s_plus = np.zeros((dim, dim), dtype=complex)
    for k in range(dim - 1):
        # column k+1 holds |m[k+1]> and S+ raises it to |m[k]>
        s_plus[k, k + 1] = np.sqrt(sval * (sval + 1.0) - m[k + 1] * (m[k + 1] + 1.0))
    s_minus = s_plus.conj().T

    sx = 0.5 * (s_plus + s_minus)
    sy = -0.5j * (s_plus - s_minus)
    sz = np.diag(m.astype(complex))
    return SpinOperators(s=sval, sx=sx, sy=sy, sz=sz)
