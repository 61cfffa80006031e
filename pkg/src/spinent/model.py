"""Heisenberg exchange cell: Hamiltonian, spectrum, and Gibbs states.

The system is a pair of spins s1 and s2 coupled isotropically,

    H = -J (Sx1 Sx2 + Sy1 Sy2 + Sz1 Sz2),

with J < 0 antiferromagnetic in this sign convention.  The product basis
orders site 1 slow and site 2 fast, each site with Sz descending; for the
default spin-1/2 x spin-1 cell that is

    |a,1>, |a,0>, |a,-1>, |b,1>, |b,0>, |b,-1>

with a/b the qubit up/down states.  For that cell everything thermal has a
closed form, which the functions below expose next to the generic spectral
route so the two can be checked against each other.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .linalg import SpectralDecomposition, hermitian_eigendecompose, kron
from .spin import make_spin_operators, spin_dimension

_SQRT2 = math.sqrt(2.0)

# Past this value of beta*|J| the unnormalized closed-form weights would
# overflow a double (exp(709) is roughly the ceiling), so thermal states are
# computed as their zero-temperature limit instead.  The limit is reached to
# double precision long before the clamp engages.
BETA_OVERFLOW = 700.0


@dataclass(frozen=True)
class SpinSystem:
    """Two exchange-coupled spins with coupling J and Boltzmann constant kB.

    Temperatures are measured in units of J/kB unless kB is set to a
    physical value.  Defaults give the spin-1/2 x spin-1 antiferromagnetic
    cell with J = -1 and kB = 1.
    """

    s1: float = 0.5
    s2: float = 1.0
    J: float = -1.0
    kB: float = 1.0

    def __post_init__(self) -> None:
        spin_dimension(self.s1)
        spin_dimension(self.s2)
        if not (self.kB > 0.0):
            raise ValueError(f"kB must be positive, got {self.kB!r}")

    @property
    def dim1(self) -> int:
        return spin_dimension(self.s1)

    @property
    def dim2(self) -> int:
        return spin_dimension(self.s2)

    @property
    def dim(self) -> int:
        return self.dim1 * self.dim2

    @property
    def has_closed_form(self) -> bool:
        """True for the spin-1/2 x spin-1 cell all closed forms cover."""
        return self.dim1 == 2 and self.dim2 == 3


@dataclass(frozen=True)
class GibbsClosedForm:
    """Closed-form Gibbs matrix entries (v, x, y, w) and partition sum Z.

    With beta = 1/(kB T) and the spin-1/2 x spin-1 cell,

        v = exp(beta J / 2)
        x = (exp(-beta J) + 2 exp(beta J / 2)) / 3
        y = (2 exp(-beta J) + exp(beta J / 2)) / 3
        w = sqrt(2) (exp(beta J / 2) - exp(-beta J)) / 3
        Z = 4 exp(beta J / 2) + 2 exp(-beta J)

    At T = 0, and for beta*|J| past the overflow clamp, the record stores
    the already-normalized limiting entries with Z = 1.
    """

    v: float
    x: float
    y: float
    w: float
    Z: float

    def normalized(self) -> tuple[float, float, float, float]:
        """Entries of the density matrix itself: (v, x, y, w) / Z."""
        z = self.Z
        return (self.v / z, self.x / z, self.y / z, self.w / z)


@dataclass(frozen=True)
class ThermalState:
    """A Gibbs state rho = exp(-beta H) / Z at temperature T.

    beta is +inf at T = 0.  Z holds the plain partition sum for a regular
    positive temperature; on the zero-temperature path (T = 0 or clamped)
    it holds the ground degeneracy, which is the limit of the ground-shifted
    trace.  closed_form is populated only for the spin-1/2 x spin-1 cell.
    """

    T: float
    beta: float
    Z: float
    rho: np.ndarray
    closed_form: GibbsClosedForm | None = None


def build_hamiltonian(system: SpinSystem) -> np.ndarray:
    """Exchange Hamiltonian -J sum_a S_a1 x S_a2 in the product basis."""
    ops1 = make_spin_operators(system.s1)
    ops2 = make_spin_operators(system.s2)
    h = (
        kron(ops1.sx, ops2.sx)
        + kron(ops1.sy, ops2.sy)
        + kron(ops1.sz, ops2.sz)
    )
    return -system.J * h


def _require_closed_form(system: SpinSystem, what: str) -> None:
    if not system.has_closed_form:
        raise ValueError(
            f"{what} is only available for the spin-1/2 x spin-1 cell, "
            f"got s1={system.s1}, s2={system.s2}"
        )


def analytic_spectrum(system: SpinSystem) -> SpectralDecomposition:
    """Exact spectrum of the spin-1/2 x spin-1 cell.

    The total-spin-3/2 quartet sits at -J/2 and the total-spin-1/2 doublet
    at J.  Eigenvectors (before ascending sort):

        phi1 = |b,-1>                              at -J/2
        phi2 = |a,1>                               at -J/2
        phi3 = (-sqrt(2)|a,-1> + |b,0>) / sqrt(3)  at J
        phi4 = (-|a,0> + sqrt(2)|b,1>) / sqrt(3)   at J
        phi5 = (|a,-1> + sqrt(2)|b,0>) / sqrt(3)   at -J/2
        phi6 = (sqrt(2)|a,0> + |b,1>) / sqrt(3)    at -J/2
    """
    _require_closed_form(system, "the analytic spectrum")
    j = system.J
    c = 1.0 / math.sqrt(3.0)

    vecs = np.zeros((6, 6), dtype=complex)
    vecs[5, 0] = 1.0                                   # phi1
    vecs[0, 1] = 1.0                                   # phi2
    vecs[2, 2], vecs[4, 2] = -_SQRT2 * c, c            # phi3
    vecs[1, 3], vecs[3, 3] = -c, _SQRT2 * c            # phi4
    vecs[2, 4], vecs[4, 4] = c, _SQRT2 * c             # phi5
    vecs[1, 5], vecs[3, 5] = _SQRT2 * c, c             # phi6
    vals = np.array([-j / 2, -j / 2, j, j, -j / 2, -j / 2])

    order = np.argsort(vals, kind="stable")
    return SpectralDecomposition(
        eigenvalues=vals[order], eigenvectors=vecs[:, order]
    )


def partition_function(system: SpinSystem, T: float) -> float:
    """Partition sum Z(T) = Tr exp(-beta H) for T > 0.

    The spin-1/2 x spin-1 cell uses the closed form
    4 exp(beta J / 2) + 2 exp(-beta J); other spins sum exp(-beta lambda)
    over the numeric spectrum.  Overflows to inf once beta times the
    largest eigenvalue magnitude passes ~709.
    """
    if not (T > 0.0):
        raise ValueError(f"temperature must be positive, got {T!r}")
    beta = 1.0 / (system.kB * T)
    if system.has_closed_form:
        return 4.0 * math.exp(beta * system.J / 2.0) + 2.0 * math.exp(
            -beta * system.J
        )
    w = hermitian_eigendecompose(build_hamiltonian(system)).eigenvalues
    return float(np.exp(-beta * w).sum())


def closed_form_entries(
    system: SpinSystem, T: float
) -> tuple[float, float, float, float]:
    """Normalized Gibbs entries (v, x, y, w)/Z of the spin-1/2 x spin-1 cell.

    Stable at every T >= 0: the Boltzmann weights are rescaled by the
    dominant one before normalizing, so nothing overflows however small T
    gets.  At exactly T = 0 the limiting entries are returned (which side
    they come from depends on the sign of J).
    """
    _require_closed_form(system, "closed_form_entries")
    if T < 0.0:
        raise ValueError(f"temperature must be >= 0, got {T!r}")
    if T == 0.0:
        if system.J < 0.0:
            return (0.0, 1.0 / 6.0, 1.0 / 3.0, -_SQRT2 / 6.0)
        if system.J > 0.0:
            return (0.25, 1.0 / 6.0, 1.0 / 12.0, _SQRT2 / 12.0)
        return (1.0 / 6.0, 1.0 / 6.0, 1.0 / 6.0, 0.0)

    beta = 1.0 / (system.kB * T)
    a = beta * system.J / 2.0   # quartet exponent
    b = -beta * system.J        # doublet exponent
    shift = max(a, b)
    q = math.exp(a - shift)
    d = math.exp(b - shift)
    z = 4.0 * q + 2.0 * d
    return (
        q / z,
        (d + 2.0 * q) / (3.0 * z),
        (2.0 * d + q) / (3.0 * z),
        _SQRT2 * (q - d) / (3.0 * z),
    )


def pattern_matrix(v: float, x: float, y: float, w: float) -> np.ndarray:
    """Assemble the 6x6 matrix the thermal family lives on.

    Diagonal (v, x, y, y, x, v) with w coupling |a,0> to |b,1> and
    |a,-1> to |b,0>; every other off-diagonal entry vanishes.
    """
    m = np.zeros((6, 6), dtype=complex)
    m[0, 0] = m[5, 5] = v
    m[1, 1] = m[4, 4] = x
    m[2, 2] = m[3, 3] = y
    m[1, 3] = m[3, 1] = w
    m[2, 4] = m[4, 2] = w
    return m


def gibbs_state(system: SpinSystem, T: float) -> ThermalState:
    """Thermal state at temperature T >= 0.

    T = 0 yields the uniform mixture over the ground eigenspace, which is
    the T -> 0+ limit of the Gibbs family.  The same path serves very small
    positive temperatures (beta*|J| beyond the overflow clamp).  Positive
    temperatures go through the shifted spectral formula

        rho = sum_i e^{-beta (lambda_i - lambda_0)} |v_i><v_i| / sum_i (...)

    which never overflows.  The closed-form entry record rides along for
    the spin-1/2 x spin-1 cell.
    """
    if T < 0.0:
        raise ValueError(f"temperature must be >= 0, got {T!r}")
    spec = hermitian_eigendecompose(build_hamiltonian(system))
    w, vecs = spec.eigenvalues, spec.eigenvectors

    clamped = T > 0.0 and abs(system.J) / (system.kB * T) > BETA_OVERFLOW
    if T == 0.0 or clamped:
        gap_tol = 1e-8 * max(1.0, float(w[-1] - w[0]))
        mask = w <= w[0] + gap_tol
        degeneracy = int(mask.sum())
        cols = vecs[:, mask]
        rho = cols @ cols.conj().T / degeneracy
        beta = math.inf if T == 0.0 else 1.0 / (system.kB * T)
        closed = None
        if system.has_closed_form:
            cv, cx, cy, cw = closed_form_entries(system, T)
            closed = GibbsClosedForm(v=cv, x=cx, y=cy, w=cw, Z=1.0)
        return ThermalState(
            T=T, beta=beta, Z=float(degeneracy), rho=rho, closed_form=closed
        )

    beta = 1.0 / (system.kB * T)
    shifted = np.exp(-beta * (w - w[0]))
    rho = (vecs * shifted) @ vecs.conj().T / shifted.sum()
    closed = None
    if system.has_closed_form:
        ebj2 = math.exp(beta * system.J / 2.0)
        embj = math.exp(-beta * system.J)
        closed = GibbsClosedForm(
            v=ebj2,
            x=(embj + 2.0 * ebj2) / 3.0,
            y=(2.0 * embj + ebj2) / 3.0,
            w=_SQRT2 * (ebj2 - embj) / 3.0,
            Z=4.0 * ebj2 + 2.0 * embj,
        )
    return ThermalState(
        T=T,
        beta=beta,
        Z=float(np.exp(-beta * w).sum()),
        rho=rho,
        closed_form=closed,
    )
