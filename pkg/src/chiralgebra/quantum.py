"""Schrödinger checks for the bond representation and the two-state parity algebra.

Units default to ħ²/(2μ) = 1 and r₀ = 1.  Derivatives are central finite
differences; the radial grid is uniform in ln r, the azimuthal grid is
periodic on [0, 2π).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal, Sequence

import numpy as np

from .algebra import Kind, Operator
from .exceptions import InvariantViolation

NORM_TOL = 1e-12

# (offsets, integer weights, denominator) per derivative and order; integer
# weights keep the stencil exactly zero on constants
_D1 = {
    2: ((-1, 1), (-1, 1), 2),
    4: ((-2, -1, 1, 2), (1, -8, 8, -1), 12),
}
_D2 = {
    2: ((-1, 0, 1), (1, -2, 1), 1),
    4: ((-2, -1, 0, 1, 2), (-1, 16, -30, 16, -1), 12),
}


def _stencil(f: np.ndarray, h: float, coeffs, power: int, periodic: bool) -> np.ndarray:
    offsets, weights, denom = coeffs
    if periodic:
        acc = sum(w * np.roll(f, -o) for o, w in zip(offsets, weights))
    else:
        pad = max(abs(o) for o in offsets)
        n = len(f)
        acc = sum(w * f[pad + o: n - pad + o] for o, w in zip(offsets, weights))
    return acc / (denom * h**power)


def _check_order(order: int) -> None:
    if order not in _D1:
        raise ValueError(f"stencil order must be 2 or 4, got {order}")


@dataclass(frozen=True)
class RadialProblem:
    l: int
    E: float
    r0: float = 1.0
    hbar2over2mu: float = 1.0
    alpha_shift: float = 0.0  # added to α₀; nonzero only for negative controls

    def __post_init__(self):
        if self.l < 0:
            raise ValueError("l must be >= 0")
        if not self.r0 > 0 or not self.hbar2over2mu > 0:
            raise ValueError("r0 and hbar2over2mu must be positive")

    @property
    def alpha0(self) -> float:
        return self.hbar2over2mu * (self.l * (self.l + 1) - 2) + self.alpha_shift

    def radial(self, r):
        return np.asarray(r) / self.r0

    def potential(self, r):
        r = np.asarray(r)
        return self.E - self.alpha0 / r**2


def radial_grid(r_min: float, r_max: float, samples: int, grid: str = "log") -> np.ndarray:
    if grid == "log":
        return np.exp(np.linspace(math.log(r_min), math.log(r_max), samples))
    if grid == "uniform":
        return np.linspace(r_min, r_max, samples)
    raise ValueError(f"unknown grid {grid!r}")


def radial_residual_profile(
    p: RadialProblem,
    r_min: float,
    r_max: float,
    samples: int,
    order: int = 4,
    grid: Literal["log", "uniform"] = "log",
) -> tuple[np.ndarray, np.ndarray]:
    """Interior grid points and the radial-equation residual at each of them."""
    _check_order(order)
    if not r_min > 0:
        raise ValueError(f"r_min must be > 0, got {r_min}")
    if not r_max > r_min:
        raise ValueError("need r_min < r_max")
    if samples < order + 1:
        raise ValueError(f"need at least {order + 1} samples for an order-{order} stencil")

    r = radial_grid(r_min, r_max, samples, grid)
    R = p.radial(r)
    pad = order // 2
    if grid == "log":
        h = (math.log(r_max) - math.log(r_min)) / (samples - 1)
        dx = _stencil(R, h, _D1[order], 1, False)
        dxx = _stencil(R, h, _D2[order], 2, False)
        ri = r[pad:-pad]
        d1 = dx / ri
        d2 = (dxx - dx) / ri**2
    else:
        h = (r_max - r_min) / (samples - 1)
        d1 = _stencil(R, h, _D1[order], 1, False)
        d2 = _stencil(R, h, _D2[order], 2, False)
        ri = r[pad:-pad]
    Ri = R[pad:-pad]
    l = p.l
    kinetic = -p.hbar2over2mu * (d2 + 2.0 / ri * d1 - l * (l + 1) * Ri / ri**2)
    res = kinetic + p.potential(ri) * Ri - p.E * Ri
    return ri, res


def radial_residual(
    p: RadialProblem,
    r_min: float,
    r_max: float,
    samples: int,
    order: int = 4,
    grid: Literal["log", "uniform"] = "log",
) -> float:
    """Largest |residual| of R(r) = r/r₀ in V(r) = E - α₀/r² over interior points.

    The continuum residual is identically zero; what remains is truncation
    and rounding error.
    """
    _, res = radial_residual_profile(p, r_min, r_max, samples, order, grid)
    return float(np.max(np.abs(res)))


@dataclass(frozen=True)
class AzimuthalProblem:
    m: int

    def phi(self, theta):
        return np.exp(1j * self.m * np.asarray(theta))


def azimuthal_residual(p: AzimuthalProblem | int, samples: int, order: int = 4) -> float:
    """max |Φ'' + m²Φ| for Φ = e^{imϑ} on a periodic grid of ``samples`` points."""
    if isinstance(p, int):
        p = AzimuthalProblem(p)
    _check_order(order)
    if samples < max(3, order + 1):
        raise ValueError(f"need at least {max(3, order + 1)} samples")
    h = 2.0 * math.pi / samples
    theta = np.arange(samples) * h
    phi = p.phi(theta)
    res = _stencil(phi, h, _D2[order], 2, True) + p.m**2 * phi
    return float(np.max(np.abs(res)))


def observed_order(errors: Sequence[float], refinement: float) -> list[float]:
    """log-ratio convergence orders between consecutive refinements."""
    return [math.log(a / b) / math.log(refinement) for a, b in zip(errors, errors[1:])]


# ---------------------------------------------------------------------------
# bond Hamiltonian


def hamiltonian_commutes(energies: Sequence[float], op: Operator, tol: float = NORM_TOL) -> bool:
    """Whether diag(E) commutes with the operator's matrix."""
    e = np.asarray(energies, dtype=float)
    if e.shape != (4,) or not np.all(np.isfinite(e)):
        raise ValueError("need four finite bond energies")
    h = np.diag(e)
    m = op.array.astype(float)
    return bool(np.max(np.abs(h @ m - m @ h)) <= tol)


def energy_constant_on_cycles(energies: Sequence[float], op: Operator, tol: float = NORM_TOL) -> bool:
    return all(max(energies[i] for i in c) - min(energies[i] for i in c) <= tol for c in op.cycles())


# ---------------------------------------------------------------------------
# chiral and parity states


@dataclass(frozen=True)
class ChiralState:
    """Amplitudes on |Ψ_L⟩ and |Ψ_R⟩."""

    left: complex
    right: complex

    def __post_init__(self):
        object.__setattr__(self, "left", complex(self.left))
        object.__setattr__(self, "right", complex(self.right))
        if abs(self.norm2 - 1.0) > NORM_TOL:
            raise InvariantViolation(f"state not normalised: |c|^2 = {self.norm2}")

    @property
    def norm2(self) -> float:
        return abs(self.left) ** 2 + abs(self.right) ** 2

    @property
    def vector(self) -> np.ndarray:
        return np.array([self.left, self.right])

    def inner(self, other: ChiralState) -> complex:
        return complex(np.vdot(self.vector, other.vector))

    def isclose(self, other: ChiralState, tol: float = NORM_TOL) -> bool:
        return abs(self.left - other.left) <= tol and abs(self.right - other.right) <= tol


PSI_L = ChiralState(1, 0)
PSI_R = ChiralState(0, 1)


def chiral_action(op: Operator, s: ChiralState) -> ChiralState:
    """Rotations leave a handed state alone; inversions swap L and R."""
    if op.kind is Kind.ROTATION:
        return s
    return ChiralState(s.right, s.left)


def parity_states() -> tuple[ChiralState, ChiralState]:
    """(|Ψ+⟩, |Ψ−⟩) = (|Ψ_L⟩ ± |Ψ_R⟩)/√2."""
    c = 1 / math.sqrt(2)
    return ChiralState(c, c), ChiralState(c, -c)


def parity_eigenphase(op: Operator, which: Literal["plus", "minus"]) -> int:
    plus, minus = parity_states()
    state = {"plus": plus, "minus": minus}[which]
    out = chiral_action(op, state)
    for s in (1, -1):
        if out.isclose(ChiralState(s * state.left, s * state.right)):
            return s
    raise InvariantViolation(f"{op} does not map |Ψ{'+' if which == 'plus' else '-'}⟩ onto itself")


PAULI_X = np.array([[0.0, 1.0], [1.0, 0.0]])


def hund_hamiltonian(even_e: float, odd_delta: float, asym: float) -> np.ndarray:
    """Two-state Hamiltonian in the (L, R) basis; ``odd_delta`` couples the handed states."""
    return np.array([[even_e + asym, odd_delta], [odd_delta, even_e - asym]], dtype=float)


def hund_commutator(even_e: float, odd_delta: float, asym: float) -> np.ndarray:
    """[P, H] with P the L<->R swap. Zero exactly when ``asym`` is zero."""
    h = hund_hamiltonian(even_e, odd_delta, asym)
    return PAULI_X @ h - h @ PAULI_X
