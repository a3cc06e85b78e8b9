"""Damped-periodic radial wavefunctions and the piecewise special cases.

Bound well states have the form

    R(r) = (A / r) cos[K (r - r0)] e^{-Q(r)}   (symmetric)
    R(r) = (B / r) sin[K (r - r0)] e^{-Q(r)}   (antisymmetric)

with K d = (2n-1) pi or 2 n pi. Outside [r1, r2] the function is zero by
construction. The free particle keeps its complex carriers and a
log-singular envelope switching branch at r = 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Callable, Sequence

from .errors import DomainError, NotNormalizableError
from .potentials import NATURAL, EffectivePotential, UnitSystem
from .quadrature import adaptive_integral, make_phase
from .spectrum import Antisymmetric, EnergyLevel, Symmetric, self_consistent_energy
from .turning_points import TurningPoints, turning_points


@dataclass(frozen=True)
class RadialWaveFunction:
    """A single bound state of a hard-well-like effective potential."""

    potential: EffectivePotential
    tp: TurningPoints
    K: float
    parity: str  # "symmetric" | "antisymmetric"
    n: int
    phase: Callable[[float], float]
    amplitude: float = 1.0
    use_r_argument: bool = False  # compatibility: carrier phase K*r instead of K*(r-r0)

    def __post_init__(self):
        if self.parity not in ("symmetric", "antisymmetric"):
            raise DomainError(f"parity must be symmetric or antisymmetric, got {self.parity}")
        if self.n < 1:
            raise DomainError(f"n must be >= 1, got {self.n}")
        if self.amplitude < 0:
            raise DomainError("amplitude must be non-negative")

    def carrier(self, r: float) -> float:
        arg = self.K * (r if self.use_r_argument else r - self.tp.r0)
        return math.cos(arg) if self.parity == "symmetric" else math.sin(arg)

    def radial_F(self, r: float) -> float:
        """F(r) = r R(r) on the supported interval, 0 outside."""
        if not r > 0:
            raise DomainError(f"r must be positive, got {r}")
        if r < self.tp.r1 or r > self.tp.r2:
            return 0.0
        return self.amplitude * self.carrier(r) * math.exp(-self.phase(r))


@dataclass(frozen=True)
class FreeParticleWave:
    """Piecewise free-particle solution with carrier f and envelope e^{-|Q|}."""

    l: int
    K: float
    carrier: str  # "exp_plus" | "exp_minus" | "cos" | "sin"
    amplitude: float = 1.0

    def __post_init__(self):
        if self.l < 0:
            raise DomainError(f"l must be >= 0, got {self.l}")
        if not self.K > 0:
            raise DomainError(f"K must be positive, got {self.K}")
        if self.carrier not in ("exp_plus", "exp_minus", "cos", "sin"):
            raise DomainError(f"unknown carrier {self.carrier!r}")


def build_bound_state(
    U: EffectivePotential,
    n: int,
    parity: str,
    units: UnitSystem | None = None,
) -> tuple[RadialWaveFunction, EnergyLevel]:
    """Quantized state: solves the branch energy, then sets K d exactly.

    K is pinned to (2n-1) pi / d or 2 n pi / d so the boundary zeros hold to
    machine precision; the solved energy keeps K = m1 sqrt(E) consistent to
    the solver tolerance.
    """
    units = units or U.units
    branch = Symmetric(n) if parity == "symmetric" else Antisymmetric(n)
    level = self_consistent_energy(U, branch, units)
    tp = turning_points(U, level.value)
    multiple = (2 * n - 1) if parity == "symmetric" else 2 * n
    K = multiple * math.pi / tp.d
    r_ref = tp.r1 if tp.r1 > 0 else tp.r2 * 1e-12
    wf = RadialWaveFunction(
        potential=U, tp=tp, K=K, parity=parity, n=n, phase=make_phase(U, r_ref)
    )
    return wf, level


def detuned_state(U: EffectivePotential, tp: TurningPoints, K: float, parity: str, n: int = 1) -> RadialWaveFunction:
    """A deliberately unquantized carrier, for boundary-residual checks."""
    r_ref = tp.r1 if tp.r1 > 0 else tp.r2 * 1e-12
    return RadialWaveFunction(potential=U, tp=tp, K=K, parity=parity, n=n, phase=make_phase(U, r_ref))


def eval_radial(wf: RadialWaveFunction, r: float) -> float:
    """R(r) = F(r) / r; zero outside the supported interval."""
    if not r > 0:
        raise DomainError(f"r must be positive, got {r}")
    F = wf.radial_F(r)
    return F / r


def normalize(wf: RadialWaveFunction) -> RadialWaveFunction:
    """Rescale the amplitude so that the L2 norm of F over [r1, r2] is 1."""
    if isinstance(wf, FreeParticleWave):
        raise NotNormalizableError("free-particle amplitude is indefinite")
    base = replace(wf, amplitude=1.0)
    norm_sq, _ = adaptive_integral(
        lambda r: base.radial_F(r) ** 2, wf.tp.r1 if wf.tp.r1 > 0 else wf.tp.r2 * 1e-12,
        wf.tp.r2,
        tol=1e-10,
    )
    if not norm_sq > 0 or not math.isfinite(norm_sq):
        raise NotNormalizableError(f"norm integral {norm_sq} is not positive and finite")
    return replace(wf, amplitude=1.0 / math.sqrt(norm_sq))


def delta_model_wavefunction(k: float, r0: float, r: float) -> float:
    """D(r) = sqrt(k) e^{-k |r - r0|}, the normalized delta-model bound state."""
    if not k > 0:
        raise DomainError(f"k must be positive, got {k}")
    return math.sqrt(k) * math.exp(-k * abs(r - r0))


def evanescent_eval(U: EffectivePotential, E: float, r: float, r_ref: float) -> float:
    """Decaying envelope exp(-m1 * integral sqrt(U - E)) in a forbidden region.

    The path from r_ref to r must satisfy E < U throughout; the decaying
    branch is taken toward increasing r (growing toward decreasing r).
    """
    if not r > 0 or not r_ref > 0:
        raise DomainError(f"radii must be positive, got r={r}, r_ref={r_ref}")
    lo, hi = min(r, r_ref), max(r, r_ref)
    samples = 129
    for i in range(samples):
        x = lo + (hi - lo) * i / (samples - 1)
        if x <= 0:
            continue
        if E >= U(x):
            raise DomainError(
                f"E >= U at r = {x:.6g}: classically allowed; use eval_radial"
            )
    if r == r_ref:
        return 1.0
    m1 = U.units.m1
    val, _ = adaptive_integral(
        lambda x: m1 * math.sqrt(max(U(x) - E, 0.0)), r_ref, r, tol=1e-10
    )
    return math.exp(-val)


def free_particle_radial(fp: FreeParticleWave, r: float) -> complex | float:
    """Piecewise R(r) = A f(r)/r * envelope, envelope = e^{+Q}, 1, e^{-Q}.

    Q(r) = sqrt(l(l+1)) ln r is negative below r = 1 and positive above, so
    both pieces damp away from r = 1.
    """
    if not r > 0:
        raise DomainError(f"r must be positive, got {r}")
    q = math.sqrt(fp.l * (fp.l + 1)) * math.log(r)
    if r < 1.0:
        envelope = math.exp(q)
    elif r > 1.0:
        envelope = math.exp(-q)
    else:
        envelope = 1.0
    x = fp.K * r
    f: complex | float
    if fp.carrier == "exp_plus":
        f = complex(math.cos(x), math.sin(x))
    elif fp.carrier == "exp_minus":
        f = complex(math.cos(x), -math.sin(x))
    elif fp.carrier == "cos":
        f = math.cos(x)
    else:
        f = math.sin(x)
    return fp.amplitude * f / r * envelope


def boundary_residuals(wf: RadialWaveFunction) -> tuple[float, float]:
    """|F| at both turning points; ~0 for quantized (n, parity)."""
    at_r1 = abs(wf.amplitude * wf.carrier(wf.tp.r1) * math.exp(-wf.phase(max(wf.tp.r1, wf.tp.r2 * 1e-12))))
    at_r2 = abs(wf.amplitude * wf.carrier(wf.tp.r2) * math.exp(-wf.phase(wf.tp.r2)))
    return at_r1, at_r2


@dataclass(frozen=True)
class SamplePoint:
    r: float
    value: float
    imag: float = 0.0
    in_inner_forbidden: bool | None = None


def sample_wavefunction(
    wf: RadialWaveFunction | FreeParticleWave,
    grid: Sequence[float],
    energy: float | None = None,
) -> list[SamplePoint]:
    """Pointwise deterministic samples of R(r) on a strictly increasing grid.

    For the free particle the inner turning point r1 = sqrt(a/E) (l >= 1)
    is flagged per point: the piecewise value is still reported there.
    """
    prev = 0.0
    for r in grid:
        if not r > prev:
            raise DomainError("grid must be strictly increasing and positive")
        prev = r
    out: list[SamplePoint] = []
    if isinstance(wf, FreeParticleWave):
        if energy is None:
            energy = wf.K**2  # natural-units default m1 = 1 not assumed elsewhere
        r1 = 0.0
        if wf.l > 0 and energy > 0:
            # r1 in natural units of the caller: a/E with a = l(l+1)/K^2 * E ... the
            # flag only needs the ratio, so use Q-based form sqrt(l(l+1))/K
            r1 = math.sqrt(wf.l * (wf.l + 1)) / wf.K
        for r in grid:
            val = free_particle_radial(wf, r)
            if isinstance(val, complex):
                out.append(SamplePoint(r, val.real, val.imag, r < r1))
            else:
                out.append(SamplePoint(r, float(val), 0.0, r < r1))
        return out
    for r in grid:
        out.append(SamplePoint(r, eval_radial(wf, r)))
    return out
