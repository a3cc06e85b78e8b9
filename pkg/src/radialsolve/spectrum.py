"""Energy formulas built on the turning-point width d = r2 - r1.

The central relations are the bound ground-state formula E = -2 hbar^2/(m d^2)
and its excited-state variants K d = (2n-1) pi (symmetric), K d = 2 n pi
(antisymmetric) and K d = n pi (general). Each catalog family has an
algebraic closed form; a bracketing bisection solver handles the implicit
equation E = E_branch(d(E)) for arbitrary members of the catalog.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Union

from .errors import ConvergenceError, DomainError, NoClassicalRegionError
from .potentials import (
    NATURAL,
    EffectivePotential,
    HOSpinOrbit,
    HydrogenLike,
    InfiniteSphericalWell,
    IsotropicHO,
    Parabolic,
    UnitSystem,
    effective_minimum,
    spin_orbit_constant,
    validate_jls,
)
from .turning_points import TurningPoints, turning_points


@dataclass(frozen=True)
class Ground:
    pass


@dataclass(frozen=True)
class Symmetric:
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise DomainError(f"quantum number n must be >= 1, got {self.n}")


@dataclass(frozen=True)
class Antisymmetric:
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise DomainError(f"quantum number n must be >= 1, got {self.n}")


@dataclass(frozen=True)
class General:
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise DomainError(f"quantum number n must be >= 1, got {self.n}")


EnergyBranch = Union[Ground, Symmetric, Antisymmetric, General]


@dataclass(frozen=True)
class EnergyLevel:
    branch: EnergyBranch
    l: int
    value: float
    d_at_solution: float
    j: Optional[float] = None
    root_sign: str = "n/a"  # "plus" | "minus" | "n/a"
    iterations: int = 0
    converged: bool = False


def branch_g(branch: EnergyBranch, units: UnitSystem = NATURAL) -> float:
    """Aggregate g with E = g / d^2 (units energy * length^2)."""
    h2m = units.hbar2_over_m
    match branch:
        case Ground():
            return 2.0 * h2m
        case Symmetric(n=n):
            return 2.0 * math.pi**2 * h2m * (n - 0.5) ** 2
        case Antisymmetric(n=n):
            return 2.0 * math.pi**2 * h2m * n**2
        case General(n=n):
            return 0.5 * math.pi**2 * h2m * n**2
    raise DomainError(f"unknown branch {branch!r}")


def ground_energy_from_d(d: float, units: UnitSystem = NATURAL, signed: bool = False) -> float:
    """Ground-state energy 2 hbar^2 / (m d^2); negative when signed (bound)."""
    if not d > 0:
        raise DomainError(f"width d must be positive, got {d}")
    magnitude = 2.0 * units.hbar2_over_m / (d * d)
    return -magnitude if signed else magnitude


def excited_energy_from_d(d: float, branch: EnergyBranch, units: UnitSystem = NATURAL) -> float:
    """Branch energy g(branch) / d^2."""
    if not d > 0:
        raise DomainError(f"width d must be positive, got {d}")
    return branch_g(branch, units) / (d * d)


def delta_model_energy(S: float, units: UnitSystem = NATURAL) -> tuple[float, float, float]:
    """Bound state of the surrogate potential S * delta(r - r0).

    Returns (k, E, |A|) with k = m |S| / hbar^2, E = -m S^2 / (2 hbar^2) and
    the normalization |A| = sqrt(k).
    """
    if S == 0.0:
        raise DomainError("S = 0 supports no bound state")
    k = units.mass * abs(S) / units.hbar**2
    E = -units.mass * S * S / (2.0 * units.hbar**2)
    return k, E, math.sqrt(k)


def hydrogen_ground_energy(
    Z: int, l: int, units: UnitSystem = NATURAL, e_charge: float = 1.0
) -> float:
    """E0 = -(m e^4 / 2 hbar^2) Z^2 / (1 + l(l+1))."""
    if Z < 1:
        raise DomainError(f"Z must be >= 1, got {Z}")
    if l < 0:
        raise DomainError(f"l must be >= 0, got {l}")
    rydberg = units.mass * e_charge**4 / (2.0 * units.hbar**2)
    return -rydberg * Z * Z / (1.0 + l * (l + 1))


def well_energies(
    L: float, l: int, g: float, units: UnitSystem = NATURAL
) -> tuple[float, float]:
    """Both branches E = [(sqrt(a) +/- sqrt(g)) / L]^2 for the hard well.

    a = hbar^2 l(l+1) / 2m; g is the branch aggregate from branch_g.
    """
    if not L > 0:
        raise DomainError(f"L must be positive, got {L}")
    a = units.hbar**2 * l * (l + 1) / (2.0 * units.mass)
    plus = ((math.sqrt(a) + math.sqrt(g)) / L) ** 2
    minus = ((math.sqrt(a) - math.sqrt(g)) / L) ** 2
    return plus, minus


def ho_energies(omega: float, l: int, g_n: float, units: UnitSystem = NATURAL) -> float:
    """Oscillator energy (hbar omega / 2) [sqrt(l(l+1)) + sqrt(l(l+1) + g_n)].

    Presets for g_n: 4 (ground), 4 (n-1/2)^2 pi^2 (symmetric), 4 n^2 pi^2
    (antisymmetric), n^2 pi^2 (general).
    """
    if not g_n > 0:
        raise DomainError(f"g_n must be positive, got {g_n}")
    ll1 = l * (l + 1)
    return 0.5 * units.hbar * omega * (math.sqrt(ll1) + math.sqrt(ll1 + g_n))


def ho_g_preset(branch: EnergyBranch) -> float:
    """Dimensionless g_n matching branch_g for the oscillator closed form."""
    match branch:
        case Ground():
            return 4.0
        case Symmetric(n=n):
            return 4.0 * (n - 0.5) ** 2 * math.pi**2
        case Antisymmetric(n=n):
            return 4.0 * n**2 * math.pi**2
        case General(n=n):
            return float(n**2) * math.pi**2
    raise DomainError(f"unknown branch {branch!r}")


#: Table-binding presets: the oscillator table evaluates the combined formula
#: with g_n = n^2 pi^2, the spin-orbit table with 4 g_n = n^2 pi^2.
def table2_g(n: int) -> float:
    return float(n * n) * math.pi**2


def table3_g(n: int) -> float:
    return float(n * n) * math.pi**2 / 4.0


def ho_spin_orbit_energies(
    omega: float,
    l: int,
    j: float,
    s: float,
    c0: float,
    g_n: float,
    units: UnitSystem = NATURAL,
) -> float:
    """Combined spin-orbit oscillator energy.

    E = (hbar omega / 2) [ sqrt(l(l+1)) - C_j
        + sqrt((sqrt(l(l+1)) - C_j)^2 + 4 g_n) ]
    with C_j = c0 / (2 hbar omega) * [j(j+1) - l(l+1) - s(s+1)].
    """
    validate_jls(j, l, s)
    if not g_n > 0:
        raise DomainError(f"g_n must be positive, got {g_n}")
    hw = units.hbar * omega
    cj = (c0 / (2.0 * hw)) * (j * (j + 1) - l * (l + 1) - s * (s + 1))
    base = math.sqrt(l * (l + 1)) - cj
    return 0.5 * hw * (base + math.sqrt(base * base + 4.0 * g_n))


@dataclass(frozen=True)
class SolverOptions:
    rel_tol: float = 1e-12
    max_iter: int = 200


def _width(U: EffectivePotential, E: float) -> float:
    return turning_points(U, E).d


def _lower_energy_edge(U: EffectivePotential) -> float:
    """Infimum of energies with two turning points (0 for l=0 well-like)."""
    try:
        _, u_min = effective_minimum(U)
    except Exception:
        u_min = None
    if u_min is not None and math.isfinite(u_min):
        return u_min
    return 0.0


def self_consistent_energy(
    U: EffectivePotential,
    branch: EnergyBranch,
    units: UnitSystem | None = None,
    opts: SolverOptions = SolverOptions(),
    signed: bool = False,
) -> EnergyLevel:
    """Solve E = E_branch(d(E)) by bracketing bisection.

    h(E) = E - g / d(E)^2 is monotone for the catalog families: it tends to
    -infinity as d -> 0 just above the potential minimum and grows with E.
    The signed variant (bound Coulomb states) solves the same equation for
    |E| with d evaluated at E = -|E|.
    """
    units = units or U.units
    g = branch_g(branch, units)
    j = U.spec.j if isinstance(U.spec, HOSpinOrbit) else None

    if signed:
        return _signed_fixed_point(U, branch, g, units, opts, j)

    e_floor = _lower_energy_edge(U)
    span = max(abs(e_floor), units.hbar2_over_m / U.length_scale**2)

    def h(E: float) -> float:
        return E - g / _width(U, E) ** 2

    lo = e_floor + 1e-9 * span
    shrink = 0
    while True:
        try:
            if h(lo) < 0:
                break
        except NoClassicalRegionError:
            pass
        lo = e_floor + (lo - e_floor) * 0.25
        shrink += 1
        if shrink > 60:
            raise ConvergenceError("no bracketing interval found above the minimum")
    hi = lo
    grow = 0
    while h(hi) < 0:
        hi = e_floor + (hi - e_floor) * 2.0
        grow += 1
        if grow > 200:
            raise ConvergenceError("no upper bracket found", last_iterate=hi)

    iterations = 0
    for _ in range(opts.max_iter):
        mid = 0.5 * (lo + hi)
        iterations += 1
        if h(mid) < 0:
            lo = mid
        else:
            hi = mid
        if hi - lo <= opts.rel_tol * max(1.0, abs(mid)) * 1e-3:
            break
    E = 0.5 * (lo + hi)
    d = _width(U, E)
    residual = abs(E - g / d**2)
    converged = residual <= 1e-10 * max(1.0, abs(E))
    if not converged:
        raise ConvergenceError(
            f"fixed point not converged: residual {residual}", last_iterate=E, iterations=iterations
        )
    return EnergyLevel(
        branch=branch,
        l=U.l,
        j=j,
        value=E,
        d_at_solution=d,
        root_sign="plus",
        iterations=iterations,
        converged=True,
    )


def _signed_fixed_point(U, branch, g, units, opts, j):
    if not isinstance(U.spec, HydrogenLike):
        raise DomainError("signed solve is defined for bound Coulomb-like potentials")
    a = U.spec.Z * U.spec.e_charge**2
    b = U.centrifugal_coeff

    def width(x: float) -> float:
        return _width(U, -x)

    def h(x: float) -> float:
        return x - g / width(x) ** 2

    x_cap = a * a / (4.0 * b) if b > 0 else None

    lo = (x_cap if x_cap is not None else units.mass * a * a / units.hbar**2) * 1e-12
    while h(lo) < 0:
        lo *= 0.5
        if lo == 0.0:
            raise ConvergenceError("no bracketing interval found for the bound state")
    if x_cap is not None:
        hi = x_cap * (1.0 - 1e-12)
        if h(hi) > 0:
            raise ConvergenceError("no sign change below the centrifugal cap")
    else:
        hi = lo
        grow = 0
        while h(hi) > 0:
            hi *= 2.0
            grow += 1
            if grow > 200:
                raise ConvergenceError("no upper bracket found", last_iterate=hi)
        lo, hi = hi / 2.0, hi

    iterations = 0
    for _ in range(opts.max_iter):
        mid = 0.5 * (lo + hi)
        iterations += 1
        if h(mid) > 0:
            lo = mid
        else:
            hi = mid
        if hi - lo <= opts.rel_tol * max(1.0, abs(mid)) * 1e-3:
            break
    x = 0.5 * (lo + hi)
    d = width(x)
    residual = abs(x - g / d**2)
    converged = residual <= 1e-10 * max(1.0, x)
    if not converged:
        raise ConvergenceError(
            f"fixed point not converged: residual {residual}", last_iterate=-x, iterations=iterations
        )
    return EnergyLevel(
        branch=branch,
        l=U.l,
        j=j,
        value=-x,
        d_at_solution=d,
        root_sign="n/a",
        iterations=iterations,
        converged=True,
    )


def parabolic_energies(
    a: float,
    b: float,
    c: float,
    l: int,
    branch: EnergyBranch,
    units: UnitSystem = NATURAL,
    opts: SolverOptions = SolverOptions(),
) -> EnergyLevel:
    """Self-consistent branch energy for V = a r^2 + b r + c."""
    U = EffectivePotential(Parabolic(a=a, b=b, c=c), l=l, units=units)
    return self_consistent_energy(U, branch, units, opts)
