"""Independent reference results for validation.

Everything here is computed from textbook relations (spherical Bessel
zeros, analytic oscillator ladders, the Bohr formula) or from a Numerov
shooting integrator. By design this module imports only the potential
catalog: none of the turning-point / phase-integral machinery is involved,
so comparisons against it are genuinely independent.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import DomainError
from .potentials import (
    INFINITE,
    NATURAL,
    EffectivePotential,
    InfiniteSphericalWell,
    UnitSystem,
    eval_effective,
    validate_jls,
)


@dataclass(frozen=True)
class OracleEnergy:
    source: str  # bessel_well | analytic_ho | perturbed_ho_so | bohr | numerov
    value: float
    n: int
    l: int
    j: Optional[float] = None


def spherical_bessel(l: int, x: float) -> float:
    """j_l(x) by upward recurrence from j0 = sin x / x.

    Stable for the low orders used here (l <= 10) provided x is not far
    below l; zeros of j_l all lie above l, which is the regime we scan.
    """
    if l < 0:
        raise DomainError(f"l must be >= 0, got {l}")
    if not x > 0:
        raise DomainError(f"x must be positive, got {x}")
    j0 = math.sin(x) / x
    if l == 0:
        return j0
    j1 = math.sin(x) / (x * x) - math.cos(x) / x
    if l == 1:
        return j1
    jm, jc = j0, j1
    for order in range(1, l):
        jm, jc = jc, (2 * order + 1) / x * jc - jm
    return jc


def bessel_zero(l: int, n: int) -> float:
    """n-th positive zero of j_l, by sign-change scan plus bisection."""
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    if not 0 <= l <= 6:
        raise DomainError(f"l must be in 0..6, got {l}")
    step = math.pi / 16.0
    x = max(l, 0.5)
    found = 0
    f_prev = spherical_bessel(l, x)
    while found < n:
        x_next = x + step
        f_next = spherical_bessel(l, x_next)
        if f_prev == 0.0:
            found += 1
            if found == n:
                return x
        elif (f_prev > 0) != (f_next > 0):
            found += 1
            if found == n:
                lo, hi, flo = x, x_next, f_prev
                for _ in range(200):
                    mid = 0.5 * (lo + hi)
                    fm = spherical_bessel(l, mid)
                    if fm == 0.0:
                        return mid
                    if (fm > 0) == (flo > 0):
                        lo, flo = mid, fm
                    else:
                        hi = mid
                    if hi - lo <= 1e-14 * mid:
                        break
                return 0.5 * (lo + hi)
        x, f_prev = x_next, f_next
        if x > 200.0:
            raise DomainError(f"zero ({n}, {l}) not found below x = 200")
    raise AssertionError("unreachable")


def well_oracle_energy(L: float, l: int, n: int, units: UnitSystem = NATURAL) -> OracleEnergy:
    """Exact hard-well level (hbar^2 / 2 m L^2) beta_{n l}^2."""
    if not L > 0:
        raise DomainError(f"L must be positive, got {L}")
    beta = bessel_zero(l, n)
    value = units.hbar**2 / (2.0 * units.mass * L * L) * beta * beta
    return OracleEnergy(source="bessel_well", value=value, n=n, l=l)


def ho_oracle_energy(
    n_index: int,
    l: int,
    omega: float,
    units: UnitSystem = NATURAL,
    indexing: str = "from_zero",
) -> OracleEnergy:
    """(2n + l + 3/2) hbar omega, with n counted from 0 or from 1."""
    n = _radial_index(n_index, indexing)
    value = (2 * n + l + 1.5) * units.hbar * omega
    return OracleEnergy(source="analytic_ho", value=value, n=n_index, l=l)


def _radial_index(n_index: int, indexing: str) -> int:
    if indexing == "from_zero":
        if n_index < 0:
            raise DomainError(f"n must be >= 0 for from_zero, got {n_index}")
        return n_index
    if indexing == "from_one":
        if n_index < 1:
            raise DomainError(f"n must be >= 1 for from_one, got {n_index}")
        return n_index
    raise DomainError(f"unknown indexing {indexing!r}")


def ho_so_oracle_energy(
    n_index: int,
    l: int,
    j: float,
    s: float,
    c0: float,
    omega: float,
    units: UnitSystem = NATURAL,
    indexing: str = "from_zero",
) -> OracleEnergy:
    """First-order perturbed oscillator ladder with the spin-orbit shift."""
    validate_jls(j, l, s)
    base = ho_oracle_energy(n_index, l, omega, units, indexing).value
    hw = units.hbar * omega
    shift = (c0 / (2.0 * hw)) * (j * (j + 1) - l * (l + 1) - s * (s + 1)) * hw
    return OracleEnergy(source="perturbed_ho_so", value=base - shift, n=n_index, l=l, j=j)


def bohr_energy(
    Z: int, n_principal: int, units: UnitSystem = NATURAL, e_charge: float = 1.0
) -> OracleEnergy:
    """Bohr levels -(m e^4 / 2 hbar^2) Z^2 / n^2."""
    if n_principal < 1:
        raise DomainError(f"n_principal must be >= 1, got {n_principal}")
    rydberg = units.mass * e_charge**4 / (2.0 * units.hbar**2)
    value = -rydberg * Z * Z / n_principal**2
    return OracleEnergy(source="bohr", value=value, n=n_principal, l=0)


def _numerov_nodes(f: np.ndarray, h: float, l: int, r: np.ndarray) -> tuple[int, float]:
    """Outward Numerov sweep; returns (interior sign changes, boundary value).

    f holds (2m/hbar^2)(E - U) on the grid. The solution is rescaled
    whenever it grows large, which preserves node count and boundary sign.
    """
    w = 1.0 + h * h / 12.0 * f
    y0 = r[0] ** (l + 1)
    y1 = r[1] ** (l + 1)
    u0 = y0 * w[0]
    u1 = y1 * w[1]
    nodes = 0
    prev_sign = math.copysign(1.0, y1) if y1 != 0 else 1.0
    h2 = h * h
    for i in range(1, len(f) - 1):
        u2 = 2.0 * u1 - u0 - h2 * f[i] * (u1 / w[i])
        y2 = u2 / w[i + 1]
        if y2 != 0.0:
            sign = math.copysign(1.0, y2)
            if sign != prev_sign:
                nodes += 1
                prev_sign = sign
        if abs(u2) > 1e250:
            u1 /= 1e250
            u2 /= 1e250
        u0, u1 = u1, u2
    return nodes, u1


def numerov_bound_state(
    U: EffectivePotential,
    node_target: int,
    bracket: tuple[float, float],
    units: UnitSystem | None = None,
    grid: float = 1e-3,
) -> OracleEnergy:
    """Eigenvalue with the requested interior node count, by node bisection.

    Integrates -(hbar^2/2m) F'' + U F = E F outward from
    r_min = 1e-6 * length scale with F ~ r^{l+1}. The interior node count is
    a nondecreasing step function of E that jumps exactly at eigenvalues, so
    bisection on it converges without a separate matching step.
    """
    units = units or U.units
    e_lo, e_hi = bracket
    if not e_hi > e_lo:
        raise DomainError(f"invalid bracket {bracket}")
    scale = U.length_scale
    r_min = 1e-6 * scale
    if isinstance(U.spec, InfiniteSphericalWell):
        # stop just inside the wall; the F(r_max) = 0 condition shifts levels
        # by only O(1e-9) relative
        r_max = U.spec.L * (1.0 - 1e-9)
    else:
        # extend past the outer turning point until U exceeds E by many level
        # spacings, so the truncated decay tail cannot shift levels above 1e-6
        r_max = scale
        margin = e_hi + 12.0 * units.hbar2_over_m / scale**2
        while eval_effective(U, r_max) < margin:
            r_max *= 1.25
    npts = max(int((r_max - r_min) / grid) + 1, 512)
    r = np.linspace(r_min, r_max, npts)
    h = r[1] - r[0]
    pref = 2.0 * units.mass / units.hbar**2
    u_vals = np.array([eval_effective(U, float(x)) for x in r])
    if np.any(u_vals == INFINITE):
        raise DomainError("grid crosses a hard wall")

    def count(E: float) -> int:
        f = pref * (E - u_vals)
        nodes, _ = _numerov_nodes(f, h, U.l, r)
        return nodes

    if count(e_lo) > node_target:
        raise DomainError(f"bracket lower edge already has more than {node_target} nodes")
    if count(e_hi) <= node_target:
        raise DomainError(f"bracket contains no state with {node_target} nodes")
    lo, hi = e_lo, e_hi
    for _ in range(100):
        mid = 0.5 * (lo + hi)
        if count(mid) <= node_target:
            lo = mid
        else:
            hi = mid
        if hi - lo <= 1e-10 * max(1.0, abs(mid)):
            break
    value = 0.5 * (lo + hi)
    return OracleEnergy(source="numerov", value=value, n=node_target, l=U.l)
