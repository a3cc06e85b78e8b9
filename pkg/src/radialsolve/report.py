"""Table reproduction and deterministic serialization.

Each table is recomputed from the spectrum formulas and the independent
oracles every time; nothing is hard-coded. Values are reported in the
reduced unit of the corresponding table (hbar^2/2mL^2, hbar omega, or eV
for hydrogen). Rendering is byte-deterministic: identical inputs yield
identical bytes in all three formats.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional, Sequence

from . import __version__
from .errors import DomainError
from .potentials import (
    EV_NM,
    E_CHARGE_EV_NM,
    NATURAL,
    EffectivePotential,
    HydrogenLike,
    UnitSystem,
)
from .oracles import bessel_zero, bohr_energy, ho_oracle_energy, ho_so_oracle_energy
from .spectrum import (
    General,
    Ground,
    branch_g,
    ho_energies,
    ho_spin_orbit_energies,
    hydrogen_ground_energy,
    self_consistent_energy,
    table2_g,
    table3_g,
    well_energies,
)
from .wavefunctions import SamplePoint

TABLE_IDS = ("part2_table1", "part2_table2", "part2_table3", "hydrogen")

_EPS = 1e-30


@dataclass(frozen=True)
class ComparisonRow:
    state_label: str
    oracle: float
    method_primary: float
    method_secondary: Optional[float] = None

    @property
    def abs_dev(self) -> float:
        return abs(self.method_primary - self.oracle)

    @property
    def rel_dev(self) -> float:
        return self.abs_dev / max(abs(self.oracle), _EPS)


_SPECTROSCOPIC = "spdfghi"

_WELL_HO_STATES = ((1, 0), (1, 1), (1, 2), (2, 0), (2, 1), (2, 2))

_SO_STATES = (
    (2, 2.5),  # 1d_5/2
    (3, 2.5),  # 1f_5/2
    (3, 3.5),  # 1f_7/2
    (4, 3.5),  # 1g_7/2
    (4, 4.5),  # 1g_9/2
)

_SO_C0_IN_HBAR_OMEGA = 0.015


def _label(n: int, l: int) -> str:
    return f"{n}{_SPECTROSCOPIC[l]}"


def reproduce_table(table_id: str, units: UnitSystem = NATURAL) -> list[ComparisonRow]:
    """Recompute one of the benchmark comparison tables from scratch."""
    if table_id == "part2_table1":
        return _table_well(units)
    if table_id == "part2_table2":
        return _table_ho(units)
    if table_id == "part2_table3":
        return _table_ho_so(units)
    if table_id == "hydrogen":
        return _table_hydrogen()
    raise DomainError(f"unknown table id {table_id!r}; expected one of {TABLE_IDS}")


def _table_well(units: UnitSystem) -> list[ComparisonRow]:
    L = 1.0
    unit = units.hbar**2 / (2.0 * units.mass * L * L)
    rows = []
    for n, l in _WELL_HO_STATES:
        beta = bessel_zero(l, n)
        oracle = unit * beta * beta
        e_plus, e_minus = well_energies(L, l, branch_g(General(n), units), units)
        rows.append(
            ComparisonRow(_label(n, l), oracle / unit, e_plus / unit, e_minus / unit)
        )
    return rows


def _table_ho(units: UnitSystem) -> list[ComparisonRow]:
    omega = 1.0
    unit = units.hbar * omega
    rows = []
    for n, l in _WELL_HO_STATES:
        oracle = ho_oracle_energy(n, l, omega, units, indexing="from_one").value
        method = ho_energies(omega, l, table2_g(n), units)
        rows.append(ComparisonRow(_label(n, l), oracle / unit, method / unit))
    return rows


def _table_ho_so(units: UnitSystem) -> list[ComparisonRow]:
    omega = 1.0
    s = 0.5
    unit = units.hbar * omega
    c0 = _SO_C0_IN_HBAR_OMEGA * unit
    rows = []
    for l, j in _SO_STATES:
        oracle = ho_so_oracle_energy(0, l, j, s, c0, omega, units, indexing="from_zero").value
        method = ho_spin_orbit_energies(omega, l, j, s, c0, table3_g(1), units)
        half = "5/2" if j == 2.5 else "7/2" if j == 3.5 else "9/2"
        rows.append(ComparisonRow(f"1{_SPECTROSCOPIC[l]}_{half}", oracle / unit, method / unit))
    return rows


def _table_hydrogen() -> list[ComparisonRow]:
    units = EV_NM
    e = E_CHARGE_EV_NM
    oracle = bohr_energy(1, 1, units, e_charge=e).value
    closed = hydrogen_ground_energy(1, 0, units, e_charge=e)
    U = EffectivePotential(HydrogenLike(Z=1, e_charge=e), l=0, units=units)
    solved = self_consistent_energy(U, Ground(), units, signed=True).value
    return [ComparisonRow("1s", oracle, closed, solved)]


_COLUMNS = ("state", "oracle", "method_primary", "method_secondary", "abs_dev", "rel_dev")


def _row_values(row: ComparisonRow):
    return (
        row.state_label,
        row.oracle,
        row.method_primary,
        row.method_secondary,
        row.abs_dev,
        row.rel_dev,
    )


def render(
    rows: Sequence[ComparisonRow],
    format: str = "text",
    meta: Optional[dict] = None,
) -> bytes:
    """Serialize comparison rows; stable column order, LF line endings."""
    if format == "text":
        return _render_text(rows)
    if format == "csv":
        return _render_csv(rows)
    if format == "json":
        return _render_json(rows, meta)
    raise DomainError(f"unknown format {format!r}")


def _fmt6(x: Optional[float]) -> str:
    return "" if x is None else f"{x:.6g}"


def _fmt_full(x: Optional[float]) -> str:
    return "" if x is None else repr(float(x))


def _render_text(rows: Sequence[ComparisonRow]) -> bytes:
    header = _COLUMNS
    table = [header] + [
        tuple(v if isinstance(v, str) else _fmt6(v) for v in _row_values(r)) for r in rows
    ]
    widths = [max(len(line[i]) for line in table) for i in range(len(header))]
    lines = []
    for line in table:
        lines.append("  ".join(cell.ljust(w) for cell, w in zip(line, widths)).rstrip())
    return ("\n".join(lines) + "\n").encode()


def _render_csv(rows: Sequence[ComparisonRow]) -> bytes:
    lines = [",".join(_COLUMNS)]
    for r in rows:
        cells = [v if isinstance(v, str) else _fmt_full(v) for v in _row_values(r)]
        lines.append(",".join(cells))
    return ("\n".join(lines) + "\n").encode()


def _render_json(rows: Sequence[ComparisonRow], meta: Optional[dict]) -> bytes:
    payload = {
        "meta": {"version": __version__, **(meta or {})},
        "rows": [
            {
                "state": r.state_label,
                "oracle": r.oracle,
                "method_primary": r.method_primary,
                "method_secondary": r.method_secondary,
                "abs_dev": r.abs_dev,
                "rel_dev": r.rel_dev,
            }
            for r in rows
        ],
    }
    return (json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n").encode()


def rows_from_json(data: bytes) -> list[ComparisonRow]:
    payload = json.loads(data.decode())
    return [
        ComparisonRow(
            state_label=item["state"],
            oracle=item["oracle"],
            method_primary=item["method_primary"],
            method_secondary=item["method_secondary"],
        )
        for item in payload["rows"]
    ]


def render_samples(
    samples: Sequence[SamplePoint],
    format: str = "csv",
    meta: Optional[dict] = None,
) -> bytes:
    """Serialize wavefunction samples; full float precision for round-trips."""
    flagged = any(s.in_inner_forbidden is not None for s in samples)
    if format == "csv":
        header = ["r", "value"]
        if flagged:
            header += ["imag", "inner_forbidden"]
        lines = [",".join(header)]
        for s in samples:
            cells = [repr(float(s.r)), repr(float(s.value))]
            if flagged:
                cells += [repr(float(s.imag)), "1" if s.in_inner_forbidden else "0"]
            lines.append(",".join(cells))
        return ("\n".join(lines) + "\n").encode()
    if format == "json":
        payload = {
            "meta": {"version": __version__, **(meta or {})},
            "samples": [
                {
                    "r": s.r,
                    "value": s.value,
                    **(
                        {"imag": s.imag, "inner_forbidden": bool(s.in_inner_forbidden)}
                        if flagged
                        else {}
                    ),
                }
                for s in samples
            ],
        }
        return (json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n").encode()
    raise DomainError(f"unknown format {format!r}")


def samples_from_csv(data: bytes) -> list[SamplePoint]:
    lines = data.decode().strip().split("\n")
    header = lines[0].split(",")
    flagged = "inner_forbidden" in header
    out = []
    for line in lines[1:]:
        cells = line.split(",")
        if flagged:
            out.append(
                SamplePoint(
                    float(cells[0]), float(cells[1]), float(cells[2]), cells[3] == "1"
                )
            )
        else:
            out.append(SamplePoint(float(cells[0]), float(cells[1])))
    return out
