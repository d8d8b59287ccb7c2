"""Frobenius-Schur indicators and the real/symplectic/complex dimension ledger."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import TYPE_CHECKING

from .cyclotomic import reduce_root_vector
from .errors import ComputationError
from .groups import square_root_count

if TYPE_CHECKING:
    from .wedderburn import CharacterTable


def _squared_class_map(table: "CharacterTable") -> list[int]:
    """Class index of rep^2 for each class (constant on the class)."""
    group = table.group
    cd = table.classes
    return [cd.class_of[group.mult[rep][rep]] for rep in cd.class_reps]


def fs_indicator(table: "CharacterTable", index: int) -> int:
    """(1/|G|) sum_g chi(g^2), always -1, 0, or 1."""
    e = table.conductor
    sizes = table.classes.sizes()
    sq = _squared_class_map(table)
    acc = [0] * e
    for j, size in enumerate(sizes):
        mv = table.root_mults[index][sq[j]]
        for t, v in enumerate(mv):
            if v:
                acc[t] += size * v
    red = reduce_root_vector(e, acc)
    if any(red[1:]):
        raise ComputationError("indicator sum is not rational (table bug)")
    value = Fraction(red[0], table.group.order)
    if value.denominator != 1 or value not in (-1, 0, 1):
        raise ComputationError(f"indicator {value} outside {{-1,0,1}} (table bug)")
    return int(value)


@dataclass(frozen=True)
class IndicatorReport:
    """Indicator per character plus the type partition of the table."""

    indicators: tuple[int, ...]
    real: tuple[int, ...]
    symplectic: tuple[int, ...]
    complex_pairs: tuple[tuple[int, int], ...]
    eq1_identity: bool
    involution_count_identity: bool

    def to_json(self) -> dict:
        return {
            "indicators": list(self.indicators),
            "partition": {
                "real": list(self.real),
                "symplectic": list(self.symplectic),
                "complex_pairs": [list(p) for p in self.complex_pairs],
            },
            "eq1_identity": self.eq1_identity,
        }


def _conjugate_partner(table: "CharacterTable", index: int) -> int:
    e = table.conductor
    k = e - 1 if e > 1 else 1
    twisted = []
    for mv in table.root_mults[index]:
        new = [0] * e
        for idx, c in enumerate(mv):
            if c:
                new[(idx * k) % e] += c
        twisted.append(tuple(new))
    row_index = {row: i for i, row in enumerate(table.root_mults)}
    j = row_index.get(tuple(twisted))
    if j is None:
        raise ComputationError("conjugate character missing from the table")
    return j


def complex_dimension_identity(table: "CharacterTable") -> tuple[bool, dict]:
    """Dimension bookkeeping of the skew part of CG under g -> g^-1.

    Checks sum_real d(d-1)/2 + sum_symplectic d(d+1)/2 + sum_pairs d^2
    against (|G| - #{g : g^2 = 1}) / 2, all exactly.
    """
    report = indicator_report(table)
    sqrt_count = square_root_count(table.group)
    lhs_real = sum(table.degrees[i] * (table.degrees[i] - 1) // 2 for i in report.real)
    lhs_symp = sum(table.degrees[i] * (table.degrees[i] + 1) // 2 for i in report.symplectic)
    lhs_pairs = sum(table.degrees[i] * table.degrees[i] for i, _ in report.complex_pairs)
    rhs2 = table.group.order - sqrt_count
    ok = 2 * (lhs_real + lhs_symp + lhs_pairs) == rhs2
    detail = {
        "orthogonal_part": lhs_real,
        "symplectic_part": lhs_symp,
        "pair_part": lhs_pairs,
        "rhs": rhs2 // 2 if rhs2 % 2 == 0 else Fraction(rhs2, 2),
        "square_roots_of_identity": sqrt_count,
    }
    return ok, detail


def involution_count_identity(table: "CharacterTable") -> tuple[bool, dict]:
    """sum_chi nu2(chi) chi(1) equals the number of solutions of g^2 = 1."""
    indicators = [fs_indicator(table, i) for i in range(len(table))]
    lhs = sum(nu * d for nu, d in zip(indicators, table.degrees))
    rhs = square_root_count(table.group)
    return lhs == rhs, {"indicator_weighted_degrees": lhs, "square_roots_of_identity": rhs}


def indicator_report(table: "CharacterTable") -> IndicatorReport:
    indicators = tuple(fs_indicator(table, i) for i in range(len(table)))
    real = tuple(i for i, nu in enumerate(indicators) if nu == 1)
    symp = tuple(i for i, nu in enumerate(indicators) if nu == -1)
    pairs = []
    paired = set()
    for i, nu in enumerate(indicators):
        if nu != 0 or i in paired:
            continue
        j = _conjugate_partner(table, i)
        if j == i or indicators[j] != 0:
            raise ComputationError("complex-type character without a conjugate partner")
        paired.update((i, j))
        pairs.append((i, j))
    sqrt_count = square_root_count(table.group)
    lhs_real = sum(table.degrees[i] * (table.degrees[i] - 1) // 2 for i in real)
    lhs_symp = sum(table.degrees[i] * (table.degrees[i] + 1) // 2 for i in symp)
    lhs_pairs = sum(table.degrees[i] * table.degrees[i] for i, _ in pairs)
    eq1 = 2 * (lhs_real + lhs_symp + lhs_pairs) == table.group.order - sqrt_count
    count_ok = sum(nu * d for nu, d in zip(indicators, table.degrees)) == sqrt_count
    return IndicatorReport(
        indicators=indicators,
        real=real,
        symplectic=symp,
        complex_pairs=tuple(pairs),
        eq1_identity=eq1,
        involution_count_identity=count_ok,
    )
