"""Catalog-wide identity suite shared by the CLI and the acceptance tests."""

from __future__ import annotations

from dataclasses import dataclass, field

from . import catalog
from .forms import (
    check_adjoint_identity,
    integral_skew_lattice,
    realize_adjoint_form,
    skew_adjoint_space,
)
from .groups import Group
from .indicators import complex_dimension_identity, involution_count_identity
from .involutions import Involution, skew_space
from .linalg import hnf, rank
from .wedderburn import (
    CharacterTable,
    character_table,
    decomposition_report,
    galois_orbits,
    rational_idempotents,
    table_orthogonality,
)

FORMS_ORDER_LIMIT = 24


@dataclass
class CheckLine:
    group: str
    name: str
    ok: bool
    detail: str = ""


@dataclass
class VerificationSummary:
    lines: list[CheckLine] = field(default_factory=list)

    @property
    def all_pass(self) -> bool:
        return all(line.ok for line in self.lines)

    def add(self, group: str, name: str, ok: bool, detail: str = "") -> None:
        self.lines.append(CheckLine(group, name, ok, detail))

    def failures(self) -> list[CheckLine]:
        return [line for line in self.lines if not line.ok]

    def to_json(self) -> dict:
        return {
            "checks": [
                {"group": l.group, "name": l.name, "ok": l.ok, "detail": l.detail}
                for l in self.lines
            ],
            "total": len(self.lines),
            "failed": len(self.failures()),
            "all_pass": self.all_pass,
        }


def _table_integrity(summary: VerificationSummary, group: Group, table: CharacterTable) -> None:
    name = group.name
    summary.add(name, "orthogonality", table_orthogonality(table))
    summary.add(
        name, "degree-squares",
        sum(d * d for d in table.degrees) == group.order,
    )
    summary.add(name, "degrees-divide-order", all(group.order % d == 0 for d in table.degrees))
    summary.add(
        name, "class-count",
        len(table.degrees) == len(table.classes),
    )
    ok, detail = involution_count_identity(table)
    summary.add(name, "involution-count", ok, str(detail))
    ok, detail = complex_dimension_identity(table)
    summary.add(name, "complex-dimension-identity", ok, str(detail))


def _forms_checks(summary: VerificationSummary, group: Group, label: str,
                  inv: Involution, seed: int) -> None:
    name = group.name
    realization = realize_adjoint_form(inv, seed=seed)
    nonsingular = rank(realization.form.gram) == group.order
    summary.add(name, f"form-nonsingular[{label}]", nonsingular)
    summary.add(name, f"adjoint-identity[{label}]", check_adjoint_identity(realization))
    summary.add(
        name, f"skew-solution-space[{label}]",
        skew_adjoint_space(realization) == skew_space(inv).skew_basis,
    )


def _lattice_check(summary: VerificationSummary, group: Group) -> None:
    inv = Involution.canonical(group).validate()
    lattice = integral_skew_lattice(inv)
    gens = []
    for g in range(group.order):
        row = [0] * group.order
        row[g] += 1
        row[group.inv[g]] -= 1
        if any(row):
            gens.append(row)
    expected = hnf(gens) if gens else []
    summary.add(group.name, "integral-skew-lattice", lattice == expected)


def verify_group(group: Group, summary: VerificationSummary, seed: int = 0) -> None:
    table = character_table(group)
    _table_integrity(summary, group, table)
    orbits = galois_orbits(table)
    idems = rational_idempotents(table, orbits)
    summary.add(
        group.name, "component-dimensions",
        sum(o.dim_q for o in orbits) == group.order,
    )
    for label, inv in catalog.builtin_involutions(group):
        report = decomposition_report(group, inv, table=table, orbits=orbits, idems=idems)
        summary.add(
            group.name, f"skew-decomposition[{label}]",
            report.checks["theorem2_identity"],
            f"components={report.sum_components} skew={report.skew_dim}",
        )
        summary.add(
            group.name, f"idempotent-axioms[{label}]",
            report.checks["idempotent_axioms"],
        )
        if label == "canonical":
            fixed = all(c.paired_with is None for c in report.components)
            summary.add(group.name, "canonical-fixes-components", fixed)
            symplectic_neg = all(
                report.indicators.indicators[m] == -1
                for c in report.components if c.type == "symplectic"
                for m in orbits[c.component_id].members
            )
            summary.add(group.name, "symplectic-indicator", symplectic_neg)
        if group.order <= FORMS_ORDER_LIMIT:
            _forms_checks(summary, group, label, inv, seed)
    if group.order <= FORMS_ORDER_LIMIT:
        _lattice_check(summary, group)


def run_verification(selector: str | None = None, seed: int = 0,
                     max_order: int | None = None,
                     include_fixtures: bool = True) -> VerificationSummary:
    summary = VerificationSummary()
    groups = catalog.catalog_groups(selector=selector, max_order=max_order)
    for group in groups:
        verify_group(group, summary, seed=seed)
    if include_fixtures and selector is None:
        for label, group, inv in catalog.linear_fixtures():
            report = decomposition_report(group, inv)
            summary.add(label, "skew-decomposition", report.checks["theorem2_identity"])
            summary.add(label, "idempotent-axioms", report.checks["idempotent_axioms"])
            _forms_checks(summary, group, label, inv, seed)
    return summary
