"""Nonsingular bilinear forms on the regular module realizing an involution.

Every involution of QG is the adjoint involution of a nonsingular symmetric or
skew-symmetric rational form h(x, y) = lam(sigma(x) y) on QG itself, for a
suitable linear functional lam.  The symmetry constraints on lam are a finite
exact linear system; a fixed-seed search picks a nonsingular solution.  The
skew-adjoint condition h(f x, y) + h(x, f y) = 0 then cuts out exactly the
skew-symmetric elements, and intersecting with ZG gives the integral lattice.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import ComputationError, SpecError
from .involutions import Involution, skew_space
from .linalg import (
    QMatrix,
    ZERO,
    ONE,
    clear_denominators,
    hnf,
    nullspace_rows,
    rank,
    rref_rows,
)
from .serialize import frac_matrix, frac_row

SYMMETRIC = "symmetric"
SKEW = "skew"

DEFAULT_ATTEMPTS = 64


@dataclass(frozen=True)
class BilinearForm:
    """Gram matrix of a nonsingular form on the group basis of QG."""

    gram: QMatrix
    symmetry: str  # symmetric | skew


@dataclass(frozen=True)
class AdjointRealization:
    """A form h(x, y) = functional(sigma(x) y) whose adjoint involution is sigma."""

    form: BilinearForm
    involution: Involution
    functional: tuple[Fraction, ...]


def _symmetry_of(gram: QMatrix) -> str:
    n = len(gram)
    if all(gram[i][j] == gram[j][i] for i in range(n) for j in range(i, n)):
        return SYMMETRIC
    if all(gram[i][j] == -gram[j][i] for i in range(n) for j in range(i, n)):
        return SKEW
    raise ComputationError("gram matrix is neither symmetric nor skew-symmetric")


def canonical_regular_form(inv: Involution) -> AdjointRealization:
    """The coefficient-of-identity form for a group-induced involution.

    h(g, h) = identity coefficient of sigma(g) h, which is a signed permutation
    matrix: symmetric and nonsingular by construction.
    """
    inv.require_validated()
    if not inv.is_group_induced:
        raise SpecError("canonical regular form needs a group-induced involution")
    group = inv.group
    n = group.order
    mapping = inv.mapping
    signs = inv.signs()
    gram = [[ZERO] * n for _ in range(n)]
    for g in range(n):
        h = group.inv[mapping[g]]
        gram[g][h] = ONE if signs[g] == 1 else -ONE
    functional = tuple([ONE] + [ZERO] * (n - 1))
    form = BilinearForm(gram=gram, symmetry=_symmetry_of(gram))
    if form.symmetry != SYMMETRIC:
        raise ComputationError("coefficient-of-identity form came out non-symmetric")
    return AdjointRealization(form=form, involution=inv, functional=functional)


def _sigma_product_rows(inv: Involution) -> list[list[Fraction]]:
    """Row g*|G|+h holds the coefficients of sigma(g) h."""
    group = inv.group
    n = group.order
    rows = []
    if inv.is_group_induced:
        mapping = inv.mapping
        signs = inv.signs()
        mult = group.mult
        for g in range(n):
            mg = mapping[g]
            sg = ONE if signs[g] == 1 else -ONE
            for h in range(n):
                row = [ZERO] * n
                row[mult[mg][h]] = sg
                rows.append(row)
    else:
        images = [inv.apply_basis(g) for g in range(n)]
        for g in range(n):
            for h in range(n):
                rows.append(list(images[g].right_basis_mul(h).coeffs))
    return rows


def _functional_space(inv: Involution, want: str) -> QMatrix:
    """Basis of functionals lam with lam(sigma(g)h) -+ lam(sigma(h)g) = 0."""
    n = inv.group.order
    prod = _sigma_product_rows(inv)
    sign = -ONE if want == SYMMETRIC else ONE
    seen = set()
    constraints = []
    for g in range(n):
        for h in range(g, n):
            row = [a + sign * b for a, b in zip(prod[g * n + h], prod[h * n + g])]
            if not any(row):
                continue
            key = tuple(row)
            if key not in seen:
                seen.add(key)
                constraints.append(row)
    if not constraints:
        return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]
    return nullspace_rows(constraints)


def _gram_from_functional(inv: Involution, lam: Sequence[Fraction]) -> QMatrix:
    group = inv.group
    n = group.order
    mult = group.mult
    if inv.is_group_induced:
        mapping = inv.mapping
        signs = inv.signs()
        gram = []
        for g in range(n):
            row_m = mult[mapping[g]]
            if signs[g] == 1:
                gram.append([lam[row_m[h]] for h in range(n)])
            else:
                gram.append([-lam[row_m[h]] for h in range(n)])
        return gram
    images = [inv.apply_basis(g) for g in range(n)]
    gram = []
    for g in range(n):
        coeffs = images[g].coeffs
        row = []
        for h in range(n):
            hinv = group.inv[h]
            row.append(sum((lam[z] * coeffs[mult[z][hinv]] for z in range(n)
                            if coeffs[mult[z][hinv]]), ZERO))
        gram.append(row)
    return gram


def realize_adjoint_form(
    inv: Involution,
    seed: int = 0,
    attempts: int = DEFAULT_ATTEMPTS,
) -> AdjointRealization:
    """Find a nonsingular symmetric (preferred) or skew form realizing sigma.

    The adjoint identity h(f x, y) = h(x, sigma(f) y) holds for every
    functional lam by anti-multiplicativity; the search only has to hit a
    nonsingular gram matrix, drawing fixed-seed rational combinations of the
    constraint-space basis.
    """
    inv.require_validated()
    n = inv.group.order
    rng = random.Random(seed)
    for want in (SYMMETRIC, SKEW):
        basis = _functional_space(inv, want)
        if not basis:
            continue
        for _ in range(attempts):
            weights = [Fraction(rng.randint(-9, 9)) for _ in basis]
            lam = [sum((w * row[i] for w, row in zip(weights, basis)), ZERO)
                   for i in range(n)]
            if not any(lam):
                continue
            gram = _gram_from_functional(inv, lam)
            if rank(gram) != n:
                continue
            symmetry = _symmetry_of(gram)
            if symmetry != want:
                raise ComputationError("constraint solution has the wrong symmetry")
            return AdjointRealization(
                form=BilinearForm(gram=gram, symmetry=symmetry),
                involution=inv,
                functional=tuple(lam),
            )
    raise ComputationError(
        f"no nonsingular symmetric or skew realization found in {attempts} draws per class"
    )


def check_adjoint_identity(
    r: AdjointRealization,
    full_limit: int = 16,
    samples: int = 1000,
    seed: int = 0,
) -> bool:
    """h(f x, y) == h(x, sigma(f) y): all basis triples up to full_limit, sampled above."""
    inv = r.involution
    group = inv.group
    n = group.order
    gram = r.form.gram
    mult = group.mult
    images = [inv.apply_basis(f) for f in range(n)]

    def holds(f: int, x: int, y: int) -> bool:
        lhs = gram[mult[f][x]][y]
        w = images[f].coeffs
        rhs = sum((w[z] * gram[x][mult[z][y]] for z in range(n) if w[z]), ZERO)
        return lhs == rhs

    if n <= full_limit:
        return all(holds(f, x, y) for f in range(n) for x in range(n) for y in range(n))
    rng = random.Random(seed)
    return all(
        holds(rng.randrange(n), rng.randrange(n), rng.randrange(n))
        for _ in range(samples)
    )


def skew_adjoint_space(r: AdjointRealization) -> QMatrix:
    """RREF basis of {f in QG : h(f x, y) + h(x, f y) = 0 for all x, y}.

    f acts by left multiplication on the regular module, so the condition is
    one exact linear system in the |G| coefficients of f.
    """
    group = r.involution.group
    n = group.order
    gram = r.form.gram
    mult = group.mult
    seen = set()
    constraints = []
    for x in range(n):
        for y in range(n):
            row = [gram[mult[z][x]][y] + gram[x][mult[z][y]] for z in range(n)]
            if not any(row):
                continue
            key = tuple(row)
            if key not in seen:
                seen.add(key)
                constraints.append(row)
    if not constraints:
        return rref_rows([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])
    return rref_rows(nullspace_rows(constraints))


def adjoint_space_matches_skew_span(inv: Involution, r: AdjointRealization | None = None) -> bool:
    """The defining system of the form cuts out exactly the skew elements."""
    if r is None:
        r = realize_adjoint_form(inv)
    return skew_adjoint_space(r) == skew_space(inv).skew_basis


def integral_skew_lattice(inv: Involution) -> list[list[int]]:
    """HNF basis of ZG intersected with the skew-adjoint solution space.

    Saturation via HNF of the integer generators {g - sigma(g)} stacked with
    the denominator-cleared kernel basis of the rational solution space.
    """
    inv.require_validated()
    if not inv.is_group_induced:
        raise SpecError("integral lattice needs a group-induced involution")
    group = inv.group
    n = group.order
    mapping = inv.mapping
    signs = inv.signs()
    gens = []
    for g in range(n):
        row = [0] * n
        row[g] += 1
        row[mapping[g]] -= signs[g]
        if any(row):
            gens.append(row)
    space = skew_adjoint_space(canonical_regular_form(inv))
    cleared = [clear_denominators(row) for row in space]
    lattice = hnf(gens + cleared)
    if len(lattice) != len(space):
        raise ComputationError("integral lattice rank differs from the rational space")
    return lattice


def form_report(
    inv: Involution,
    seed: int = 0,
    attempts: int = DEFAULT_ATTEMPTS,
) -> dict:
    """JSON-ready form artifact with all verification bits."""
    r = realize_adjoint_form(inv, seed=seed, attempts=attempts)
    nonsingular = rank(r.form.gram) == inv.group.order
    adjoint_ok = check_adjoint_identity(r)
    matches = adjoint_space_matches_skew_span(inv, r)
    return {
        "group": inv.group.name,
        "involution": inv.to_json(),
        "symmetry": r.form.symmetry,
        "gram": frac_matrix(r.form.gram),
        "functional": frac_row(r.functional),
        "checks": {
            "nonsingular": nonsingular,
            "adjoint_identity": adjoint_ok,
            "eq_1_2_matches_skew_span": matches,
        },
    }
