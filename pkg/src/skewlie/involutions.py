"""Rational group algebra elements, involutions, and the skew/symmetric split.

An involution is additive, reverses products, and squares to the identity.
Group-induced variants (canonical g -> g^-1, oriented g -> alpha(g) g^-1, or a
general anti-automorphism of G) act by a signed index permutation; the linear
variant is an arbitrary rational matrix checked against the same axioms.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import SpecError
from .groups import Group
from .linalg import QMatrix, ZERO, ONE, mat, matmul, identity, nullspace_rows, rref_rows

CANONICAL = "canonical"
ORIENTED = "oriented"
ANTI_AUTOMORPHISM = "anti_automorphism"
LINEAR = "linear"


class AlgebraElement:
    """An element of QG: exact rational coefficients over the group basis."""

    __slots__ = ("group", "coeffs")

    def __init__(self, group: Group, coeffs: Iterable):
        coeffs = tuple(Fraction(c) for c in coeffs)
        if len(coeffs) != group.order:
            raise SpecError(
                f"need {group.order} coefficients for {group.name}, got {len(coeffs)}"
            )
        self.group = group
        self.coeffs = coeffs

    @classmethod
    def zero(cls, group: Group) -> "AlgebraElement":
        return cls(group, [ZERO] * group.order)

    @classmethod
    def basis(cls, group: Group, g: int, scale=1) -> "AlgebraElement":
        coeffs = [ZERO] * group.order
        coeffs[g] = Fraction(scale)
        return cls(group, coeffs)

    @classmethod
    def one(cls, group: Group) -> "AlgebraElement":
        return cls.basis(group, 0)

    def _check(self, other: "AlgebraElement") -> None:
        if self.group is not other.group:
            raise SpecError("group mismatch between algebra elements")

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check(other)
        return AlgebraElement(self.group, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check(other)
        return AlgebraElement(self.group, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement(self.group, [-a for a in self.coeffs])

    def scale(self, q) -> "AlgebraElement":
        q = Fraction(q)
        return AlgebraElement(self.group, [q * a for a in self.coeffs])

    def __mul__(self, other: "AlgebraElement") -> "AlgebraElement":
        """Convolution product in QG."""
        self._check(other)
        n = self.group.order
        mult = self.group.mult
        out = [ZERO] * n
        for g, a in enumerate(self.coeffs):
            if a:
                row = mult[g]
                for h, b in enumerate(other.coeffs):
                    if b:
                        out[row[h]] += a * b
        return AlgebraElement(self.group, out)

    def right_basis_mul(self, g: int, sign: int = 1) -> "AlgebraElement":
        """self * (sign * g) without a full convolution."""
        mult = self.group.mult
        ginv = self.group.inv[g]
        coeffs = self.coeffs
        out = [coeffs[mult[h][ginv]] for h in range(self.group.order)]
        if sign == -1:
            out = [-x for x in out]
        return AlgebraElement(self.group, out)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, AlgebraElement)
            and self.group is other.group
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def coefficient_of_identity(self) -> Fraction:
        return self.coeffs[0]

    def __repr__(self) -> str:
        terms = [f"{c}*[{g}]" for g, c in enumerate(self.coeffs) if c]
        return "AlgebraElement(" + (" + ".join(terms) or "0") + ")"


def multiply(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    return a * b


def bracket(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    """Lie bracket a*b - b*a."""
    return a * b - b * a


class Involution:
    """A validated involution spec for QG."""

    __slots__ = ("group", "kind", "alpha", "mapping", "matrix", "_validated")

    def __init__(self, group: Group, kind: str, *, alpha=None, mapping=None, matrix=None):
        self.group = group
        self.kind = kind
        self.alpha = tuple(alpha) if alpha is not None else None
        self.mapping = tuple(mapping) if mapping is not None else None
        self.matrix = matrix
        self._validated = False

    @classmethod
    def canonical(cls, group: Group) -> "Involution":
        return cls(group, CANONICAL, mapping=group.inv)

    @classmethod
    def oriented(cls, group: Group, alpha: Sequence[int]) -> "Involution":
        return cls(group, ORIENTED, alpha=alpha, mapping=group.inv)

    @classmethod
    def anti_automorphism(cls, group: Group, mapping: Sequence[int]) -> "Involution":
        return cls(group, ANTI_AUTOMORPHISM, mapping=mapping)

    @classmethod
    def linear(cls, group: Group, matrix: Sequence[Sequence]) -> "Involution":
        return cls(group, LINEAR, matrix=mat(matrix))

    @classmethod
    def from_json(cls, group: Group, obj: dict) -> "Involution":
        kind = obj.get("kind")
        if kind == CANONICAL:
            return cls.canonical(group)
        if kind == ORIENTED:
            return cls.oriented(group, obj["alpha"])
        if kind == ANTI_AUTOMORPHISM:
            return cls.anti_automorphism(group, obj["map"])
        if kind == LINEAR:
            return cls.linear(group, obj["matrix"])
        raise SpecError(f"unknown involution kind {kind!r}")

    def to_json(self) -> dict:
        if self.kind == CANONICAL:
            return {"kind": CANONICAL}
        if self.kind == ORIENTED:
            return {"kind": ORIENTED, "alpha": list(self.alpha)}
        if self.kind == ANTI_AUTOMORPHISM:
            return {"kind": ANTI_AUTOMORPHISM, "map": list(self.mapping)}
        return {
            "kind": LINEAR,
            "matrix": [[_frac_str(x) for x in row] for row in self.matrix],
        }

    @property
    def is_group_induced(self) -> bool:
        return self.kind != LINEAR

    def signs(self) -> tuple[int, ...]:
        if self.alpha is not None:
            return self.alpha
        return (1,) * self.group.order

    def validate(self) -> "Involution":
        """Check all involution axioms exhaustively over basis pairs."""
        n = self.group.order
        mult = self.group.mult
        if self.is_group_induced:
            mapping = self.mapping
            if sorted(mapping) != list(range(n)):
                raise SpecError("map is not a permutation of the group elements")
            signs = self.signs()
            if self.alpha is not None:
                if len(self.alpha) != n:
                    raise SpecError("alpha length must equal the group order")
                if any(a not in (1, -1) for a in self.alpha):
                    raise SpecError("alpha values must be +1 or -1")
                for g in range(n):
                    row = mult[g]
                    ag = self.alpha[g]
                    for h in range(n):
                        if self.alpha[row[h]] != ag * self.alpha[h]:
                            raise SpecError(
                                f"alpha not a homomorphism at pair ({g},{h})"
                            )
            for g in range(n):
                if mapping[mapping[g]] != g or signs[g] * signs[mapping[g]] != 1:
                    raise SpecError(f"not an involution at element {g}")
            for g in range(n):
                row = mult[g]
                for h in range(n):
                    if mapping[row[h]] != mult[mapping[h]][mapping[g]]:
                        raise SpecError(f"not an anti-homomorphism at pair ({g},{h})")
        else:
            m = self.matrix
            if len(m) != n or any(len(row) != n for row in m):
                raise SpecError("linear involution matrix must be |G| x |G|")
            if matmul(m, m) != identity(n):
                raise SpecError("linear involution matrix does not square to the identity")
            images = [AlgebraElement(self.group, [m[h][g] for h in range(n)]) for g in range(n)]
            for g in range(n):
                row = mult[g]
                for h in range(n):
                    if images[row[h]] != images[h] * images[g]:
                        raise SpecError(
                            f"linear map does not reverse multiplication at ({g},{h})"
                        )
        self._validated = True
        return self

    def require_validated(self) -> None:
        if not self._validated:
            raise SpecError("involution spec has not been validated")

    def apply_basis(self, g: int) -> AlgebraElement:
        """Image of the basis element g."""
        self.require_validated()
        if self.is_group_induced:
            return AlgebraElement.basis(self.group, self.mapping[g], self.signs()[g])
        n = self.group.order
        return AlgebraElement(self.group, [self.matrix[h][g] for h in range(n)])

    def apply(self, x: AlgebraElement) -> AlgebraElement:
        self.require_validated()
        if x.group is not self.group:
            raise SpecError("group mismatch between involution and element")
        n = self.group.order
        if self.is_group_induced:
            out = [ZERO] * n
            signs = self.signs()
            mapping = self.mapping
            for g, c in enumerate(x.coeffs):
                if c:
                    out[mapping[g]] = c if signs[g] == 1 else -c
            return AlgebraElement(self.group, out)
        out = [sum((self.matrix[h][g] * c for g, c in enumerate(x.coeffs) if c), ZERO)
               for h in range(n)]
        return AlgebraElement(self.group, out)


def validate_involution(inv: Involution) -> Involution:
    return inv.validate()


def apply_involution(inv: Involution, x: AlgebraElement) -> AlgebraElement:
    return inv.apply(x)


@dataclass(frozen=True)
class SkewSpaceReport:
    """RREF bases of the -1 and +1 eigenspaces of an involution on QG."""

    skew_basis: QMatrix
    sym_basis: QMatrix
    skew_dim: int
    sym_dim: int
    fixed_plus: int
    fixed_minus: int


def skew_space(inv: Involution) -> SkewSpaceReport:
    """Split QG into symmetric and skew-symmetric parts under the involution."""
    inv.require_validated()
    group = inv.group
    n = group.order
    if inv.is_group_induced:
        mapping = inv.mapping
        signs = inv.signs()
        minus_rows: QMatrix = []
        plus_rows: QMatrix = []
        for g in range(n):
            row_m = [ZERO] * n
            row_p = [ZERO] * n
            row_m[g] += ONE
            row_p[g] += ONE
            s = ONE if signs[g] == 1 else -ONE
            row_m[mapping[g]] -= s
            row_p[mapping[g]] += s
            minus_rows.append(row_m)
            plus_rows.append(row_p)
        skew_basis = rref_rows(minus_rows)
        sym_basis = rref_rows(plus_rows)
        fixed_plus = sum(1 for g in range(n) if mapping[g] == g and signs[g] == 1)
        fixed_minus = sum(1 for g in range(n) if mapping[g] == g and signs[g] == -1)
    else:
        m = inv.matrix
        plus = [[m[i][j] + (ONE if i == j else ZERO) for j in range(n)] for i in range(n)]
        minus = [[m[i][j] - (ONE if i == j else ZERO) for j in range(n)] for i in range(n)]
        # -1 eigenspace solves (M + I) x = 0, +1 eigenspace solves (M - I) x = 0
        skew_basis = rref_rows(nullspace_rows(plus))
        sym_basis = rref_rows(nullspace_rows(minus))
        fixed_plus = sum(
            1 for g in range(n)
            if all(m[h][g] == (ONE if h == g else ZERO) for h in range(n))
        )
        fixed_minus = sum(
            1 for g in range(n)
            if all(m[h][g] == (-ONE if h == g else ZERO) for h in range(n))
        )
    skew_dim = len(skew_basis)
    sym_dim = len(sym_basis)
    if skew_dim + sym_dim != n:
        raise SpecError("involution is not diagonalizable over Q (internal error)")
    return SkewSpaceReport(
        skew_basis=skew_basis,
        sym_basis=sym_basis,
        skew_dim=skew_dim,
        sym_dim=sym_dim,
        fixed_plus=fixed_plus,
        fixed_minus=fixed_minus,
    )


def _frac_str(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
