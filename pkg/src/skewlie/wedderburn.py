"""Exact complex character tables and the decomposition of (QG, sigma).

The character table comes from the classic modular method: class-sum structure
constants give commuting integer matrices whose simultaneous eigenvectors over
a suitable prime field are the central characters; degrees and class values are
recovered mod p and lifted to exact sums of roots of unity by inverse discrete
Fourier transforms over the power maps of class representatives.

Galois orbits of characters give the rational central primitive idempotents,
and each simple component of QG is classified against an involution as
orthogonal, symplectic, or unitary from the dimension of its skew part.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt
from typing import Sequence

from .cyclotomic import Cyclotomic, reduce_root_vector
from .errors import ComputationError, SpecError
from .groups import ConjugacyData, Group, conjugacy_classes, exponent
from .indicators import IndicatorReport, indicator_report
from .involutions import AlgebraElement, Involution, skew_space
from .linalg import rank, rref_rows
from .serialize import frac_row

DEFAULT_PRIME_BOUND = 10**8


# ---------------------------------------------------------------------------
# class algebra
# ---------------------------------------------------------------------------

def class_structure_constants(group: Group) -> list[list[list[int]]]:
    """Coefficients a[i][j][k] with (class sum i)(class sum j) = sum_k a[i][j][k] (class sum k)."""
    cd = conjugacy_classes(group)
    s = len(cd)
    mult = group.mult
    class_of = cd.class_of
    sizes = cd.sizes()
    table = [[[0] * s for _ in range(s)] for _ in range(s)]
    for i in range(s):
        for j in range(s):
            counts = [0] * s
            for x in cd.classes[i]:
                row = mult[x]
                for y in cd.classes[j]:
                    counts[class_of[row[y]]] += 1
            for k in range(s):
                q, r = divmod(counts[k], sizes[k])
                if r:
                    raise ComputationError("class sum product is not class-constant")
                table[i][j][k] = q
    return table


# ---------------------------------------------------------------------------
# mod-p linear algebra (internal to the table construction)
# ---------------------------------------------------------------------------

def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for d in range(3, isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def find_dixon_prime(group: Group, bound: int = DEFAULT_PRIME_BOUND) -> int:
    """Smallest prime p = 1 (mod exponent) with p > 2*ceil(sqrt(|G|))*|G|."""
    e = exponent(group)
    n = group.order
    root = isqrt(n)
    if root * root < n:
        root += 1
    threshold = 2 * root * n
    p = threshold - (threshold - 1) % e  # largest p <= threshold with p = 1 mod e
    while True:
        p += e
        if p > bound:
            raise SpecError(
                f"no prime p = 1 (mod {e}) with p > {threshold} below the bound {bound}"
            )
        if p > threshold and _is_prime(p):
            return p


def check_dixon_prime(group: Group, p: int) -> int:
    e = exponent(group)
    n = group.order
    root = isqrt(n)
    if root * root < n:
        root += 1
    if not _is_prime(p):
        raise SpecError(f"{p} is not prime")
    if p % e != (1 % e):
        raise SpecError(f"{p} is not 1 mod the group exponent {e}")
    if p <= 2 * root * n:
        raise SpecError(f"{p} is not larger than 2*ceil(sqrt(|G|))*|G| = {2 * root * n}")
    return p


def _primitive_root(p: int) -> int:
    if p == 2:
        return 1
    factors = []
    m = p - 1
    d = 2
    while d * d <= m:
        if m % d == 0:
            factors.append(d)
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        factors.append(m)
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in factors):
            return g
    raise ComputationError(f"no primitive root mod {p}")


def _rref_mod(rows: list[list[int]], p: int) -> tuple[list[list[int]], list[int]]:
    rows = [row[:] for row in rows]
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((k for k in range(r, nrows) if rows[k][c] % p), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][c], p - 2, p)
        rows[r] = [x * inv % p for x in rows[r]]
        for k in range(nrows):
            if k != r and rows[k][c]:
                f = rows[k][c]
                rows[k] = [(x - f * y) % p for x, y in zip(rows[k], rows[r])]
        pivots.append(c)
        r += 1
    return rows, pivots


def _kernel_mod(a: list[list[int]], p: int) -> list[list[int]]:
    """Column vectors spanning the null space of a over F_p."""
    red, pivots = _rref_mod(a, p)
    ncols = len(a[0]) if a else 0
    pivot_set = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivot_set:
            continue
        v = [0] * ncols
        v[f] = 1
        for i, pc in enumerate(pivots):
            v[pc] = (-red[i][f]) % p
        basis.append(v)
    return basis


def _solve_columns_mod(b_cols: list[list[int]], y_cols: list[list[int]], p: int) -> list[list[int]]:
    """Solve B X = Y column-wise, B given by columns of full column rank."""
    s = len(b_cols[0])
    k = len(b_cols)
    t = len(y_cols)
    aug = [[b_cols[j][i] for j in range(k)] + [y_cols[j][i] for j in range(t)]
           for i in range(s)]
    red, pivots = _rref_mod(aug, p)
    if pivots[:k] != list(range(k)) or any(pc >= k for pc in pivots[k:]):
        raise ComputationError("subspace is not invariant under the class matrix")
    return [[red[i][k + j] for j in range(t)] for i in range(k)]


def _det_mod(a: list[list[int]], p: int) -> int:
    a = [row[:] for row in a]
    n = len(a)
    det = 1
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c] % p), None)
        if piv is None:
            return 0
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        det = det * a[c][c] % p
        inv = pow(a[c][c], p - 2, p)
        for r in range(c + 1, n):
            if a[r][c]:
                f = a[r][c] * inv % p
                a[r] = [(x - f * y) % p for x, y in zip(a[r], a[c])]
    return det % p


def _charpoly_mod(a: list[list[int]], p: int) -> list[int]:
    """Coefficients of det(xI - a) over F_p, low degree first, via interpolation."""
    k = len(a)
    xs = list(range(k + 1))
    ys = []
    for x in xs:
        m = [[(x if i == j else 0) - a[i][j] for j in range(k)] for i in range(k)]
        ys.append(_det_mod(m, p))
    # Newton divided differences, then expansion to coefficient form
    coeffs = ys[:]
    for level in range(1, k + 1):
        for i in range(k, level - 1, -1):
            num = (coeffs[i] - coeffs[i - 1]) % p
            den = (xs[i] - xs[i - level]) % p
            coeffs[i] = num * pow(den, p - 2, p) % p
    poly = [0] * (k + 1)
    acc = [1]  # product (x - xs[0])...(x - xs[i-1])
    for i in range(k + 1):
        for j, c in enumerate(acc):
            poly[j] = (poly[j] + coeffs[i] * c) % p
        if i < k:
            shifted = [0] + acc  # x * acc
            acc = [(u - xs[i] * v) % p for u, v in zip(shifted, acc + [0])]
    return poly


def _split_space(vectors: list[list[int]], m: list[list[int]], p: int) -> list[list[list[int]]]:
    """Split an invariant subspace (ambient column vectors) into eigenspaces of m."""
    if len(vectors) == 1:
        return [vectors]
    images = [[sum(m[i][j] * v[j] for j in range(len(v))) % p for i in range(len(v))]
              for v in vectors]
    restriction = _solve_columns_mod(vectors, images, p)
    poly = _charpoly_mod(restriction, p)
    k = len(vectors)
    pieces: list[list[list[int]]] = []
    total = 0
    for lam in range(p):
        acc = 0
        for c in reversed(poly):
            acc = (acc * lam + c) % p
        if acc:
            continue
        shifted = [[(restriction[i][j] - (lam if i == j else 0)) % p for j in range(k)]
                   for i in range(k)]
        coords = _kernel_mod(shifted, p)
        if not coords:
            raise ComputationError("eigenvalue without eigenvector (splitting bug)")
        piece = []
        for coord in coords:
            vec = [sum(coord[t] * vectors[t][i] for t in range(k)) % p
                   for i in range(len(vectors[0]))]
            piece.append(vec)
        pieces.append(piece)
        total += len(coords)
        if total == k:
            break
    if total != k:
        raise ComputationError(
            "eigenspace splitting failed to fully diagonalize (signals an implementation bug)"
        )
    return pieces


# ---------------------------------------------------------------------------
# character table
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CharacterTable:
    """Exact character table with values in Q(zeta_conductor).

    ``values[i][j]`` is the value of character i on class j; ``root_mults``
    carries the same value as the integer multiplicities of the eigenvalue
    roots of unity, which is what the fast exact checks work on.
    """

    group: Group
    classes: ConjugacyData
    conductor: int
    degrees: tuple[int, ...]
    values: tuple[tuple[Cyclotomic, ...], ...]
    root_mults: tuple[tuple[tuple[int, ...], ...], ...]
    prime: int

    def __len__(self) -> int:
        return len(self.degrees)

    def to_json(self) -> dict:
        return {
            "group": self.group.name,
            "order": self.group.order,
            "conductor": self.conductor,
            "class_sizes": list(self.classes.sizes()),
            "class_representatives": list(self.classes.class_reps),
            "degrees": list(self.degrees),
            "characters": [[frac_row(v.coeffs) for v in row] for row in self.values],
        }


def character_table(group: Group, prime: int | None = None,
                    prime_bound: int = DEFAULT_PRIME_BOUND) -> CharacterTable:
    cd = conjugacy_classes(group)
    s = len(cd)
    n = group.order
    e = exponent(group)
    p = check_dixon_prime(group, prime) if prime is not None else find_dixon_prime(group, prime_bound)
    constants = class_structure_constants(group)
    sizes = cd.sizes()

    # simultaneous eigenvectors of the class matrices M_i[j][k] = a[i][j][k]
    spaces: list[list[list[int]]] = [[[1 if i == j else 0 for i in range(s)] for j in range(s)]]
    for i in range(1, s):
        if all(len(w) == 1 for w in spaces):
            break
        m = [[constants[i][j][k] % p for k in range(s)] for j in range(s)]
        spaces = [piece for w in spaces for piece in _split_space(w, m, p)]
    if any(len(w) > 1 for w in spaces):
        raise ComputationError(
            "eigenspace splitting failed to fully diagonalize (signals an implementation bug)"
        )

    # normalize so the identity-class coordinate is 1, recover degrees mod p
    size_inv = [pow(sz, p - 2, p) for sz in sizes]
    z = pow(_primitive_root(p), (p - 1) // e, p)
    powmap = []
    orders = []
    for rep in cd.class_reps:
        o = group.element_order(rep)
        orders.append(o)
        powers = []
        x = 0
        for _ in range(o):
            powers.append(cd.class_of[x])
            x = group.mult[x][rep]
        powmap.append(powers)

    rows = []
    for w in spaces:
        v = w[0]
        if v[0] % p == 0:
            raise ComputationError("eigenvector vanishes on the identity class")
        u0_inv = pow(v[0], p - 2, p)
        u = [x * u0_inv % p for x in v]
        t = sum(u[j] * u[cd.class_inverse[j]] * size_inv[j] for j in range(s)) % p
        d_sq = n * pow(t, p - 2, p) % p
        d = isqrt(d_sq)
        if d * d != d_sq or d == 0 or n % d != 0:
            raise ComputationError("character degree recovery failed")
        x_mod = [d * u[j] * size_inv[j] % p for j in range(s)]

        mults = []
        for j in range(s):
            o = orders[j]
            zo = pow(z, e // o, p)
            zo_pows = [pow(zo, m, p) for m in range(o)]
            o_inv = pow(o, p - 2, p)
            mv = [0] * e
            total = 0
            for m in range(o):
                c = sum(x_mod[powmap[j][l]] * zo_pows[(-m * l) % o] for l in range(o))
                c = c * o_inv % p
                if c > d:
                    raise ComputationError("lifted root multiplicity exceeds the degree")
                if c:
                    mv[(e // o) * m % e] += c
                total += c
            if total != d:
                raise ComputationError("root multiplicities do not sum to the degree")
            mults.append(tuple(mv))
        rows.append((d, tuple(mults)))

    rows.sort(key=lambda r: (r[0], r[1]))
    degrees = tuple(r[0] for r in rows)
    root_mults = tuple(r[1] for r in rows)
    if sum(d * d for d in degrees) != n:
        raise ComputationError("degree squares do not sum to the group order")
    if len(set(root_mults)) != s:
        raise ComputationError("character rows are not distinct")
    values = tuple(
        tuple(Cyclotomic.from_root_vector(e, mv) for mv in row) for row in root_mults
    )
    return CharacterTable(
        group=group,
        classes=cd,
        conductor=e,
        degrees=degrees,
        values=values,
        root_mults=root_mults,
        prime=p,
    )


# ---------------------------------------------------------------------------
# exact value arithmetic on root-multiplicity vectors
# ---------------------------------------------------------------------------

def _mv_mul(a: Sequence[int], b: Sequence[int], e: int) -> list[int]:
    out = [0] * e
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[(i + j) % e] += x * y
    return out


def _mv_rational(mv: Sequence, e: int) -> Fraction:
    red = reduce_root_vector(e, mv)
    if any(red[1:]):
        raise ComputationError("expected a rational value")
    return Fraction(red[0])


def table_orthogonality(table: CharacterTable) -> bool:
    """Exact row and column orthogonality of the character table."""
    e = table.conductor
    cd = table.classes
    s = len(table)
    n = table.group.order
    sizes = cd.sizes()
    inv = cd.class_inverse
    for i in range(s):
        for j in range(i, s):
            acc = [0] * e
            for k in range(s):
                prod = _mv_mul(table.root_mults[i][k], table.root_mults[j][inv[k]], e)
                for t, v in enumerate(prod):
                    if v:
                        acc[t] += sizes[k] * v
            red = reduce_root_vector(e, acc)
            expected = Fraction(n if i == j else 0)
            if any(red[1:]) or red[0] != expected:
                return False
    for j in range(s):
        for k in range(j, s):
            acc = [0] * e
            for i in range(s):
                prod = _mv_mul(table.root_mults[i][j], table.root_mults[i][inv[k]], e)
                for t, v in enumerate(prod):
                    if v:
                        acc[t] += v
            red = reduce_root_vector(e, acc)
            expected = Fraction(n, sizes[j]) if j == k else Fraction(0)
            if any(red[1:]) or red[0] != expected:
                return False
    return True


# ---------------------------------------------------------------------------
# Galois orbits and rational central primitive idempotents
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GaloisOrbit:
    """One orbit of characters under zeta -> zeta^k; one rational component."""

    members: tuple[int, ...]
    degree: int        # common character degree n
    field_degree: int  # [Q(chi) : Q] = orbit size

    @property
    def dim_q(self) -> int:
        return self.degree * self.degree * self.field_degree


def _twist_row(row: tuple[tuple[int, ...], ...], k: int, e: int) -> tuple[tuple[int, ...], ...]:
    out = []
    for mv in row:
        new = [0] * e
        for idx, c in enumerate(mv):
            if c:
                new[(idx * k) % e] += c
        out.append(tuple(new))
    return tuple(out)


def galois_orbits(table: CharacterTable) -> list[GaloisOrbit]:
    e = table.conductor
    units = [k for k in range(1, e + 1) if gcd(k, e) == 1]
    row_index = {row: i for i, row in enumerate(table.root_mults)}
    assigned = [False] * len(table)
    orbits = []
    for i in range(len(table)):
        if assigned[i]:
            continue
        members = set()
        for k in units:
            j = row_index.get(_twist_row(table.root_mults[i], k, e))
            if j is None:
                raise ComputationError("Galois twist left the character table")
            members.add(j)
        members = tuple(sorted(members))
        for j in members:
            assigned[j] = True
        orbits.append(GaloisOrbit(
            members=members,
            degree=table.degrees[i],
            field_degree=len(members),
        ))
    orbits.sort(key=lambda o: (o.degree, o.members[0]))
    return orbits


@dataclass(frozen=True)
class CentralIdempotent:
    """A rational central primitive idempotent and its character orbit."""

    element: AlgebraElement
    orbit_index: int


def rational_idempotents(table: CharacterTable, orbits: Sequence[GaloisOrbit]) -> list[CentralIdempotent]:
    e = table.conductor
    cd = table.classes
    group = table.group
    n = group.order
    s = len(cd)
    idems = []
    for oi, orbit in enumerate(orbits):
        d = orbit.degree
        class_coeffs = []
        for j in range(s):
            acc = [0] * e
            for i in orbit.members:
                mv = table.root_mults[i][cd.class_inverse[j]]
                for t, v in enumerate(mv):
                    if v:
                        acc[t] += v
            value = _mv_rational(acc, e)
            class_coeffs.append(Fraction(d, n) * value)
        coeffs = [class_coeffs[cd.class_of[g]] for g in range(n)]
        idems.append(CentralIdempotent(AlgebraElement(group, coeffs), oi))
    return idems


def idempotent_axioms_hold(idems: Sequence[CentralIdempotent]) -> bool:
    """e_i e_j = delta_ij e_i, sum e_i = 1, and each e_i is central."""
    if not idems:
        return False
    group = idems[0].element.group
    n = group.order
    total = AlgebraElement.zero(group)
    for ci in idems:
        total = total + ci.element
    if total != AlgebraElement.one(group):
        return False
    for i, ci in enumerate(idems):
        for j, cj in enumerate(idems):
            prod = ci.element * cj.element
            expect = ci.element if i == j else AlgebraElement.zero(group)
            if prod != expect:
                return False
    mult = group.mult
    inv = group.inv
    for ci in idems:
        c = ci.element.coeffs
        for g in range(n):
            ginv = inv[g]
            # e*g has coefficient c[h g^-1] at h; g*e has c[g^-1 h]
            if any(c[mult[h][ginv]] != c[mult[ginv][h]] for h in range(n)):
                return False
    return True


# ---------------------------------------------------------------------------
# component classification
# ---------------------------------------------------------------------------

FIRST = "first"
SECOND = "second"
PAIR = "pair"
ORTHOGONAL = "orthogonal"
SYMPLECTIC = "symplectic"
UNITARY = "unitary"


@dataclass(frozen=True)
class ComponentReport:
    """One simple component of QG classified against an involution."""

    component_id: int
    dim_q: int
    center_degree: int
    degree_n: int
    kind: str            # first | second | pair
    type: str            # orthogonal | symplectic | unitary
    skew_dim_q: int      # for a pair, counted once for both halves
    paired_with: int | None = None

    def to_json(self) -> dict:
        return {
            "id": self.component_id,
            "dim_q": self.dim_q,
            "center_degree": self.center_degree,
            "degree_n": self.degree_n,
            "kind": self.kind,
            "type": self.type,
            "skew_dim_q": self.skew_dim_q,
            "paired_with": self.paired_with,
        }


def component_skew_dim(idem: CentralIdempotent, inv: Involution) -> int:
    """Rank over Q of {e*(g - sigma(g)) : g in G}."""
    inv.require_validated()
    elem = idem.element
    group = elem.group
    n = group.order
    rows = []
    if inv.is_group_induced:
        mapping = inv.mapping
        signs = inv.signs()
        for g in range(n):
            a = elem.right_basis_mul(g)
            b = elem.right_basis_mul(mapping[g], signs[g])
            rows.append((a - b).coeffs)
    else:
        for g in range(n):
            a = elem.right_basis_mul(g)
            b = elem * inv.apply_basis(g)
            rows.append((a - b).coeffs)
    return rank(rows)


def sigma_action_on_components(idems: Sequence[CentralIdempotent], inv: Involution) -> tuple[int, ...]:
    """The permutation sigma(e_i) = e_perm[i]; always an involution."""
    inv.require_validated()
    index = {ci.element.coeffs: i for i, ci in enumerate(idems)}
    perm = []
    for ci in idems:
        image = inv.apply(ci.element)
        j = index.get(image.coeffs)
        if j is None:
            raise ComputationError(
                "involution image of a central idempotent matches no idempotent"
            )
        perm.append(j)
    for i, j in enumerate(perm):
        if perm[j] != i:
            raise ComputationError("component action of the involution is not involutive")
    return tuple(perm)


def _center_basis(idem: CentralIdempotent, cd: ConjugacyData) -> list[AlgebraElement]:
    """RREF basis of e * (class sums), a Q-basis of the component's center."""
    group = idem.element.group
    rows = []
    for cls in cd.classes:
        acc = AlgebraElement.zero(group)
        for g in cls:
            acc = acc + idem.element.right_basis_mul(g)
        rows.append(acc.coeffs)
    return [AlgebraElement(group, row) for row in rref_rows(rows)]


def classify_components(
    table: CharacterTable,
    orbits: Sequence[GaloisOrbit],
    idems: Sequence[CentralIdempotent],
    inv: Involution,
) -> list[ComponentReport]:
    """Theorem-level classification of every component; pairs reported once."""
    inv.require_validated()
    perm = sigma_action_on_components(idems, inv)
    cd = table.classes
    reports = []
    seen = set()
    for i, orbit in enumerate(orbits):
        if i in seen:
            continue
        seen.add(i)
        ndeg = orbit.degree
        cdeg = orbit.field_degree
        j = perm[i]
        if j != i:
            seen.add(j)
            twin = orbits[j]
            if (twin.degree, twin.field_degree) != (ndeg, cdeg):
                raise ComputationError("swapped components have mismatched invariants")
            skew = component_skew_dim(idems[i], inv)
            if skew != ndeg * ndeg * cdeg:
                raise ComputationError(
                    f"component {i}: pair skew dimension {skew} != n^2*[Z:Q] "
                    f"= {ndeg * ndeg * cdeg}"
                )
            reports.append(ComponentReport(
                component_id=i, dim_q=orbit.dim_q, center_degree=cdeg, degree_n=ndeg,
                kind=PAIR, type=UNITARY, skew_dim_q=skew, paired_with=j,
            ))
            continue
        skew = component_skew_dim(idems[i], inv)
        center = _center_basis(idems[i], cd)
        if len(center) != cdeg:
            raise ComputationError("center basis has the wrong dimension")
        first_kind = all(inv.apply(z) == z for z in center)
        if first_kind:
            dz, rem = divmod(skew, cdeg)
            if rem == 0 and dz == ndeg * (ndeg - 1) // 2:
                typ = ORTHOGONAL
            elif rem == 0 and dz == ndeg * (ndeg + 1) // 2 and ndeg % 2 == 0:
                typ = SYMPLECTIC
            else:
                raise ComputationError(
                    f"component {i}: first-kind skew dimension {skew} fits no formula "
                    f"(n={ndeg}, center degree {cdeg})"
                )
            kind = FIRST
        else:
            if 2 * skew != ndeg * ndeg * cdeg:
                raise ComputationError(
                    f"component {i}: second-kind skew dimension {skew} != n^2*[Z:Q]/2"
                )
            kind, typ = SECOND, UNITARY
        reports.append(ComponentReport(
            component_id=i, dim_q=orbit.dim_q, center_degree=cdeg, degree_n=ndeg,
            kind=kind, type=typ, skew_dim_q=skew, paired_with=None,
        ))
    return reports


# ---------------------------------------------------------------------------
# full decomposition report
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DecompositionReport:
    group: Group
    involution: Involution
    table: CharacterTable
    orbits: tuple[GaloisOrbit, ...]
    idempotents: tuple[CentralIdempotent, ...]
    components: tuple[ComponentReport, ...]
    skew_dim: int
    sum_components: int
    checks: dict
    indicators: IndicatorReport

    @property
    def all_checks_pass(self) -> bool:
        return all(self.checks.values())

    def to_json(self) -> dict:
        out = {
            "group": self.group.name,
            "involution": self.involution.to_json(),
            "components": [c.to_json() for c in self.components],
            "totals": {
                "skew_dim": self.skew_dim,
                "sum_components": self.sum_components,
            },
            "checks": dict(self.checks),
        }
        if self.indicators is not None:
            out["indicators"] = self.indicators.to_json()
        return out


def decomposition_report(
    group: Group,
    inv: Involution,
    table: CharacterTable | None = None,
    orbits: Sequence[GaloisOrbit] | None = None,
    idems: Sequence[CentralIdempotent] | None = None,
) -> DecompositionReport:
    """Classify every component and verify the global skew-dimension identity."""
    inv.require_validated()
    if table is None:
        table = character_table(group)
    if orbits is None:
        orbits = galois_orbits(table)
    if idems is None:
        idems = rational_idempotents(table, orbits)
    components = classify_components(table, orbits, idems, inv)
    ssr = skew_space(inv)
    total = sum(c.skew_dim_q for c in components)
    if sum(o.dim_q for o in orbits) != group.order:
        raise ComputationError("component dimensions do not sum to |G|")
    checks = {
        "theorem2_identity": total == ssr.skew_dim,
        "idempotent_axioms": idempotent_axioms_hold(idems),
        "orthogonality": table_orthogonality(table),
    }
    return DecompositionReport(
        group=group,
        involution=inv,
        table=table,
        orbits=tuple(orbits),
        idempotents=tuple(idems),
        components=tuple(components),
        skew_dim=ssr.skew_dim,
        sum_components=total,
        checks=checks,
        indicators=indicator_report(table),
    )
