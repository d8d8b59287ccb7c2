"""Finite groups as indexed multiplication tables, identity at index 0.

Built-in families (cyclic, dihedral, dicyclic, symmetric, alternating, abelian
by invariant factors, direct products) resolve through string specs like
"dicyclic:2" or "product:cyclic:2,dicyclic:2"; arbitrary groups come in as
multiplication tables or permutation generator lists closed by breadth-first
multiplication.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from math import isqrt, lcm

from .errors import SpecError

DEFAULT_MAX_ORDER = 2000
FULL_ASSOCIATIVITY_LIMIT = 128
_ASSOC_SEED = 0x5EED


class Group:
    """Immutable finite group on indices 0..order-1 with identity 0."""

    __slots__ = ("name", "order", "mult", "inv")

    def __init__(self, name: str, mult: tuple[tuple[int, ...], ...], inv: tuple[int, ...]):
        self.name = name
        self.order = len(mult)
        self.mult = mult
        self.inv = inv

    def __repr__(self) -> str:
        return f"Group({self.name!r}, order={self.order})"

    def element_order(self, g: int) -> int:
        k, x = 1, g
        while x != 0:
            x = self.mult[x][g]
            k += 1
        return k

    def is_abelian(self) -> bool:
        n = self.order
        mult = self.mult
        return all(mult[a][b] == mult[b][a] for a in range(n) for b in range(a + 1, n))

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "order": self.order,
            "mult_table": [list(row) for row in self.mult],
        }


@dataclass(frozen=True)
class ConjugacyData:
    """Conjugacy classes sorted by (size, least member), identity class first."""

    classes: tuple[tuple[int, ...], ...]
    class_of: tuple[int, ...]
    class_reps: tuple[int, ...]
    class_inverse: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.classes)

    def sizes(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.classes)


def _check_table(name: str, mult: list[list[int]], max_order: int) -> Group:
    n = len(mult)
    if n == 0:
        raise SpecError(f"{name}: empty multiplication table")
    if n > max_order:
        raise SpecError(f"{name}: order {n} exceeds the configured cap {max_order}")
    full = set(range(n))
    for i, row in enumerate(mult):
        if len(row) != n or set(row) != full:
            raise SpecError(f"{name}: row {i} is not a permutation of 0..{n - 1}")
    for j in range(n):
        if {mult[i][j] for i in range(n)} != full:
            raise SpecError(f"{name}: column {j} is not a permutation of 0..{n - 1}")
    for g in range(n):
        if mult[0][g] != g or mult[g][0] != g:
            raise SpecError(f"{name}: index 0 is not a two-sided identity")
    inv = [-1] * n
    for g in range(n):
        h = mult[g].index(0)
        if mult[h][g] != 0:
            raise SpecError(f"{name}: element {g} has no two-sided inverse")
        inv[g] = h
    if n <= FULL_ASSOCIATIVITY_LIMIT:
        for a in range(n):
            ra = mult[a]
            for b in range(n):
                ab = ra[b]
                rb = mult[b]
                rab = mult[ab]
                for c in range(n):
                    if rab[c] != ra[rb[c]]:
                        raise SpecError(f"{name}: non-associative table at ({a},{b},{c})")
    else:
        rng = random.Random(_ASSOC_SEED)
        for _ in range(10 * n * isqrt(n)):
            a, b, c = rng.randrange(n), rng.randrange(n), rng.randrange(n)
            if mult[mult[a][b]][c] != mult[a][mult[b][c]]:
                raise SpecError(f"{name}: non-associative table at ({a},{b},{c})")
    return Group(name, tuple(tuple(row) for row in mult), tuple(inv))


def cyclic_group(n: int, name: str | None = None, max_order: int = DEFAULT_MAX_ORDER) -> Group:
    if n < 1:
        raise SpecError("cyclic group order must be positive")
    mult = [[(i + j) % n for j in range(n)] for i in range(n)]
    return _check_table(name or f"cyclic:{n}", mult, max_order)


def dihedral_group(n: int, max_order: int = DEFAULT_MAX_ORDER) -> Group:
    """Dihedral group of order 2n: rotations r^i at i, reflections r^i s at n+i."""
    if n < 1:
        raise SpecError("dihedral parameter must be positive")
    order = 2 * n

    def mul(x: int, y: int) -> int:
        i, j = x % n, x // n
        k, l = y % n, y // n
        i2 = (i + k) % n if j == 0 else (i - k) % n
        return i2 + n * (j ^ l)

    mult = [[mul(x, y) for y in range(order)] for x in range(order)]
    return _check_table(f"dihedral:{n}", mult, max_order)


def dicyclic_group(n: int, max_order: int = DEFAULT_MAX_ORDER) -> Group:
    """Dicyclic group of order 4n (n=2 is the quaternion group Q8).

    Elements a^i b^j with a of order 2n, b^2 = a^n, b a b^-1 = a^-1;
    index i + 2n*j.
    """
    if n < 1:
        raise SpecError("dicyclic parameter must be positive")
    m = 2 * n
    order = 4 * n

    def mul(x: int, y: int) -> int:
        i, j = x % m, x // m
        k, l = y % m, y // m
        if j == 0:
            return (i + k) % m + m * l
        i2 = (i - k + (n if l else 0)) % m
        return i2 + m * (1 - l)

    mult = [[mul(x, y) for y in range(order)] for x in range(order)]
    return _check_table(f"dicyclic:{n}", mult, max_order)


def _perm_compose(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(p[i] for i in q)


def group_from_permutations(
    generators: list[list[int]],
    degree: int,
    name: str | None = None,
    max_order: int = DEFAULT_MAX_ORDER,
) -> Group:
    """Close permutation generators by breadth-first multiplication."""
    gens = []
    for g in generators:
        if sorted(g) != list(range(degree)):
            raise SpecError(f"generator {g} is not a permutation of 0..{degree - 1}")
        gens.append(tuple(g))
    ident = tuple(range(degree))
    elems = [ident]
    index = {ident: 0}
    queue = [ident]
    while queue:
        cur = queue.pop(0)
        for gen in gens:
            new = _perm_compose(cur, gen)
            if new not in index:
                if len(elems) >= max_order:
                    raise SpecError(f"permutation closure exceeds the cap {max_order}")
                index[new] = len(elems)
                elems.append(new)
                queue.append(new)
    n = len(elems)
    mult = [[index[_perm_compose(elems[a], elems[b])] for b in range(n)] for a in range(n)]
    return _check_table(name or f"perm-group:deg{degree}:order{n}", mult, max_order)


def symmetric_group(n: int, max_order: int = DEFAULT_MAX_ORDER) -> Group:
    if not 1 <= n <= 5:
        raise SpecError("symmetric builtin supports 1 <= n <= 5")
    if n == 1:
        return cyclic_group(1, name="symmetric:1")
    gens = [[1, 0] + list(range(2, n)), list(range(1, n)) + [0]]
    return group_from_permutations(gens, n, name=f"symmetric:{n}", max_order=max_order)


def alternating_group(n: int, max_order: int = DEFAULT_MAX_ORDER) -> Group:
    if not 3 <= n <= 5:
        raise SpecError("alternating builtin supports 3 <= n <= 5")
    three_cycle = [1, 2, 0] + list(range(3, n))
    if n == 3:
        gens = [three_cycle]
    elif n == 4:
        gens = [three_cycle, [0, 2, 3, 1]]
    else:
        gens = [three_cycle, [1, 2, 3, 4, 0]]
    return group_from_permutations(gens, n, name=f"alternating:{n}", max_order=max_order)


def direct_product(a: Group, b: Group, name: str | None = None,
                   max_order: int = DEFAULT_MAX_ORDER) -> Group:
    """Direct product with index i*|B| + j, identity at 0."""
    na, nb = a.order, b.order
    order = na * nb
    if order > max_order:
        raise SpecError(f"product order {order} exceeds the cap {max_order}")
    mult = [
        [a.mult[x // nb][y // nb] * nb + b.mult[x % nb][y % nb] for y in range(order)]
        for x in range(order)
    ]
    return _check_table(name or f"product:{a.name},{b.name}", mult, max_order)


def abelian_group(invariants: list[int], max_order: int = DEFAULT_MAX_ORDER) -> Group:
    if not invariants:
        raise SpecError("abelian spec needs at least one invariant factor")
    g = cyclic_group(invariants[0], max_order=max_order)
    for m in invariants[1:]:
        g = direct_product(g, cyclic_group(m, max_order=max_order), max_order=max_order)
    return Group(
        "abelian:" + ",".join(str(m) for m in invariants), g.mult, g.inv
    )


def group_from_table(mult_table: list[list[int]], name: str = "table-group",
                     max_order: int = DEFAULT_MAX_ORDER) -> Group:
    return _check_table(name, [list(row) for row in mult_table], max_order)


def _split_product_args(text: str) -> list[str]:
    """Split "cyclic:2,abelian:2,4,dihedral:3" into component specs.

    A bare integer token continues the argument list of the previous component.
    """
    parts: list[str] = []
    for token in text.split(","):
        if parts and token.isdigit():
            parts[-1] += "," + token
        else:
            parts.append(token)
    return parts


def build_group(spec, max_order: int = DEFAULT_MAX_ORDER) -> Group:
    """Resolve a group spec: builtin string, JSON dict, or Group passthrough."""
    if isinstance(spec, Group):
        return spec
    if isinstance(spec, dict):
        if "mult_table" in spec:
            if "order" in spec and spec["order"] != len(spec["mult_table"]):
                raise SpecError("declared order does not match the table size")
            return group_from_table(
                spec["mult_table"], spec.get("name", "table-group"), max_order
            )
        if "permutation_generators" in spec:
            return group_from_permutations(
                spec["permutation_generators"],
                spec["degree"],
                spec.get("name"),
                max_order,
            )
        raise SpecError("group JSON needs mult_table or permutation_generators")
    if not isinstance(spec, str):
        raise SpecError(f"unsupported group spec {spec!r}")
    family, _, arg = spec.partition(":")
    try:
        if family == "cyclic":
            return cyclic_group(int(arg), max_order=max_order)
        if family == "dihedral":
            return dihedral_group(int(arg), max_order=max_order)
        if family == "dicyclic":
            return dicyclic_group(int(arg), max_order=max_order)
        if family == "symmetric":
            return symmetric_group(int(arg), max_order=max_order)
        if family == "alternating":
            return alternating_group(int(arg), max_order=max_order)
        if family == "abelian":
            return abelian_group([int(t) for t in arg.split(",")], max_order=max_order)
        if family == "product":
            parts = _split_product_args(arg)
            if len(parts) < 2:
                raise SpecError("product spec needs at least two components")
            g = build_group(parts[0], max_order)
            for part in parts[1:]:
                g = direct_product(g, build_group(part, max_order), max_order=max_order)
            return Group(f"product:{arg}", g.mult, g.inv)
    except ValueError as exc:
        raise SpecError(f"bad group spec {spec!r}: {exc}") from None
    raise SpecError(f"unknown group family {family!r}")


@lru_cache(maxsize=None)
def conjugacy_classes(group: Group) -> ConjugacyData:
    n = group.order
    mult, inv = group.mult, group.inv
    class_id = [-1] * n
    classes = []
    for g in range(n):
        if class_id[g] >= 0:
            continue
        orbit = sorted({mult[mult[x][g]][inv[x]] for x in range(n)})
        cid = len(classes)
        for y in orbit:
            class_id[y] = cid
        classes.append(tuple(orbit))
    order_key = sorted(range(len(classes)), key=lambda c: (len(classes[c]), classes[c][0]))
    classes = [classes[c] for c in order_key]
    class_of = [-1] * n
    for cid, cls in enumerate(classes):
        for y in cls:
            class_of[y] = cid
    reps = tuple(cls[0] for cls in classes)
    class_inverse = tuple(class_of[inv[rep]] for rep in reps)
    return ConjugacyData(
        classes=tuple(classes),
        class_of=tuple(class_of),
        class_reps=reps,
        class_inverse=class_inverse,
    )


@lru_cache(maxsize=None)
def exponent(group: Group) -> int:
    value = 1
    for rep in conjugacy_classes(group).class_reps:
        value = lcm(value, group.element_order(rep))
    return value


def square_root_count(group: Group) -> int:
    """Number of g with g*g = identity, the identity included."""
    return sum(1 for g in range(group.order) if group.mult[g][g] == 0)


@lru_cache(maxsize=None)
def sign_characters(group: Group) -> tuple[tuple[int, ...], ...]:
    """All homomorphisms G -> {1, -1} as coefficient tuples, trivial one first.

    The kernel of every such map contains squares and commutators, so the maps
    are enumerated through the elementary abelian quotient by that subgroup.
    """
    n = group.order
    mult, inv = group.mult, group.inv
    seeds = {mult[g][g] for g in range(n)}
    seeds.update(
        mult[mult[inv[a]][inv[b]]][mult[a][b]] for a in range(n) for b in range(n)
    )
    seeds = sorted(seeds)
    # seeds are inverse-closed, so right-multiplication closure is the subgroup
    subgroup = {0}
    frontier = [0]
    while frontier:
        x = frontier.pop()
        for s in seeds:
            y = mult[x][s]
            if y not in subgroup:
                subgroup.add(y)
                frontier.append(y)
    coset_of = [-1] * n
    coset_reps = []
    for g in range(n):
        if coset_of[g] >= 0:
            continue
        cid = len(coset_reps)
        coset_reps.append(g)
        for s in subgroup:
            coset_of[mult[g][s]] = cid
    q = len(coset_reps)
    qmult = [
        [coset_of[mult[coset_reps[a]][coset_reps[b]]] for b in range(q)] for a in range(q)
    ]
    # F2 coordinates on the elementary abelian quotient
    coords = {0: 0}
    basis_bits = 0
    for c in range(1, q):
        if c in coords:
            continue
        bit = 1 << basis_bits
        basis_bits += 1
        for s, sc in list(coords.items()):
            coords[qmult[s][c]] = sc | bit
    chars = []
    for pattern in range(1 << basis_bits):
        alpha = tuple(
            -1 if bin(pattern & coords[coset_of[g]]).count("1") % 2 else 1
            for g in range(n)
        )
        chars.append(alpha)
    return tuple(chars)
