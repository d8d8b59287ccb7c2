from fractions import Fraction

import pytest

from skewlie import (
    AlgebraElement,
    Cyclotomic,
    Involution,
    SpecError,
    build_group,
    character_table,
    class_structure_constants,
    classify_components,
    component_skew_dim,
    conjugacy_classes,
    decomposition_report,
    find_dixon_prime,
    galois_orbits,
    rational_idempotents,
    sigma_action_on_components,
    skew_space,
    table_orthogonality,
)
from skewlie.catalog import c3c3_swap_involution, klein_swap_involution
from skewlie.wedderburn import idempotent_axioms_hold


def class_sum(group, cls):
    coeffs = [Fraction(0)] * group.order
    for g in cls:
        coeffs[g] = Fraction(1)
    return AlgebraElement(group, coeffs)


def test_structure_constants_trivial():
    g = build_group("cyclic:1")
    assert class_structure_constants(g) == [[[1]]]


def test_structure_constants_c2():
    g = build_group("cyclic:2")
    a = class_structure_constants(g)
    assert a[1][1] == [1, 0]  # C1*C1 = C0


def test_structure_constants_against_class_sum_oracle(s3, q8):
    for g in (s3, q8, build_group("alternating:4")):
        cd = conjugacy_classes(g)
        constants = class_structure_constants(g)
        for i, ci in enumerate(cd.classes):
            for j, cj in enumerate(cd.classes):
                product = class_sum(g, ci) * class_sum(g, cj)
                expected = AlgebraElement.zero(g)
                for k, ck in enumerate(cd.classes):
                    expected = expected + class_sum(g, ck).scale(constants[i][j][k])
                assert product == expected


def test_s3_transposition_class_square(s3):
    cd = conjugacy_classes(s3)
    sizes = cd.sizes()
    t = sizes.index(3)  # transpositions
    cyc = sizes.index(2)  # 3-cycles
    a = class_structure_constants(s3)
    assert a[t][t][0] == 3
    assert a[t][t][cyc] == 3
    assert a[t][t][t] == 0


def test_dixon_prime_bounds(q8):
    p = find_dixon_prime(q8)
    assert p == 53  # smallest p = 1 mod 4 above 2*3*8 = 48
    with pytest.raises(SpecError):
        find_dixon_prime(q8, bound=50)


def test_prime_override_validation(q8):
    with pytest.raises(SpecError):
        character_table(q8, prime=49)  # not prime
    with pytest.raises(SpecError):
        character_table(q8, prime=59)  # not 1 mod 4
    with pytest.raises(SpecError):
        character_table(q8, prime=13)  # too small
    alt = character_table(q8, prime=97)
    assert alt.degrees == (1, 1, 1, 1, 2)
    assert alt.values == character_table(q8).values


def test_s3_table(s3_table, s3):
    assert s3_table.degrees == (1, 1, 2)
    assert all(v.is_rational() for row in s3_table.values for v in row)
    assert sum(d * d for d in s3_table.degrees) == s3.order
    assert table_orthogonality(s3_table)


def test_c3_table_is_dft(c3_table):
    # three linear characters with values in {1, zeta3, zeta3^2}
    assert c3_table.degrees == (1, 1, 1)
    e = c3_table.conductor
    assert e == 3
    roots = {Cyclotomic.rational(3, 1), Cyclotomic.root(3), Cyclotomic.root(3, 2)}
    values = {v for row in c3_table.values for v in row}
    assert values == roots
    rows = {tuple(row) for row in c3_table.values}
    one, z, z2 = Cyclotomic.one(3), Cyclotomic.root(3), Cyclotomic.root(3, 2)
    assert rows == {(one, one, one), (one, z, z2), (one, z2, z)}


def test_q8_table_values(q8_table):
    assert q8_table.degrees == (1, 1, 1, 1, 2)
    # the class of a^2 is the other singleton class, index 1
    assert q8_table.classes.sizes() == (1, 1, 2, 2, 2)
    two_dim = q8_table.values[4]
    assert two_dim[0].rational_value() == 2
    assert two_dim[1].rational_value() == -2
    assert all(two_dim[j].rational_value() == 0 for j in (2, 3, 4))


def test_row_count_matches_class_count():
    for spec in ("cyclic:5", "dihedral:5", "symmetric:4", "alternating:4"):
        g = build_group(spec)
        t = character_table(g)
        assert len(t.degrees) == len(conjugacy_classes(g))


def test_orthogonality_via_cyclotomic_arithmetic(c3_table, s3_table, q8_table):
    # independent of the integer fast path: exact Cyclotomic products
    for table in (c3_table, s3_table, q8_table):
        e = table.conductor
        cd = table.classes
        n = table.group.order
        sizes = cd.sizes()
        for i, row_i in enumerate(table.values):
            for j, row_j in enumerate(table.values):
                acc = Cyclotomic.zero(e)
                for k in range(len(cd)):
                    term = row_i[k] * row_j[cd.class_inverse[k]]
                    acc = acc + term.scale(sizes[k])
                expected = Cyclotomic.rational(e, n if i == j else 0)
                assert acc == expected


def test_galois_orbits_q8(q8_table):
    orbits = galois_orbits(q8_table)
    assert [o.members for o in orbits] == [(0,), (1,), (2,), (3,), (4,)]
    assert [o.dim_q for o in orbits] == [1, 1, 1, 1, 4]


def test_galois_orbits_c3(c3_table):
    orbits = galois_orbits(c3_table)
    assert sorted(o.field_degree for o in orbits) == [1, 2]
    assert sum(o.dim_q for o in orbits) == 3


def test_galois_orbits_trivial():
    t = character_table(build_group("cyclic:1"))
    orbits = galois_orbits(t)
    assert len(orbits) == 1
    assert orbits[0].dim_q == 1


def test_c3_idempotents(c3, c3_table):
    orbits = galois_orbits(c3_table)
    idems = rational_idempotents(c3_table, orbits)
    avg = AlgebraElement(c3, [Fraction(1, 3)] * 3)
    elements = [ci.element for ci in idems]
    assert avg in elements
    other = next(e for e in elements if e != avg)
    assert other == AlgebraElement.one(c3) - avg
    assert idempotent_axioms_hold(idems)
    for ci in idems:
        assert ci.element * ci.element == ci.element


def test_q8_idempotent_dimensions(q8_table):
    orbits = galois_orbits(q8_table)
    idems = rational_idempotents(q8_table, orbits)
    assert idempotent_axioms_hold(idems)
    assert sorted(o.dim_q for o in orbits) == [1, 1, 1, 1, 4]


def test_trivial_group_idempotent():
    g = build_group("cyclic:1")
    t = character_table(g)
    idems = rational_idempotents(t, galois_orbits(t))
    assert len(idems) == 1
    assert idems[0].element == AlgebraElement.one(g)


def test_component_skew_dims_q8(q8, q8_table, canonical):
    inv = canonical(q8)
    orbits = galois_orbits(q8_table)
    idems = rational_idempotents(q8_table, orbits)
    dims = [component_skew_dim(ci, inv) for ci in idems]
    by_orbit_dim = sorted(zip((o.dim_q for o in orbits), dims))
    assert by_orbit_dim == [(1, 0), (1, 0), (1, 0), (1, 0), (4, 3)]


def test_component_skew_dim_c3(c3, c3_table, canonical):
    inv = canonical(c3)
    orbits = galois_orbits(c3_table)
    idems = rational_idempotents(c3_table, orbits)
    for orbit, ci in zip(orbits, idems):
        expected = 1 if orbit.field_degree == 2 else 0
        assert component_skew_dim(ci, inv) == expected


def test_sigma_action_identity_for_canonical(q8, q8_table, canonical):
    orbits = galois_orbits(q8_table)
    idems = rational_idempotents(q8_table, orbits)
    perm = sigma_action_on_components(idems, canonical(q8))
    assert perm == tuple(range(5))


def test_sigma_action_identity_for_abelian_canonical(canonical):
    g = build_group("cyclic:6")
    t = character_table(g)
    idems = rational_idempotents(t, galois_orbits(t))
    assert sigma_action_on_components(idems, canonical(g)) == tuple(range(len(idems)))


def test_sigma_action_swaps_for_oriented_c4():
    g = build_group("cyclic:4")
    inv = Involution.oriented(g, [1, -1, 1, -1]).validate()
    t = character_table(g)
    idems = rational_idempotents(t, galois_orbits(t))
    perm = sigma_action_on_components(idems, inv)
    assert sorted(perm) == list(range(len(idems)))
    assert perm != tuple(range(len(idems)))  # a genuine transposition occurs


def test_pair_swap_fixture_klein():
    g, inv = klein_swap_involution()
    t = character_table(g)
    orbits = galois_orbits(t)
    idems = rational_idempotents(t, orbits)
    perm = sigma_action_on_components(idems, inv)
    swapped = [i for i, j in enumerate(perm) if j != i]
    assert len(swapped) == 2
    reports = classify_components(t, orbits, idems, inv)
    pair = [c for c in reports if c.kind == "pair"]
    assert len(pair) == 1
    assert pair[0].type == "unitary"
    assert pair[0].skew_dim_q == 1  # n^2 [Z:Q] with n = 1, [Z:Q] = 1


def test_pair_swap_fixture_c3c3():
    g, inv = c3c3_swap_involution()
    rep = decomposition_report(g, inv)
    kinds = sorted(c.kind for c in rep.components)
    assert "pair" in kinds and "second" in kinds
    pair = next(c for c in rep.components if c.kind == "pair")
    assert pair.skew_dim_q == pair.degree_n ** 2 * pair.center_degree == 2
    assert rep.checks["theorem2_identity"]


def test_classify_q8(q8, canonical):
    rep = decomposition_report(q8, canonical(q8))
    quaternion = next(c for c in rep.components if c.dim_q == 4)
    assert quaternion.kind == "first"
    assert quaternion.type == "symplectic"
    assert quaternion.degree_n == 2
    assert quaternion.skew_dim_q == 3  # n(n+1)/2 with n = 2
    ones = [c for c in rep.components if c.dim_q == 1]
    assert len(ones) == 4
    assert all(c.type == "orthogonal" and c.skew_dim_q == 0 for c in ones)
    assert rep.skew_dim == 3 == rep.sum_components
    assert rep.all_checks_pass


def test_classify_c3_second_kind(c3, canonical):
    rep = decomposition_report(c3, canonical(c3))
    field = next(c for c in rep.components if c.center_degree == 2)
    assert field.kind == "second"
    assert field.type == "unitary"
    assert field.skew_dim_q == 1
    assert rep.all_checks_pass


def test_trivial_component_always_orthogonal(s3, canonical):
    rep = decomposition_report(s3, canonical(s3))
    trivial = [c for c in rep.components if c.dim_q == 1 and c.skew_dim_q == 0]
    assert trivial
    assert all(c.type == "orthogonal" for c in trivial)


def test_decomposition_totals(s3, canonical):
    rep = decomposition_report(s3, canonical(s3))
    assert rep.skew_dim == 1  # (6 - 4) / 2
    assert rep.sum_components == 1
    two_dim = next(c for c in rep.components if c.degree_n == 2)
    assert two_dim.type == "orthogonal"
    g2 = build_group("cyclic:2")
    rep2 = decomposition_report(g2, Involution.canonical(g2).validate())
    assert rep2.skew_dim == 0 == rep2.sum_components


def test_report_matches_independent_skew_dim(q8, canonical):
    inv = canonical(q8)
    rep = decomposition_report(q8, inv)
    assert rep.skew_dim == skew_space(inv).skew_dim


def test_report_json_shape(q8, canonical):
    obj = decomposition_report(q8, canonical(q8)).to_json()
    assert obj["group"] == "dicyclic:2"
    assert obj["involution"] == {"kind": "canonical"}
    assert obj["totals"] == {"skew_dim": 3, "sum_components": 3}
    assert set(obj["checks"]) == {"theorem2_identity", "idempotent_axioms", "orthogonality"}
    assert all(
        set(c) == {"id", "dim_q", "center_degree", "degree_n", "kind", "type",
                   "skew_dim_q", "paired_with"}
        for c in obj["components"]
    )
    assert obj["indicators"]["eq1_identity"] is True
