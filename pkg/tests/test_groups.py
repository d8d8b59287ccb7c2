from math import lcm

import pytest

from oracle import conjugation_orbits, element_orders, permutation_closure
from skewlie import (
    SpecError,
    build_group,
    conjugacy_classes,
    exponent,
    sign_characters,
    square_root_count,
)
from skewlie.groups import group_from_permutations, group_from_table


def test_trivial_group():
    g = build_group("cyclic:1")
    assert g.order == 1
    assert exponent(g) == 1
    assert square_root_count(g) == 1
    assert len(conjugacy_classes(g)) == 1


def test_q8_square_roots(q8):
    # from the presentation a^2 = b^2 = (ab)^2 is the unique involution
    assert q8.order == 8
    assert square_root_count(q8) == 2


def test_permutation_generators_give_s3():
    gens = [[1, 0, 2], [1, 2, 0]]
    assert len(permutation_closure(gens, 3)) == 6  # oracle
    g = group_from_permutations(gens, 3)
    assert g.order == 6
    assert not g.is_abelian()


def test_builtin_family_orders():
    assert build_group("dihedral:4").order == 8
    assert build_group("dicyclic:3").order == 12
    assert build_group("symmetric:4").order == 24
    assert build_group("alternating:5").order == 60
    assert build_group("abelian:2,4").order == 8
    assert build_group("product:cyclic:2,dicyclic:2").order == 16
    assert build_group("product:abelian:2,2,cyclic:3").order == 12


def test_conjugacy_classes_against_oracle(q8, s3):
    for g in (q8, s3, build_group("alternating:4")):
        cd = conjugacy_classes(g)
        assert {frozenset(c) for c in cd.classes} == conjugation_orbits(g.mult, g.inv)
        assert sum(cd.sizes()) == g.order
        assert all(g.order % size == 0 for size in cd.sizes())
        # class_inverse is an involutive permutation
        ci = cd.class_inverse
        assert sorted(ci) == list(range(len(cd)))
        assert all(ci[ci[k]] == k for k in range(len(cd)))


def test_q8_class_sizes(q8):
    assert conjugacy_classes(q8).sizes() == (1, 1, 2, 2, 2)


def test_s3_class_sizes(s3):
    assert conjugacy_classes(s3).sizes() == (1, 2, 3)


def test_abelian_classes_are_singletons():
    g = build_group("cyclic:12")
    assert conjugacy_classes(g).sizes() == (1,) * 12


def test_exponent_against_oracle(q8, s3):
    for g in (q8, s3, build_group("cyclic:12"), build_group("dihedral:6")):
        assert exponent(g) == lcm(*element_orders(g.mult))
    assert exponent(q8) == 4
    assert exponent(s3) == 6


def test_square_root_counts(s3):
    assert square_root_count(s3) == 4  # identity plus three transpositions
    assert square_root_count(build_group("abelian:2,2,2")) == 8


def test_identity_is_index_zero():
    for spec in ("cyclic:5", "dihedral:3", "dicyclic:2", "symmetric:4"):
        g = build_group(spec)
        assert all(g.mult[0][x] == x == g.mult[x][0] for x in range(g.order))
        assert all(g.mult[x][g.inv[x]] == 0 == g.mult[g.inv[x]][x] for x in range(g.order))


def test_latin_square_property():
    g = build_group("dicyclic:4")
    n = g.order
    for row in g.mult:
        assert sorted(row) == list(range(n))
    for c in range(n):
        assert sorted(g.mult[r][c] for r in range(n)) == list(range(n))


def test_bad_tables_rejected():
    with pytest.raises(SpecError):
        group_from_table([[0, 1], [1, 1]])  # row not a permutation
    with pytest.raises(SpecError):
        group_from_table([[1, 0], [0, 1]])  # identity not at 0
    with pytest.raises(SpecError):
        # latin square, identity at 0, but not associative: (1*1)*2 != 1*(1*2)
        group_from_table([
            [0, 1, 2, 3, 4],
            [1, 0, 3, 4, 2],
            [2, 4, 0, 1, 3],
            [3, 2, 4, 0, 1],
            [4, 3, 1, 2, 0],
        ])


def test_order_cap_enforced():
    with pytest.raises(SpecError):
        build_group("cyclic:10", max_order=5)
    with pytest.raises(SpecError):
        group_from_permutations([[1, 2, 3, 4, 5, 6, 0]], 7, max_order=5)


def test_group_json_round_trip(q8):
    obj = q8.to_json()
    rebuilt = build_group(obj)
    assert rebuilt.mult == q8.mult


def test_sign_characters_are_homomorphisms(q8, s3):
    for g in (q8, s3, build_group("cyclic:6"), build_group("alternating:4")):
        chars = sign_characters(g)
        assert chars[0] == (1,) * g.order
        for alpha in chars:
            for a in range(g.order):
                for b in range(g.order):
                    assert alpha[g.mult[a][b]] == alpha[a] * alpha[b]
        assert len(set(chars)) == len(chars)


def test_sign_character_counts(q8, s3):
    assert len(sign_characters(s3)) == 2
    assert len(sign_characters(q8)) == 4
    assert len(sign_characters(build_group("cyclic:5"))) == 1
    assert len(sign_characters(build_group("alternating:4"))) == 1
    assert len(sign_characters(build_group("abelian:2,2,2"))) == 8


def test_unknown_specs_rejected():
    with pytest.raises(SpecError):
        build_group("frobnicator:3")
    with pytest.raises(SpecError):
        build_group("symmetric:6")
