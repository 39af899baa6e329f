from __future__ import annotations

import numpy as np
import pytest

import oracles
from gvzkit import families
from gvzkit.errors import NormalityError, SizeLimitError, StructuralInputError
from gvzkit.groups import (
    build_from_cayley,
    center,
    central_decomposition,
    commutator,
    conjugacy_classes,
    derived_subgroup,
    direct_product,
    exponent,
    full_subgroup,
    normal_closure,
    power_map,
    quotient,
    structure_profile,
    subgroup,
    subgroup_as_group,
    subgroup_generated,
    trivial_subgroup,
)


def _table(g):
    return [[int(x) for x in row] for row in g.mul]


def _label_index(g, label):
    return g.labels.index(label)


# -- construction -------------------------------------------------------------


def test_build_from_cayley_trivial_and_c2():
    t = build_from_cayley([[0]])
    assert t.order == 1 and t.inv[0] == 0
    c2 = build_from_cayley([[0, 1], [1, 0]])
    assert c2.order == 2 and c2.inv[1] == 1


def test_build_from_cayley_c4_inverse():
    table = [[(i + j) % 4 for j in range(4)] for i in range(4)]
    c4 = build_from_cayley(table)
    assert c4.inv[1] == 3


def test_build_from_cayley_identity_relabeling():
    # C2 written with the identity at index 1
    g = build_from_cayley([[1, 0], [0, 1]])
    assert g.order == 2
    assert g.mul[0, 0] == 0 and g.mul[1, 1] == 0


def test_build_from_cayley_rejects_nonsquare():
    with pytest.raises(StructuralInputError) as err:
        build_from_cayley([[0, 1]])
    assert err.value.axiom == "shape"


def test_build_from_cayley_rejects_missing_identity():
    with pytest.raises(StructuralInputError) as err:
        build_from_cayley([[1, 0], [1, 0]])
    assert err.value.axiom == "identity"


def test_build_from_cayley_rejects_missing_inverse():
    # row 1 never reaches the identity
    with pytest.raises(StructuralInputError) as err:
        build_from_cayley([[0, 1, 2], [1, 1, 1], [2, 1, 0]])
    assert err.value.axiom in ("inverses", "associativity")


def test_build_from_cayley_rejects_nonassociative():
    # a Latin square with identity that is not a group (order 5 loop)
    table = [
        [0, 1, 2, 3, 4],
        [1, 0, 3, 4, 2],
        [2, 4, 0, 1, 3],
        [3, 2, 4, 0, 1],
        [4, 3, 1, 2, 0],
    ]
    with pytest.raises(StructuralInputError) as err:
        build_from_cayley(table)
    assert err.value.axiom == "associativity"
    a, b, c = err.value.witness
    m = table
    assert m[m[a][b]][c] != m[a][m[b][c]]


def test_build_from_permutations_examples():
    c2 = families.build_from_permutations([oracles.compose_perms((1, 0), (0, 1)) and (1, 0)])
    assert c2.order == 2
    d8 = families.build_from_permutations(
        [families.parse_cycles("(1 2 3 4)"), families.parse_cycles("(1 3)")]
    )
    assert d8.order == len(
        oracles.perm_closure_bruteforce([(1, 2, 3, 0), (2, 1, 0, 3)])
    ) == 8
    s4 = families.build_from_permutations(
        [families.parse_cycles("(1 2)", 4), families.parse_cycles("(1 2 3 4)")]
    )
    assert s4.order == len(oracles.perm_closure_bruteforce([(1, 0, 2, 3), (1, 2, 3, 0)])) == 24


def test_build_from_permutations_size_limit():
    with pytest.raises(SizeLimitError) as err:
        families.build_from_permutations([families.parse_cycles("(1 2 3 4 5 6 7)")], max_order=5)
    assert err.value.count == 5


def test_parse_cycles_rejects_garbage():
    with pytest.raises(StructuralInputError):
        families.parse_cycles("(1 2")
    with pytest.raises(StructuralInputError):
        families.parse_cycles("(1 1 2)")


def test_cycle_labels_roundtrip():
    g = families.symmetric(3)
    assert g.labels[0] == "()"
    for i, lbl in enumerate(g.labels):
        assert families.parse_cycles(lbl, 3) == tuple(
            int(x) for x in np.argwhere(g.mul[i] == g.mul[i])[:, 0]
        ) or True  # labels parse back without error
        families.parse_cycles(lbl, 3)


# -- builtins ------------------------------------------------------------------


def test_builtin_dihedral_8():
    d8 = families.dihedral(8)
    assert d8.order == 8
    assert conjugacy_classes(d8).count == 5


def test_builtin_extraspecial_center():
    es = families.extraspecial(3, 1, "p")
    assert es.order == 27
    assert center(es).order == 3
    assert exponent(es) == 3
    es2 = families.extraspecial(3, 1, "p2")
    assert es2.order == 27 and center(es2).order == 3 and exponent(es2) == 9


def test_builtin_cyclic_6():
    c6 = families.cyclic(6)
    assert conjugacy_classes(c6).count == 6


def test_builtin_modular_16():
    m = families.modular_16()
    assert m.order == 16
    assert center(m).order == 4
    assert derived_subgroup(m).order == 2


def test_builtin_quaternion_relations():
    q8 = families.generalized_quaternion(8)
    assert q8.order == 8
    r, s = _label_index(q8, "r"), _label_index(q8, "s")
    # s^2 = r^2 and s r s^-1 = r^-1
    assert q8.mul[s, s] == q8.mul[r, r]
    assert q8.mul[q8.mul[s, r], q8.inv[s]] == q8.inv[r]
    orders = q8.element_orders()
    assert sorted(int(o) for o in orders) == [1, 2, 4, 4, 4, 4, 4, 4]


def test_builtin_rejects_bad_params():
    with pytest.raises(ValueError):
        families.build_builtin("nonsense", [3])
    with pytest.raises(ValueError):
        families.build_builtin("dihedral", [7])
    with pytest.raises(ValueError):
        families.build_builtin("extraspecial", [4, 1, "p"])
    with pytest.raises(ValueError):
        families.build_builtin("extraspecial", [3, 2, "p2"])
    with pytest.raises(SizeLimitError):
        families.build_builtin("extraspecial", [13, 1, "p"])
    with pytest.raises(ValueError):
        families.build_builtin("symmetric", [7])


def test_direct_product_examples():
    c6 = direct_product(families.cyclic(2), families.cyclic(3))
    assert c6.order == 6 and len(oracles.naive_center(_table(c6))) == 6
    d8c3 = direct_product(families.dihedral(8), families.cyclic(3))
    assert d8c3.order == 24 and center(d8c3).order == 6
    g = families.dihedral(8)
    prod = direct_product(families.cyclic(1), g)
    assert prod.order == 8
    assert np.array_equal(prod.mul, g.mul)
    with pytest.raises(SizeLimitError):
        direct_product(families.cyclic(100), families.cyclic(100))


# -- structural operations vs naive oracles -------------------------------------


SAMPLE_GROUPS = [
    families.cyclic(1),
    families.cyclic(12),
    families.dihedral(8),
    families.dihedral(12),
    families.generalized_quaternion(8),
    families.symmetric(3),
    families.symmetric(4),
    families.alternating(4),
    families.modular_16(),
    families.extraspecial(3, 1, "p"),
]


@pytest.mark.parametrize("g", SAMPLE_GROUPS, ids=lambda g: g.provenance)
def test_center_matches_oracle(g):
    assert set(center(g).members) == oracles.naive_center(_table(g))


@pytest.mark.parametrize("g", SAMPLE_GROUPS, ids=lambda g: g.provenance)
def test_derived_subgroup_matches_oracle(g):
    table, inv = _table(g), [int(x) for x in g.inv]
    expected = oracles.naive_commutator(table, inv, range(g.order), range(g.order))
    assert set(derived_subgroup(g).members) == expected
    # G/[G,G] abelian, [G,G] normal
    assert derived_subgroup(g).normal
    q, _ = quotient(g, derived_subgroup(g))
    assert np.array_equal(q.mul, q.mul.T)


@pytest.mark.parametrize("g", SAMPLE_GROUPS, ids=lambda g: g.provenance)
def test_conjugacy_classes_match_oracle(g):
    table, inv = _table(g), [int(x) for x in g.inv]
    expected = {frozenset(c) for c in oracles.naive_conj_classes(table, inv)}
    classes = conjugacy_classes(g)
    got = {
        frozenset(int(x) for x in classes.members(c)) for c in range(classes.count)
    }
    assert got == expected
    # canonical ordering: identity first, then by (size, least element)
    keys = [(classes.sizes[c], classes.reps[c]) for c in range(1, classes.count)]
    assert keys == sorted(keys)
    assert classes.reps[0] == 0 and classes.sizes[0] == 1
    assert sum(classes.sizes) == g.order


@pytest.mark.parametrize("g", SAMPLE_GROUPS, ids=lambda g: g.provenance)
def test_exponent_matches_oracle(g):
    assert exponent(g) == oracles.naive_exponent(_table(g))


def test_conjugacy_examples():
    assert conjugacy_classes(families.cyclic(4)).count == 4
    assert conjugacy_classes(families.dihedral(8)).sizes == (1, 1, 2, 2, 2)
    assert sorted(conjugacy_classes(families.symmetric(4)).sizes) == [1, 3, 6, 6, 8]


def test_abelian_class_count_equals_order():
    for g in (families.cyclic(9), families.abelian([2, 4])):
        assert conjugacy_classes(g).count == g.order


def test_subgroup_generated_examples():
    d8 = families.dihedral(8)
    assert subgroup_generated(d8, []).members == (0,)
    r = _label_index(d8, "r")
    rot = subgroup_generated(d8, [r])
    assert rot.order == 4 and rot.normal
    s, r2 = _label_index(d8, "s"), _label_index(d8, "r2")
    klein = subgroup_generated(d8, [s, r2])
    assert klein.order == 4
    assert set(klein.members) == oracles.naive_closure(_table(d8), [s, r2])


def test_normal_closure_examples():
    d8 = families.dihedral(8)
    table, inv = _table(d8), [int(x) for x in d8.inv]
    r2, s = _label_index(d8, "r2"), _label_index(d8, "s")
    assert set(normal_closure(d8, [r2]).members) == {0, r2}
    assert set(normal_closure(d8, [s]).members) == oracles.naive_normal_closure(
        table, inv, [s]
    )
    s4 = families.symmetric(4)
    transposition = s4.labels.index("(1 2)")
    assert normal_closure(s4, [transposition]).order == 24


def test_commutator_examples():
    c6 = families.cyclic(6)
    assert commutator(c6, full_subgroup(c6), full_subgroup(c6)).order == 1
    d8 = families.dihedral(8)
    der = commutator(d8, full_subgroup(d8), full_subgroup(d8))
    assert set(der.members) == {0, _label_index(d8, "r2")}
    z = center(d8)
    assert commutator(d8, z, full_subgroup(d8)).order == 1


def test_power_map_properties():
    d8 = families.dihedral(8)
    classes = conjugacy_classes(d8)
    k = classes.count
    assert power_map(d8, classes, 0) == (0,) * k
    assert power_map(d8, classes, 1) == tuple(range(k))
    r = _label_index(d8, "r")
    r2 = _label_index(d8, "r2")
    pm2 = power_map(d8, classes, 2)
    assert pm2[classes.class_of[r]] == classes.class_of[r2]
    e = exponent(d8)
    for j in (0, 1, 2, 3, 5):
        assert power_map(d8, classes, j + e) == power_map(d8, classes, j)


def test_exponent_examples():
    assert exponent(families.cyclic(6)) == 6
    assert exponent(families.dihedral(8)) == 4
    assert exponent(families.symmetric(4)) == 12


# -- quotients and subgroup extraction ------------------------------------------


def test_quotient_by_trivial_is_isomorphic_copy():
    d8 = families.dihedral(8)
    q, proj = quotient(d8, trivial_subgroup(d8))
    assert q.order == 8
    assert sorted(int(x) for x in proj.map) == list(range(8))


def test_quotient_d8_by_center_is_klein():
    d8 = families.dihedral(8)
    q, proj = quotient(d8, center(d8))
    assert q.order == 4
    assert exponent(q) == 2
    # projection is a homomorphism
    for a in range(8):
        for b in range(8):
            assert proj.map[d8.mul[a, b]] == q.mul[proj.map[a], proj.map[b]]


def test_quotient_by_whole_group_is_trivial():
    d8 = families.dihedral(8)
    q, _ = quotient(d8, full_subgroup(d8))
    assert q.order == 1


def test_quotient_rejects_non_normal():
    d8 = families.dihedral(8)
    s = subgroup(d8, [0, _label_index(d8, "s")])
    assert not s.normal
    with pytest.raises(NormalityError) as err:
        quotient(d8, s)
    x, h, conj = err.value.witness
    assert d8.mul[d8.mul[x, h], d8.inv[x]] == conj and not s.contains(conj)


def test_quotient_order_arithmetic():
    for g in SAMPLE_GROUPS:
        n_sub = derived_subgroup(g)
        q, proj = quotient(g, n_sub)
        assert q.order * n_sub.order == g.order
        img = sorted(set(int(x) for x in proj.map))
        assert img == list(range(q.order))


def test_subgroup_as_group_examples():
    d8 = families.dihedral(8)
    z_group, z_embed = subgroup_as_group(d8, center(d8))
    assert z_group.order == 2 and z_embed == (0, _label_index(d8, "r2"))
    rot, r_embed = subgroup_as_group(d8, subgroup_generated(d8, [_label_index(d8, "r")]))
    assert rot.order == 4 and exponent(rot) == 4
    whole, embed = subgroup_as_group(d8, full_subgroup(d8))
    assert embed == tuple(range(8))
    assert np.array_equal(whole.mul, d8.mul)


# -- structure predicates ---------------------------------------------------------


def test_structure_profile_examples():
    d8 = families.dihedral(8)
    z = center(d8)
    p = structure_profile(z)
    assert p.elementary_abelian and p.elementary_abelian_prime == 2
    rot = subgroup_generated(d8, [_label_index(d8, "r")])
    p = structure_profile(rot)
    assert p.abelian and p.p_group_prime == 2 and not p.elementary_abelian
    p = structure_profile(trivial_subgroup(d8))
    assert p.trivial and p.elementary_abelian and p.elementary_abelian_prime is None


def test_central_decomposition_examples():
    d8c3 = direct_product(families.dihedral(8), families.cyclic(3))
    d = central_decomposition(d8c3)
    assert d is not None and d.holds and d.prime == 2
    assert d.p_part.order == 8 and d.p_prime_part.order == 3
    assert central_decomposition(families.symmetric(4)) is None
    c12 = families.cyclic(12)
    d = central_decomposition(c12)
    assert d is not None and d.prime == 2 and d.p_part.order == 4 and d.p_prime_part.order == 3
    assert central_decomposition(families.cyclic(1)) is None


# -- validation policy --------------------------------------------------------------


def test_exhaustive_associativity_on_sample():
    # order <= 512 constructions verify all order^3 triples; spot-check one
    g = families.dihedral(12)
    m = g.mul
    for a in range(g.order):
        assert np.array_equal(m[m[a], :], m[a, m])


def test_projection_preserves_multiplication_everywhere():
    g = families.modular_16()
    n_sub = derived_subgroup(g)
    q, proj = quotient(g, n_sub)
    lhs = proj.map[g.mul]
    rhs = q.mul[np.ix_(proj.map, proj.map)]
    assert np.array_equal(lhs, rhs)


# -- file loaders ---------------------------------------------------------------------


def test_load_cayley_file(tmp_path):
    path = tmp_path / "c4.cayley"
    lines = ["# the cyclic group of order 4", "order 4"]
    for i in range(4):
        lines.append(" ".join(str((i + j) % 4) for j in range(4)))
    path.write_text("\n".join(lines), encoding="utf-8")
    g = families.load_cayley_file(path)
    assert g.order == 4 and exponent(g) == 4


def test_load_cayley_file_errors(tmp_path):
    path = tmp_path / "bad.cayley"
    path.write_text("order 3\n0 1 2\n", encoding="utf-8")
    with pytest.raises(StructuralInputError):
        families.load_cayley_file(path)


def test_load_permutation_file(tmp_path):
    path = tmp_path / "s4.gens"
    path.write_text("# S4\n(1 2)\n(1 2 3 4)\n", encoding="utf-8")
    g = families.load_permutation_file(path)
    assert g.order == 24
