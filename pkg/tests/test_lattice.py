"""Normal forms, the weight-class group, and the subgroup lattice."""

import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rootatlas.lattice import (
    Diagram,
    EnumerationCapError,
    FiniteAbelianGroup,
    adjoint_diagram,
    center_char_group,
    diagrams,
    enumerate_subgroups,
    fundamental_group,
    full_subgroup,
    irreducible_components,
    isogeny_order,
    simply_connected_diagram,
    smith_normal_form,
    subgroup_from_generators,
    trivial_subgroup,
    weight_class_data,
    weight_in_lattice,
)
from rootatlas.rootsys import build_root_system, parse_cartan_type


def _det(m):
    n = len(m)
    if n == 0:
        return 1
    a = [[Fraction(x) for x in row] for row in m]
    det = Fraction(1)
    for col in range(n):
        pivot = next((i for i in range(col, n) if a[i][col]), None)
        if pivot is None:
            return 0
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            det = -det
        det *= a[col][col]
        for i in range(col + 1, n):
            f = a[i][col] / a[col][col]
            a[i] = [x - f * y for x, y in zip(a[i], a[col])]
    return det


def _matmul(x, y):
    return tuple(
        tuple(sum(x[i][k] * y[k][j] for k in range(len(y))) for j in range(len(y[0])))
        for i in range(len(x))
    )


def test_snf_examples():
    _, d, _ = smith_normal_form([[2, -1], [-1, 2]])
    assert d == ((1, 0), (0, 3))
    _, d, _ = smith_normal_form([[2]])
    assert d == ((2,),)
    _, d, _ = smith_normal_form([[0, 0], [0, 0]])
    assert d == ((0, 0), (0, 0))


@given(
    st.integers(min_value=1, max_value=4),
    st.integers(min_value=1, max_value=4),
    st.data(),
)
@settings(max_examples=150, deadline=None)
def test_snf_properties(rows, cols, data):
    m = tuple(
        tuple(
            data.draw(st.integers(min_value=-9, max_value=9)) for _ in range(cols)
        )
        for _ in range(rows)
    )
    left, diag, right = smith_normal_form(m)
    # reconstruction
    assert _matmul(_matmul(left, m), right) == diag
    # unimodular transforms
    assert abs(_det(left)) == 1
    assert abs(_det(right)) == 1
    # diagonal, nonnegative, divisibility chain
    entries = []
    for i in range(rows):
        for j in range(cols):
            if i != j:
                assert diag[i][j] == 0
            else:
                assert diag[i][j] >= 0
                entries.append(diag[i][j])
    for a, b in zip(entries, entries[1:]):
        if a == 0:
            assert b == 0
        else:
            assert b % a == 0
    if rows == cols:
        assert abs(_det(m)) == _det(diag) * abs(_det(left)) * abs(_det(right))


FUNDAMENTAL_GROUPS = {
    "A1": (2,),
    "A2": (3,),
    "A3": (4,),
    "A4": (5,),
    "B2": (2,),
    "B3": (2,),
    "C3": (2,),
    "D4": (2, 2),
    "D5": (4,),
    "D6": (2, 2),
    "D7": (4,),
    "E6": (3,),
    "E7": (2,),
    "E8": (),
    "F4": (),
    "G2": (),
    "A1xA2": (6,),
    "A1xA1": (2, 2),
    "A2xA2": (3, 3),
    "B2xG2": (2,),
}


@pytest.mark.parametrize("name,factors", sorted(FUNDAMENTAL_GROUPS.items()))
def test_fundamental_groups(name, factors):
    assert fundamental_group(parse_cartan_type(name)).invariant_factors == factors


def test_fundamental_group_order_is_cartan_determinant():
    for name in ["A3", "B4", "D5", "E6", "A2xA3"]:
        t = parse_cartan_type(name)
        from rootatlas.rootsys import cartan_matrix

        assert fundamental_group(t).order == abs(_det(cartan_matrix(t)))


def test_invariant_factor_validation():
    with pytest.raises(ValueError):
        FiniteAbelianGroup((1,))
    with pytest.raises(ValueError):
        FiniteAbelianGroup((4, 2))
    FiniteAbelianGroup(())  # trivial group is fine
    FiniteAbelianGroup((2, 4))


def _powerset_subgroups(group):
    """Oracle: scan all element subsets for closure under the group laws."""
    elems = list(group.elements())
    zero = (0,) * len(group.invariant_factors)
    found = set()
    for r in range(len(elems) + 1):
        for combo in itertools.combinations(elems, r):
            s = set(combo)
            if zero not in s:
                continue
            if all(group.add(x, y) in s for x in s for y in s):
                found.add(frozenset(s))
    return found


@pytest.mark.parametrize(
    "factors",
    [(), (2,), (3,), (4,), (2, 2), (6,), (8,), (2, 4), (2, 2, 2), (12,), (2, 6), (16,)],
)
def test_enumerate_subgroups_against_powerset_oracle(factors):
    group = FiniteAbelianGroup(factors)
    subs = enumerate_subgroups(group)
    assert _powerset_subgroups(group) == {s.elements() for s in subs}
    assert len({s.basis for s in subs}) == len(subs)  # canonical forms distinct
    orders = [s.order for s in subs]
    assert orders == sorted(orders)
    for s in subs:
        assert s.order == len(s.elements())


def test_enumeration_cap():
    with pytest.raises(EnumerationCapError):
        enumerate_subgroups(FiniteAbelianGroup((128,)))
    enumerate_subgroups(FiniteAbelianGroup((64,)))  # at the cap is allowed
    with pytest.raises(EnumerationCapError):
        enumerate_subgroups(FiniteAbelianGroup((4,)), cap=3)


def test_subgroup_canonical_equality():
    group = FiniteAbelianGroup((2, 4))
    a = subgroup_from_generators(group, [(1, 2), (0, 2)])
    b = subgroup_from_generators(group, [(1, 0), (0, 2), (1, 2)])
    assert a == b
    assert a.basis == b.basis
    c = subgroup_from_generators(group, [(0, 2)])
    assert a != c


def test_subgroup_membership():
    group = FiniteAbelianGroup((4,))
    half = subgroup_from_generators(group, [(2,)])
    assert half.contains((0,)) and half.contains((2,))
    assert not half.contains((1,))
    assert full_subgroup(group).contains((3,))
    assert not trivial_subgroup(group).contains((2,))


def test_diagram_counts():
    assert len(diagrams(parse_cartan_type("A1"))) == 2
    assert len(diagrams(parse_cartan_type("A3"))) == 3
    assert len(diagrams(parse_cartan_type("D4"))) == 5
    assert len(diagrams(parse_cartan_type("G2"))) == 1
    assert len(diagrams(parse_cartan_type("A2"))) == 2


def test_diagrams_ordered_simply_connected_first():
    ds = diagrams(parse_cartan_type("A3"))
    assert ds[0] == simply_connected_diagram(parse_cartan_type("A3"))
    assert ds[-1] == adjoint_diagram(parse_cartan_type("A3"))
    orders = [d.subgroup.order for d in ds]
    assert orders == sorted(orders, reverse=True)


def test_center_char_groups():
    a3 = parse_cartan_type("A3")
    assert [center_char_group(d).invariant_factors for d in diagrams(a3)] == [
        (4,),
        (2,),
        (),
    ]
    d4 = parse_cartan_type("D4")
    assert [center_char_group(d).invariant_factors for d in diagrams(d4)] == [
        (2, 2),
        (2,),
        (2,),
        (2,),
        (),
    ]
    # the simply connected center is the whole fundamental group
    for name in ["A1", "A4", "B3", "D5", "E6", "A1xA2"]:
        t = parse_cartan_type(name)
        assert center_char_group(simply_connected_diagram(t)) == fundamental_group(t)
        assert center_char_group(adjoint_diagram(t)).invariant_factors == ()


def test_weight_in_lattice_a1():
    t = parse_cartan_type("A1")
    rs = build_root_system(t)
    sc = simply_connected_diagram(t)
    ad = adjoint_diagram(t)
    assert weight_in_lattice(rs, (1,), sc)
    assert not weight_in_lattice(rs, (1,), ad)
    assert weight_in_lattice(rs, (2,), ad)


def test_weight_in_lattice_closed_under_roots():
    for name in ["A2", "B2", "A3"]:
        t = parse_cartan_type(name)
        rs = build_root_system(t)
        for d in diagrams(t):
            for w in [(0,) * rs.rank, (1,) + (0,) * (rs.rank - 1), (1,) * rs.rank]:
                inside = weight_in_lattice(rs, w, d)
                for root in rs.all_roots:
                    shifted = tuple(a + b for a, b in zip(w, root))
                    assert weight_in_lattice(rs, shifted, d) == inside


def test_weight_in_lattice_type_mismatch():
    rs = build_root_system(parse_cartan_type("A2"))
    d = adjoint_diagram(parse_cartan_type("B2"))
    with pytest.raises(ValueError):
        weight_in_lattice(rs, (1, 0), d)


def test_weight_class_additivity():
    data = weight_class_data(parse_cartan_type("A3"))
    group = data.group
    for v in [(1, 0, 0), (0, 2, -1), (3, 1, 2)]:
        for w in [(0, 1, 0), (-1, -1, 4)]:
            s = tuple(a + b for a, b in zip(v, w))
            assert data.class_of(s) == group.add(data.class_of(v), data.class_of(w))


def test_irreducible_components():
    blocks = irreducible_components(parse_cartan_type("B2xG2"))
    assert [(str(b.cartan_type), b.start, b.stop) for b in blocks] == [
        ("B2", 1, 2),
        ("G2", 3, 4),
    ]
    assert len(irreducible_components(parse_cartan_type("A5"))) == 1


def test_isogeny_order_properties():
    for name in ["A3", "D4"]:
        ds = diagrams(parse_cartan_type(name))
        sc, ad = ds[0], ds[-1]
        for d in ds:
            assert isogeny_order(sc, d)  # simply connected on top
            assert isogeny_order(d, ad)  # adjoint at the bottom
            assert isogeny_order(d, d)  # reflexive
        for d1 in ds:
            for d2 in ds:
                if isogeny_order(d1, d2) and isogeny_order(d2, d1):
                    assert d1 == d2  # antisymmetric
                for d3 in ds:
                    if isogeny_order(d1, d2) and isogeny_order(d2, d3):
                        assert isogeny_order(d1, d3)  # transitive


def test_isogeny_order_type_mismatch():
    with pytest.raises(ValueError):
        isogeny_order(
            adjoint_diagram(parse_cartan_type("A1")),
            adjoint_diagram(parse_cartan_type("A2")),
        )


def test_d4_middle_subgroups_incomparable():
    ds = diagrams(parse_cartan_type("D4"))
    middles = [d for d in ds if d.subgroup.order == 2]
    assert len(middles) == 3
    for d1 in middles:
        for d2 in middles:
            if d1 != d2:
                assert not isogeny_order(d1, d2)


def test_subgroup_generator_length_checked():
    with pytest.raises(ValueError):
        subgroup_from_generators(FiniteAbelianGroup((2, 2)), [(1,)])
