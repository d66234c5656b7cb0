import json

import pytest

from rootatlas.classify import (
    admissible_irreducible_types,
    atlas_to_json,
    build_atlas,
    build_entry,
    decompose_semisimple,
    entry_to_json,
    label_diagram,
)
from rootatlas.lattice import diagrams, fundamental_group
from rootatlas.rootsys import parse_cartan_type


def _types(entries):
    return [str(e.cartan_type) for e in entries]


def test_admissible_type_ordering():
    got = [str(t) for t in admissible_irreducible_types(4)]
    assert got == [
        "A1",
        "A2",
        "B2",
        "C2",
        "G2",
        "A3",
        "B3",
        "C3",
        "A4",
        "B4",
        "C4",
        "D4",
        "F4",
    ]


def test_admissible_types_rank_8_includes_exceptionals():
    got = [str(t) for t in admissible_irreducible_types(8)]
    assert "E6" in got and "E7" in got and "E8" in got
    assert got.index("E6") < got.index("E7") < got.index("E8")


def test_a1_entry():
    entry = build_entry(parse_cartan_type("A1"), bound=2)
    assert entry.error is None
    assert entry.fundamental_group.invariant_factors == (2,)
    assert len(entry.diagrams) == 2
    centers = [d.center.invariant_factors for d in entry.diagrams]
    assert centers == [(2,), ()]
    assert entry.isogeny_edges == ((0, 1),)
    assert entry.grading.matches is True
    assert entry.grading.presentation.quotient.invariant_factors == (2,)


def test_a3_chain():
    entry = build_entry(parse_cartan_type("A3"), bound=1)
    assert len(entry.diagrams) == 3
    orders = [d.diagram.subgroup.order for d in entry.diagrams]
    assert orders == [4, 2, 1]
    # total order: a 3-chain has exactly the two covering edges
    assert entry.isogeny_edges == ((0, 1), (1, 2))


def test_d4_five_diagrams():
    entry = build_entry(parse_cartan_type("D4"), bound=1)
    assert len(entry.diagrams) == 5
    orders = [d.diagram.subgroup.order for d in entry.diagrams]
    assert orders == [4, 2, 2, 2, 1]
    # three incomparable middles, each covered by the top and covering the bottom
    assert entry.isogeny_edges == (
        (0, 1),
        (0, 2),
        (0, 3),
        (1, 4),
        (2, 4),
        (3, 4),
    )


def test_labels():
    entry = build_entry(parse_cartan_type("A3"), bound=1)
    labels = [d.label for d in entry.diagrams]
    assert labels == ["A3 simply-connected", "A3 intermediate#1", "A3 adjoint"]
    g2 = build_entry(parse_cartan_type("G2"), bound=1)
    # trivial fundamental group: the unique diagram is both ends of the chain
    assert [d.label for d in g2.diagrams] == ["G2 simply-connected"]


def test_label_diagram_roundtrip_d4():
    ds = diagrams(parse_cartan_type("D4"))
    labels = [label_diagram(d) for d in ds]
    assert labels[0] == "D4 simply-connected"
    assert labels[-1] == "D4 adjoint"
    assert labels[1:4] == [
        "D4 intermediate#1",
        "D4 intermediate#2",
        "D4 intermediate#3",
    ]


def test_atlas_entry_order_and_gradings():
    entries = build_atlas(max_rank=2, bound=2)
    assert _types(entries) == ["A1", "A2", "B2", "C2", "G2"]
    for entry in entries:
        assert entry.error is None
        assert entry.grading.error is None
        assert entry.grading.matches is True
        assert (
            entry.grading.presentation.quotient
            == fundamental_group(entry.cartan_type)
        )


def test_simply_connected_center_matches_fundamental_group():
    for entry in build_atlas(max_rank=3, bound=1):
        assert entry.diagrams[0].center == entry.fundamental_group
        assert entry.diagrams[-1].center.invariant_factors == ()


def test_grading_dim_cap_skips():
    entry = build_entry(parse_cartan_type("A2"), bound=2, grading_dim_cap=5)
    assert entry.grading.presentation is None
    assert entry.grading.matches is None
    assert "exceeds the cap" in entry.grading.error
    # the rest of the entry is still intact
    assert len(entry.diagrams) == 2
    assert entry.error is None


def test_enumeration_cap_embeds_error():
    t = parse_cartan_type("x".join(["A1"] * 7))
    entry = build_entry(t, bound=1, enumeration_cap=64)
    assert entry.error is not None
    assert entry.diagrams == ()
    assert entry.fundamental_group.order == 128


def test_json_shape():
    entry = build_entry(parse_cartan_type("A3"), bound=1)
    data = entry_to_json(entry)
    assert data["type"] == "A3"
    assert data["fundamental_group"] == [4]
    assert [d["center"] for d in data["diagrams"]] == [[4], [2], []]
    assert data["isogeny_edges"] == [[0, 1], [1, 2]]
    assert data["grading"]["bound"] == 1
    assert data["grading"]["error"] is None
    json.dumps(data)  # must be serializable as-is


def test_atlas_json_deterministic():
    a = atlas_to_json(build_atlas(max_rank=2, bound=2), max_rank=2, bound=2)
    b = atlas_to_json(build_atlas(max_rank=2, bound=2), max_rank=2, bound=2)
    assert json.dumps(a, indent=2) == json.dumps(b, indent=2)
    assert a["parameters"]["max_rank"] == 2
    assert a["parameters"]["bound"] == 2


def test_decompose_semisimple():
    dec = decompose_semisimple(parse_cartan_type("A1xA2"))
    assert [str(b.cartan_type) for b in dec.components] == ["A1", "A2"]
    assert [b.start for b in dec.components] == [1, 2]
    assert [g.invariant_factors for g in dec.component_groups] == [(2,), (3,)]
    assert dec.fundamental_group.invariant_factors == (6,)


def test_decompose_irreducible_is_single_block():
    dec = decompose_semisimple(parse_cartan_type("F4"))
    assert len(dec.components) == 1
    assert dec.fundamental_group.invariant_factors == ()


@pytest.mark.parametrize("name", ["B2", "C2"])
def test_b2_c2_both_present_and_distinct(name):
    entry = build_entry(parse_cartan_type(name), bound=1)
    assert str(entry.cartan_type) == name
    assert entry.fundamental_group.invariant_factors == (2,)
    assert len(entry.diagrams) == 2
