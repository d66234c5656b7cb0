"""The classification atlas: every diagram of every admissible irreducible
type up to a rank bound, with centers, the isogeny poset, and the grading
group cross-check.

Output is deterministic: entries are ordered by (rank, family), diagrams
from simply connected down to adjoint, and the JSON form is stable byte
for byte across runs with equal parameters.
"""

from __future__ import annotations

from dataclasses import dataclass

from .grading import (
    GradingPresentation,
    grading_presentation,
    matches_fundamental_group,
)
from .lattice import (
    ComponentBlock,
    Diagram,
    EnumerationCapError,
    FiniteAbelianGroup,
    Subgroup,
    center_char_group,
    diagrams,
    fundamental_group,
    irreducible_components,
    isogeny_order,
)
from .repring import dominant_weights_up_to, weyl_dim
from .rootsys import CartanType, build_root_system, parse_cartan_type

DEFAULT_ENUMERATION_CAP = 64
DEFAULT_GRADING_DIM_CAP = 20_000_000


@dataclass(frozen=True)
class DiagramInfo:
    diagram: Diagram
    center: FiniteAbelianGroup
    label: str


@dataclass(frozen=True)
class GradingSummary:
    bound: int
    presentation: GradingPresentation | None
    matches: bool | None
    error: str | None


@dataclass(frozen=True)
class AtlasEntry:
    cartan_type: CartanType
    fundamental_group: FiniteAbelianGroup
    diagrams: tuple[DiagramInfo, ...]
    isogeny_edges: tuple[tuple[int, int], ...]
    grading: GradingSummary
    error: str | None


def admissible_irreducible_types(max_rank: int) -> list[CartanType]:
    """All irreducible admissible types of rank <= max_rank, ordered by
    (rank, family letter)."""
    found = []
    for rank in range(1, max_rank + 1):
        for family in "ABCDEFG":
            try:
                found.append(parse_cartan_type(f"{family}{rank}"))
            except Exception:
                continue
    return found


def label_diagram(d: Diagram, cap: int = DEFAULT_ENUMERATION_CAP) -> str:
    """Name a diagram by its place in the isogeny chain: the full subgroup
    is simply connected, the trivial one adjoint, anything else is numbered
    among the intermediates in canonical order."""
    prefix = str(d.cartan_type)
    order = d.subgroup.order
    total = fundamental_group(d.cartan_type).order
    if order == total:
        return f"{prefix} simply-connected"
    if order == 1:
        return f"{prefix} adjoint"
    intermediates = [
        x for x in diagrams(d.cartan_type, cap) if 1 < x.subgroup.order < total
    ]
    k = intermediates.index(d) + 1
    return f"{prefix} intermediate#{k}"


def hasse_edges(ds: list[Diagram]) -> tuple[tuple[int, int], ...]:
    """Cover relations of the isogeny order, from larger lattice to smaller."""
    n = len(ds)
    edges = []
    for i in range(n):
        for j in range(n):
            if i == j or not isogeny_order(ds[i], ds[j]):
                continue
            if any(
                k != i
                and k != j
                and isogeny_order(ds[i], ds[k])
                and isogeny_order(ds[k], ds[j])
                for k in range(n)
            ):
                continue
            edges.append((i, j))
    return tuple(sorted(edges))


def _entry_grading(
    t: CartanType, bound: int, dim_cap: int
) -> GradingSummary:
    rs = build_root_system(t)
    gens = dominant_weights_up_to(rs, bound)
    worst = max(weyl_dim(rs, g) for g in gens)
    if worst > dim_cap:
        return GradingSummary(
            bound=bound,
            presentation=None,
            matches=None,
            error=(
                f"skipped: generator dimension {worst} exceeds the cap {dim_cap}"
            ),
        )
    pres = grading_presentation(rs, bound)
    return GradingSummary(
        bound=bound,
        presentation=pres,
        matches=matches_fundamental_group(pres, rs),
        error=None,
    )


def build_entry(
    t: CartanType,
    bound: int,
    enumeration_cap: int = DEFAULT_ENUMERATION_CAP,
    grading_dim_cap: int = DEFAULT_GRADING_DIM_CAP,
) -> AtlasEntry:
    group = fundamental_group(t)
    try:
        ds = diagrams(t, enumeration_cap)
    except EnumerationCapError as exc:
        return AtlasEntry(
            cartan_type=t,
            fundamental_group=group,
            diagrams=(),
            isogeny_edges=(),
            grading=GradingSummary(bound, None, None, "skipped: diagrams unavailable"),
            error=str(exc),
        )
    infos = tuple(
        DiagramInfo(d, center_char_group(d), label_diagram(d, enumeration_cap))
        for d in ds
    )
    return AtlasEntry(
        cartan_type=t,
        fundamental_group=group,
        diagrams=infos,
        isogeny_edges=hasse_edges(ds),
        grading=_entry_grading(t, bound, grading_dim_cap),
        error=None,
    )


def build_atlas(
    max_rank: int = 4,
    bound: int = 3,
    enumeration_cap: int = DEFAULT_ENUMERATION_CAP,
    grading_dim_cap: int = DEFAULT_GRADING_DIM_CAP,
) -> list[AtlasEntry]:
    return [
        build_entry(t, bound, enumeration_cap, grading_dim_cap)
        for t in admissible_irreducible_types(max_rank)
    ]


@dataclass(frozen=True)
class SemisimpleDecomposition:
    cartan_type: CartanType
    components: tuple[ComponentBlock, ...]
    component_groups: tuple[FiniteAbelianGroup, ...]
    fundamental_group: FiniteAbelianGroup


def decompose_semisimple(t: CartanType) -> SemisimpleDecomposition:
    """Split a product type into irreducible blocks and exhibit its
    fundamental group as the direct sum of the component groups."""
    blocks = irreducible_components(t)
    groups = tuple(fundamental_group(b.cartan_type) for b in blocks)
    return SemisimpleDecomposition(
        cartan_type=t,
        components=tuple(blocks),
        component_groups=groups,
        fundamental_group=fundamental_group(t),
    )


# ---------------------------------------------------------------------------
# serialization


def group_to_json(g: FiniteAbelianGroup) -> list[int]:
    return list(g.invariant_factors)


def subgroup_to_json(s: Subgroup) -> list[list[int]]:
    return [list(g) for g in s.generators]


def diagram_info_to_json(info: DiagramInfo) -> dict:
    return {
        "label": info.label,
        "subgroup": subgroup_to_json(info.diagram.subgroup),
        "center": group_to_json(info.center),
    }


def grading_to_json(g: GradingSummary) -> dict:
    return {
        "bound": g.bound,
        "invariant_factors": (
            None
            if g.presentation is None
            else list(g.presentation.quotient.invariant_factors)
        ),
        "free_rank": None if g.presentation is None else g.presentation.free_rank,
        "matches_fundamental_group": g.matches,
        "error": g.error,
    }


def entry_to_json(entry: AtlasEntry) -> dict:
    return {
        "type": str(entry.cartan_type),
        "fundamental_group": group_to_json(entry.fundamental_group),
        "diagrams": [diagram_info_to_json(i) for i in entry.diagrams],
        "isogeny_edges": [list(e) for e in entry.isogeny_edges],
        "grading": grading_to_json(entry.grading),
        "error": entry.error,
    }


def atlas_to_json(
    entries: list[AtlasEntry],
    max_rank: int,
    bound: int,
    enumeration_cap: int = DEFAULT_ENUMERATION_CAP,
    grading_dim_cap: int = DEFAULT_GRADING_DIM_CAP,
) -> dict:
    return {
        "parameters": {
            "max_rank": max_rank,
            "bound": bound,
            "enumeration_cap": enumeration_cap,
            "grading_dim_cap": grading_dim_cap,
        },
        "entries": [entry_to_json(e) for e in entries],
    }
