"""The universal grading group of the highest-weight tensor ring.

Dominant weights generate a free abelian group subject to one relation per
tensor constituent: a constituent is declared congruent to the sum of the
two factors.  The finite quotient this presents is compared against the
weight-class group, and pairs of weights can be certified equivalent by
exhibiting a tensor word containing both.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .lattice import FiniteAbelianGroup, cokernel, weight_class_data
from .repring import dominant_weights_up_to, tensor_decompose
from .rootsys import RootSystem, Weight, is_dominant


@dataclass(frozen=True)
class TensorRelation:
    """child occurs in left (x) right, hence child = left + right in any
    grading of the tensor ring."""

    child: Weight
    left: Weight
    right: Weight


def generate_relations(rs: RootSystem, bound: int) -> list[TensorRelation]:
    """Relations from all unordered pairs of dominant weights with
    coordinate sum at most ``bound``, one per distinct constituent."""
    weights = dominant_weights_up_to(rs, bound)
    relations = []
    for lam, mu in itertools.combinations_with_replacement(weights, 2):
        constituents = sorted(tensor_decompose(rs, lam, mu), reverse=True)
        for child in constituents:
            relations.append(TensorRelation(child, lam, mu))
    return relations


def restrict_relations(
    relations, generators
) -> list[TensorRelation]:
    """Drop relations whose constituent falls outside the generator set."""
    gens = set(generators)
    return [
        r
        for r in relations
        if r.child in gens and r.left in gens and r.right in gens
    ]


@dataclass(frozen=True)
class GradingPresentation:
    """A presented quotient of the free group on the generators.

    ``class_map`` sends each generator to its quotient coordinates:
    torsion coordinates (mod the invariant factors) followed by free
    coordinates.  For a tensor ring of a semisimple algebra the free rank
    is zero; it is reported rather than assumed.
    """

    generators: tuple[Weight, ...]
    relations: tuple[TensorRelation, ...]
    quotient: FiniteAbelianGroup
    free_rank: int
    class_map: dict[Weight, tuple[int, ...]]


def universal_grading_group(relations, generators) -> GradingPresentation:
    """Quotient of the free abelian group on ``generators`` by
    child - left - right for every relation."""
    gens: list[Weight] = []
    seen = set()
    for g in generators:
        if g not in seen:
            seen.add(g)
            gens.append(g)
    index = {g: i for i, g in enumerate(gens)}
    for r in relations:
        for w in (r.child, r.left, r.right):
            if w not in index:
                raise ValueError(f"relation weight {w} is not a generator")

    # columns of the relation matrix span the subgroup being quotiented
    width = len(gens)
    matrix = [[0] * len(relations) for _ in range(width)]
    for j, r in enumerate(relations):
        matrix[index[r.child]][j] += 1
        matrix[index[r.left]][j] -= 1
        matrix[index[r.right]][j] -= 1

    factors, free_rank, torsion_rows, free_rows = cokernel(matrix, width)
    quotient = FiniteAbelianGroup(factors)
    class_map = {}
    for g in gens:
        i = index[g]
        torsion = tuple(
            row[i] % d for row, d in zip(torsion_rows, factors)
        )
        free = tuple(row[i] for row in free_rows)
        class_map[g] = torsion + free
    return GradingPresentation(
        generators=tuple(gens),
        relations=tuple(relations),
        quotient=quotient,
        free_rank=free_rank,
        class_map=class_map,
    )


def grading_presentation(rs: RootSystem, bound: int) -> GradingPresentation:
    """The truncated universal grading group at the given bound."""
    gens = dominant_weights_up_to(rs, bound)
    rels = restrict_relations(generate_relations(rs, bound), gens)
    return universal_grading_group(rels, gens)


def grading_class(rs: RootSystem, w: Weight) -> tuple[int, ...]:
    """The image of ``w`` in the weight-class group, in invariant-factor
    coordinates."""
    if len(w) != rs.rank:
        raise ValueError(f"weight {w} has length {len(w)}, expected {rs.rank}")
    return weight_class_data(rs.cartan_type).class_of(w)


def _group_isomorphisms(group: FiniteAbelianGroup):
    """All automorphisms of a small group, as dicts on its elements."""
    factors = group.invariant_factors
    k = len(factors)
    if k == 0:
        yield {(): ()}
        return
    elements = list(group.elements())

    def span(images):
        # the hom determined by the images of the standard generators
        table = {}
        for coeffs in itertools.product(*(range(d) for d in factors)):
            img = (0,) * k
            for c, g in zip(coeffs, images):
                img = group.add(img, tuple((c * x) % d for x, d in zip(g, factors)))
            table[coeffs] = img
        return table

    for images in itertools.product(elements, repeat=k):
        # the i-th generator has order dividing factors[i]
        ok = True
        for i, g in enumerate(images):
            if any((factors[i] * x) % d for x, d in zip(g, factors)):
                ok = False
                break
        if not ok:
            continue
        table = span(images)
        if len(set(table.values())) == len(elements):
            yield table


def matches_fundamental_group(pres: GradingPresentation, rs: RootSystem) -> bool:
    """Whether the presented quotient is the weight-class group, with the
    class map realizing reduction modulo the root lattice.

    Quotient coordinates are only canonical up to a group automorphism, so
    the class maps are compared through an explicit isomorphism.
    """
    if pres.free_rank != 0:
        return False
    data = weight_class_data(rs.cartan_type)
    if pres.quotient != data.group:
        return False
    for iso in _group_isomorphisms(data.group):
        if all(
            iso[pres.class_map[g]] == data.class_of(g) for g in pres.generators
        ):
            return True
    return False


_WORD_CACHE: dict[tuple, frozenset[Weight]] = {}


def _word_constituents(rs: RootSystem, word: tuple[Weight, ...]) -> frozenset[Weight]:
    key = (rs.cartan_type.components, word)
    cached = _WORD_CACHE.get(key)
    if cached is not None:
        return cached
    if len(word) == 1:
        result = frozenset(word)
    else:
        prefix = _word_constituents(rs, word[:-1])
        last = word[-1]
        out = set()
        for nu in prefix:
            out.update(tensor_decompose(rs, nu, last))
        result = frozenset(out)
    _WORD_CACHE[key] = result
    return result


def tensor_equivalent(
    rs: RootSystem,
    a: Weight,
    b: Weight,
    bound: int = 3,
    depth: int = 4,
) -> tuple[Weight, ...] | None:
    """Search for a tensor word containing both ``a`` and ``b`` as
    constituents; factors are dominant weights with coordinate sum at most
    ``bound``, words have at most ``depth`` letters, shorter words first.

    Returns the certificate word, or None when the search space is
    exhausted (which does not certify inequivalence).
    """
    for w in (a, b):
        if len(w) != rs.rank:
            raise ValueError(f"weight {w} has length {len(w)}, expected {rs.rank}")
        if not is_dominant(w):
            raise ValueError(f"weight {w} is not dominant")
    if depth < 1 or bound < 0:
        raise ValueError("depth must be >= 1 and bound >= 0")
    if a == b:
        return (a,)
    factors = dominant_weights_up_to(rs, bound)
    for length in range(2, depth + 1):
        for word in itertools.combinations_with_replacement(factors, length):
            constituents = _word_constituents(rs, word)
            if a in constituents and b in constituents:
                return word
    return None
