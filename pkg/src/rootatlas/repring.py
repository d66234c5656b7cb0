"""Highest-weight representation arithmetic over the rationals.

Dimensions come from the Weyl product formula, weight multiplicities from
the Freudenthal recursion, and tensor product decompositions from the
signed straightening of rho-shifted weights.  Two independent routes are
deliberately kept: dimensions can be cross-checked as the total mass of
the weight multiset, and decompositions against the convolution of weight
multisets.  All values are exact integers.
"""

from __future__ import annotations

from .rootsys import RootSystem, Weight, is_dominant, weyl_orbit

WeightMultiset = dict[Weight, int]
Decomposition = dict[Weight, int]


def _require_dominant(rs: RootSystem, w: Weight) -> None:
    if len(w) != rs.rank:
        raise ValueError(f"weight {w} has length {len(w)}, expected {rs.rank}")
    if not is_dominant(w):
        raise ValueError(f"weight {w} is not dominant")


def weyl_dim(rs: RootSystem, lam: Weight) -> int:
    """dim V(lam) as the product over positive roots of the shifted-to-plain
    coroot pairing ratio of lam + rho against rho."""
    _require_dominant(rs, lam)
    num = 1
    den = 1
    shifted = [c + 1 for c in lam]
    for p in rs.positive_root_data:
        k = p.coroot
        num *= sum(a * b for a, b in zip(k, shifted))
        den *= sum(k)
    q, r = divmod(num, den)
    assert r == 0, "Weyl dimension must be an integer"
    return q


# completed dominant-multiplicity tables, keyed by (type, highest weight);
# only fully built tables are inserted, so concurrent readers are safe
_DOMINANT_TABLES: dict[tuple, dict[Weight, int]] = {}


def dominant_weight_multiplicities(rs: RootSystem, lam: Weight) -> dict[Weight, int]:
    """Multiplicities of the dominant weights of V(lam), by the Freudenthal
    recursion.

    The dominant support is generated by walking positive-root subtractions
    that stay in the dominant cone; each multiplicity is then accumulated
    from the already-known weights strictly above it along root strings.
    """
    _require_dominant(rs, lam)
    key = (rs.cartan_type.components, lam)
    cached = _DOMINANT_TABLES.get(key)
    if cached is not None:
        return dict(cached)

    rank = rs.rank
    norms = rs.simple_norms
    positive = rs.positive_root_data
    cols = rs.reflection_cols

    # dominant weights below lam, with lam - mu expanded over simple roots
    diffs: dict[Weight, tuple[int, ...]] = {lam: (0,) * rank}
    queue = [lam]
    while queue:
        w = queue.pop()
        base = diffs[w]
        for p in positive:
            v = tuple(a - b for a, b in zip(w, p.root))
            if v in diffs or any(c < 0 for c in v):
                continue
            diffs[v] = tuple(a + b for a, b in zip(base, p.simple_coords))
            queue.append(v)

    def straighten(vec: list[int]) -> Weight:
        while True:
            neg = -1
            for j in range(rank):
                if vec[j] < 0:
                    neg = j
                    break
            if neg < 0:
                return tuple(vec)
            c = vec[neg]
            for j, a in cols[neg]:
                vec[j] -= c * a

    order = sorted(diffs, key=lambda w: (sum(diffs[w]), w))
    table: dict[Weight, int] = {}
    two_rho_shift = [c + 2 for c in lam]
    for mu in order:
        diff = diffs[mu]
        if not any(diff):
            table[mu] = 1
            continue
        acc = 0
        for p in positive:
            proot = p.root
            pnorm = p.norm
            pcoroot = p.coroot
            k = 1
            while True:
                v = tuple(a + k * b for a, b in zip(mu, proot))
                m = table.get(v if all(c >= 0 for c in v) else straighten(list(v)), 0)
                if m == 0:
                    break
                acc += m * pnorm * sum(a * b for a, b in zip(pcoroot, v))
                k += 1
        # (lam + mu + 2 rho, lam - mu) in the same integer scaling
        den = sum(
            diff[i] * norms[i] * (two_rho_shift[i] + mu[i]) for i in range(rank)
        )
        mult, r = divmod(2 * acc, den)
        assert r == 0, "Freudenthal recursion must divide exactly"
        table[mu] = mult

    _DOMINANT_TABLES[key] = table
    return dict(table)


def weight_multiplicities(rs: RootSystem, lam: Weight) -> WeightMultiset:
    """The full weight multiset of V(lam): Weyl-invariant, total mass the
    Weyl dimension."""
    table = dominant_weight_multiplicities(rs, lam)
    out: WeightMultiset = {}
    for mu, m in table.items():
        for w in weyl_orbit(rs, mu):
            out[w] = m
    return out


_TENSOR_CACHE: dict[tuple, Decomposition] = {}


def tensor_decompose(rs: RootSystem, lam: Weight, mu: Weight) -> Decomposition:
    """Decompose V(lam) (x) V(mu) into highest weights with multiplicities.

    Iterates over the weight multiset of the smaller factor: each weight nu
    contributes the signed straightening of lam + rho + nu, with weights on
    chamber walls dropped.  Cancellation leaves the true nonnegative
    multiplicities.
    """
    _require_dominant(rs, lam)
    _require_dominant(rs, mu)
    if (weyl_dim(rs, mu), mu) > (weyl_dim(rs, lam), lam):
        lam, mu = mu, lam
    key = (rs.cartan_type.components, lam, mu)
    cached = _TENSOR_CACHE.get(key)
    if cached is not None:
        return dict(cached)

    rank = rs.rank
    cols = rs.reflection_cols
    shifted = [c + 1 for c in lam]
    acc: dict[Weight, int] = {}
    for nu, mult in weight_multiplicities(rs, mu).items():
        vec = [a + b for a, b in zip(shifted, nu)]
        sign = 1
        wall = False
        while True:
            neg = -1
            for j in range(rank):
                c = vec[j]
                if c == 0:
                    wall = True
                    break
                if c < 0:
                    neg = j
                    break
            if wall or neg < 0:
                break
            c = vec[neg]
            for j, a in cols[neg]:
                vec[j] -= c * a
            sign = -sign
        if wall:
            continue
        child = tuple(c - 1 for c in vec)
        acc[child] = acc.get(child, 0) + sign * mult

    result = {w: m for w, m in acc.items() if m}
    assert all(m > 0 for m in result.values()), "cancellation must leave positives"
    _TENSOR_CACHE[key] = result
    return dict(result)


def clebsch_gordan_sl2(m: int, n: int) -> Decomposition:
    """V(m) (x) V(n) for the rank-one system: one copy of V(k) for k from
    |m - n| up to m + n in steps of two."""
    if m < 0 or n < 0:
        raise ValueError("highest weights must be nonnegative")
    return {(k,): 1 for k in range(m + n, abs(m - n) - 1, -2)}


def dominant_weights_up_to(rs: RootSystem, bound: int) -> list[Weight]:
    """All dominant weights with coordinate sum at most ``bound``, in
    lexicographic order."""
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    out: list[Weight] = []

    def extend(prefix: tuple[int, ...], remaining: int) -> None:
        if len(prefix) == rs.rank:
            out.append(prefix)
            return
        for c in range(remaining + 1):
            extend(prefix + (c,), remaining - c)

    extend((), bound)
    return out


def sorted_decomposition(dec: Decomposition) -> list[tuple[Weight, int]]:
    """Deterministic presentation: highest weights first (descending lex)."""
    return sorted(dec.items(), key=lambda kv: kv[0], reverse=True)
