"""Brute-force counterparts and instance generators.

Everything here is deliberately naive: exhaustive enumeration, factorization
search, universal properties quantified over all small probe objects.  The
main modules are validated against these, never the other way round.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterator

from .relations import (
    FinPreorder,
    FinSet,
    PreordMorphism,
    Relation,
    SetMap,
    _bits,
    _fresh_labels,
    compose_morphisms,
    direct_image,
    meet,
    opposite,
    reflexive_transitive_closure,
)

__all__ = [
    "EnumerationCapError",
    "EnumerationConfig",
    "DEFAULT_CONFIG",
    "HARD_ENUMERATION_CAP",
    "enumerate_preorders",
    "enumerate_preorders_by_closure",
    "enumerate_morphisms",
    "enumerate_set_maps",
    "brute_force_in_N",
    "brute_force_universal",
    "compose_relations_slow",
    "closure_slow",
    "reflect_by_quotient",
    "enumerate_open_sets",
    "random_preorder",
    "random_monotone_map",
    "random_morphism",
    "random_core_refinement",
]

HARD_ENUMERATION_CAP = 4


class EnumerationCapError(ValueError):
    """Raised when an exhaustive sweep is asked to exceed its carrier cap."""


@dataclass(frozen=True)
class EnumerationConfig:
    """Bounds and seed for exhaustive and randomized generation.

    ``max_carrier`` is an explicit bound, never silent: enumerators refuse
    larger carriers because the relation count grows as ``2**(n*n)``.
    """

    max_carrier: int = HARD_ENUMERATION_CAP
    kind: str = "preorder"
    seed: int = 0

    def __post_init__(self) -> None:
        if not 0 <= self.max_carrier <= HARD_ENUMERATION_CAP:
            raise ValueError(
                f"max_carrier must lie in 0..{HARD_ENUMERATION_CAP}"
            )
        if self.kind not in ("preorder", "poset", "equivalence"):
            raise ValueError(f"unknown predicate filter {self.kind!r}")


DEFAULT_CONFIG = EnumerationConfig()


def _check_cap(n: int, config: EnumerationConfig | None) -> EnumerationConfig:
    cfg = config or DEFAULT_CONFIG
    if n > cfg.max_carrier:
        raise EnumerationCapError(
            f"carrier {n} exceeds the enumeration cap {cfg.max_carrier}"
        )
    return cfg


def _is_closed(rows: list[int], n: int) -> bool:
    for i in range(n):
        row = rows[i]
        for j in _bits(row):
            if rows[j] & ~row:
                return False
    return True


def _kind_accepts(rows: list[int], n: int, kind: str) -> bool:
    if kind == "preorder":
        return True
    cols = [0] * n
    for i in range(n):
        for j in _bits(rows[i]):
            cols[j] |= 1 << i
    if kind == "equivalence":
        return rows == cols
    return all(rows[i] & cols[i] & ~(1 << i) == 0 for i in range(n))


def enumerate_preorders(
    n: int, config: EnumerationConfig | None = None, kind: str | None = None
) -> Iterator[FinPreorder]:
    """All reflexive transitive relations on ``n`` labeled points.

    Filters every candidate off-diagonal bit pattern by transitivity;
    ``kind`` further restricts to partial orders or equivalence relations.
    """
    cfg = _check_cap(n, config)
    kind = kind or cfg.kind
    carrier = FinSet(n)
    positions = [(i, j) for i in range(n) for j in range(n) if i != j]
    for combo in range(1 << len(positions)):
        rows = [1 << i for i in range(n)]
        for p, (i, j) in enumerate(positions):
            if combo >> p & 1:
                rows[i] |= 1 << j
        if not _is_closed(rows, n):
            continue
        if not _kind_accepts(rows, n, kind):
            continue
        yield FinPreorder(carrier, Relation(carrier, carrier, tuple(rows)))


def enumerate_preorders_by_closure(
    n: int, config: EnumerationConfig | None = None, kind: str | None = None
) -> list[FinPreorder]:
    """Independent generation method: close every edge set, deduplicate."""
    cfg = _check_cap(n, config)
    kind = kind or cfg.kind
    carrier = FinSet(n)
    positions = [(i, j) for i in range(n) for j in range(n) if i != j]
    seen: set[tuple[int, ...]] = set()
    out = []
    for combo in range(1 << len(positions)):
        pairs = [positions[p] for p in range(len(positions)) if combo >> p & 1]
        closed = reflexive_transitive_closure(
            Relation.from_pairs(carrier, carrier, pairs)
        )
        if closed.rel.rows in seen:
            continue
        seen.add(closed.rel.rows)
        if _kind_accepts(list(closed.rel.rows), n, kind):
            out.append(closed)
    out.sort(key=lambda p: p.rel.rows)
    return out


def enumerate_morphisms(
    p: FinPreorder, q: FinPreorder, config: EnumerationConfig | None = None
) -> Iterator[PreordMorphism]:
    """All monotone maps from ``p`` to ``q``, by pruned backtracking."""
    _check_cap(max(p.size, q.size), config)
    n, m = p.size, q.size
    if n == 0:
        yield PreordMorphism(p, q, SetMap(p.carrier, q.carrier, ()))
        return
    if m == 0:
        return
    prows = p.rel.rows
    qrows = q.rel.rows
    values = [0] * n

    def extend(a: int) -> Iterator[tuple[int, ...]]:
        if a == n:
            yield tuple(values)
            return
        for v in range(m):
            ok = True
            for b in range(a):
                fb = values[b]
                if prows[b] >> a & 1 and not qrows[fb] >> v & 1:
                    ok = False
                    break
                if prows[a] >> b & 1 and not qrows[v] >> fb & 1:
                    ok = False
                    break
            if ok:
                values[a] = v
                yield from extend(a + 1)

    for assignment in extend(0):
        yield PreordMorphism(p, q, SetMap(p.carrier, q.carrier, assignment))


def enumerate_set_maps(dom: FinSet, cod: FinSet) -> Iterator[SetMap]:
    """All total maps between two carriers."""
    if dom.size == 0:
        yield SetMap(dom, cod, ())
        return
    for values in itertools.product(range(cod.size), repeat=dom.size):
        yield SetMap(dom, cod, values)


def brute_force_in_N(
    f: PreordMorphism, config: EnumerationConfig | None = None
) -> bool:
    """Search all factorizations of ``f`` through discrete objects.

    Candidate middles range over sizes up to the source carrier; a quotient
    map must be monotone into the discrete middle and compatible with ``f``,
    after which the second leg exists automatically.
    """
    n = f.src.size
    if n == 0:
        return True
    _check_cap(n, config)
    rows = f.src.rel.rows
    fvalues = f.map.values
    for k in range(1, n + 1):
        for g in itertools.product(range(k), repeat=n):
            # monotone into the discrete middle: related pairs must collapse
            if any(g[a] != g[a2] for a in range(n) for a2 in _bits(rows[a])):
                continue
            # the second leg exists iff f is constant on g-fibres
            fibre_image: dict[int, int] = {}
            ok = True
            for a in range(n):
                if fibre_image.setdefault(g[a], fvalues[a]) != fvalues[a]:
                    ok = False
                    break
            if ok:
                return True
    return False


def _probes(
    probe_cap: int, config: EnumerationConfig | None
) -> Iterator[FinPreorder]:
    for size in range(probe_cap + 1):
        yield from enumerate_preorders(size, config, kind="preorder")


def brute_force_universal(
    kind: str,
    *,
    probe_cap: int = 3,
    config: EnumerationConfig | None = None,
    **data,
) -> tuple[bool, str | None]:
    """Quantify a universal property over all probe objects up to the cap.

    Kinds: ``n-kernel`` (data ``f``, ``K``, ``k``), ``n-cokernel`` (data
    ``k``, ``p``), ``pullback`` (data ``f``, ``g``, ``obj``, ``p1``,
    ``p2``), ``orthogonality`` (data ``e``, ``m``, ``u``, ``v``).
    Returns a verdict plus a counterexample description when it fails.
    """
    checks = {
        "n-kernel": _universal_n_kernel,
        "n-cokernel": _universal_n_cokernel,
        "pullback": _universal_pullback,
        "orthogonality": _universal_orthogonality,
    }
    if kind not in checks:
        raise ValueError(f"unknown universal property {kind!r}")
    return checks[kind](probe_cap=probe_cap, config=config, **data)


def _universal_n_kernel(
    f: PreordMorphism,
    K: FinPreorder,
    k: PreordMorphism,
    probe_cap: int,
    config: EnumerationConfig | None,
) -> tuple[bool, str | None]:
    if not brute_force_in_N(compose_morphisms(f, k), config):
        return False, "composite f∘k does not factor through a discrete object"
    for probe in _probes(probe_cap, config):
        for lam in enumerate_morphisms(probe, f.src, config):
            if not brute_force_in_N(compose_morphisms(f, lam), config):
                continue
            count = sum(
                1
                for lam2 in enumerate_morphisms(probe, K, config)
                if compose_morphisms(k, lam2).map == lam.map
            )
            if count != 1:
                return False, (
                    f"probe of size {probe.size} with map {lam.map.values} "
                    f"factors {count} times through the kernel"
                )
    return True, None


def _universal_n_cokernel(
    k: PreordMorphism,
    p: PreordMorphism,
    probe_cap: int,
    config: EnumerationConfig | None,
) -> tuple[bool, str | None]:
    if not brute_force_in_N(compose_morphisms(p, k), config):
        return False, "composite p∘k does not factor through a discrete object"
    for probe in _probes(probe_cap, config):
        for g in enumerate_morphisms(k.dst, probe, config):
            if not brute_force_in_N(compose_morphisms(g, k), config):
                continue
            count = sum(
                1
                for alpha in enumerate_morphisms(p.dst, probe, config)
                if compose_morphisms(alpha, p).map == g.map
            )
            if count != 1:
                return False, (
                    f"probe of size {probe.size} with map {g.map.values} "
                    f"factors {count} times through the quotient"
                )
    return True, None


def _universal_pullback(
    f: PreordMorphism,
    g: PreordMorphism,
    obj: FinPreorder,
    p1: PreordMorphism,
    p2: PreordMorphism,
    probe_cap: int,
    config: EnumerationConfig | None,
) -> tuple[bool, str | None]:
    if compose_morphisms(f, p1).map != compose_morphisms(g, p2).map:
        return False, "projection square does not commute"
    for probe in _probes(probe_cap, config):
        for u in enumerate_morphisms(probe, f.src, config):
            for v in enumerate_morphisms(probe, g.src, config):
                if compose_morphisms(f, u).map != compose_morphisms(g, v).map:
                    continue
                count = sum(
                    1
                    for w in enumerate_morphisms(probe, obj, config)
                    if compose_morphisms(p1, w).map == u.map
                    and compose_morphisms(p2, w).map == v.map
                )
                if count != 1:
                    return False, (
                        f"cone from probe of size {probe.size} "
                        f"({u.map.values}, {v.map.values}) factors {count} times"
                    )
    return True, None


def _universal_orthogonality(
    e: PreordMorphism,
    m: PreordMorphism,
    u: PreordMorphism,
    v: PreordMorphism,
    probe_cap: int,
    config: EnumerationConfig | None,
) -> tuple[bool, str | None]:
    count = sum(
        1
        for alpha in enumerate_morphisms(e.dst, m.src, config)
        if compose_morphisms(alpha, e).map == u.map
        and compose_morphisms(m, alpha).map == v.map
    )
    if count != 1:
        return False, f"{count} diagonal fillers found"
    return True, None


def compose_relations_slow(r: Relation, s: Relation) -> Relation:
    """Triple-loop relational composition, for cross-checking the bit version."""
    if r.dst != s.src:
        raise ValueError("carrier mismatch: middle carriers differ")
    pairs = []
    for x in range(r.src.size):
        for z in range(s.dst.size):
            if any(r.has(x, y) and s.has(y, z) for y in range(r.dst.size)):
                pairs.append((x, z))
    return Relation.from_pairs(r.src, s.dst, pairs)


def closure_slow(r: Relation) -> FinPreorder:
    """Per-node breadth-first reachability closure, independent of the
    in-place bit closure."""
    if r.src != r.dst:
        raise ValueError("carrier mismatch: expected an endorelation")
    n = r.src.size
    adjacency = [list(_bits(row)) for row in r.rows]
    rows = []
    for start in range(n):
        seen = {start}
        frontier = [start]
        while frontier:
            nxt = []
            for v in frontier:
                for w in adjacency[v]:
                    if w not in seen:
                        seen.add(w)
                        nxt.append(w)
            frontier = nxt
        rows.append(sum(1 << v for v in seen))
    return FinPreorder(r.src, Relation(r.src, r.src, tuple(rows)))


def _core_classes(p: FinPreorder) -> list[list[int]]:
    """Classes of the meet-with-opposite equivalence, ordered by least member."""
    core = meet(p.rel, opposite(p.rel))
    seen: dict[int, int] = {}
    classes: list[list[int]] = []
    for a in range(p.size):
        mask = core.rows[a]
        if mask not in seen:
            seen[mask] = len(classes)
            classes.append(sorted(_bits(mask)))
    classes.sort(key=lambda c: c[0])
    return classes


def reflect_by_quotient(p: FinPreorder):
    """Definitional partial-order reflection: meet with the opposite, then
    quotient and push the relation forward.  Cross-checks the condensation
    implementation."""
    from .pretorsion import Reflection, _class_labels

    classes = _core_classes(p)
    values = [0] * p.size
    for ci, cls in enumerate(classes):
        for a in cls:
            values[a] = ci
    carrier = FinSet(len(classes), _class_labels(p, classes))
    q = SetMap(p.carrier, carrier, tuple(values))
    poset = FinPreorder(carrier, direct_image(q, p.rel))
    return Reflection(poset, PreordMorphism(p, poset, q))


def enumerate_open_sets(space, cap: int = 12) -> list[int]:
    """All open sets of an Alexandroff space as bit masks.

    Exponential in the carrier; refuses carriers above ``cap``.
    """
    n = space.carrier.size
    if n > cap:
        raise ValueError(
            f"open-set enumeration is exponential; carrier {n} exceeds cap {cap}"
        )
    opens = []
    for mask in range(1 << n):
        if all(space.min_nbhd[x] & ~mask == 0 for x in _bits(mask)):
            opens.append(mask)
    return opens


def random_preorder(
    rng: random.Random,
    size: int,
    labels: tuple[str, ...] | None = None,
    edge_factor: float = 1.2,
) -> FinPreorder:
    """The closure of a sparse random edge set on ``size`` points."""
    carrier = FinSet(size, labels)
    if size == 0:
        return FinPreorder(carrier, Relation(carrier, carrier, ()))
    count = int(edge_factor * size)
    pairs = [
        (rng.randrange(size), rng.randrange(size)) for _ in range(count)
    ]
    return reflexive_transitive_closure(Relation.from_pairs(carrier, carrier, pairs))


def random_monotone_map(
    rng: random.Random, p: FinPreorder, q: FinPreorder, attempts: int = 50
) -> SetMap | None:
    """A random monotone map, or ``None`` when the target is empty.

    First tries class-respecting random assignments filtered for
    monotonicity, then falls back to a greedy constrained assignment along a
    linear extension, and finally to a constant map.
    """
    n, m = p.size, q.size
    if n == 0:
        return SetMap(p.carrier, q.carrier, ())
    if m == 0:
        return None
    p_classes = _core_classes(p)
    q_classes = _core_classes(q)
    prows = p.rel.rows
    qrows = q.rel.rows

    def monotone(values: list[int]) -> bool:
        for a in range(n):
            target = qrows[values[a]]
            for b in _bits(prows[a]):
                if not target >> values[b] & 1:
                    return False
        return True

    for _ in range(attempts):
        values = [0] * n
        for cls in p_classes:
            target_cls = q_classes[rng.randrange(len(q_classes))]
            for a in cls:
                values[a] = target_cls[rng.randrange(len(target_cls))]
        if monotone(values):
            return SetMap(p.carrier, q.carrier, tuple(values))

    order = sorted(range(n), key=lambda a: (-prows[a].bit_count(), a))
    full = (1 << m) - 1
    qcols = opposite(q.rel).rows
    for _ in range(attempts):
        values = [-1] * n
        ok = True
        for a in order:
            allowed = full
            for b in order:
                if values[b] < 0 or b == a:
                    continue
                if prows[b] >> a & 1:
                    allowed &= qrows[values[b]]
                if prows[a] >> b & 1:
                    allowed &= qcols[values[b]]
            if not allowed:
                ok = False
                break
            choices = list(_bits(allowed))
            values[a] = choices[rng.randrange(len(choices))]
        if ok:
            return SetMap(p.carrier, q.carrier, tuple(values))
    return SetMap(p.carrier, q.carrier, (rng.randrange(m),) * n)


def random_morphism(
    rng: random.Random, max_size: int, edge_factor: float = 1.2
) -> PreordMorphism:
    """A random monotone map between two random preorders of size up to the bound."""
    src = random_preorder(rng, rng.randint(0, max_size), edge_factor=edge_factor)
    dst_size = rng.randint(1 if src.size else 0, max_size)
    dst = random_preorder(rng, dst_size, edge_factor=edge_factor)
    mapping = random_monotone_map(rng, src, dst)
    assert mapping is not None
    return PreordMorphism(src, dst, mapping)


def random_core_refinement(rng: random.Random, p: FinPreorder) -> SetMap:
    """A random surjection whose kernel pair refines the symmetric core.

    Splits every mutual-reachability class into random sub-blocks; the
    resulting quotient map is surjective, collapses only mutually related
    elements, and so is fully faithful onto its image order.
    """
    blocks: list[list[int]] = []
    for cls in _core_classes(p):
        members = list(cls)
        rng.shuffle(members)
        cut = 0
        while cut < len(members):
            width = rng.randint(1, len(members) - cut)
            blocks.append(sorted(members[cut : cut + width]))
            cut += width
    blocks.sort(key=lambda b: b[0])
    values = [0] * p.size
    for bi, block in enumerate(blocks):
        for a in block:
            values[a] = bi
    labels = _fresh_labels(
        ["{" + ",".join(p.carrier.label(a) for a in b) + "}" for b in blocks]
    )
    return SetMap(p.carrier, FinSet(len(blocks), labels), tuple(values))
