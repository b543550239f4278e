"""Finite carriers, bitset-backed binary relations, preorders, monotone maps.

A relation between finite index sets is stored as dense bit rows: bit ``j``
of ``rows[i]`` is set iff source element ``i`` is related to destination
element ``j``.  Meets are word-parallel ``&``, composition is a boolean
matrix product over bit rows.  Every value is immutable and hashable and
every operation is a pure function, so values can be shared freely across
threads.

Elements are canonical indices ``0..size-1``; labels are presentation-only
metadata carried along for display and serialization.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple

__all__ = [
    "FinSet",
    "Relation",
    "SetMap",
    "FinPreorder",
    "PreordMorphism",
    "RelationPredicates",
    "Pullback",
    "compose_relations",
    "opposite",
    "meet",
    "union",
    "direct_image",
    "inverse_image",
    "kernel_pair",
    "graph_relation",
    "relation_predicates",
    "reflexive_transitive_closure",
    "identity_map",
    "compose_maps",
    "identity_morphism",
    "compose_morphisms",
    "is_isomorphism",
    "preord_pullback",
    "is_pullback_square",
    "relation_square_is_pullback",
]


def _bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of ``mask``, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _fresh_labels(candidates: list[str]) -> tuple[str, ...] | None:
    """Use the candidate labels only when they are valid and distinct."""
    if len(set(candidates)) != len(candidates):
        return None
    for c in candidates:
        if not c or any(ch.isspace() for ch in c):
            return None
    return tuple(candidates)


@dataclass(frozen=True)
class FinSet:
    """A finite carrier: a size plus optional distinct printable labels."""

    size: int
    labels: tuple[str, ...] | None = None

    def __post_init__(self) -> None:
        if self.size < 0:
            raise ValueError("carrier size must be nonnegative")
        if self.labels is not None:
            object.__setattr__(self, "labels", tuple(self.labels))
            if len(self.labels) != self.size:
                raise ValueError(
                    f"expected {self.size} labels, got {len(self.labels)}"
                )
            if len(set(self.labels)) != len(self.labels):
                raise ValueError("labels must be pairwise distinct")
            for lab in self.labels:
                if not isinstance(lab, str) or not lab or any(c.isspace() for c in lab):
                    raise ValueError(f"label {lab!r} is not a printable token")

    def label(self, i: int) -> str:
        if not 0 <= i < self.size:
            raise IndexError(f"element {i} out of range 0..{self.size - 1}")
        return self.labels[i] if self.labels is not None else str(i)

    def __len__(self) -> int:
        return self.size

    def __iter__(self) -> Iterator[int]:
        return iter(range(self.size))


@dataclass(frozen=True)
class Relation:
    """A binary relation ``src -> dst`` as a tuple of bit rows."""

    src: FinSet
    dst: FinSet
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "rows", tuple(self.rows))
        if len(self.rows) != self.src.size:
            raise ValueError(
                f"expected {self.src.size} rows, got {len(self.rows)}"
            )
        bound = 1 << self.dst.size
        for i, row in enumerate(self.rows):
            if not 0 <= row < bound:
                raise ValueError(f"row {i} does not fit a {self.dst.size}-column relation")

    @classmethod
    def from_pairs(
        cls, src: FinSet, dst: FinSet, pairs: Iterable[tuple[int, int]]
    ) -> "Relation":
        rows = [0] * src.size
        for i, j in pairs:
            if not (0 <= i < src.size and 0 <= j < dst.size):
                raise ValueError(f"pair ({i}, {j}) out of range")
            rows[i] |= 1 << j
        return cls(src, dst, tuple(rows))

    @classmethod
    def diagonal(cls, carrier: FinSet) -> "Relation":
        return cls(carrier, carrier, tuple(1 << i for i in range(carrier.size)))

    @classmethod
    def empty(cls, src: FinSet, dst: FinSet) -> "Relation":
        return cls(src, dst, (0,) * src.size)

    @classmethod
    def full(cls, src: FinSet, dst: FinSet) -> "Relation":
        row = (1 << dst.size) - 1
        return cls(src, dst, (row,) * src.size)

    def has(self, i: int, j: int) -> bool:
        return bool(self.rows[i] >> j & 1)

    def pairs(self) -> tuple[tuple[int, int], ...]:
        return tuple(
            (i, j) for i in range(self.src.size) for j in _bits(self.rows[i])
        )

    def count(self) -> int:
        return sum(row.bit_count() for row in self.rows)

    def columns(self) -> tuple[int, ...]:
        """Bit columns: bit ``i`` of ``columns()[j]`` iff ``(i, j)`` related."""
        cols = [0] * self.dst.size
        for i, row in enumerate(self.rows):
            for j in _bits(row):
                cols[j] |= 1 << i
        return tuple(cols)

    def is_endorelation(self) -> bool:
        return self.src == self.dst

    def is_subrelation_of(self, other: "Relation") -> bool:
        _require_same_carriers(self, other)
        return all(r & ~s == 0 for r, s in zip(self.rows, other.rows))


def _require_same_carriers(r: Relation, s: Relation) -> None:
    if r.src != s.src or r.dst != s.dst:
        raise ValueError("carrier mismatch: relations live on different carriers")


def _require_endorelation(r: Relation) -> None:
    if not r.is_endorelation():
        raise ValueError("carrier mismatch: expected an endorelation")


def compose_relations(r: Relation, s: Relation) -> Relation:
    """Relational composite: ``(x, z)`` iff some ``y`` has ``x r y`` and ``y s z``."""
    if r.dst != s.src:
        raise ValueError("carrier mismatch: middle carriers differ")
    rows = []
    for row in r.rows:
        acc = 0
        for y in _bits(row):
            acc |= s.rows[y]
        rows.append(acc)
    return Relation(r.src, s.dst, tuple(rows))


def opposite(r: Relation) -> Relation:
    """The transposed relation ``dst -> src``."""
    return Relation(r.dst, r.src, r.columns())


def meet(r: Relation, s: Relation) -> Relation:
    """Pairwise conjunction of two relations on the same carriers."""
    _require_same_carriers(r, s)
    return Relation(r.src, r.dst, tuple(a & b for a, b in zip(r.rows, s.rows)))


def union(r: Relation, s: Relation) -> Relation:
    """Pairwise disjunction of two relations on the same carriers."""
    _require_same_carriers(r, s)
    return Relation(r.src, r.dst, tuple(a | b for a, b in zip(r.rows, s.rows)))


@dataclass(frozen=True)
class SetMap:
    """A total map between finite carriers, stored as a value tuple."""

    dom: FinSet
    cod: FinSet
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", tuple(self.values))
        if len(self.values) != self.dom.size:
            raise ValueError(
                f"expected {self.dom.size} values, got {len(self.values)}"
            )
        for a, v in enumerate(self.values):
            if not 0 <= v < self.cod.size:
                raise ValueError(f"image of element {a} out of range: {v}")

    def __call__(self, a: int) -> int:
        return self.values[a]

    def image_mask(self) -> int:
        acc = 0
        for v in self.values:
            acc |= 1 << v
        return acc

    def preimage_masks(self) -> tuple[int, ...]:
        """For each codomain element, the bit mask of its fibre."""
        masks = [0] * self.cod.size
        for a, v in enumerate(self.values):
            masks[v] |= 1 << a
        return tuple(masks)

    def is_surjective(self) -> bool:
        return self.image_mask() == (1 << self.cod.size) - 1

    def is_injective(self) -> bool:
        return len(set(self.values)) == len(self.values)


def identity_map(carrier: FinSet) -> SetMap:
    return SetMap(carrier, carrier, tuple(range(carrier.size)))


def compose_maps(g: SetMap, f: SetMap) -> SetMap:
    """The composite ``g after f``."""
    if f.cod != g.dom:
        raise ValueError("carrier mismatch: maps are not composable")
    return SetMap(f.dom, g.cod, tuple(g.values[v] for v in f.values))


def graph_relation(f: SetMap) -> Relation:
    """The map ``f`` as a relation ``dom -> cod``: pairs ``(a, f(a))``."""
    return Relation(f.dom, f.cod, tuple(1 << v for v in f.values))


def direct_image(f: SetMap, r: Relation) -> Relation:
    """Push an endorelation forward: ``(f(a), f(a'))`` for each ``(a, a')``."""
    _require_endorelation(r)
    if r.src != f.dom:
        raise ValueError("carrier mismatch: relation does not live on the map's domain")
    rows = [0] * f.cod.size
    for a, row in enumerate(r.rows):
        acc = 0
        for a2 in _bits(row):
            acc |= 1 << f.values[a2]
        rows[f.values[a]] |= acc
    return Relation(f.cod, f.cod, tuple(rows))


def inverse_image(f: SetMap, s: Relation) -> Relation:
    """Pull an endorelation back: ``(a, a')`` iff ``(f(a), f(a'))`` related."""
    _require_endorelation(s)
    if s.src != f.cod:
        raise ValueError("carrier mismatch: relation does not live on the map's codomain")
    pre = f.preimage_masks()
    rows = []
    for a in range(f.dom.size):
        acc = 0
        for b in _bits(s.rows[f.values[a]]):
            acc |= pre[b]
        rows.append(acc)
    return Relation(f.dom, f.dom, tuple(rows))


def kernel_pair(f: SetMap) -> Relation:
    """The equivalence relation ``(a, a')`` iff ``f(a) = f(a')``."""
    pre = f.preimage_masks()
    return Relation(f.dom, f.dom, tuple(pre[v] for v in f.values))


@dataclass(frozen=True)
class RelationPredicates:
    reflexive: bool
    transitive: bool
    symmetric: bool
    antisymmetric: bool


def relation_predicates(r: Relation) -> RelationPredicates:
    """The four standard pointwise flags of an endorelation."""
    _require_endorelation(r)
    n = r.src.size
    rows = r.rows
    reflexive = all(rows[i] >> i & 1 for i in range(n))
    transitive = True
    for i in range(n):
        for j in _bits(rows[i]):
            if rows[j] & ~rows[i]:
                transitive = False
                break
        if not transitive:
            break
    cols = r.columns()
    symmetric = rows == cols
    antisymmetric = all(
        rows[i] & cols[i] & ~(1 << i) == 0 for i in range(n)
    )
    return RelationPredicates(reflexive, transitive, symmetric, antisymmetric)


@dataclass(frozen=True)
class FinPreorder:
    """A finite preorder: a carrier plus a reflexive transitive endorelation."""

    carrier: FinSet
    rel: Relation

    def __post_init__(self) -> None:
        if self.rel.src != self.carrier or self.rel.dst != self.carrier:
            raise ValueError("relation does not live on the carrier")
        rows = self.rel.rows
        n = self.carrier.size
        for i in range(n):
            if not rows[i] >> i & 1:
                raise ValueError(f"not reflexive: ({i}, {i}) missing")
        for i in range(n):
            for j in _bits(rows[i]):
                extra = rows[j] & ~rows[i]
                if extra:
                    k = next(_bits(extra))
                    raise ValueError(
                        f"not transitive: ({i}, {j}) and ({j}, {k}) but not ({i}, {k})"
                    )

    @classmethod
    def discrete(cls, n: int, labels: tuple[str, ...] | None = None) -> "FinPreorder":
        carrier = FinSet(n, labels)
        return cls(carrier, Relation.diagonal(carrier))

    @classmethod
    def codiscrete(cls, n: int, labels: tuple[str, ...] | None = None) -> "FinPreorder":
        carrier = FinSet(n, labels)
        return cls(carrier, Relation.full(carrier, carrier))

    @classmethod
    def chain(cls, n: int, labels: tuple[str, ...] | None = None) -> "FinPreorder":
        carrier = FinSet(n, labels)
        rows = tuple(((1 << n) - 1) & ~((1 << i) - 1) for i in range(n))
        return cls(carrier, Relation(carrier, carrier, rows))

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[tuple[int, int]],
        labels: tuple[str, ...] | None = None,
    ) -> "FinPreorder":
        carrier = FinSet(n, labels)
        return reflexive_transitive_closure(Relation.from_pairs(carrier, carrier, edges))

    @property
    def size(self) -> int:
        return self.carrier.size

    def leq(self, a: int, b: int) -> bool:
        return self.rel.has(a, b)

    def is_partial_order(self) -> bool:
        return relation_predicates(self.rel).antisymmetric

    def is_equivalence(self) -> bool:
        return relation_predicates(self.rel).symmetric

    def is_discrete(self) -> bool:
        return self.rel == Relation.diagonal(self.carrier)


def reflexive_transitive_closure(r: Relation) -> FinPreorder:
    """The smallest preorder containing ``r``: reachability plus the diagonal."""
    _require_endorelation(r)
    n = r.src.size
    rows = [row | (1 << i) for i, row in enumerate(r.rows)]
    for k in range(n):
        rk = rows[k]
        bit = 1 << k
        for i in range(n):
            if rows[i] & bit:
                rows[i] |= rk
    return FinPreorder(r.src, Relation(r.src, r.src, tuple(rows)))


@dataclass(frozen=True)
class PreordMorphism:
    """A monotone map between finite preorders."""

    src: FinPreorder
    dst: FinPreorder
    map: SetMap

    def __post_init__(self) -> None:
        if self.map.dom != self.src.carrier or self.map.cod != self.dst.carrier:
            raise ValueError("underlying map does not match the endpoints")
        values = self.map.values
        drows = self.dst.rel.rows
        for a, row in enumerate(self.src.rel.rows):
            target = drows[values[a]]
            for a2 in _bits(row):
                if not target >> values[a2] & 1:
                    raise ValueError(
                        f"not monotone: ({a}, {a2}) related but "
                        f"({values[a]}, {values[a2]}) is not"
                    )

    def __call__(self, a: int) -> int:
        return self.map.values[a]

    def is_surjective(self) -> bool:
        return self.map.is_surjective()

    def is_injective(self) -> bool:
        return self.map.is_injective()


def identity_morphism(p: FinPreorder) -> PreordMorphism:
    return PreordMorphism(p, p, identity_map(p.carrier))


def compose_morphisms(g: PreordMorphism, f: PreordMorphism) -> PreordMorphism:
    """The composite ``g after f``."""
    if f.dst != g.src:
        raise ValueError("morphisms are not composable")
    return PreordMorphism(f.src, g.dst, compose_maps(g.map, f.map))


def is_isomorphism(f: PreordMorphism) -> bool:
    """Bijective and order-reflecting, so the inverse map is monotone too."""
    if f.src.size != f.dst.size or not f.map.is_injective():
        return False
    return inverse_image(f.map, f.dst.rel) == f.src.rel


class Pullback(NamedTuple):
    object: FinPreorder
    p1: PreordMorphism
    p2: PreordMorphism


def preord_pullback(f: PreordMorphism, g: PreordMorphism) -> Pullback:
    """The pullback of ``f`` and ``g`` over their common codomain.

    Carrier: pairs ``(x, z)`` with ``f(x) = g(z)`` in lexicographic index
    order.  The order is componentwise, which makes both projections
    monotone and jointly order-reflecting.
    """
    if f.dst != g.dst:
        raise ValueError("codomain mismatch: morphisms have different targets")
    x_obj, z_obj = f.src, g.src
    pairs = [
        (x, z)
        for x in range(x_obj.size)
        for z in range(z_obj.size)
        if f(x) == g(z)
    ]
    xmask = [0] * x_obj.size
    zmask = [0] * z_obj.size
    for k, (x, z) in enumerate(pairs):
        xmask[x] |= 1 << k
        zmask[z] |= 1 << k
    rx = []
    for x in range(x_obj.size):
        acc = 0
        for x2 in _bits(x_obj.rel.rows[x]):
            acc |= xmask[x2]
        rx.append(acc)
    sz = []
    for z in range(z_obj.size):
        acc = 0
        for z2 in _bits(z_obj.rel.rows[z]):
            acc |= zmask[z2]
        sz.append(acc)
    labels = _fresh_labels(
        [f"({x_obj.carrier.label(x)},{z_obj.carrier.label(z)})" for x, z in pairs]
    )
    carrier = FinSet(len(pairs), labels)
    rows = tuple(rx[x] & sz[z] for x, z in pairs)
    obj = FinPreorder(carrier, Relation(carrier, carrier, rows))
    p1 = PreordMorphism(obj, x_obj, SetMap(carrier, x_obj.carrier, tuple(x for x, _ in pairs)))
    p2 = PreordMorphism(obj, z_obj, SetMap(carrier, z_obj.carrier, tuple(z for _, z in pairs)))
    return Pullback(obj, p1, p2)


def is_pullback_square(
    top: PreordMorphism,
    left: PreordMorphism,
    right: PreordMorphism,
    bottom: PreordMorphism,
) -> bool:
    """Whether a commuting square of monotone maps is a pullback.

    The square reads ``top: P -> Q``, ``left: P -> R``, ``right: Q -> S``,
    ``bottom: R -> S``.  True iff the comparison into the computed pullback
    of ``bottom`` and ``right`` is an isomorphism of preorders.
    """
    if top.src != left.src or top.dst != right.src:
        raise ValueError("square endpoints do not match")
    if left.dst != bottom.src or right.dst != bottom.dst:
        raise ValueError("square endpoints do not match")
    if compose_morphisms(right, top).map != compose_morphisms(bottom, left).map:
        raise ValueError("square does not commute")
    pb = preord_pullback(bottom, right)
    index = {
        (pb.p1(k), pb.p2(k)): k for k in range(pb.object.size)
    }
    apex = top.src
    values = tuple(index[(left(p), top(p))] for p in range(apex.size))
    if len(set(values)) != apex.size or apex.size != pb.object.size:
        return False
    comparison = SetMap(apex.carrier, pb.object.carrier, values)
    return inverse_image(comparison, pb.object.rel) == apex.rel


def relation_square_is_pullback(f: SetMap, r: Relation, s: Relation) -> bool:
    """Whether the square of ``r`` over ``s`` along ``f x f`` is a pullback.

    ``r`` sits over ``dom x dom`` and ``s`` over ``cod x cod``; commuting
    means ``r`` maps into ``s``.  True iff ``r`` equals the inverse image
    of ``s``.
    """
    _require_endorelation(r)
    _require_endorelation(s)
    if r.src != f.dom or s.src != f.cod:
        raise ValueError("carrier mismatch: relations do not match the map")
    pulled = inverse_image(f, s)
    if not r.is_subrelation_of(pulled):
        raise ValueError("square does not commute: relation does not map into the target")
    return pulled == r
