"""Finite Alexandroff-discrete spaces and their preorder dictionary.

A space is stored by minimal open neighborhoods: ``min_nbhd[x]`` is the
intersection of all opens containing ``x``, and a set is open iff it
contains the minimal neighborhood of each of its points.  Opens are the
down-closed sets of the specialization preorder, and the two translations
invert each other on the nose.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .relations import (
    FinPreorder,
    FinSet,
    Relation,
    SetMap,
    _bits,
    _fresh_labels,
    opposite,
    relation_predicates,
)

__all__ = [
    "AlexandroffSpace",
    "ContinuousMap",
    "ContinuousClassification",
    "T0Reflection",
    "preorder_to_space",
    "space_to_preorder",
    "min_open",
    "closure_of_point",
    "is_T0",
    "is_partition",
    "t0_reflection",
    "subspace",
    "classify_continuous",
]


@dataclass(frozen=True)
class AlexandroffSpace:
    """A finite space closed under arbitrary intersections of opens."""

    carrier: FinSet
    min_nbhd: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "min_nbhd", tuple(self.min_nbhd))
        n = self.carrier.size
        if len(self.min_nbhd) != n:
            raise ValueError(f"expected {n} neighborhoods, got {len(self.min_nbhd)}")
        bound = 1 << n
        for x, nbhd in enumerate(self.min_nbhd):
            if not 0 <= nbhd < bound:
                raise ValueError(f"neighborhood of {x} is not a subset of the carrier")
            if not nbhd >> x & 1:
                raise ValueError(f"point {x} is missing from its own neighborhood")
        for x in range(n):
            for y in _bits(self.min_nbhd[x]):
                if self.min_nbhd[y] & ~self.min_nbhd[x]:
                    raise ValueError(
                        f"neighborhoods are not nested: U({y}) is not inside U({x})"
                    )

    @property
    def size(self) -> int:
        return self.carrier.size

    def is_open(self, mask: int) -> bool:
        return all(self.min_nbhd[x] & ~mask == 0 for x in _bits(mask))


def preorder_to_space(p: FinPreorder) -> AlexandroffSpace:
    """Topologize a preorder: opens are the down-closed sets, so the minimal
    neighborhood of a point collects everything below it."""
    return AlexandroffSpace(p.carrier, opposite(p.rel).rows)


def space_to_preorder(s: AlexandroffSpace) -> FinPreorder:
    """The specialization preorder: ``x`` below ``y`` iff ``y`` lies in the
    closure of ``x``, i.e. ``x`` is in every neighborhood of ``y``."""
    rel = opposite(
        Relation(s.carrier, s.carrier, s.min_nbhd)
    )
    return FinPreorder(s.carrier, rel)


def min_open(s: AlexandroffSpace, x: int) -> frozenset[int]:
    """The smallest open set containing ``x``."""
    if not 0 <= x < s.size:
        raise IndexError(f"point {x} out of range 0..{s.size - 1}")
    return frozenset(_bits(s.min_nbhd[x]))


def _closure_masks(s: AlexandroffSpace) -> tuple[int, ...]:
    return opposite(Relation(s.carrier, s.carrier, s.min_nbhd)).rows


def closure_of_point(s: AlexandroffSpace, x: int) -> frozenset[int]:
    """The closure of the singleton ``{x}``: every point whose neighborhoods
    all contain ``x``."""
    if not 0 <= x < s.size:
        raise IndexError(f"point {x} out of range 0..{s.size - 1}")
    return frozenset(_bits(_closure_masks(s)[x]))


def is_T0(s: AlexandroffSpace) -> bool:
    """Distinct points are topologically distinguishable.

    Computed on the opens (pairwise distinct minimal neighborhoods) and on
    the specialization preorder (antisymmetry); the two must agree.
    """
    direct = len(set(s.min_nbhd)) == s.size
    via_order = relation_predicates(space_to_preorder(s).rel).antisymmetric
    if direct != via_order:
        raise RuntimeError("T0 tests disagree between opens and specialization order")
    return direct


def is_partition(s: AlexandroffSpace) -> bool:
    """Every open is clopen.

    Computed on the opens (each minimal neighborhood has an open complement)
    and on the specialization preorder (symmetry); the two must agree.
    """
    full = (1 << s.size) - 1
    direct = all(s.is_open(full & ~nbhd) for nbhd in s.min_nbhd)
    via_order = relation_predicates(space_to_preorder(s).rel).symmetric
    if direct != via_order:
        raise RuntimeError("partition tests disagree between opens and specialization order")
    return direct


@dataclass(frozen=True)
class ContinuousMap:
    """A continuous map between Alexandroff spaces.

    Continuity is exactly monotonicity for the specialization preorders and
    is validated at construction.
    """

    src: AlexandroffSpace
    dst: AlexandroffSpace
    map: SetMap

    def __post_init__(self) -> None:
        if self.map.dom != self.src.carrier or self.map.cod != self.dst.carrier:
            raise ValueError("underlying map does not match the endpoints")
        values = self.map.values
        for y in range(self.src.size):
            target = self.dst.min_nbhd[values[y]]
            for x in _bits(self.src.min_nbhd[y]):
                if not target >> values[x] & 1:
                    raise ValueError(
                        f"not continuous: {x} specializes to {y} but the images do not"
                    )

    def __call__(self, x: int) -> int:
        return self.map.values[x]


class T0Reflection(NamedTuple):
    space: AlexandroffSpace
    projection: ContinuousMap


def t0_reflection(s: AlexandroffSpace) -> T0Reflection:
    """Identify points with equal closures; the quotient is the finest T0
    image and the projection is continuous."""
    closures = _closure_masks(s)
    grouped: dict[int, list[int]] = {}
    for x in range(s.size):
        grouped.setdefault(closures[x], []).append(x)
    classes = sorted(grouped.values(), key=lambda cls: cls[0])
    values = [0] * s.size
    for ci, cls in enumerate(classes):
        for x in cls:
            values[x] = ci
    labels = _fresh_labels(
        ["{" + ",".join(s.carrier.label(x) for x in cls) + "}" for cls in classes]
    )
    carrier = FinSet(len(classes), labels)
    nbhds = []
    for cls in classes:
        acc = 0
        for y in _bits(s.min_nbhd[cls[0]]):
            acc |= 1 << values[y]
        nbhds.append(acc)
    quotient = AlexandroffSpace(carrier, tuple(nbhds))
    projection = ContinuousMap(s, quotient, SetMap(s.carrier, carrier, tuple(values)))
    return T0Reflection(quotient, projection)


def subspace(s: AlexandroffSpace, points: Iterable[int]) -> AlexandroffSpace:
    """The subspace on ``points`` with neighborhoods cut down by intersection."""
    members = sorted(set(points))
    for x in members:
        if not 0 <= x < s.size:
            raise IndexError(f"point {x} out of range 0..{s.size - 1}")
    position = {x: k for k, x in enumerate(members)}
    labels = _fresh_labels([s.carrier.label(x) for x in members])
    carrier = FinSet(len(members), labels)
    nbhds = []
    for x in members:
        acc = 0
        for y in _bits(s.min_nbhd[x]):
            if y in position:
                acc |= 1 << position[y]
        nbhds.append(acc)
    return AlexandroffSpace(carrier, tuple(nbhds))


@dataclass(frozen=True)
class ContinuousClassification:
    in_M_star_top: bool
    in_E_prime_top: bool
    regular_epi_top: bool


def _fibre_masks(f: ContinuousMap) -> tuple[int, ...]:
    return f.map.preimage_masks()


def _fibres_T0(f: ContinuousMap) -> bool:
    for fibre in _fibre_masks(f):
        seen = set()
        for x in _bits(fibre):
            relative = f.src.min_nbhd[x] & fibre
            if relative in seen:
                return False
            seen.add(relative)
    return True


def _fibres_trivial(f: ContinuousMap) -> bool:
    for fibre in _fibre_masks(f):
        for x in _bits(fibre):
            if (f.src.min_nbhd[x] & fibre) != fibre:
                return False
    return True


def _specializations_lift(f: ContinuousMap) -> bool:
    src_cl = _closure_masks(f.src)
    dst_cl = _closure_masks(f.dst)
    covered = [0] * f.dst.size
    for x in range(f.src.size):
        acc = 0
        for x2 in _bits(src_cl[x]):
            acc |= 1 << f(x2)
        covered[f(x)] |= acc
    return all(dst_cl[y] & ~covered[y] == 0 for y in range(f.dst.size))


def classify_continuous(f: ContinuousMap) -> ContinuousClassification:
    """Class flags of a continuous map, computed on the space data.

    Coverings have T0 fibres; the stably-inverted maps are the surjections
    whose target carries the finest compatible topology and whose fibres are
    topologically trivial.
    """
    surjective = f.map.is_surjective()
    regular_epi_top = surjective and _specializations_lift(f)
    return ContinuousClassification(
        in_M_star_top=_fibres_T0(f),
        in_E_prime_top=regular_epi_top and _fibres_trivial(f),
        regular_epi_top=regular_epi_top,
    )
