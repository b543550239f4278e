"""Morphism classes induced by the partial-order reflection, and the two
factorization systems they assemble into.

The reflective system pairs maps inverted by the reflection with trivial
coverings (discrete fibrations between symmetric cores).  The monotone-light
system pairs surjective fully faithful maps with coverings, the maps whose
fibres are partial orders.  Every class test carries a counterexample when
it fails, and effective-descent surjections are both recognized and
constructed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

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
    inverse_image,
    is_pullback_square,
    kernel_pair,
    meet,
    preord_pullback,
    relation_predicates,
)
from .pretorsion import n_kernel, reflect, reflect_morphism, sym_core

__all__ = [
    "MorphismClassification",
    "FactorizationResult",
    "Cover",
    "OrthogonalityError",
    "is_fully_faithful",
    "is_regular_epi",
    "is_in_E",
    "is_in_M",
    "is_in_E_bar",
    "is_in_M_star",
    "is_effective_descent",
    "classify",
    "reflective_factorization",
    "monotone_light_factorization",
    "effective_descent_cover",
    "fibre_poset_lemma",
    "verify_stable_units",
    "pullback_mono_check",
    "check_orthogonality",
]


class OrthogonalityError(RuntimeError):
    """No diagonal filler exists for a certified lifting square."""


def _fully_faithful_counterexample(f: PreordMorphism) -> tuple[int, int] | None:
    pulled = inverse_image(f.map, f.dst.rel)
    for a in range(f.src.size):
        extra = pulled.rows[a] & ~f.src.rel.rows[a]
        if extra:
            return (a, next(_bits(extra)))
    return None


def is_fully_faithful(f: PreordMorphism) -> bool:
    """Source elements are related exactly when their images are."""
    return _fully_faithful_counterexample(f) is None


def _regular_epi_counterexample(f: PreordMorphism) -> tuple[int, ...] | None:
    hit = f.map.image_mask()
    missed = ((1 << f.dst.size) - 1) & ~hit
    if missed:
        return (next(_bits(missed)),)
    image = direct_image(f.map, f.src.rel)
    for b in range(f.dst.size):
        extra = f.dst.rel.rows[b] & ~image.rows[b]
        if extra:
            return (b, next(_bits(extra)))
    return None


def is_regular_epi(f: PreordMorphism) -> bool:
    """Surjective, with the target relation covered by the image relation."""
    return _regular_epi_counterexample(f) is None


def _in_E_counterexample(f: PreordMorphism) -> tuple[int, ...] | None:
    ce = _fully_faithful_counterexample(f)
    if ce is not None:
        return ce
    induced = reflect_morphism(f)
    ce = _regular_epi_counterexample(induced)
    if ce is None:
        return None
    # translate reflected-class indices back to least target representatives
    _, unit = reflect(f.dst)
    representative: dict[int, int] = {}
    for b in range(f.dst.size):
        representative.setdefault(unit(b), b)
    return tuple(representative[c] for c in ce)


def is_in_E(f: PreordMorphism) -> bool:
    """Inverted by the reflection: fully faithful, and the induced map of
    quotient posets is a surjection covering the quotient order."""
    return _in_E_counterexample(f) is None


def _in_M_counterexample(f: PreordMorphism) -> tuple[int, int] | None:
    sim_src = sym_core(f.src)
    sim_dst = sym_core(f.dst)
    pre = f.map.preimage_masks()
    for a in range(f.src.size):
        for b in _bits(sim_dst.rows[f(a)]):
            if (sim_src.rows[a] & pre[b]).bit_count() != 1:
                return (a, b)
    return None


def is_in_M(f: PreordMorphism) -> bool:
    """Trivial covering: a discrete fibration between the symmetric cores.

    Every core-related target of the image of ``a`` lifts to exactly one
    core-related element over it.
    """
    return _in_M_counterexample(f) is None


def _in_E_bar_counterexample(f: PreordMorphism) -> tuple[int, ...] | None:
    hit = f.map.image_mask()
    missed = ((1 << f.dst.size) - 1) & ~hit
    if missed:
        return (next(_bits(missed)),)
    return _fully_faithful_counterexample(f)


def is_in_E_bar(f: PreordMorphism) -> bool:
    """Surjective and fully faithful: the stably-inverted maps."""
    return _in_E_bar_counterexample(f) is None


def _fibre_poset_counterexample(f: PreordMorphism) -> tuple[int, int] | None:
    sim = sym_core(f.src)
    pre = f.map.preimage_masks()
    for a in range(f.src.size):
        others = sim.rows[a] & pre[f(a)] & ~(1 << a)
        if others:
            return (a, next(_bits(others)))
    return None


def _in_M_star_counterexample(f: PreordMorphism) -> tuple[int, int] | None:
    ce = _fibre_poset_counterexample(f)
    kernel_is_poset = relation_predicates(n_kernel(f).K.rel).antisymmetric
    if (ce is None) != kernel_is_poset:
        raise RuntimeError(
            "fibre antisymmetry and kernel antisymmetry disagree; "
            "this contradicts the covering characterization"
        )
    return ce


def is_in_M_star(f: PreordMorphism) -> bool:
    """Covering: every fibre is a partial order.

    Computed twice, as fibre antisymmetry and as antisymmetry of the
    relative kernel; the two must agree.
    """
    return _in_M_star_counterexample(f) is None


def _effective_descent_counterexample(
    f: PreordMorphism,
) -> tuple[int, int, int] | None:
    src_rows = f.src.rel.rows
    dst_rows = f.dst.rel.rows
    pre = f.map.preimage_masks()
    n = f.src.size
    below = [0] * n
    above = [0] * n
    cols = f.src.rel.columns()
    for e in range(n):
        acc = 0
        for a in _bits(cols[e]):
            acc |= 1 << f(a)
        below[e] = acc
        acc = 0
        for a in _bits(src_rows[e]):
            acc |= 1 << f(a)
        above[e] = acc
    dst_cols = f.dst.rel.columns()
    for b2 in range(f.dst.size):
        rights = dst_rows[b2]
        for b1 in _bits(dst_cols[b2]):
            covered = 0
            for e2 in _bits(pre[b2]):
                if below[e2] >> b1 & 1:
                    covered |= above[e2]
            missing = rights & ~covered
            if missing:
                return (b1, b2, next(_bits(missing)))
    return None


def is_effective_descent(f: PreordMorphism) -> bool:
    """Every two-step chain in the target lifts to a chain over it."""
    return _effective_descent_counterexample(f) is None


_FLAG_CHECKS = (
    ("fully_faithful", _fully_faithful_counterexample),
    ("regular_epi", _regular_epi_counterexample),
    ("in_E", _in_E_counterexample),
    ("in_M", _in_M_counterexample),
    ("in_E_bar", _in_E_bar_counterexample),
    ("in_M_star", _in_M_star_counterexample),
    ("effective_descent", _effective_descent_counterexample),
)


@dataclass(frozen=True)
class MorphismClassification:
    """All class memberships of one monotone map, with counterexamples.

    ``counterexamples`` maps each false flag to a concrete element tuple
    witnessing the failure.
    """

    fully_faithful: bool
    regular_epi: bool
    in_E: bool
    in_M: bool
    in_E_bar: bool
    in_M_star: bool
    effective_descent: bool
    counterexamples: dict[str, tuple[int, ...]] = field(default_factory=dict)

    def __post_init__(self) -> None:
        implications = (
            ("in_E", "fully_faithful"),
            ("in_E_bar", "in_E"),
            ("in_M", "in_M_star"),
            ("effective_descent", "regular_epi"),
        )
        for strong, weak in implications:
            if getattr(self, strong) and not getattr(self, weak):
                raise ValueError(f"classification invariant violated: {strong} without {weak}")


def classify(f: PreordMorphism) -> MorphismClassification:
    """Evaluate every morphism class on ``f`` at once."""
    flags = {}
    counterexamples = {}
    for name, check in _FLAG_CHECKS:
        ce = check(f)
        flags[name] = ce is None
        if ce is not None:
            counterexamples[name] = ce
    return MorphismClassification(counterexamples=counterexamples, **flags)


@dataclass(frozen=True)
class FactorizationResult:
    """A certified two-step factorization ``m ∘ e`` of a morphism."""

    mid: FinPreorder
    e: PreordMorphism
    m: PreordMorphism
    system: str
    e_certificate: MorphismClassification
    m_certificate: MorphismClassification

    def __post_init__(self) -> None:
        if self.e.dst != self.mid or self.m.src != self.mid:
            raise ValueError("legs do not meet in the middle object")
        if self.system == "reflective":
            good = self.e_certificate.in_E and self.m_certificate.in_M
        elif self.system == "monotone-light":
            good = self.e_certificate.in_E_bar and self.m_certificate.in_M_star
        else:
            raise ValueError(f"unknown factorization system {self.system!r}")
        if not good:
            raise ValueError(f"legs are not certified for the {self.system} system")

    @property
    def composite(self) -> PreordMorphism:
        return compose_morphisms(self.m, self.e)


def reflective_factorization(f: PreordMorphism) -> FactorizationResult:
    """Factor ``f`` through the pullback of its reflected map along the unit.

    The first leg is inverted by the reflection; the second is a trivial
    covering (it is a pullback of a partial-order morphism).
    """
    _, unit_src = reflect(f.src)
    _, unit_dst = reflect(f.dst)
    induced = reflect_morphism(f)
    pb = preord_pullback(induced, unit_dst)
    index = {(pb.p1(k), pb.p2(k)): k for k in range(pb.object.size)}
    e = PreordMorphism(
        f.src,
        pb.object,
        SetMap(
            f.src.carrier,
            pb.object.carrier,
            tuple(index[(unit_src(a), f(a))] for a in range(f.src.size)),
        ),
    )
    return FactorizationResult(
        mid=pb.object,
        e=e,
        m=pb.p2,
        system="reflective",
        e_certificate=classify(e),
        m_certificate=classify(pb.p2),
    )


def _equivalence_classes(rel: Relation) -> list[list[int]]:
    seen: dict[int, int] = {}
    classes: list[list[int]] = []
    for a in range(rel.src.size):
        mask = rel.rows[a]
        if mask not in seen:
            seen[mask] = len(classes)
            classes.append(sorted(_bits(mask)))
    classes.sort(key=lambda c: c[0])
    return classes


def monotone_light_factorization(f: PreordMorphism) -> FactorizationResult:
    """Factor ``f`` through the quotient by kernel-pair-meet-symmetric-core.

    The quotient leg is surjective and fully faithful; the remaining leg is
    a covering.
    """
    equiv = meet(kernel_pair(f.map), sym_core(f.src))
    classes = _equivalence_classes(equiv)
    values = [0] * f.src.size
    for ci, cls in enumerate(classes):
        for a in cls:
            values[a] = ci
    labels = _fresh_labels(
        ["{" + ",".join(f.src.carrier.label(a) for a in cls) + "}" for cls in classes]
    )
    carrier = FinSet(len(classes), labels)
    quotient_map = SetMap(f.src.carrier, carrier, tuple(values))
    mid = FinPreorder(carrier, direct_image(quotient_map, f.src.rel))
    e = PreordMorphism(f.src, mid, quotient_map)
    m_values = tuple(f(cls[0]) for cls in classes)
    m = PreordMorphism(mid, f.dst, SetMap(carrier, f.dst.carrier, m_values))
    return FactorizationResult(
        mid=mid,
        e=e,
        m=m,
        system="monotone-light",
        e_certificate=classify(e),
        m_certificate=classify(m),
    )


class Cover(NamedTuple):
    total: FinPreorder
    projection: PreordMorphism


def effective_descent_cover(b: FinPreorder) -> Cover:
    """A partially ordered effective-descent surjection onto ``b``.

    The total space has three lexicographic levels over each element,
    ordered by (strict class order, level, equality), so it has exactly
    ``3 * |b|`` elements and is antisymmetric; chains in ``b`` lift level
    by level.  Levels are serialized 1..3.
    """
    poset, unit = reflect(b)
    classes = _equivalence_classes(sym_core(b))
    triples: list[tuple[int, int, int]] = []
    for ci, cls in enumerate(classes):
        for level in range(3):
            for beta in cls:
                triples.append((ci, level, beta))
    index = {t: k for k, t in enumerate(triples)}
    class_mask = [0] * len(classes)
    for k, (ci, _, _) in enumerate(triples):
        class_mask[ci] |= 1 << k
    level_mask: dict[tuple[int, int], int] = {}
    for k, (ci, level, _) in enumerate(triples):
        level_mask[ci, level] = level_mask.get((ci, level), 0) | 1 << k
    strict_above = []
    for ci in range(len(classes)):
        acc = 0
        for cj in _bits(poset.rel.rows[ci]):
            if cj != ci:
                acc |= class_mask[cj]
        strict_above.append(acc)
    rows = []
    for k, (ci, level, _) in enumerate(triples):
        row = strict_above[ci] | (1 << k)
        for higher in range(level + 1, 3):
            row |= level_mask[ci, higher]
        rows.append(row)
    labels = _fresh_labels(
        [
            "("
            + "{" + ",".join(b.carrier.label(a) for a in classes[ci]) + "}"
            + f",{level + 1},{b.carrier.label(beta)})"
            for ci, level, beta in triples
        ]
    )
    carrier = FinSet(len(triples), labels)
    total = FinPreorder(carrier, Relation(carrier, carrier, tuple(rows)))
    projection = PreordMorphism(
        total, b, SetMap(carrier, b.carrier, tuple(beta for _, _, beta in triples))
    )
    return Cover(total, projection)


def fibre_poset_lemma(f: PreordMorphism) -> bool:
    """With a partial-order target and partial-order fibres, the source is a
    partial order; evaluates and returns that conclusion."""
    if not f.dst.is_partial_order():
        raise ValueError("precondition violation: target must be a partial order")
    ce = _fibre_poset_counterexample(f)
    if ce is not None:
        raise ValueError(
            f"precondition violation: fibre over {f(ce[0])} is not a partial order"
        )
    return f.src.is_partial_order()


def verify_stable_units(x: FinPreorder, g: PreordMorphism) -> bool:
    """Check that reflecting the pullback of the unit of ``x`` along ``g``
    yields a pullback square again.  Always true; returns the verdict."""
    poset, unit = reflect(x)
    if g.dst != poset:
        raise ValueError("codomain mismatch: map must target the reflection of x")
    pb = preord_pullback(unit, g)
    return is_pullback_square(
        top=reflect_morphism(pb.p2),
        left=reflect_morphism(pb.p1),
        right=reflect_morphism(g),
        bottom=reflect_morphism(unit),
    )


def pullback_mono_check(f: PreordMorphism) -> tuple[bool, bool]:
    """For a map of equivalence-relation objects, evaluate both sides of the
    pullback-iff-mono criterion.

    Returns whether the source relation is the pulled-back target relation,
    and whether the induced map on class sets is injective.  The two
    booleans always agree.
    """
    if not relation_predicates(f.src.rel).symmetric:
        raise ValueError("precondition violation: source must be an equivalence relation")
    if not relation_predicates(f.dst.rel).symmetric:
        raise ValueError("precondition violation: target must be an equivalence relation")
    pulled_back = inverse_image(f.map, f.dst.rel) == f.src.rel
    induced = reflect_morphism(f)
    return (pulled_back, induced.is_injective())


def check_orthogonality(
    e: PreordMorphism,
    m: PreordMorphism,
    u: PreordMorphism,
    v: PreordMorphism,
) -> PreordMorphism:
    """The unique diagonal of a lifting square between the two light classes.

    ``e`` must be surjective fully faithful, ``m`` a covering, and
    ``(u, v)`` a commuting square ``m ∘ u = v ∘ e``.  Because ``e`` is
    surjective any diagonal is forced on every element, so at most one can
    exist; raises when none does, which would refute orthogonality.
    """
    if u.src != e.src or u.dst != m.src:
        raise ValueError("square endpoints do not match")
    if v.src != e.dst or v.dst != m.dst:
        raise ValueError("square endpoints do not match")
    if not is_in_E_bar(e):
        raise ValueError("left leg is not surjective fully faithful")
    if not is_in_M_star(m):
        raise ValueError("right leg is not a covering")
    if compose_morphisms(m, u).map != compose_morphisms(v, e).map:
        raise ValueError("square does not commute")
    pre = e.map.preimage_masks()
    values = []
    for b in range(e.dst.size):
        fibre = list(_bits(pre[b]))
        val = u(fibre[0])
        for a in fibre[1:]:
            if u(a) != val:
                raise OrthogonalityError(
                    f"no diagonal: top map splits the fibre over {b}"
                )
        values.append(val)
    try:
        alpha = PreordMorphism(
            e.dst, m.src, SetMap(e.dst.carrier, m.src.carrier, tuple(values))
        )
    except ValueError as exc:
        raise OrthogonalityError(f"no monotone diagonal: {exc}") from exc
    if compose_morphisms(m, alpha).map != v.map:
        raise OrthogonalityError("no diagonal: forced candidate misses the bottom map")
    return alpha
