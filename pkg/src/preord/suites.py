"""Verification suites: every theorem-shaped claim run against brute force.

Each ``check_*`` helper validates one claim on one instance and returns a
failure description or ``None``; the ``suite_*`` functions sweep the helpers
over exhaustive small instances plus seeded random ones and collect a
report.  The helpers take the produced artifacts as arguments so corrupted
implementations can be fed through the same net.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from . import alexandroff as alx
from . import factorization as fct
from . import oracle
from . import pretorsion as pre
from .relations import (
    FinPreorder,
    FinSet,
    PreordMorphism,
    Relation,
    SetMap,
    compose_morphisms,
    direct_image,
    identity_morphism,
    inverse_image,
    is_isomorphism,
    is_pullback_square,
    kernel_pair,
    preord_pullback,
    relation_predicates,
    relation_square_is_pullback,
)

__all__ = [
    "Check",
    "SuiteReport",
    "SUITES",
    "suite_pretorsion",
    "suite_factorization",
    "suite_stable_units",
    "suite_alexandroff",
    "run_suite",
]


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""


@dataclass
class SuiteReport:
    suite: str
    checks: list[Check] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def add(self, name: str, failure: str | None, detail: str = "") -> None:
        if failure is None:
            self.checks.append(Check(name, True, detail))
        else:
            self.checks.append(Check(name, False, failure))

    def lines(self) -> list[str]:
        out = []
        for c in self.checks:
            if c.ok:
                out.append(f"ok   {c.name}" + (f" [{c.detail}]" if c.detail else ""))
            else:
                out.append(f"FAIL {c.name}: {c.detail}")
        verdict = "pass" if self.ok else "FAIL"
        out.append(f"{verdict}: suite {self.suite} "
                   f"({sum(c.ok for c in self.checks)}/{len(self.checks)} checks)")
        return out


def _objects(max_n: int, config=None) -> list[FinPreorder]:
    out = []
    for n in range(max_n + 1):
        out.extend(oracle.enumerate_preorders(n, config))
    return out


def _morphisms(objects, config=None):
    for p in objects:
        for q in objects:
            yield from oracle.enumerate_morphisms(p, q, config)


# ---------------------------------------------------------------------------
# instance checks


def check_reflection_parts(
    p: FinPreorder, poset: FinPreorder, unit: PreordMorphism
) -> str | None:
    """The quotient must be an antisymmetric surjective image whose relation
    pulls back to the original one, matching the definitional construction."""
    if not relation_predicates(poset.rel).antisymmetric:
        return "quotient is not antisymmetric"
    if not unit.is_surjective():
        return "unit is not surjective"
    if inverse_image(unit.map, poset.rel) != p.rel:
        return "unit square is not a pullback"
    if not relation_square_is_pullback(unit.map, p.rel, poset.rel):
        return "relation square over the unit is not a pullback"
    witness = oracle.reflect_by_quotient(p)
    if witness.poset != poset or witness.unit.map != unit.map:
        return "condensation disagrees with the definitional quotient"
    if not is_isomorphism(pre.reflect(poset).unit):
        return "reflection is not idempotent"
    return None


def check_sym_core(p: FinPreorder) -> str | None:
    flags = relation_predicates(pre.sym_core(p))
    if not (flags.reflexive and flags.transitive and flags.symmetric):
        return "symmetric core is not an equivalence relation"
    return None


def check_canonical_sequence(p: FinPreorder, probe_cap: int = 3, config=None) -> str | None:
    seq = pre.canonical_sequence(p)
    ok, why = oracle.brute_force_universal(
        "n-kernel",
        f=seq.free_part,
        K=seq.torsion_part.src,
        k=seq.torsion_part,
        probe_cap=probe_cap,
        config=config,
    )
    if not ok:
        return f"kernel universal property fails: {why}"
    ok, why = oracle.brute_force_universal(
        "n-cokernel",
        k=seq.torsion_part,
        p=seq.free_part,
        probe_cap=probe_cap,
        config=config,
    )
    if not ok:
        return f"cokernel universal property fails: {why}"
    return None


def check_ideal_agreement(f: PreordMorphism, config=None) -> str | None:
    fast = pre.in_ideal_N(f)
    slow = oracle.brute_force_in_N(f, config)
    if fast != slow:
        return f"pointwise ideal test says {fast}, factorization search says {slow}"
    if fast:
        witness = pre.ideal_factorization(f)
        if witness is None:
            return "member of the ideal has no factorization witness"
        if compose_morphisms(witness.embed, witness.collapse).map != f.map:
            return "ideal witness does not compose back"
    return None


def check_naturality(f: PreordMorphism) -> str | None:
    lhs = compose_morphisms(pre.reflect(f.dst).unit, f).map
    rhs = compose_morphisms(pre.reflect_morphism(f), pre.reflect(f.src).unit).map
    if lhs != rhs:
        return "unit naturality square does not commute"
    return None


def check_decomposition_roundtrip(p: FinPreorder) -> str | None:
    d = pre.decompose(p)
    if pre.recompose(d) != p:
        return "recompose after decompose is not the identity"
    d2 = pre.decompose(pre.recompose(d))
    if d2 != d:
        return "decompose after recompose is not the identity"
    return None


def check_kernel_universal(f: PreordMorphism, probe_cap: int = 3, config=None) -> str | None:
    kern = pre.n_kernel(f)
    ok, why = oracle.brute_force_universal(
        "n-kernel", f=f, K=kern.K, k=kern.k, probe_cap=probe_cap, config=config
    )
    if not ok:
        return f"relative kernel universal property fails: {why}"
    return None


def check_factorization_parts(
    f: PreordMorphism, result: fct.FactorizationResult
) -> str | None:
    if result.composite.map != f.map:
        return "legs do not compose back to the morphism"
    if result.system == "monotone-light":
        expected = pre.reflect(pre.n_kernel(f).K).poset
        if pre.n_kernel(result.m).K != expected:
            return "covering kernel is not the reflected relative kernel"
    return None


def check_factorizations(f: PreordMorphism) -> str | None:
    try:
        refl = fct.reflective_factorization(f)
    except (ValueError, RuntimeError) as exc:
        return f"reflective factorization rejected: {exc}"
    failure = check_factorization_parts(f, refl)
    if failure:
        return f"reflective: {failure}"
    try:
        light = fct.monotone_light_factorization(f)
    except (ValueError, RuntimeError) as exc:
        return f"monotone-light factorization rejected: {exc}"
    failure = check_factorization_parts(f, light)
    if failure:
        return f"monotone-light: {failure}"
    return None


def _topological_m_star(f: PreordMorphism) -> bool:
    cm = alx.ContinuousMap(
        alx.preorder_to_space(f.src), alx.preorder_to_space(f.dst), f.map
    )
    return alx.classify_continuous(cm).in_M_star_top


def check_m_star_agreement(f: PreordMorphism) -> str | None:
    """The three covering tests: fibre antisymmetry, relative-kernel
    antisymmetry, and T0 fibres of the associated continuous map."""
    fibre_test = fct.is_in_M_star(f)
    kernel_test = relation_predicates(pre.n_kernel(f).K.rel).antisymmetric
    topo_test = _topological_m_star(f)
    if not fibre_test == kernel_test == topo_test:
        return (
            f"covering tests disagree: fibres={fibre_test} "
            f"kernel={kernel_test} topology={topo_test}"
        )
    return None


def check_e_detection(f: PreordMorphism) -> str | None:
    by_parts = fct.is_in_E(f)
    direct = is_isomorphism(pre.reflect_morphism(f))
    if by_parts != direct:
        return f"inverted-map tests disagree: parts={by_parts} direct={direct}"
    return None


def check_e_bar_three_way(f: PreordMorphism) -> str | None:
    first = fct.is_in_E_bar(f)
    eq = kernel_pair(f.map)
    second = eq.is_subrelation_of(f.src.rel) and fct.is_regular_epi(f)
    third = (
        pre.n_kernel(f).K.rel == eq
        and direct_image(f.map, f.src.rel) == f.dst.rel
    )
    if not first == second == third:
        return (
            f"surjective-fully-faithful tests disagree: "
            f"direct={first} kernel+epi={second} kernel+image={third}"
        )
    return None


def check_m_naturality_square(f: PreordMorphism) -> str | None:
    flag = fct.is_in_M(f)
    square = is_pullback_square(
        top=f,
        left=pre.reflect(f.src).unit,
        right=pre.reflect(f.dst).unit,
        bottom=pre.reflect_morphism(f),
    )
    if flag != square:
        return f"trivial-covering tests disagree: fibration={flag} square={square}"
    return None


def check_cover_parts(
    b: FinPreorder, total: FinPreorder, projection: PreordMorphism
) -> str | None:
    if total.size != 3 * b.size:
        return f"cover has {total.size} elements, expected {3 * b.size}"
    if not relation_predicates(total.rel).antisymmetric:
        return "cover is not antisymmetric"
    if not projection.is_surjective():
        return "cover projection is not surjective"
    if not fct.is_effective_descent(projection):
        ce = fct._effective_descent_counterexample(projection)
        return f"chain {ce} does not lift through the cover"
    return None


def check_cover(b: FinPreorder) -> str | None:
    total, projection = fct.effective_descent_cover(b)
    return check_cover_parts(b, total, projection)


def check_orthogonality_square(
    e: PreordMorphism,
    m: PreordMorphism,
    u: PreordMorphism,
    v: PreordMorphism,
    expected: PreordMorphism | None = None,
    brute: bool = False,
    config=None,
) -> str | None:
    try:
        alpha = fct.check_orthogonality(e, m, u, v)
    except fct.OrthogonalityError as exc:
        return f"no diagonal: {exc}"
    if expected is not None and alpha.map != expected.map:
        return "diagonal differs from the expected filler"
    if brute:
        ok, why = oracle.brute_force_universal(
            "orthogonality", e=e, m=m, u=u, v=v, config=config
        )
        if not ok:
            return f"enumeration disagrees: {why}"
    return None


def check_factorization_uniqueness(f: PreordMorphism) -> str | None:
    """Any second light factorization is connected to the canonical one by a
    unique comparison isomorphism, found by diagonal fill.

    A transported copy of the middle object along a permutation provides the
    second factorization.
    """
    light = fct.monotone_light_factorization(f)
    n = light.mid.size
    perm = tuple(reversed(range(n)))
    carrier = FinSet(n)
    rows = [0] * n
    for i in range(n):
        for j in range(n):
            if light.mid.rel.has(i, j):
                rows[perm[i]] |= 1 << perm[j]
    mid2 = FinPreorder(carrier, Relation(carrier, carrier, tuple(rows)))
    iso = PreordMorphism(light.mid, mid2, SetMap(light.mid.carrier, carrier, perm))
    iso_inv = PreordMorphism(mid2, light.mid, SetMap(carrier, light.mid.carrier, perm))
    e2 = compose_morphisms(iso, light.e)
    m2 = compose_morphisms(light.m, iso_inv)
    try:
        alpha = fct.check_orthogonality(light.e, m2, e2, light.m)
        beta = fct.check_orthogonality(e2, light.m, light.e, m2)
    except fct.OrthogonalityError as exc:
        return f"no comparison between factorizations: {exc}"
    if alpha.map.values != perm or beta.map.values != perm:
        return "comparison is not the transporting isomorphism"
    if compose_morphisms(beta, alpha).map != identity_morphism(light.mid).map:
        return "comparisons do not invert each other"
    return None


def check_stable_units(x: FinPreorder, g: PreordMorphism) -> str | None:
    if not fct.verify_stable_units(x, g):
        return "reflected unit pullback is not a pullback"
    return None


def check_pullback_mono(f: PreordMorphism) -> str | None:
    pulled, injective = fct.pullback_mono_check(f)
    if pulled != injective:
        return f"pullback criterion {pulled} disagrees with injectivity {injective}"
    return None


def check_space_roundtrip(p: FinPreorder) -> str | None:
    space = alx.preorder_to_space(p)
    if alx.space_to_preorder(space) != p:
        return "preorder -> space -> preorder is not the identity"
    if alx.preorder_to_space(alx.space_to_preorder(space)) != space:
        return "space -> preorder -> space is not the identity"
    return None


def check_topology_predicates(p: FinPreorder) -> str | None:
    space = alx.preorder_to_space(p)
    try:
        t0 = alx.is_T0(space)
        part = alx.is_partition(space)
    except RuntimeError as exc:
        return str(exc)
    if t0 != p.is_partial_order():
        return "T0 does not match antisymmetry"
    if part != p.is_equivalence():
        return "partition topology does not match symmetry"
    return None


def check_min_nbhd_intersection(p: FinPreorder, cap: int = 12) -> str | None:
    space = alx.preorder_to_space(p)
    opens = oracle.enumerate_open_sets(space, cap)
    for x in range(space.size):
        meet_mask = (1 << space.size) - 1
        for mask in opens:
            if mask >> x & 1:
                meet_mask &= mask
        if meet_mask != space.min_nbhd[x]:
            return f"minimal neighborhood of {x} is not the intersection of opens"
    return None


def check_hom_continuity_sets(p: FinPreorder, q: FinPreorder, config=None) -> str | None:
    monotone = {
        m.map.values for m in oracle.enumerate_morphisms(p, q, config)
    }
    sp, sq = alx.preorder_to_space(p), alx.preorder_to_space(q)
    opens = oracle.enumerate_open_sets(sq)
    continuous = set()
    for candidate in oracle.enumerate_set_maps(p.carrier, q.carrier):
        good = True
        for mask in opens:
            pre_mask = 0
            for a, v in enumerate(candidate.values):
                if mask >> v & 1:
                    pre_mask |= 1 << a
            if not sp.is_open(pre_mask):
                good = False
                break
        if good:
            continuous.add(candidate.values)
    if monotone != continuous:
        return (
            f"{len(monotone)} monotone maps but {len(continuous)} continuous maps"
        )
    return None


def check_t0_reflection_agreement(p: FinPreorder) -> str | None:
    space = alx.preorder_to_space(p)
    reflected = alx.t0_reflection(space)
    if not alx.is_T0(reflected.space):
        return "T0 reflection is not T0"
    poset, unit = pre.reflect(p)
    if reflected.space != alx.preorder_to_space(poset):
        return "T0 reflection disagrees with the order reflection"
    if reflected.projection.map != unit.map:
        return "T0 projection disagrees with the reflection unit"
    return None


def check_classify_continuous_agreement(f: PreordMorphism) -> str | None:
    order_flags = fct.classify(f)
    cm = alx.ContinuousMap(
        alx.preorder_to_space(f.src), alx.preorder_to_space(f.dst), f.map
    )
    topo_flags = alx.classify_continuous(cm)
    if topo_flags.in_M_star_top != order_flags.in_M_star:
        return "covering flags disagree across the isomorphism"
    if topo_flags.in_E_prime_top != order_flags.in_E_bar:
        return "stably-inverted flags disagree across the isomorphism"
    if topo_flags.regular_epi_top != order_flags.regular_epi:
        return "regular-epi flags disagree across the isomorphism"
    return None


# ---------------------------------------------------------------------------
# suites


def _sweep(report: SuiteReport, name: str, instances, checker) -> None:
    count = 0
    for instance in instances:
        count += 1
        try:
            failure = checker(instance)
        except Exception as exc:  # a raised check is a failed check
            failure = f"raised {exc!r}"
        if failure is not None:
            report.add(name, f"instance {count}: {failure}")
            return
    report.add(name, None, f"{count} instances")


def suite_pretorsion(
    max_n: int = 3,
    probe_cap: int = 3,
    seed: int = 0,
    kernel_samples: int = 120,
) -> SuiteReport:
    """Splitting axioms: trivial homs, the canonical sequence, the reflection."""
    report = SuiteReport("pretorsion")
    rng = random.Random(seed)
    objects = _objects(max_n)
    equivalences = [p for p in objects if p.is_equivalence()]
    posets = [p for p in objects if p.is_partial_order()]

    def hom_pairs():
        for t in equivalences:
            for f in posets:
                yield (t, f)

    def check_trivial(pair):
        t, f = pair
        if not pre.hom_is_trivial(t, f):
            return "a monotone map misses the ideal"
        for g in oracle.enumerate_morphisms(t, f):
            if not oracle.brute_force_in_N(g):
                return "factorization search rejects a map the ideal test accepts"
        return None

    _sweep(report, "equivalence-to-poset homs are trivial", hom_pairs(), check_trivial)
    _sweep(
        report,
        "canonical sequence universal properties",
        objects,
        lambda p: check_canonical_sequence(p, probe_cap),
    )
    _sweep(report, "symmetric core is an equivalence", objects, check_sym_core)
    _sweep(
        report,
        "reflection quotient properties",
        objects,
        lambda p: check_reflection_parts(p, *pre.reflect(p)),
    )
    morphisms = list(_morphisms(objects))
    _sweep(report, "unit naturality", morphisms, check_naturality)
    _sweep(report, "ideal membership agreement", morphisms, check_ideal_agreement)
    _sweep(report, "decomposition round trip", objects, check_decomposition_roundtrip)
    small = [f for f in morphisms if max(f.src.size, f.dst.size) <= 2]
    sampled = rng.sample(morphisms, min(kernel_samples, len(morphisms)))
    _sweep(
        report,
        "relative kernel universal property",
        small + sampled,
        lambda f: check_kernel_universal(f, probe_cap),
    )
    return report


def _random_monotone_morphism(rng, max_size: int) -> PreordMorphism:
    return oracle.random_morphism(rng, max_size)


def suite_factorization(
    max_n: int = 3,
    seed: int = 0,
    random_morphisms: int = 1000,
    random_size: int = 50,
    cover_random: int = 500,
    cover_size: int = 40,
    ortho_random: int = 200,
    ortho_size: int = 20,
    stability_samples: int = 300,
) -> SuiteReport:
    """Both factorization systems, the class detectors, covers, orthogonality."""
    report = SuiteReport("factorization")
    rng = random.Random(seed)
    objects = _objects(max_n)
    morphisms = list(_morphisms(objects))

    _sweep(report, "factorizations certify and compose", morphisms, check_factorizations)
    _sweep(report, "covering tests agree", morphisms, check_m_star_agreement)
    _sweep(report, "inverted-map tests agree", morphisms, check_e_detection)
    _sweep(report, "surjective-fully-faithful tests agree", morphisms, check_e_bar_three_way)
    _sweep(report, "trivial-covering naturality square", morphisms, check_m_naturality_square)

    eq_morphisms = [
        f
        for f in morphisms
        if relation_predicates(f.src.rel).symmetric
        and relation_predicates(f.dst.rel).symmetric
    ]
    _sweep(report, "pullback-mono criterion", eq_morphisms, check_pullback_mono)

    surjective_ff = [f for f in morphisms if fct.is_in_E_bar(f)]
    stability_pairs = []
    for e in surjective_ff:
        for g in (m for m in morphisms if m.dst == e.dst):
            stability_pairs.append((e, g))
    rng_pairs = rng.sample(stability_pairs, min(stability_samples, len(stability_pairs)))
    small_pairs = [
        (e, g) for (e, g) in stability_pairs if max(e.src.size, g.src.size) <= 2
    ]

    def check_stability(pair):
        e, g = pair
        pulled = preord_pullback(e, g).p2
        if not fct.is_in_E_bar(pulled):
            return "pullback of a surjective fully faithful map left the class"
        return None

    _sweep(report, "left class is pullback stable", small_pairs + rng_pairs, check_stability)

    def random_stability_pairs():
        produced = 0
        while produced < stability_samples // 3:
            base = oracle.random_preorder(rng, rng.randint(0, 15))
            q = oracle.random_core_refinement(rng, base)
            mid = FinPreorder(q.cod, direct_image(q, base.rel))
            e = PreordMorphism(base, mid, q)
            z = oracle.random_preorder(rng, rng.randint(0, 15))
            g_map = oracle.random_monotone_map(rng, z, mid)
            if g_map is None:
                continue
            produced += 1
            yield (e, PreordMorphism(z, mid, g_map))

    def check_random_stability(pair):
        e, g = pair
        if not fct.is_in_E_bar(e):
            return "core refinement quotient left the class at construction"
        return check_stability(pair)

    _sweep(report, "left class is pullback stable (random)",
           random_stability_pairs(), check_random_stability)

    poset_pairs = []
    for h in morphisms:
        if not (h.src.is_partial_order() and h.dst.is_partial_order()):
            continue
        if max(h.src.size, h.dst.size) > 2:
            continue
        for g in (m for m in morphisms if m.dst == h.dst and m.src.size <= 2):
            poset_pairs.append((h, g))

    def check_poset_pullback(pair):
        h, g = pair
        pulled = preord_pullback(h, g).p2
        if not fct.is_in_M(pulled):
            return "pullback of a poset morphism is not a trivial covering"
        return None

    _sweep(report, "poset-map pullbacks are trivial coverings", poset_pairs, check_poset_pullback)

    def ortho_exhaustive(f):
        light = fct.monotone_light_factorization(f)
        return check_orthogonality_square(
            light.e, light.m, light.e, light.m, brute=max(f.src.size, f.dst.size) <= 2
        )

    _sweep(report, "orthogonality on canonical squares", morphisms, ortho_exhaustive)
    _sweep(report, "light factorizations are unique up to comparison",
           morphisms, check_factorization_uniqueness)

    def random_squares():
        for _ in range(ortho_random):
            f = _random_monotone_morphism(rng, ortho_size)
            g = _random_monotone_morphism(rng, ortho_size)
            ef = fct.monotone_light_factorization(f)
            mg = fct.monotone_light_factorization(g)
            w_map = oracle.random_monotone_map(rng, ef.mid, mg.mid)
            if w_map is None:
                continue
            w = PreordMorphism(ef.mid, mg.mid, w_map)
            u = compose_morphisms(w, ef.e)
            v = compose_morphisms(mg.m, w)
            yield (ef.e, mg.m, u, v, w)

    def check_random_square(square):
        e, m, u, v, w = square
        return check_orthogonality_square(e, m, u, v, expected=w)

    _sweep(report, "orthogonality on random squares", random_squares(), check_random_square)

    _sweep(report, "effective-descent covers (exhaustive)", objects, check_cover)

    def random_preorders():
        for _ in range(cover_random):
            yield oracle.random_preorder(rng, rng.randint(0, cover_size))

    _sweep(report, "effective-descent covers (random)", random_preorders(), check_cover)

    def random_morphism_stream():
        for _ in range(random_morphisms):
            yield _random_monotone_morphism(rng, random_size)

    def check_random_morphism(f):
        failure = check_factorizations(f)
        if failure:
            return failure
        return check_m_star_agreement(f)

    _sweep(report, "random factorizations certify and compose",
           random_morphism_stream(), check_random_morphism)
    return report


def suite_stable_units(
    max_n: int = 3,
    seed: int = 0,
    random_instances: int = 1000,
    random_size: int = 20,
) -> SuiteReport:
    """The reflection preserves pullbacks along its unit components."""
    report = SuiteReport("stable-units")
    rng = random.Random(seed)
    objects = _objects(max_n)

    def exhaustive():
        for x in objects:
            poset = pre.reflect(x).poset
            for z in objects:
                for g in oracle.enumerate_morphisms(z, poset):
                    yield (x, g)

    _sweep(
        report,
        "stable units (exhaustive)",
        exhaustive(),
        lambda inst: check_stable_units(*inst),
    )

    def randoms():
        produced = 0
        while produced < random_instances:
            x = oracle.random_preorder(rng, rng.randint(0, random_size))
            poset = pre.reflect(x).poset
            z = oracle.random_preorder(rng, rng.randint(0, random_size))
            g_map = oracle.random_monotone_map(rng, z, poset)
            if g_map is None:
                continue
            produced += 1
            yield (x, PreordMorphism(z, poset, g_map))

    _sweep(
        report,
        "stable units (random)",
        randoms(),
        lambda inst: check_stable_units(*inst),
    )
    return report


def suite_alexandroff(
    max_n: int = 3,
    seed: int = 0,
    random_instances: int = 500,
    random_size: int = 50,
) -> SuiteReport:
    """The space dictionary: round trips, opens, and flag agreement."""
    report = SuiteReport("alexandroff")
    rng = random.Random(seed)
    objects = _objects(max_n)
    morphisms = list(_morphisms(objects))

    _sweep(report, "round trips (exhaustive)", objects, check_space_roundtrip)

    def randoms():
        for _ in range(random_instances):
            yield oracle.random_preorder(rng, rng.randint(0, random_size))

    _sweep(report, "round trips (random)", randoms(), check_space_roundtrip)
    _sweep(
        report,
        "monotone maps are exactly continuous maps",
        ((p, q) for p in objects for q in objects),
        lambda pq: check_hom_continuity_sets(*pq),
    )
    _sweep(report, "minimal neighborhoods are open intersections",
           objects, check_min_nbhd_intersection)
    _sweep(report, "T0/partition dual tests (exhaustive)", objects, check_topology_predicates)

    def random_objects():
        for _ in range(random_instances):
            yield oracle.random_preorder(rng, rng.randint(0, random_size))

    _sweep(report, "T0/partition dual tests (random)", random_objects(), check_topology_predicates)
    _sweep(report, "T0 reflection matches order reflection",
           objects, check_t0_reflection_agreement)
    _sweep(report, "continuous classification matches order classification",
           morphisms, check_classify_continuous_agreement)
    return report


SUITES = {
    "pretorsion": suite_pretorsion,
    "factorization": suite_factorization,
    "stable-units": suite_stable_units,
    "alexandroff": suite_alexandroff,
}


def run_suite(name: str, max_n: int = 3, seed: int | None = None) -> SuiteReport:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    if seed is None:
        seed = oracle.DEFAULT_CONFIG.seed
    return SUITES[name](max_n=max_n, seed=seed)
