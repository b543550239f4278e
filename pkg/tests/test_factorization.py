import pytest
from hypothesis import given, settings

import strategies as sts
from preord.factorization import (
    MorphismClassification,
    check_orthogonality,
    classify,
    effective_descent_cover,
    fibre_poset_lemma,
    is_effective_descent,
    is_fully_faithful,
    is_in_E,
    is_in_E_bar,
    is_in_M_star,
    is_regular_epi,
    monotone_light_factorization,
    pullback_mono_check,
    reflective_factorization,
    verify_stable_units,
)
from preord.pretorsion import n_kernel, reflect
from preord.relations import (
    FinPreorder,
    PreordMorphism,
    SetMap,
    compose_morphisms,
    identity_morphism,
    is_isomorphism,
    preord_pullback,
    relation_predicates,
)


def to_point(p):
    point = FinPreorder.discrete(1)
    return PreordMorphism(p, point, SetMap(p.carrier, point.carrier, (0,) * p.size))


def morph(src, dst, values):
    return PreordMorphism(src, dst, SetMap(src.carrier, dst.carrier, tuple(values)))


def running_example():
    return FinPreorder.from_edges(3, [(0, 1), (1, 0), (1, 2)])


class TestFullyFaithful:
    def test_identity(self):
        assert is_fully_faithful(identity_morphism(FinPreorder.chain(2)))

    def test_discrete_into_chain_fails(self):
        f = morph(FinPreorder.discrete(2), FinPreorder.chain(2), (0, 1))
        assert not is_fully_faithful(f)
        assert classify(f).counterexamples["fully_faithful"] == (0, 1)

    def test_codiscrete_to_point(self):
        assert is_fully_faithful(to_point(FinPreorder.codiscrete(2)))


class TestClassify:
    def test_poset_morphisms_are_trivial_coverings(self):
        f = morph(FinPreorder.chain(2), FinPreorder.chain(3), (0, 2))
        assert classify(f).in_M

    def test_codiscrete_to_point(self):
        flags = classify(to_point(FinPreorder.codiscrete(2)))
        assert flags.in_E_bar
        assert not flags.in_M_star
        assert flags.regular_epi
        assert flags.effective_descent

    def test_injective_maps_are_coverings(self):
        f = morph(FinPreorder.chain(2), FinPreorder.chain(3), (0, 1))
        assert classify(f).in_M_star

    def test_non_surjective_is_not_effective_descent(self):
        f = morph(FinPreorder.chain(2), FinPreorder.chain(3), (0, 1))
        flags = classify(f)
        assert not flags.effective_descent
        # the witness chain must involve the uncovered element
        assert 2 in flags.counterexamples["effective_descent"]

    def test_empty_morphism_flags(self):
        empty = FinPreorder.discrete(0)
        f = morph(empty, FinPreorder.chain(2), ())
        flags = classify(f)
        assert flags.in_M and flags.in_M_star and flags.fully_faithful
        assert not flags.in_E_bar and not flags.effective_descent
        into_empty = morph(empty, empty, ())
        flags = classify(into_empty)
        assert flags.in_E_bar and flags.effective_descent

    def test_invariant_validation(self):
        with pytest.raises(ValueError, match="invariant"):
            MorphismClassification(
                fully_faithful=False,
                regular_epi=False,
                in_E=True,
                in_M=False,
                in_E_bar=False,
                in_M_star=True,
                effective_descent=False,
            )


class TestReflectiveFactorization:
    def test_between_posets_first_leg_is_iso(self):
        f = morph(FinPreorder.chain(2), FinPreorder.chain(3), (0, 2))
        result = reflective_factorization(f)
        assert is_isomorphism(result.e)
        assert result.composite.map == f.map

    def test_codiscrete_to_point(self):
        f = to_point(FinPreorder.codiscrete(2))
        result = reflective_factorization(f)
        assert result.mid.size == 1
        assert is_isomorphism(result.m)

    def test_inverted_map_second_leg_is_iso(self):
        unit = reflect(running_example()).unit
        result = reflective_factorization(unit)
        assert is_in_E(unit)
        assert is_isomorphism(result.m)

    @given(sts.monotone_maps(max_size=6))
    @settings(max_examples=40)
    def test_random_certify_and_compose(self, f):
        result = reflective_factorization(f)
        assert result.e_certificate.in_E
        assert result.m_certificate.in_M
        assert result.composite.map == f.map


class TestMonotoneLightFactorization:
    def test_injective_first_leg_is_iso(self):
        f = morph(FinPreorder.chain(2), FinPreorder.chain(3), (0, 1))
        result = monotone_light_factorization(f)
        assert is_isomorphism(result.e)
        assert result.m.map.values == f.map.values

    def test_codiscrete_to_point(self):
        f = to_point(FinPreorder.codiscrete(2))
        result = monotone_light_factorization(f)
        assert result.mid.size == 1
        assert is_isomorphism(result.m)

    def test_reflection_unit_factors_through_itself(self):
        p = running_example()
        unit = reflect(p).unit
        result = monotone_light_factorization(unit)
        assert result.e.map == unit.map
        assert is_isomorphism(result.m)

    def test_every_small_unit_factors_through_itself(self):
        from preord.oracle import enumerate_preorders

        for n in range(4):
            for p in enumerate_preorders(n):
                unit = reflect(p).unit
                result = monotone_light_factorization(unit)
                assert result.e.map == unit.map
                assert is_isomorphism(result.m)

    def test_covering_kernel_is_reflected_kernel(self):
        f = to_point(running_example())
        result = monotone_light_factorization(f)
        assert n_kernel(result.m).K == reflect(n_kernel(f).K).poset

    @given(sts.monotone_maps(max_size=6))
    @settings(max_examples=40)
    def test_random_certify_and_compose(self, f):
        result = monotone_light_factorization(f)
        assert result.e_certificate.in_E_bar
        assert result.m_certificate.in_M_star
        assert result.composite.map == f.map


class TestEffectiveDescentCover:
    def test_point_gives_three_chain(self):
        total, projection = effective_descent_cover(FinPreorder.discrete(1))
        assert total == FinPreorder.chain(3, total.carrier.labels)
        assert projection.map.values == (0, 0, 0)

    def test_codiscrete_two(self):
        b = FinPreorder.codiscrete(2)
        total, projection = effective_descent_cover(b)
        assert total.size == 6
        assert total.is_partial_order()
        assert is_effective_descent(projection)
        # one core class: comparabilities are exactly level jumps plus loops
        assert total.rel.count() == 6 + 4 + 4 + 4

    def test_levels_serialize_one_to_three(self):
        total, _ = effective_descent_cover(FinPreorder.discrete(1, ("b",)))
        assert total.carrier.labels == ("({b},1,b)", "({b},2,b)", "({b},3,b)")

    @given(sts.preorders(max_size=25))
    @settings(max_examples=40)
    def test_random_covers(self, b):
        total, projection = effective_descent_cover(b)
        assert total.size == 3 * b.size
        assert total.is_partial_order()
        assert is_effective_descent(projection)


class TestFibrePosetLemma:
    def test_identity_on_poset(self):
        assert fibre_poset_lemma(identity_morphism(FinPreorder.chain(3)))

    def test_pullback_of_covering_along_cover(self):
        b = running_example()
        f = to_point(b)  # not used; build a covering into b instead
        covering = morph(FinPreorder.chain(2), b, (0, 2))
        assert is_in_M_star(covering)
        cover = effective_descent_cover(b)
        pulled = preord_pullback(cover.projection, covering).p1
        assert fibre_poset_lemma(pulled)

    def test_rejects_non_poset_target(self):
        with pytest.raises(ValueError, match="partial order"):
            fibre_poset_lemma(identity_morphism(FinPreorder.codiscrete(2)))

    def test_rejects_non_poset_fibre(self):
        f = to_point(FinPreorder.codiscrete(2))
        with pytest.raises(ValueError, match="fibre"):
            fibre_poset_lemma(f)

    def test_randomized_coverings_over_posets(self):
        # covering legs over partial orders satisfy the premises, so the
        # lemma must conclude that their sources are partial orders
        import random

        from preord.oracle import random_monotone_map, random_preorder

        rng = random.Random(4)
        produced = 0
        while produced < 60:
            base = reflect(random_preorder(rng, rng.randint(0, 30))).poset
            src = random_preorder(rng, rng.randint(0, 30))
            mapping = random_monotone_map(rng, src, base)
            if mapping is None:
                continue
            g = PreordMorphism(src, base, mapping)
            covering = monotone_light_factorization(g).m
            assert fibre_poset_lemma(covering)
            produced += 1


class TestStableUnits:
    def test_unit_of_poset_is_iso_case(self):
        x = FinPreorder.chain(2)
        poset = reflect(x).poset
        g = identity_morphism(poset)
        assert verify_stable_units(x, g)

    def test_point_probe(self):
        x = running_example()
        poset = reflect(x).poset
        point = FinPreorder.discrete(1)
        for target in range(poset.size):
            g = morph(point, poset, (target,))
            assert verify_stable_units(x, g)

    def test_codomain_mismatch(self):
        x = running_example()
        with pytest.raises(ValueError, match="codomain mismatch"):
            verify_stable_units(x, identity_morphism(x))


class TestPullbackMono:
    def test_kernel_pair_quotient(self):
        src = FinPreorder.from_edges(3, [(0, 1), (1, 0)])
        dst = FinPreorder.discrete(2)
        f = morph(src, dst, (0, 0, 1))
        assert pullback_mono_check(f) == (True, True)

    def test_discrete_refinement_fails_both(self):
        src = FinPreorder.discrete(2)
        dst = FinPreorder.discrete(1)
        f = morph(src, dst, (0, 0))
        assert pullback_mono_check(f) == (False, False)

    def test_precondition(self):
        with pytest.raises(ValueError, match="equivalence"):
            pullback_mono_check(identity_morphism(FinPreorder.chain(2)))


class TestOrthogonality:
    def test_identity_left_leg(self):
        p = FinPreorder.chain(2)
        e = identity_morphism(p)
        m = morph(FinPreorder.chain(2), FinPreorder.chain(3), (0, 2))
        u = morph(p, m.src, (0, 1))
        v = compose_morphisms(m, u)
        alpha = check_orthogonality(e, m, u, v)
        assert alpha.map == u.map

    def test_identity_right_leg(self):
        e = to_point(FinPreorder.codiscrete(2))
        m = identity_morphism(FinPreorder.discrete(1))
        u = to_point(FinPreorder.codiscrete(2))
        v = identity_morphism(FinPreorder.discrete(1))
        alpha = check_orthogonality(e, m, u, v)
        assert alpha.map == v.map

    def test_rejects_uncertified_left_leg(self):
        not_e_bar = morph(FinPreorder.discrete(2), FinPreorder.chain(2), (0, 1))
        with pytest.raises(ValueError, match="fully faithful"):
            check_orthogonality(
                not_e_bar,
                identity_morphism(FinPreorder.chain(2)),
                not_e_bar,
                identity_morphism(FinPreorder.chain(2)),
            )

    def test_rejects_non_commuting_square(self):
        p = FinPreorder.discrete(2)
        e = identity_morphism(p)
        m = identity_morphism(p)
        u = morph(p, p, (0, 1))
        v = morph(p, p, (1, 0))
        with pytest.raises(ValueError, match="commute"):
            check_orthogonality(e, m, u, v)


class TestClassAgreements:
    @given(sts.monotone_maps(max_size=6))
    @settings(max_examples=60)
    def test_covering_tests_agree(self, f):
        fibre_test = is_in_M_star(f)
        kernel_test = relation_predicates(n_kernel(f).K.rel).antisymmetric
        assert fibre_test == kernel_test

    @given(sts.monotone_maps(max_size=5))
    @settings(max_examples=60)
    def test_e_bar_three_way(self, f):
        from preord.relations import direct_image, kernel_pair

        first = is_in_E_bar(f)
        eq = kernel_pair(f.map)
        second = eq.is_subrelation_of(f.src.rel) and is_regular_epi(f)
        third = (
            n_kernel(f).K.rel == eq
            and direct_image(f.map, f.src.rel) == f.dst.rel
        )
        assert first == second == third
