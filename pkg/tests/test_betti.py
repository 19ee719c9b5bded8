"""Homological oracle: Betti tables, Hilbert numerators, linearity checks."""

import itertools
import math
import random

import pytest

from xcond.betti import (
    BettiTable,
    betti_numbers,
    degree_component,
    has_linear_resolution,
    hilbert_numerator,
    is_componentwise_linear,
    multigraded_betti,
)
from xcond.groebner import MonomialIdeal, ScaleExceeded
from xcond.ring import Monomial


def I(*gens):
    return MonomialIdeal.make([Monomial(g) for g in gens])


class TestBettiNumbers:
    def test_principal_ideal(self):
        t = betti_numbers(I((1, 0, 0)))
        assert t.as_dict() == {(0, 1): 1}
        assert (t.projdim, t.regularity) == (0, 1)

    def test_two_coprime_generators(self):
        t = betti_numbers(I((0, 1, 0), (1, 0, 1)))
        assert t.as_dict() == {(0, 1): 1, (0, 2): 1, (1, 3): 1}
        assert (t.projdim, t.regularity) == (1, 2)

    def test_squares_regular_sequence(self):
        t = betti_numbers(I((2, 0), (0, 2)))
        assert t.as_dict() == {(0, 2): 2, (1, 4): 1}

    def test_koszul_three_coprime(self):
        t = betti_numbers(I((2, 0, 0), (0, 3, 0), (0, 0, 1)))
        assert t.as_dict() == {
            (0, 1): 1,
            (0, 2): 1,
            (0, 3): 1,
            (1, 3): 1,
            (1, 4): 1,
            (1, 5): 1,
            (2, 6): 1,
        }
        assert t.projdim == 2

    def test_five_cycle_edge_ideal(self):
        t = betti_numbers(
            I((1, 1, 0, 0, 0), (0, 1, 1, 0, 0), (0, 0, 1, 1, 0), (0, 0, 0, 1, 1), (1, 0, 0, 0, 1))
        )
        assert t.as_dict() == {(0, 2): 5, (1, 3): 5, (2, 5): 1}
        assert (t.projdim, t.regularity) == (2, 3)

    def test_zero_ideal(self):
        t = betti_numbers(I())
        assert t.entries == ()

    def test_generator_cap(self):
        gens = [tuple(1 if j == i else 0 for j in range(17)) for i in range(17)]
        with pytest.raises(ScaleExceeded):
            betti_numbers(I(*gens))

    def test_multigraded_support_on_lcms(self):
        ideal = I((0, 1, 0), (1, 0, 1))
        mg = multigraded_betti(ideal)
        lcms = {Monomial((0, 1, 0)), Monomial((1, 0, 1)), Monomial((1, 1, 1))}
        assert all(b in lcms for _, b in mg)

    def test_beta0_matches_generators_random(self):
        rng = random.Random(5)
        for _ in range(30):
            gens = [
                tuple(rng.randint(0, 2) for _ in range(4))
                for _ in range(rng.randint(1, 6))
            ]
            gens = [g for g in gens if any(g)]
            if not gens:
                continue
            ideal = I(*gens)
            t = betti_numbers(ideal)
            expected = {}
            for g in ideal.generators:
                d = g.degree()
                expected[d] = expected.get(d, 0) + 1
            assert t.generator_degrees() == expected


class TestHilbertNumerator:
    def test_zero_ideal(self):
        assert hilbert_numerator(I()) == {0: 1}

    def test_principal(self):
        assert hilbert_numerator(I((1, 0))) == {0: 1, 1: -1}

    def test_two_coprime(self):
        assert hilbert_numerator(I((0, 1, 0), (1, 0, 1))) == {0: 1, 1: -1, 2: -1, 3: 1}

    def test_against_dimension_count(self):
        """Dual route: expand N(t)/(1-t)^n and compare with an exhaustive
        count of standard monomials degree by degree."""
        rng = random.Random(23)
        nvars, max_deg = 3, 8
        for _ in range(25):
            gens = [
                tuple(rng.randint(0, 3) for _ in range(nvars))
                for _ in range(rng.randint(1, 5))
            ]
            gens = [g for g in gens if any(g)]
            if not gens:
                continue
            ideal = I(*gens)
            numerator = hilbert_numerator(ideal)
            for d in range(max_deg + 1):
                predicted = sum(
                    c * math.comb(nvars - 1 + d - j, nvars - 1)
                    for j, c in numerator.items()
                    if j <= d
                )
                actual = 0
                for combo in itertools.combinations_with_replacement(range(nvars), d):
                    exps = [0] * nvars
                    for i in combo:
                        exps[i] += 1
                    if not ideal.contains(Monomial(tuple(exps))):
                        actual += 1
                assert predicted == actual


class TestLinearResolution:
    def test_variables(self):
        assert has_linear_resolution(I((1, 0), (0, 1)))

    def test_squares_not_linear(self):
        assert not has_linear_resolution(I((2, 0), (0, 2)))

    def test_path4_cover_ideal_linear(self):
        assert has_linear_resolution(I((1, 0, 1, 0), (0, 1, 1, 0), (0, 1, 0, 1)))

    def test_mixed_degrees_rejected(self):
        with pytest.raises(ValueError):
            has_linear_resolution(I((1, 0), (0, 2)))

    def test_explicit_degree_must_match(self):
        with pytest.raises(ValueError):
            has_linear_resolution(I((2, 0), (0, 2)), d=1)


class TestComponentwise:
    def test_two_coprime_is_componentwise(self):
        assert is_componentwise_linear(I((0, 1, 0), (1, 0, 1)))

    def test_squares_not_componentwise(self):
        assert not is_componentwise_linear(I((2, 0), (0, 2)))

    def test_variable_generated(self):
        assert is_componentwise_linear(I((1, 0, 0), (0, 0, 1)))

    def test_degree_component_contents(self):
        ideal = I((0, 1, 0), (1, 0, 1))
        comp = degree_component(ideal, 2, 3)
        assert set(comp.generators) == {
            Monomial((1, 1, 0)),
            Monomial((0, 2, 0)),
            Monomial((0, 1, 1)),
            Monomial((1, 0, 1)),
        }

    def test_degree_component_below_generators_is_zero(self):
        ideal = I((2, 0), (0, 2))
        assert degree_component(ideal, 1, 2).is_zero()


class TestBettiTable:
    def test_from_dict_drops_zeros_and_sorts(self):
        t = BettiTable.from_dict({(1, 3): 0, (0, 2): 2, (1, 4): 1})
        assert t.entries == (((0, 2), 2), ((1, 4), 1))
        assert t.get(1, 4) == 1
        assert t.get(5, 5) == 0
