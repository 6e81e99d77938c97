from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from ultramonad.core.errors import MismatchedSpaces, MixedKinds
from ultramonad.core.measures.evaluation import evaluate
from ultramonad.core.measures.measure import dirac
from ultramonad.core.measures.measure_distance import measure_distance, quotient_agreement
from ultramonad.core.measures.measure_kind import MeasureKind
from ultramonad.core.measures.pushforward import pushforward
from ultramonad.core.measures.r_constant_functions import is_r_constant
from ultramonad.core.measures.separation import functional_equality_oracle, sampled_agreement, separating_function
from ultramonad.core.sampling.random_objects import (
    random_measure,
    random_radius,
    random_retraction,
    random_ultrametric_space,
)
from ultramonad.core.ultra_core.point_map import sup_distance
from ultramonad.tests.builders import maxmin, maxplus
from ultramonad.tests.strategies import kinds, measures_on, ultrametric_spaces


def test_measure_distance_examples(abc_space):
    delta_a = dirac(MeasureKind.MAXMIN, abc_space, "a")
    delta_b = dirac(MeasureKind.MAXMIN, abc_space, "b")
    assert measure_distance(delta_a, delta_b) == 1
    assert measure_distance(maxmin(abc_space, a="inf", c=5), maxmin(abc_space, b="inf", c=5)) == 1
    assert measure_distance(delta_a, delta_a) == 0
    assert measure_distance(maxmin(abc_space, a="inf"), maxmin(abc_space, c="inf")) == 2
    assert measure_distance(maxplus(abc_space, a=0, b=-1), maxplus(abc_space, a=0, b=-2)) == 1


def test_measure_distance_rejects_incomparable(abc_space, uv_space):
    with pytest.raises(MixedKinds):
        measure_distance(maxmin(abc_space, a="inf"), maxplus(abc_space, a=0))
    with pytest.raises(MismatchedSpaces):
        measure_distance(maxmin(abc_space, a="inf"), maxmin(uv_space, u="inf"))


@pytest.mark.parametrize("kind", list(MeasureKind))
def test_quotient_characterization(kind):
    rng = np.random.default_rng(2)
    for trial in range(500):
        space = random_ultrametric_space(rng)
        mu, nu = random_measure(rng, kind, space), random_measure(rng, kind, space)
        radius = random_radius(rng, space)
        assert (measure_distance(mu, nu) < radius) == quotient_agreement(mu, nu, radius), \
            f"Trial {trial}: d̂({mu}, {nu}) = {measure_distance(mu, nu)} disagrees with quotient agreement at {radius}"


def test_dirac_embedding_is_isometric():
    rng = np.random.default_rng(3)
    for _ in range(20):
        space = random_ultrametric_space(rng)
        for kind in MeasureKind:
            for x in space.points:
                for y in space.points:
                    assert measure_distance(dirac(kind, space, x), dirac(kind, space, y)) == space.distance(x, y), \
                        f"d̂(δ_{x}, δ_{y}) differs from d({x}, {y}) on {space.dist}"


@pytest.mark.parametrize("kind", list(MeasureKind))
def test_measure_distance_is_an_ultrametric(kind):
    rng = np.random.default_rng(4)
    for _ in range(500):
        space = random_ultrametric_space(rng)
        mu, nu, rho = (random_measure(rng, kind, space) for _ in range(3))
        assert measure_distance(mu, nu) == measure_distance(nu, mu)
        assert measure_distance(mu, rho) <= max(measure_distance(mu, nu), measure_distance(nu, rho))
        assert (measure_distance(mu, nu) == 0) == (mu == nu)


def test_measure_distance_matches_sampled_oracle():
    """Just above d̂ every sampled r-constant function agrees; at d̂ itself (if positive) some function separates."""
    rng = np.random.default_rng(5)
    for trial in range(100):
        kind = MeasureKind.MAXMIN if trial % 2 == 0 else MeasureKind.MAXPLUS
        space = random_ultrametric_space(rng)
        mu, nu = random_measure(rng, kind, space), random_measure(rng, kind, space)
        distance = measure_distance(mu, nu)
        assert sampled_agreement(mu, nu, distance + Fraction(1, 8), samples=1000, seed=trial)
        if distance > 0:
            phi = separating_function(mu, nu, distance)
            assert phi is not None and is_r_constant(phi, distance)
            assert evaluate(mu, phi) != evaluate(nu, phi)


def test_sampled_functions_separate_at_every_threshold_up_to_the_distance():
    rng = np.random.default_rng(15)
    for trial in range(60):
        kind = MeasureKind.MAXMIN if trial % 2 == 0 else MeasureKind.MAXPLUS
        space = random_ultrametric_space(rng, max_size=4)
        mu, nu = random_measure(rng, kind, space), random_measure(rng, kind, space)
        distance = measure_distance(mu, nu)
        for radius in (value for value in space.distinct_distances() if 0 < value <= distance):
            assert not sampled_agreement(mu, nu, radius, samples=1000, seed=trial), \
                f"No sampled F_{radius} function separates measures at distance {distance}"


def test_separating_function(abc_space):
    mu, nu = maxmin(abc_space, a="inf", c=5), maxmin(abc_space, b="inf", c=5)
    assert separating_function(mu, nu, 2) is None, "Above d̂ = 1 nothing separates"
    phi = separating_function(mu, nu, 1)
    assert evaluate(mu, phi) != evaluate(nu, phi)


@settings(max_examples=25, deadline=None)
@given(st.data())
def test_functional_equality_oracle(data):
    space = data.draw(ultrametric_spaces(max_size=3))
    kind = data.draw(kinds)
    mu = data.draw(measures_on(kind, space, max_atoms=2))
    nu = data.draw(measures_on(kind, space, max_atoms=2))
    witness = functional_equality_oracle(mu, nu)
    if mu == nu:
        assert witness is None
    else:
        assert witness is not None and evaluate(mu, witness) != evaluate(nu, witness), \
            "Distinct canonical measures must differ as functionals"


@pytest.mark.parametrize("kind", list(MeasureKind))
def test_pushforward_is_nonexpanding(kind):
    rng = np.random.default_rng(6)
    for _ in range(300):
        space = random_ultrametric_space(rng)
        f = random_retraction(rng, space)
        mu, nu = random_measure(rng, kind, space), random_measure(rng, kind, space)
        assert measure_distance(pushforward(f, mu), pushforward(f, nu)) <= measure_distance(mu, nu)


@pytest.mark.parametrize("kind", list(MeasureKind))
def test_functor_is_locally_nonexpanding(kind):
    rng = np.random.default_rng(7)
    for _ in range(300):
        space = random_ultrametric_space(rng)
        f, g = random_retraction(rng, space), random_retraction(rng, space)
        mu = random_measure(rng, kind, space)
        assert measure_distance(pushforward(f, mu), pushforward(g, mu)) <= sup_distance(f, g)
