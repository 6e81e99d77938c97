import math
from fractions import Fraction

import numpy as np
import pytest

from ultramonad.core.errors import InexactBijection, KindMismatch, MalformedInput, WeightOutOfRange
from ultramonad.core.extended_reals import NEG_INF, POS_INF, ExtReal
from ultramonad.core.measures.measure_distance import measure_distance
from ultramonad.core.measures.measure_kind import MeasureKind
from ultramonad.core.measures.pushforward import pushforward
from ultramonad.core.monad_ops.non_isomorphism import float_witness, non_isomorphism_witness
from ultramonad.core.monad_ops.order_bijection import (
    DEFAULT_ORDER_BIJECTION,
    ConversionDirection,
    NegativeLogBijection,
    PiecewiseRationalBijection,
    convert,
    sample_order_bijection,
)
from ultramonad.core.sampling.random_objects import random_measure, random_retraction, random_ultrametric_space
from ultramonad.tests.builders import maxmin, maxplus


def test_default_bijection_values():
    alpha = DEFAULT_ORDER_BIJECTION
    assert alpha.forward(ExtReal(-1)) == ExtReal(0)
    assert alpha.forward(ExtReal(-3)) == ExtReal(-2)
    assert alpha.forward(ExtReal(Fraction(-1, 2))) == ExtReal(1)
    assert alpha.forward(ExtReal(0)) == POS_INF
    assert alpha.forward(NEG_INF) == NEG_INF

    for t in [NEG_INF, ExtReal(-7), ExtReal(-1), ExtReal(Fraction(-1, 3)), ExtReal(0)]:
        assert alpha.inverse(alpha.forward(t)) == t, f"α⁻¹(α({t})) != {t}"

    with pytest.raises(WeightOutOfRange):
        alpha.forward(ExtReal(1))


def test_sampled_bijections_are_strictly_increasing():
    rng = np.random.default_rng(9)
    grid = [NEG_INF] + [ExtReal(Fraction(k, 4)) for k in range(-16, 1)]
    for _ in range(20):
        alpha = sample_order_bijection(rng)
        images = [alpha.forward(t) for t in grid]
        assert images == sorted(set(images)), f"{alpha.name} is not strictly increasing"
        assert all(alpha.inverse(image) == t for t, image in zip(grid, images))


def test_bijection_parameters_are_checked():
    with pytest.raises(MalformedInput):
        PiecewiseRationalBijection(pivot=Fraction(1))
    with pytest.raises(MalformedInput):
        PiecewiseRationalBijection(scale=Fraction(0))


def test_convert_examples(abc_space):
    assert convert(maxplus(abc_space, a=-1, b=0)) == maxmin(abc_space, a=0, b="inf")
    assert convert(maxplus(abc_space, a=-3, b=0)) == maxmin(abc_space, a=-2, b="inf")
    back = convert(maxmin(abc_space, a=-2, b="inf"), direction=ConversionDirection.TO_MAXPLUS)
    assert back == maxplus(abc_space, a=-3, b=0)

    with pytest.raises(KindMismatch):
        convert(maxmin(abc_space, a="inf"))
    with pytest.raises(KindMismatch):
        convert(maxplus(abc_space, a=0), direction=ConversionDirection.TO_MAXPLUS)
    with pytest.raises(InexactBijection):
        convert(maxplus(abc_space, a=0), NegativeLogBijection())


def test_conversion_is_an_isometry():
    rng = np.random.default_rng(10)
    alphas = [DEFAULT_ORDER_BIJECTION] + [sample_order_bijection(rng) for _ in range(4)]
    for _ in range(200):
        space = random_ultrametric_space(rng)
        mu = random_measure(rng, MeasureKind.MAXPLUS, space)
        nu = random_measure(rng, MeasureKind.MAXPLUS, space)
        for alpha in alphas:
            assert measure_distance(convert(mu, alpha), convert(nu, alpha)) == measure_distance(mu, nu), \
                f"{alpha.name} changed d̂({mu}, {nu})"
            assert convert(convert(mu, alpha), alpha, ConversionDirection.TO_MAXPLUS) == mu


def test_conversion_is_natural():
    rng = np.random.default_rng(11)
    for _ in range(200):
        space = random_ultrametric_space(rng)
        f = random_retraction(rng, space)
        mu = random_measure(rng, MeasureKind.MAXPLUS, space)
        assert pushforward(f, convert(mu)) == convert(pushforward(f, mu))


def test_non_isomorphism_witness():
    witness = non_isomorphism_witness()
    space = witness.side1.space
    assert witness.side1 == maxmin(space, a=-2, b=0, c="inf")
    assert witness.side2 == maxmin(space, a=-1, b=0, c="inf")
    assert witness.distance == 1


def test_non_isomorphism_for_sampled_bijections():
    rng = np.random.default_rng(12)
    for _ in range(20):
        alpha = sample_order_bijection(rng)
        witness = non_isomorphism_witness(alpha)
        assert witness.distance > 0, f"{alpha.name} made the square commute"
        assert witness.side1.weight_of("a") == alpha.forward(ExtReal(-3))
        assert witness.side2.weight_of("a") == alpha.forward(ExtReal(-2))


def test_float_witness_for_log_bijection():
    report = float_witness(NegativeLogBijection())
    assert report["side1"]["c"] == math.inf
    assert math.isclose(report["difference_at_a"], math.log(3) - math.log(2))
    assert math.isclose(report["side1"]["a"], -math.log(3))
    assert math.isclose(report["side2"]["a"], -math.log(2))
