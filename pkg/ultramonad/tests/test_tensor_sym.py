import numpy as np
import pytest

from ultramonad.core.budgets import Budgets
from ultramonad.core.errors import (
    ArityMismatch,
    BudgetExceeded,
    GroupBudgetExceeded,
    InvalidPermutation,
    KindMismatch,
    MalformedInput,
    MismatchedSpaces,
    MixedKinds,
)
from ultramonad.core.extended_reals import POS_INF, ExtReal
from ultramonad.core.measures.measure import canonicalize, dirac
from ultramonad.core.measures.measure_distance import measure_distance
from ultramonad.core.measures.measure_kind import MeasureKind
from ultramonad.core.measures.pushforward import pushforward
from ultramonad.core.sampling.random_objects import (
    random_measure,
    random_point_tuple,
    random_radius,
    random_ultrametric_space,
)
from ultramonad.core.tensor_sym.bottleneck_matching import bottleneck_assignment
from ultramonad.core.tensor_sym.kleisli_extension import check_kleisli_extension, unit_condition
from ultramonad.core.tensor_sym.permutation_group import group_closure, symmetric_group, trivial_group
from ultramonad.core.tensor_sym.symmetric_power import (
    bottleneck_cost,
    orbit_point,
    sympow_distance,
    sympow_space,
)
from ultramonad.core.tensor_sym.tensor import tensor, tensor_all
from ultramonad.core.tensor_sym.theta import theta
from ultramonad.core.ultra_core.ball_partition import quotient
from ultramonad.core.ultra_core.point_map import check_nonexpanding
from ultramonad.core.ultra_core.product_space import product, product_map, projection
from ultramonad.core.ultra_core.ultrametric_space import validate_ultrametric
from ultramonad.tests.builders import maxmin, maxplus


def test_tensor_example(abc_space, uv_space):
    product_measure = tensor(maxmin(abc_space, a="inf", b=2), maxmin(uv_space, u="inf"))
    assert product_measure.space == product([abc_space, uv_space])
    assert product_measure.weights == {"(a,u)": POS_INF, "(b,u)": ExtReal(2)}


def test_tensor_maxplus_adds_weights(uv_space):
    product_measure = tensor(maxplus(uv_space, u=0, v=-1), maxplus(uv_space, u=-2, v=0))
    assert product_measure.weight_of("(v,u)").fraction == -3
    assert product_measure.weight_of("(u,v)").fraction == 0


def test_tensor_errors(abc_space):
    with pytest.raises(MixedKinds):
        tensor(maxmin(abc_space, a="inf"), maxplus(abc_space, a=0))
    with pytest.raises(BudgetExceeded):
        tensor(maxmin(abc_space, a="inf"), maxmin(abc_space, a="inf"), Budgets(product_points=5))


def test_tensor_keeps_atoms_apart_or_refuses_ambiguous_labels():
    left = validate_ultrametric(["a", "a,b"], [["0", "1"], ["1", "0"]])
    right = validate_ultrametric(["b,c", "c"], [["0", "1"], ["1", "0"]])
    mu = canonicalize(MeasureKind.MAXMIN, left, [("a", "inf"), ("a,b", "inf")])
    nu = canonicalize(MeasureKind.MAXMIN, right, [("b,c", "inf"), ("c", 1)])
    with pytest.raises(MalformedInput):
        tensor(mu, nu)

    plain = validate_ultrametric(["c", "d"], [["0", "1"], ["1", "0"]])
    product_measure = tensor(mu, maxmin(plain, c="inf", d=1))
    assert len(product_measure.atoms) == 4
    assert product_measure.weight_of("(a,b,d)") == ExtReal(1)
    first_marginal = pushforward(projection(product_measure.space, [left, plain], 0), product_measure)
    assert first_marginal == mu


def test_tensor_of_three_factors(abc_space, uv_space):
    factors = [maxmin(abc_space, a="inf", b=2), maxmin(uv_space, u="inf"), maxmin(uv_space, u="inf", v=1)]
    product_measure = tensor_all(factors)
    assert product_measure.space == product([abc_space, uv_space, uv_space])
    assert product_measure.weight_of("(a,u,u)") == POS_INF
    assert product_measure.weight_of("(b,u,v)") == ExtReal(1)
    assert len(product_measure.atoms) == 4
    with pytest.raises(MalformedInput):
        tensor_all([])


@pytest.mark.parametrize("kind", list(MeasureKind))
def test_tensor_is_nonexpanding(kind):
    rng = np.random.default_rng(16)
    for _ in range(300):
        left, right = random_ultrametric_space(rng), random_ultrametric_space(rng)
        mu, mu_prime = random_measure(rng, kind, left), random_measure(rng, kind, left)
        nu, nu_prime = random_measure(rng, kind, right), random_measure(rng, kind, right)
        assert measure_distance(tensor(mu, nu), tensor(mu_prime, nu_prime)) \
            <= max(measure_distance(mu, mu_prime), measure_distance(nu, nu_prime))


@pytest.mark.parametrize("kind", list(MeasureKind))
def test_tensor_marginals(kind):
    rng = np.random.default_rng(17)
    for _ in range(200):
        left, right = random_ultrametric_space(rng), random_ultrametric_space(rng)
        mu, nu = random_measure(rng, kind, left), random_measure(rng, kind, right)
        product_measure = tensor(mu, nu)
        assert pushforward(projection(product_measure.space, [left, right], 0), product_measure) == mu
        assert pushforward(projection(product_measure.space, [left, right], 1), product_measure) == nu


def test_tensor_commutes_with_quotients():
    rng = np.random.default_rng(18)
    for _ in range(100):
        kind = MeasureKind.MAXMIN if rng.integers(2) else MeasureKind.MAXPLUS
        left, right = random_ultrametric_space(rng, max_size=4), random_ultrametric_space(rng, max_size=4)
        mu, nu = random_measure(rng, kind, left), random_measure(rng, kind, right)
        radius = random_radius(rng, left)
        _, q_left = quotient(left, radius)
        _, q_right = quotient(right, radius)
        assert pushforward(product_map([q_left, q_right]), tensor(mu, nu)) \
            == tensor(pushforward(q_left, mu), pushforward(q_right, nu))


def test_group_closure():
    assert group_closure(3, [[2, 1, 3]]).order == 2
    assert group_closure(3, [[2, 1, 3], [1, 3, 2]]).order == 6
    assert group_closure(3, []).order == 1
    assert symmetric_group(4).order == 24

    with pytest.raises(InvalidPermutation):
        group_closure(3, [[1, 1, 3]])
    with pytest.raises(InvalidPermutation):
        group_closure(3, [[1, 2]])
    with pytest.raises(InvalidPermutation):
        group_closure(2, [[2, "1"]])
    with pytest.raises(GroupBudgetExceeded):
        symmetric_group(7)


def test_sympow_distance(abc_space):
    s2 = symmetric_group(2)
    assert sympow_distance(abc_space, s2, orbit_point(abc_space, s2, ["a", "b"]),
                           orbit_point(abc_space, s2, ["b", "a"])) == 0
    assert sympow_distance(abc_space, s2, orbit_point(abc_space, s2, ["a", "c"]),
                           orbit_point(abc_space, s2, ["b", "c"])) == 1

    trivial = trivial_group(2)
    assert sympow_distance(abc_space, trivial, orbit_point(abc_space, trivial, ["a", "c"]),
                           orbit_point(abc_space, trivial, ["c", "a"])) == 2

    with pytest.raises(ArityMismatch):
        orbit_point(abc_space, s2, ["a"])
    with pytest.raises(GroupBudgetExceeded):
        sympow_distance(abc_space, s2, orbit_point(abc_space, s2, ["a", "b"]),
                        orbit_point(abc_space, s2, ["a", "b"]), Budgets(group_order=1))


def test_orbit_representative_is_least_tuple(abc_space):
    s3 = symmetric_group(3)
    orbit = orbit_point(abc_space, s3, ["c", "a", "b"])
    assert orbit.representative == ("a", "b", "c")
    assert orbit.label == "[a,b,c]"
    assert orbit == orbit_point(abc_space, s3, ["b", "c", "a"])


def test_sympow_space(uv_space, abc_space):
    orbit_space, pi_g = sympow_space(uv_space, symmetric_group(2))
    assert orbit_space.points == ("[u,u]", "[u,v]", "[v,v]")
    assert pi_g("(v,u)") == "[u,v]"
    assert check_nonexpanding(pi_g)

    trivial_space, _ = sympow_space(abc_space, trivial_group(2))
    square = product([abc_space, abc_space])
    assert trivial_space.dist == square.dist, "The trivial group must give back the product metric"

    cyclic_space, pi_cyclic = sympow_space(abc_space, group_closure(3, [[2, 3, 1]]))
    assert cyclic_space.size == 11
    assert check_nonexpanding(pi_cyclic)


def test_sympow_space_rejects_colliding_orbit_labels():
    flat = [["0", "1", "1", "1"], ["1", "0", "1", "1"], ["1", "1", "0", "1"], ["1", "1", "1", "0"]]
    space = validate_ultrametric(["a", "a,b", "b,c", "c"], flat)
    with pytest.raises(MalformedInput):
        sympow_space(space, symmetric_group(2))


def test_sympow_distance_matches_bottleneck_assignment():
    rng = np.random.default_rng(19)
    for n in (2, 3, 4):
        group = symmetric_group(n)
        for _ in range(50):
            space = random_ultrametric_space(rng)
            x, y = random_point_tuple(rng, space, n), random_point_tuple(rng, space, n)
            cost = [[space.distance(left, right) for right in y] for left in x]
            assert bottleneck_cost(space, group, x, y) == bottleneck_assignment(cost), f"{x} vs {y}"


def test_theta_of_diracs(abc_space):
    group = symmetric_group(2)
    orbit_space, _ = sympow_space(abc_space, group)
    lifted = theta(group, [dirac(MeasureKind.MAXMIN, abc_space, "c"), dirac(MeasureKind.MAXMIN, abc_space, "a")])
    assert lifted == dirac(MeasureKind.MAXMIN, orbit_space, "[a,c]")


def test_theta_is_permutation_invariant():
    rng = np.random.default_rng(20)
    group = symmetric_group(3)
    for _ in range(30):
        space = random_ultrametric_space(rng, max_size=4)
        measures = [random_measure(rng, MeasureKind.MAXMIN, space) for _ in range(3)]
        expected = theta(group, measures)
        assert max(expected.weights.values()).is_pos_inf, "θ output must be normalized"
        for sigma in group.elements:
            assert theta(group, list(group.act(sigma, measures))) == expected


def test_theta_is_nonexpanding():
    rng = np.random.default_rng(21)
    for n, group in ((2, symmetric_group(2)), (3, group_closure(3, [[2, 1, 3]]))):
        for _ in range(40):
            space = random_ultrametric_space(rng, max_size=4)
            mus = [random_measure(rng, MeasureKind.MAXMIN, space) for _ in range(n)]
            nus = [random_measure(rng, MeasureKind.MAXMIN, space) for _ in range(n)]
            assert measure_distance(theta(group, mus), theta(group, nus)) \
                <= max(measure_distance(mu, nu) for mu, nu in zip(mus, nus))


def test_theta_in_arity_one(abc_space):
    mu = maxmin(abc_space, a="inf", c="1/2")
    lifted = theta(trivial_group(1), [mu])
    assert {label: weight for label, weight in lifted.atoms} == {"[a]": mu.weight_of("a"), "[c]": mu.weight_of("c")}


def test_theta_errors(abc_space, uv_space):
    group = symmetric_group(2)
    with pytest.raises(ArityMismatch):
        theta(group, [maxmin(abc_space, a="inf")])
    with pytest.raises(KindMismatch):
        theta(group, [maxplus(abc_space, a=0), maxplus(abc_space, b=0)])
    with pytest.raises(MixedKinds):
        theta(group, [maxmin(abc_space, a="inf"), maxplus(abc_space, b=0)])
    with pytest.raises(MismatchedSpaces):
        theta(group, [maxmin(abc_space, a="inf"), maxmin(uv_space, u="inf")])


def test_unit_condition_is_exhaustive(abc_space):
    result = unit_condition(abc_space, symmetric_group(2))
    assert result.passed
    assert result.trials == 9


@pytest.mark.parametrize("n, generators", [
    (2, [[2, 1]]),
    (3, [[2, 1, 3], [1, 3, 2]]),
    (3, [[2, 1, 3]]),
])
def test_kleisli_extension_conditions(n, generators):
    group = group_closure(n, generators)
    report = check_kleisli_extension(group, trials=100, seed=n)
    assert report.all_passed, report.to_dict()
    assert report.laws["multiplication_condition"].trials == 100


def test_kleisli_extension_report_is_deterministic(abc_space):
    group = symmetric_group(2)
    first = check_kleisli_extension(group, abc_space, trials=10, seed=5)
    threaded = check_kleisli_extension(group, abc_space, trials=10, seed=5, workers=3)
    assert first.to_dict() == threaded.to_dict()
