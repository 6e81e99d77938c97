from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from ultramonad.core.budgets import Budgets
from ultramonad.core.errors import (
    BudgetExceeded,
    InvalidPointMap,
    MalformedInput,
    MismatchedSpaces,
    NonpositiveOffDiagonal,
    NonpositiveRadius,
    NonzeroDiagonal,
    NotSquare,
    NotSymmetric,
    StrongTriangleViolation,
    UnknownPoint,
)
from ultramonad.core.ultra_core.ball_partition import ball_partition, quotient
from ultramonad.core.ultra_core.hyperspace import FiniteSubset, hausdorff_distance, singleton, union
from ultramonad.core.ultra_core.point_map import PointMap, check_nonexpanding, sup_distance
from ultramonad.core.ultra_core.product_space import product, product_map, projection
from ultramonad.core.ultra_core.ultrametric_space import FinUltrametricSpace, validate_ultrametric
from ultramonad.tests.strategies import radii_for, ultrametric_spaces


def test_validate_ultrametric(abc_space):
    assert abc_space.points == ("a", "b", "c")
    assert abc_space.distance("a", "b") == 1
    assert abc_space.distance("c", "b") == 2
    assert abc_space.diameter == 2

    single = validate_ultrametric(["o"], [["0"]])
    assert single.size == 1 and single.diameter == 0, "Did not accept the one-point space"

    with pytest.raises(StrongTriangleViolation) as exc_info:
        validate_ultrametric(["a", "b", "c"], [["0", "1", "2"], ["1", "0", "3"], ["2", "3", "0"]])
    assert exc_info.value.details == {"i": 1, "j": 2, "k": 0}, "Did not report the first violation in row-major order"

    with pytest.raises(NotSymmetric):
        validate_ultrametric(["a", "b"], [["0", "1"], ["2", "0"]])
    with pytest.raises(NonzeroDiagonal):
        validate_ultrametric(["a"], [["1"]])
    with pytest.raises(NonpositiveOffDiagonal):
        validate_ultrametric(["a", "b"], [["0", "0"], ["0", "0"]])
    with pytest.raises(NotSquare):
        validate_ultrametric(["a", "b"], [["0", "1"]])
    with pytest.raises(MalformedInput):
        validate_ultrametric(["a", "a"], [["0", "1"], ["1", "0"]])


def test_space_is_immutable(abc_space):
    with pytest.raises(Exception):
        abc_space.points = ("x",)
    with pytest.raises(UnknownPoint):
        abc_space.index_of("z")


def test_ball_partition(abc_space):
    assert ball_partition(abc_space, "3/2").blocks == (("a", "b"), ("c",))
    assert ball_partition(abc_space, "1/2").blocks == (("a",), ("b",), ("c",))
    assert ball_partition(abc_space, "5/2").blocks == (("a", "b", "c"),)
    # open balls: d(a, b) = 1 is not < 1
    assert ball_partition(abc_space, 1).blocks == (("a",), ("b",), ("c",))

    for bad_radius in [0, "-1"]:
        with pytest.raises(NonpositiveRadius):
            ball_partition(abc_space, bad_radius)


def test_quotient(abc_space):
    quotient_space, q_r = quotient(abc_space, "3/2")
    assert quotient_space.points == ("a|b", "c")
    assert quotient_space.distance("a|b", "c") == 2
    assert q_r("a") == q_r("b") == "a|b"
    assert check_nonexpanding(q_r)

    identity_copy, _ = quotient(abc_space, "1/2")
    assert identity_copy.points == abc_space.points and identity_copy.dist == abc_space.dist

    collapsed, _ = quotient(abc_space, 3)
    assert collapsed.points == ("a|b|c",)


def test_product(uv_space, point_space, abc_space):
    square = product([uv_space, uv_space])
    assert square.points == ("(u,u)", "(u,v)", "(v,u)", "(v,v)")
    assert square.distance("(u,u)", "(v,v)") == 1
    assert square.distance("(u,u)", "(u,v)") == 1
    assert square.coordinates_of("(v,u)") == ("v", "u")

    with_point = product([abc_space, point_space])
    assert with_point.dist == abc_space.dist, "X × 1 must be isometric to X"

    with pytest.raises(BudgetExceeded):
        product([abc_space, abc_space], Budgets(product_points=5))
    with pytest.raises(MalformedInput):
        product([])


def test_product_rejects_colliding_tuple_labels():
    left = validate_ultrametric(["a", "a,b"], [["0", "1"], ["1", "0"]])
    right = validate_ultrametric(["b,c", "c"], [["0", "1"], ["1", "0"]])
    # ("a", "b,c") and ("a,b", "c") would both be "(a,b,c)"
    with pytest.raises(MalformedInput):
        product([left, right])

    commas_only_on_one_side = product([left, validate_ultrametric(["c"], [["0"]])])
    assert commas_only_on_one_side.points == ("(a,c)", "(a,b,c)")
    assert commas_only_on_one_side.coordinates_of("(a,b,c)") == ("a,b", "c")


def test_product_map_and_projections(abc_space):
    quotient_space, q_r = quotient(abc_space, "3/2")
    q_squared = product_map([q_r, q_r])
    assert q_squared("(a,c)") == "(a|b,c)"
    assert check_nonexpanding(q_squared)

    square = product([abc_space, abc_space])
    assert projection(square, [abc_space, abc_space], 1)("(b,c)") == "c"
    with pytest.raises(MismatchedSpaces):
        projection(abc_space, [abc_space, abc_space], 0)


def test_check_nonexpanding(abc_space):
    assert check_nonexpanding(PointMap.identity(abc_space))
    assert check_nonexpanding(PointMap.constant(abc_space, abc_space, "c"))
    expanding = PointMap(source=abc_space, target=abc_space, assignment={"a": "a", "b": "c", "c": "c"})
    assert not check_nonexpanding(expanding), "b ↦ c doubles d(a, b)"


def test_sup_distance(abc_space, uv_space):
    identity = PointMap.identity(abc_space)
    assert sup_distance(identity, identity) == 0
    assert sup_distance(PointMap.constant(abc_space, abc_space, "a"), PointMap.constant(abc_space, abc_space, "c")) == 2
    swap = PointMap(source=abc_space, target=abc_space, assignment={"a": "b", "b": "a", "c": "c"})
    assert sup_distance(identity, swap) == 1

    with pytest.raises(MismatchedSpaces):
        sup_distance(identity, PointMap.constant(abc_space, uv_space, "u"))


def test_point_map_validation(abc_space, uv_space):
    with pytest.raises(InvalidPointMap):
        PointMap(source=abc_space, target=uv_space, assignment={"a": "u", "b": "u"})
    with pytest.raises(InvalidPointMap):
        PointMap(source=abc_space, target=uv_space, assignment={"a": "u", "b": "u", "c": "w"})
    composed = PointMap.constant(abc_space, uv_space, "v").then(PointMap.identity(uv_space))
    assert composed("a") == "v"


def test_hausdorff_distance(abc_space, uv_space):
    assert hausdorff_distance(FiniteSubset.of(abc_space, ["a"]), FiniteSubset.of(abc_space, ["b"])) == 1
    assert hausdorff_distance(FiniteSubset.of(abc_space, ["a", "b"]), FiniteSubset.of(abc_space, ["a"])) == 1
    everything = FiniteSubset.of(abc_space, abc_space.points)
    assert hausdorff_distance(everything, everything) == 0

    with pytest.raises(MismatchedSpaces):
        hausdorff_distance(everything, FiniteSubset.of(uv_space, ["u"]))
    with pytest.raises(MalformedInput):
        FiniteSubset.of(abc_space, [])


def test_hyperspace_monad_maps(abc_space):
    assert singleton(abc_space, "b").members == frozenset({"b"})
    merged = union([FiniteSubset.of(abc_space, ["a", "b"]), FiniteSubset.of(abc_space, ["b", "c"])])
    assert merged.sorted_members == ["a", "b", "c"]


@given(st.data())
def test_partition_blocks_are_equivalence_classes(data):
    space = data.draw(ultrametric_spaces())
    radius = data.draw(radii_for(space))
    block_of = ball_partition(space, radius).block_index()
    for x in space.points:
        for y in space.points:
            if block_of[x] == block_of[y]:
                assert space.distance(x, y) < radius, f"{x}, {y} share a block at distance ≥ {radius}"
            else:
                assert space.distance(x, y) >= radius, f"{x}, {y} are split at distance < {radius}"


@given(st.data())
def test_quotient_is_well_defined(data):
    space = data.draw(ultrametric_spaces())
    radius = data.draw(radii_for(space))
    partition = ball_partition(space, radius)
    quotient_space, q_r = quotient(space, radius)

    for left in partition.blocks:
        for right in partition.blocks:
            if left == right:
                continue
            assert len({space.distance(x, y) for x in left for y in right}) == 1, \
                "Representative distance between two blocks must not depend on the representatives"
    FinUltrametricSpace(points=quotient_space.points, dist=quotient_space.dist)
    assert check_nonexpanding(q_r)


@settings(max_examples=40)
@given(ultrametric_spaces(max_size=4), ultrametric_spaces(max_size=3))
def test_product_is_ultrametric(left, right):
    square = product([left, right])
    FinUltrametricSpace(points=square.points, dist=square.dist)
    assert check_nonexpanding(projection(square, [left, right], 0))
    assert check_nonexpanding(projection(square, [left, right], 1))


@given(st.data())
def test_monotone_coarsening(data):
    space = data.draw(ultrametric_spaces())
    small = data.draw(radii_for(space))
    large = small + data.draw(st.sampled_from([Fraction(0), Fraction(1, 2), Fraction(3)]))
    coarse_blocks = [set(block) for block in ball_partition(space, large).blocks]
    for block in ball_partition(space, small).blocks:
        assert any(set(block) <= coarse for coarse in coarse_blocks), f"{block} is split at the larger radius"


@given(st.data())
def test_hausdorff_strong_triangle(data):
    space = data.draw(ultrametric_spaces(min_size=2))
    subsets = [FiniteSubset.of(space, data.draw(st.lists(st.sampled_from(space.points), min_size=1, unique=True)))
               for _ in range(3)]
    a, b, c = subsets
    assert hausdorff_distance(a, c) <= max(hausdorff_distance(a, b), hausdorff_distance(b, c))
    assert hausdorff_distance(a, b) == hausdorff_distance(b, a)
