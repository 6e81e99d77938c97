"""One handler per subcommand: parse the inputs, run the core operation, return a JSON-ready payload."""
import argparse
import logging
from pathlib import Path
from typing import Any, Callable

from ultramonad.cli.cli_config import CliConfig
from ultramonad.cli.json_codec import (
    display_float,
    group_from_json,
    group_to_json,
    kleisli_map_from_json,
    kleisli_map_to_json,
    labels_from_json,
    measure_from_json,
    measure_of_measures_from_json,
    measure_to_json,
    point_map_from_json,
    read_json,
    scalar_function_from_json,
    space_from_json,
    subset_from_json,
    weights_to_json,
)
from ultramonad.core.errors import MalformedInput
from ultramonad.core.extended_reals import format_rational
from ultramonad.core.measures.evaluation import evaluate, support
from ultramonad.core.measures.measure import Measure
from ultramonad.core.measures.measure_distance import measure_distance
from ultramonad.core.measures.measure_kind import MeasureKind
from ultramonad.core.measures.pushforward import pushforward
from ultramonad.core.monad_ops.kleisli import kleisli_compose
from ultramonad.core.monad_ops.monad_laws import check_monad_laws
from ultramonad.core.monad_ops.monad_structure import multiply
from ultramonad.core.monad_ops.non_isomorphism import float_witness, non_isomorphism_witness
from ultramonad.core.monad_ops.order_bijection import (
    DEFAULT_ORDER_BIJECTION,
    ConversionDirection,
    NegativeLogBijection,
    convert,
)
from ultramonad.core.monad_ops.support_morphism import support_morphism_check
from ultramonad.core.tensor_sym.kleisli_extension import check_kleisli_extension
from ultramonad.core.tensor_sym.symmetric_power import orbit_point, sympow_distance
from ultramonad.core.tensor_sym.tensor import tensor_all
from ultramonad.core.tensor_sym.theta import theta
from ultramonad.core.ultra_core.hyperspace import hausdorff_distance
from ultramonad.core.ultra_core.ultrametric_space import FinUltrametricSpace

logger = logging.getLogger(__name__)

Handler = Callable[[argparse.Namespace, CliConfig], dict[str, Any]]


def _space_option(path: str | None) -> FinUltrametricSpace | None:
    return space_from_json(read_json(path)) if path is not None else None


def _base_dir(path: str) -> Path | None:
    return Path(path).parent if not path.lstrip().startswith(("[", "{")) else None


def _measure(path: str, space: FinUltrametricSpace | None) -> Measure:
    return measure_from_json(read_json(path), space, _base_dir(path))


def _support_labels(mu: Measure) -> list[str]:
    return support(mu).sorted_members


def validate_command(args: argparse.Namespace, config: CliConfig) -> dict[str, Any]:
    space = space_from_json(read_json(args.space))
    return {"valid": True, "size": space.size, "diameter": format_rational(space.diameter)}


def dist_command(args: argparse.Namespace, config: CliConfig) -> dict[str, Any]:
    space = space_from_json(read_json(args.space))
    return {"distance": format_rational(measure_distance(_measure(args.mu, space), _measure(args.nu, space)))}


def eval_command(args: argparse.Namespace, config: CliConfig) -> dict[str, Any]:
    space = space_from_json(read_json(args.space))
    mu = _measure(args.mu, space)
    return {"value": str(evaluate(mu, scalar_function_from_json(read_json(args.function), space)))}


def push_command(args: argparse.Namespace, config: CliConfig) -> dict[str, Any]:
    f = point_map_from_json(read_json(args.map), _base_dir(args.map))
    return measure_to_json(pushforward(f, _measure(args.mu, f.source)))


def flatten_command(args: argparse.Namespace, config: CliConfig) -> dict[str, Any]:
    big_m = measure_of_measures_from_json(read_json(args.measures), _space_option(args.space), _base_dir(args.measures))
    return measure_to_json(multiply(big_m))


def compose_command(args: argparse.Namespace, config: CliConfig) -> dict[str, Any]:
    f = kleisli_map_from_json(read_json(args.f), _base_dir(args.f))
    g = kleisli_map_from_json(read_json(args.g), _base_dir(args.g))
    return kleisli_map_to_json(kleisli_compose(f, g))


def convert_command(args: argparse.Namespace, config: CliConfig) -> dict[str, Any]:
    mu = _measure(args.mu, _space_option(args.space))
    if args.direction is not None:
        direction = ConversionDirection(args.direction)
    elif mu.kind is MeasureKind.MAXPLUS:
        direction = ConversionDirection.TO_MAXMIN
    else:
        direction = ConversionDirection.TO_MAXPLUS
    if config.alpha == "log":
        if direction is not ConversionDirection.TO_MAXMIN:
            raise MalformedInput("The -ln(-t) display mode only converts max-plus measures to max-min")
        alpha = NegativeLogBijection()
        return {"kind": MeasureKind.MAXMIN.value, "alpha": alpha.name,
                "display_weights": {point: display_float(alpha.forward_float(weight.to_float()))
                                    for point, weight in mu.atoms}}
    return measure_to_json(convert(mu, DEFAULT_ORDER_BIJECTION, direction))


def tensor_command(args: argparse.Namespace, config: CliConfig) -> dict[str, Any]:
    space = _space_option(args.space)
    product_measure = tensor_all([_measure(path, space) for path in args.measures], config.budgets)
    return measure_to_json(product_measure, include_space=True)


def sympow_dist_command(args: argparse.Namespace, config: CliConfig) -> dict[str, Any]:
    space = space_from_json(read_json(args.space))
    group = group_from_json(read_json(args.group), config.budgets)
    x = orbit_point(space, group, labels_from_json(read_json(args.x)))
    y = orbit_point(space, group, labels_from_json(read_json(args.y)))
    return {"distance": format_rational(sympow_distance(space, group, x, y, config.budgets))}


def theta_command(args: argparse.Namespace, config: CliConfig) -> dict[str, Any]:
    space = space_from_json(read_json(args.space))
    group = group_from_json(read_json(args.group), config.budgets)
    return measure_to_json(theta(group, [_measure(path, space) for path in args.measures], config.budgets),
                           include_space=True)


def support_command(args: argparse.Namespace, config: CliConfig) -> dict[str, Any]:
    space = _space_option(args.space)
    obj = read_json(args.input)
    if isinstance(obj, dict) and "outer" in obj:
        big_m = measure_of_measures_from_json(obj, space, _base_dir(args.input))
        return {"support": _support_labels(multiply(big_m)), "support_morphism": support_morphism_check(big_m)}
    return {"support": _support_labels(measure_from_json(obj, space, _base_dir(args.input)))}


def hausdorff_command(args: argparse.Namespace, config: CliConfig) -> dict[str, Any]:
    space = space_from_json(read_json(args.space))
    a = subset_from_json(read_json(args.a), space)
    b = subset_from_json(read_json(args.b), space)
    return {"distance": format_rational(hausdorff_distance(a, b))}


def laws_command(args: argparse.Namespace, config: CliConfig) -> dict[str, Any]:
    report = check_monad_laws(MeasureKind(args.kind), _space_option(args.space),
                              trials=config.trials, seed=config.seed, workers=config.workers)
    return report.to_dict()


def kleisli_check_command(args: argparse.Namespace, config: CliConfig) -> dict[str, Any]:
    group = group_from_json(read_json(args.group), config.budgets)
    report = check_kleisli_extension(group, _space_option(args.space), trials=config.trials, seed=config.seed,
                                     budgets=config.budgets, workers=config.workers)
    return {"group": group_to_json(group), **report.to_dict()}


def witness_noniso_command(args: argparse.Namespace, config: CliConfig) -> dict[str, Any]:
    if config.alpha == "log":
        report = float_witness(NegativeLogBijection())
        return {"alpha": "log",
                "side1": {point: display_float(value) for point, value in report["side1"].items()},
                "side2": {point: display_float(value) for point, value in report["side2"].items()},
                "difference_at_a": display_float(report["difference_at_a"])}
    side1, side2, distance = non_isomorphism_witness(DEFAULT_ORDER_BIJECTION)
    return {"side1": weights_to_json(side1), "side2": weights_to_json(side2), "distance": format_rational(distance)}

