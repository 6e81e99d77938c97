import argparse
import logging
import sys
from pathlib import Path
from typing import Sequence

from ultramonad.cli import commands
from ultramonad.cli.cli_config import CliConfig, build_cli_config
from ultramonad.cli.json_codec import dump_json
from ultramonad.core.errors import MalformedInput, UltramonadError
from ultramonad.core.monad_ops.order_bijection import ConversionDirection
from ultramonad.system.logging_configuration.configure_logging import configure_logging
from ultramonad.system.logging_configuration.log_levels import LogLevels

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_DOMAIN_ERROR = 1
EXIT_USAGE_ERROR = 2


def _add_global_options(parser: argparse.ArgumentParser, default=None) -> None:
    # unset flags fall through to the config file
    parser.add_argument("--config", type=Path, default=default, help="TOML file with default settings")
    parser.add_argument("--seed", type=int, default=default)
    parser.add_argument("--trials", type=int, default=default)
    parser.add_argument("--alpha", choices=["default", "log"], default=default,
                        help="order bijection; `log` is -ln(-t), display only")
    parser.add_argument("--pretty", action="store_true", default=default, help="indent the JSON output")
    parser.add_argument("--budget-product", dest="product_points", type=int, default=default)
    parser.add_argument("--budget-group", dest="group_order", type=int, default=default)
    parser.add_argument("--log-level", dest="log_level", type=str.upper,
                        choices=[level.name for level in LogLevels], default=default)
    parser.add_argument("--log-file", dest="log_file", type=Path, default=default)
    parser.add_argument("--workers", type=int, default=default, help="threads for the law harnesses")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ultramonad",
        description="Exact max-min / max-plus measures on finite ultrametric spaces. All output is JSON.",
    )
    _add_global_options(parser)
    subparsers = parser.add_subparsers(dest="command", required=True)

    validate = subparsers.add_parser("validate", help="validate an ultrametric space")
    validate.add_argument("space")
    validate.set_defaults(handler=commands.validate_command)

    dist = subparsers.add_parser("dist", help="measure distance d̂(μ, ν)")
    dist.add_argument("space")
    dist.add_argument("mu")
    dist.add_argument("nu")
    dist.set_defaults(handler=commands.dist_command)

    evaluate = subparsers.add_parser("eval", help="evaluate μ(φ)")
    evaluate.add_argument("space")
    evaluate.add_argument("mu")
    evaluate.add_argument("function")
    evaluate.set_defaults(handler=commands.eval_command)

    push = subparsers.add_parser("push", help="pushforward J(f)(μ)")
    push.add_argument("map")
    push.add_argument("mu")
    push.set_defaults(handler=commands.push_command)

    flatten = subparsers.add_parser("flatten", help="multiplication of a measure of measures")
    flatten.add_argument("measures")
    flatten.add_argument("--space", default=None)
    flatten.set_defaults(handler=commands.flatten_command)

    compose = subparsers.add_parser("compose", help="Kleisli composition g ∗ f")
    compose.add_argument("f")
    compose.add_argument("g")
    compose.set_defaults(handler=commands.compose_command)

    convert = subparsers.add_parser("convert", help="convert between max-plus and max-min measures")
    convert.add_argument("mu")
    convert.add_argument("--space", default=None)
    convert.add_argument("--direction", choices=[direction.value for direction in ConversionDirection], default=None)
    convert.set_defaults(handler=commands.convert_command)

    tensor = subparsers.add_parser("tensor", help="tensor product of measures")
    tensor.add_argument("measures", nargs="+")
    tensor.add_argument("--space", default=None)
    tensor.set_defaults(handler=commands.tensor_command)

    sympow_dist = subparsers.add_parser("sympow-dist", help="distance between two orbit points of SP^n_G")
    sympow_dist.add_argument("space")
    sympow_dist.add_argument("group")
    sympow_dist.add_argument("x", help="label array, inline JSON or a file")
    sympow_dist.add_argument("y", help="label array, inline JSON or a file")
    sympow_dist.set_defaults(handler=commands.sympow_dist_command)

    theta = subparsers.add_parser("theta", help="θ[μ_1, …, μ_n] on SP^n_G")
    theta.add_argument("space")
    theta.add_argument("group")
    theta.add_argument("measures", nargs="+")
    theta.set_defaults(handler=commands.theta_command)

    support = subparsers.add_parser("support", help="support of a measure or of ξ(M), with the morphism check")
    support.add_argument("input")
    support.add_argument("--space", default=None)
    support.set_defaults(handler=commands.support_command)

    hausdorff = subparsers.add_parser("hausdorff", help="Hausdorff distance between two subsets")
    hausdorff.add_argument("space")
    hausdorff.add_argument("a")
    hausdorff.add_argument("b")
    hausdorff.set_defaults(handler=commands.hausdorff_command)

    laws = subparsers.add_parser("laws", help="randomized monad law report")
    laws.add_argument("--kind", choices=["maxmin", "maxplus"], required=True)
    laws.add_argument("--space", default=None)
    laws.set_defaults(handler=commands.laws_command)

    kleisli_check = subparsers.add_parser("kleisli-check", help="Kleisli extension conditions for SP^n_G")
    kleisli_check.add_argument("group")
    kleisli_check.add_argument("--space", default=None)
    kleisli_check.set_defaults(handler=commands.kleisli_check_command)

    witness = subparsers.add_parser("witness-noniso", help="the two legs of the non-isomorphism counterexample")
    witness.set_defaults(handler=commands.witness_noniso_command)

    # global options are accepted after the subcommand too; SUPPRESS keeps them from resetting earlier values
    for subparser in subparsers.choices.values():
        _add_global_options(subparser, default=argparse.SUPPRESS)
    return parser


def _config_from_args(args: argparse.Namespace) -> CliConfig:
    overrides = {key: getattr(args, key) for key in
                 ("seed", "trials", "alpha", "pretty", "log_level", "log_file", "workers",
                  "product_points", "group_order")}
    return build_cli_config(args.config, overrides)


def run(argv: Sequence[str] | None = None) -> int:
    """Parse `argv`, run one subcommand, print its JSON to stdout; errors go to stderr as JSON."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE_ERROR

    try:
        config = _config_from_args(args)
        configure_logging(LogLevels.from_name(config.log_level), config.log_file)
        logger.debug(f"Running `{args.command}` with {config}")
        payload = args.handler(args, config)
    except UltramonadError as e:
        logger.debug(f"`{args.command}` failed: {e.message}")
        print(dump_json(e.to_dict()), file=sys.stderr)
        return EXIT_DOMAIN_ERROR
    except ValueError as e:
        # pydantic validation errors and unknown log levels
        error = MalformedInput(str(e))
        print(dump_json(error.to_dict()), file=sys.stderr)
        return EXIT_DOMAIN_ERROR

    print(dump_json(payload, pretty=config.pretty))
    return EXIT_OK
