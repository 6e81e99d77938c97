import logging
from pathlib import Path
from typing import Any, Literal

import toml
from pydantic import BaseModel, ConfigDict, Field

from ultramonad.core.budgets import Budgets
from ultramonad.core.errors import MalformedInput

logger = logging.getLogger(__name__)

AlphaChoice = Literal["default", "log"]


class CliConfig(BaseModel):
    """
    Settings shared by every subcommand. Values come from the defaults, then an optional TOML file
    (`--config`), then explicit command-line flags.
    `alpha = "log"` only changes what conversions and the witness *display*; exact checks never use it.
    """
    model_config = ConfigDict(frozen=True, extra="forbid")

    seed: int = Field(default=0, ge=0)
    trials: int = Field(default=200, gt=0)
    budgets: Budgets = Budgets()
    alpha: AlphaChoice = "default"
    pretty: bool = False
    log_level: str = "WARNING"
    log_file: Path | None = None
    workers: int = Field(default=1, ge=1)


def load_config_file(path: Path) -> dict[str, Any]:
    try:
        loaded = toml.load(str(path))
    except FileNotFoundError:
        raise MalformedInput(f"Config file not found: {path}", path=str(path))
    except toml.TomlDecodeError as e:
        raise MalformedInput(f"Config file {path} is not valid TOML: {e}", path=str(path),
                             line=getattr(e, "lineno", None), column=getattr(e, "colno", None))
    logger.debug(f"Loaded config file {path}: {sorted(loaded)}")
    return loaded


def build_cli_config(config_path: Path | None, overrides: dict[str, Any]) -> CliConfig:
    """File values under `overrides`; `None` overrides mean "flag not given"."""
    values = load_config_file(config_path) if config_path is not None else {}
    budgets = dict(values.pop("budgets", {}) or {})
    for key, value in overrides.items():
        if value is None:
            continue
        if key in Budgets.model_fields:
            budgets[key] = value
        else:
            values[key] = value
    try:
        return CliConfig(**values, budgets=Budgets(**budgets))
    except ValueError as e:
        raise MalformedInput(f"Invalid configuration: {e}")
