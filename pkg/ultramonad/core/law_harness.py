"""Seeded, order-preserving trial runner shared by the monad and Kleisli-extension law checks."""
import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Any, Callable, Mapping

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from ultramonad.core.errors import MalformedInput

logger = logging.getLogger(__name__)

Counterexample = dict[str, Any]
# a check returns None when the law holds on the sampled instance, or a JSON-ready counterexample
LawCheck = Callable[[np.random.Generator], Counterexample | None]


class LawResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    trials: int = Field(ge=0)
    failures: int = Field(ge=0)
    first_counterexample: Counterexample | None = None

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def to_dict(self) -> dict[str, Any]:
        result: dict[str, Any] = {"trials": self.trials, "failures": self.failures}
        if self.first_counterexample is not None:
            result["first_counterexample"] = self.first_counterexample
        return result


class LawReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    laws: dict[str, LawResult]

    @property
    def all_passed(self) -> bool:
        return all(result.passed for result in self.laws.values())

    def to_dict(self) -> dict[str, Any]:
        return {name: result.to_dict() for name, result in self.laws.items()}


def _run_trial(check: LawCheck, seed_sequence: np.random.SeedSequence) -> Counterexample | None:
    try:
        outcome = check(np.random.default_rng(seed_sequence))
    except Exception as e:
        logger.exception(f"Law check raised on a sampled instance: {e}")
        return {"exception": type(e).__name__, "message": str(e)}
    if outcome is not None:
        logger.loop(f"Counterexample on trial stream {seed_sequence.spawn_key}: {outcome}")
    return outcome


def run_law(name: str,
            check: LawCheck,
            trials: int,
            seed_sequence: np.random.SeedSequence,
            workers: int = 1) -> LawResult:
    """Run `trials` instances, each on its own spawned stream, so the result is independent of `workers`."""
    if trials < 1:
        raise MalformedInput(f"trials must be at least 1, got {trials}", trials=trials)
    trial_seeds = seed_sequence.spawn(trials)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            outcomes = list(executor.map(lambda sequence: _run_trial(check, sequence), trial_seeds))
    else:
        outcomes = [_run_trial(check, sequence) for sequence in trial_seeds]

    failures = [outcome for outcome in outcomes if outcome is not None]
    result = LawResult(trials=trials, failures=len(failures), first_counterexample=failures[0] if failures else None)
    if failures:
        logger.warning(f"Law `{name}` failed on {len(failures)}/{trials} trials")
    else:
        logger.success(f"Law `{name}` held on {trials}/{trials} trials")
    return result


def run_laws(checks: Mapping[str, LawCheck], trials: int, seed: int, workers: int = 1) -> LawReport:
    """Law k draws from SeedSequence([seed, k]), so adding a law never perturbs the others."""
    return LawReport(laws={name: run_law(name, check, trials, np.random.SeedSequence([seed, index]), workers)
                           for index, (name, check) in enumerate(checks.items())})
