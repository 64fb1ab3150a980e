import logging
from concurrent.futures import ProcessPoolExecutor, as_completed
from typing import Any, Callable, Hashable, Literal, Optional, Sequence

import numpy as np
import psutil
from pydantic import BaseModel, ConfigDict, Field, model_validator
from tqdm.auto import tqdm

from quantumwasserstein.divergence import SelfDistanceCache
from quantumwasserstein.errors import ExperimentPointError

_logger = logging.getLogger("quantumwasserstein.experiments")
_logger.setLevel(logging.INFO)

WorkItem = tuple[Hashable, tuple[Any, ...]]


class LatticeSpec(BaseModel):
    """Bloch vectors step·(j, k, l) with integer j² + k² + l² ≤ radius_bound."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    step: float = Field(default=0.1, gt=0)
    radius_bound: int = Field(default=100, ge=0)
    n_cpu: int = 1

    @model_validator(mode="after")
    def _inside_ball(self) -> "LatticeSpec":
        if self.step**2 * self.radius_bound > 1 + 1e-12:
            raise ValueError(
                f"step {self.step} with radius bound {self.radius_bound} leaves "
                "the Bloch ball"
            )
        return self

    @classmethod
    def coarse(cls, n_cpu: int = 1) -> "LatticeSpec":
        """Step 1/5 over the same ball: 515 points instead of 4169."""
        return cls(step=0.2, radius_bound=25, n_cpu=n_cpu)


class SweepSpec(BaseModel):
    """Random triplets of Wishart states with random observable sets.

    ``anchor`` replaces some states by rank-one draws: ``omega-pure`` makes ω
    pure, ``ends-pure`` makes ρ and τ pure.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    dim: int = Field(ge=2, le=5)
    samples: int = Field(default=4000, ge=1)
    observables_per_sample: int = Field(default=3, ge=1)
    rank: Optional[int] = None
    seed: int = Field(default=0, ge=0, lt=2**64)
    anchor: Literal["none", "omega-pure", "ends-pure"] = "none"
    n_cpu: int = 1

    @model_validator(mode="after")
    def _check_rank(self) -> "SweepSpec":
        if self.rank is not None and not 1 <= self.rank <= self.dim:
            raise ValueError(f"rank must lie in [1, {self.dim}], got {self.rank}")
        return self

    @property
    def resolved_rank(self) -> int:
        return self.dim if self.rank is None else self.rank

    @property
    def sampler_tag(self) -> str:
        tag = f"wishart-r{self.resolved_rank}-k{self.observables_per_sample}"
        return tag if self.anchor == "none" else f"{tag}-{self.anchor}"


Scenario = Literal["c2-deterministic", "c4-deterministic", "c2-random", "c4-random"]


class SurfaceSpec(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    scenario: Scenario
    grid_resolution: int = Field(default=41, ge=2)
    seed: int = Field(default=0, ge=0, lt=2**64)
    observables: int = Field(default=3, ge=1)
    n_cpu: int = 1


def resolve_n_cpu(n_cpu: int) -> int:
    available = psutil.cpu_count() or 1
    return available if n_cpu == -1 else max(1, min(n_cpu, available))


def _evaluate(fn: Callable, key: Hashable, args: tuple, cache: SelfDistanceCache):
    try:
        return fn(*args, cache=cache)
    except ExperimentPointError:
        raise
    except Exception as e:
        raise ExperimentPointError(key, e) from e


def evaluate_item(fn: Callable, key: Hashable, args: tuple) -> Any:
    """One item outside the pool, with the same failure wrapping."""
    return _evaluate(fn, key, args, SelfDistanceCache())


def _evaluate_chunk(fn: Callable, chunk: Sequence[WorkItem]) -> list:
    cache = SelfDistanceCache()
    return [_evaluate(fn, key, args, cache) for key, args in chunk]


def run_work_items(
    fn: Callable,
    items: Sequence[WorkItem],
    n_cpu: int = 1,
    desc: str = "Evaluating",
) -> list:
    """Evaluate ``fn(*args, cache=...)`` for every (key, args) item, in order.

    With more than one CPU the items are split into contiguous chunks run in a
    process pool; each chunk gets its own self-distance cache. Failures are
    re-raised as ExperimentPointError carrying the item key.
    """
    workers = resolve_n_cpu(n_cpu)
    show_progress = _logger.isEnabledFor(logging.INFO)

    if workers == 1 or len(items) < 2:
        cache = SelfDistanceCache()
        iterator = tqdm(items, desc=desc) if show_progress else items
        return [_evaluate(fn, key, args, cache) for key, args in iterator]

    bounds = np.linspace(0, len(items), min(len(items), workers * 4) + 1).astype(int)
    chunks = [items[lo:hi] for lo, hi in zip(bounds[:-1], bounds[1:]) if hi > lo]
    _logger.info(f"{desc}: {len(items)} items in {len(chunks)} chunks")
    with ProcessPoolExecutor(max_workers=workers) as executor:
        futures = [executor.submit(_evaluate_chunk, fn, chunk) for chunk in chunks]
        if show_progress:
            for _ in tqdm(as_completed(futures), total=len(futures), desc=desc):
                pass
        results = [future.result() for future in futures]
    return [result for chunk in results for result in chunk]
