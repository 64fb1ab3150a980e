"""Seeded random states, observables and unitaries.

Every draw is reproducible from a (seed, stream index) pair. Streams are backed
by a counter-based Philox generator keyed through a SeedSequence spawn key, so
sample n of an experiment does not depend on how many samples were drawn before
it or on which worker drew it.
"""

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from quantumwasserstein.states.common import DensityMatrix, HermitianMatrix


class RngStream(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    seed: int = Field(ge=0, lt=2**64)
    stream_index: int = Field(default=0, ge=0)

    def generator(self) -> np.random.Generator:
        """A fresh generator positioned at the start of this stream."""
        sequence = np.random.SeedSequence(self.seed, spawn_key=(self.stream_index,))
        return np.random.Generator(np.random.Philox(sequence))

    def substream(self, index: int) -> "RngStream":
        return RngStream(seed=self.seed, stream_index=index)


RngLike = RngStream | np.random.Generator


def as_generator(rng: RngLike) -> np.random.Generator:
    if isinstance(rng, RngStream):
        return rng.generator()
    return rng


def complex_gaussian(gen: np.random.Generator, shape: tuple[int, ...]) -> np.ndarray:
    """Real and imaginary parts i.i.d. N(0, 1), each (not variance ½)."""
    real = gen.standard_normal(shape)
    imag = gen.standard_normal(shape)
    return real + 1j * imag


def random_state(dim: int, rank: int = None, rng: RngLike = None) -> DensityMatrix:
    """Normalized Wishart state X X† / tr(X X†) with X of shape dim×rank.

    Args:
        dim: Hilbert space dimension.
        rank: number of columns of X; defaults to dim.
        rng: stream or open generator to draw from.
    """
    rank = dim if rank is None else rank
    if not 1 <= rank <= dim:
        raise ValueError(f"rank must lie in [1, {dim}], got {rank}")
    gen = as_generator(rng if rng is not None else np.random.default_rng())
    x = complex_gaussian(gen, (dim, rank))
    positive = x @ x.conj().T
    return DensityMatrix(entries=positive / np.trace(positive).real)


def random_observable(dim: int, rng: RngLike = None) -> HermitianMatrix:
    """Y + Y† for Y with i.i.d. standard complex Gaussian entries."""
    gen = as_generator(rng if rng is not None else np.random.default_rng())
    y = complex_gaussian(gen, (dim, dim))
    return HermitianMatrix(entries=y + y.conj().T)


def random_bloch_vector(rng: RngLike = None) -> np.ndarray:
    """Uniform point of the closed unit ball in R³."""
    gen = as_generator(rng if rng is not None else np.random.default_rng())
    direction = gen.standard_normal(3)
    direction /= np.linalg.norm(direction)
    return direction * np.cbrt(gen.uniform())


def random_unitary(dim: int, rng: RngLike = None) -> np.ndarray:
    """Haar-distributed unitary from the QR decomposition of a Ginibre matrix."""
    gen = as_generator(rng if rng is not None else np.random.default_rng())
    z = complex_gaussian(gen, (dim, dim)) / np.sqrt(2)
    q, r = np.linalg.qr(z)
    phases = np.diag(r) / np.abs(np.diag(r))
    return q * phases
