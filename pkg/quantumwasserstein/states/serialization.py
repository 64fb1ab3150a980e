"""Matrix JSON: ``{"dim": n, "entries": [[[re, im], ...], ...]}``, row-major."""

import json
from pathlib import Path
from typing import Any

import numpy as np
from pydantic import BaseModel, ConfigDict, model_validator

from quantumwasserstein.errors import DimensionMismatchError
from quantumwasserstein.states.common import (
    DensityMatrix,
    HermitianMatrix,
    ObservableSet,
)


class MatrixJson(BaseModel):
    model_config = ConfigDict(extra="forbid")

    dim: int
    entries: list[list[tuple[float, float]]]

    @model_validator(mode="after")
    def _check_shape(self) -> "MatrixJson":
        if len(self.entries) != self.dim or any(
            len(row) != self.dim for row in self.entries
        ):
            raise DimensionMismatchError(
                f"Matrix JSON declares dim {self.dim} but entries do not match"
            )
        return self

    def to_array(self) -> np.ndarray:
        pairs = np.array(self.entries, dtype=float).reshape(self.dim, self.dim, 2)
        return pairs[..., 0] + 1j * pairs[..., 1]

    @classmethod
    def from_array(cls, array: np.ndarray) -> "MatrixJson":
        array = np.asarray(array, dtype=np.complex128)
        return cls(
            dim=array.shape[0],
            entries=[[(float(z.real), float(z.imag)) for z in row] for row in array],
        )


def matrix_to_json(matrix: HermitianMatrix | np.ndarray) -> dict[str, Any]:
    array = matrix.entries if isinstance(matrix, HermitianMatrix) else matrix
    return MatrixJson.from_array(array).model_dump()


def matrix_from_json(data: dict[str, Any]) -> np.ndarray:
    return MatrixJson.model_validate(data).to_array()


def load_json(path: str | Path) -> Any:
    with open(path, "r", encoding="utf-8") as f:
        return json.load(f)


def dump_json(data: Any, path: str | Path) -> None:
    with open(path, "w", encoding="utf-8") as f:
        json.dump(data, f, indent=2, sort_keys=True)
        f.write("\n")


def load_matrix(path: str | Path) -> np.ndarray:
    return matrix_from_json(load_json(path))


def load_hermitian(path: str | Path) -> HermitianMatrix:
    return HermitianMatrix(entries=load_matrix(path))


def load_state(path: str | Path) -> DensityMatrix:
    return DensityMatrix(entries=load_matrix(path))


def load_observables(path: str | Path) -> ObservableSet:
    """An observable set file holds a JSON array of matrix JSON objects."""
    data = load_json(path)
    if isinstance(data, dict):
        data = [data]
    return ObservableSet(observables=[matrix_from_json(item) for item in data])


def dump_matrix(matrix: HermitianMatrix | np.ndarray, path: str | Path) -> None:
    dump_json(matrix_to_json(matrix), path)


def dump_observables(observables: ObservableSet, path: str | Path) -> None:
    dump_json([matrix_to_json(a) for a in observables.observables], path)
