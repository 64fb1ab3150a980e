from pathlib import Path
from typing import Any

from pydantic import BaseModel, ConfigDict, Field

from quantumwasserstein.states.serialization import dump_json, load_json


class RunManifest(BaseModel):
    """What a command was run with; enough to replay it."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    command: str
    params: dict[str, Any]
    seed: int = Field(ge=0, lt=2**64)
    version: str
    wall_time: float = Field(ge=0)
    outputs: list[str] = []

    def path_in(self, out: str | Path) -> Path:
        return Path(out) / f"{self.command}.manifest.json"

    def write(self, out: str | Path) -> Path:
        path = self.path_in(out)
        path.parent.mkdir(parents=True, exist_ok=True)
        dump_json(self.model_dump(), path)
        return path

    @classmethod
    def read(cls, path: str | Path) -> "RunManifest":
        return cls.model_validate(load_json(path))
