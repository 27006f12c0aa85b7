"""Run manifests: provenance sidecars for every produced artifact file.

A manifest records the subcommand, its full flag set, sha256 digests of
all inputs and of the output, the artifact version and the worker count.
Reruns with equal manifests (wall clock aside) produce bit-identical
outputs; readers use the sidecar to detect partial or stale files.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import asdict, dataclass, field
from pathlib import Path


class DataFormatError(ValueError):
    """Unreadable or inconsistent artifact data (CLI exit code 2)."""


def sha256_file(path: str | Path) -> str:
    digest = hashlib.sha256()
    with open(path, "rb") as fh:
        for block in iter(lambda: fh.read(1 << 20), b""):
            digest.update(block)
    return digest.hexdigest()


def manifest_path_for(output: str | Path) -> Path:
    return Path(str(output) + ".manifest.json")


@dataclass
class RunManifest:
    subcommand: str
    arguments: dict[str, object]
    input_digests: dict[str, str] = field(default_factory=dict)
    output_digest: str | None = None
    artifact_version: str = ""
    worker_count: int = 1
    wall_clock_seconds: float = 0.0
    created_utc: str = ""

    def comparable(self) -> dict[str, object]:
        """Fields that define the run; equal comparables => identical outputs."""
        return {
            "subcommand": self.subcommand,
            "arguments": self.arguments,
            "input_digests": self.input_digests,
            "output_digest": self.output_digest,
            "artifact_version": self.artifact_version,
        }

    def save(self, output: str | Path) -> Path:
        path = manifest_path_for(output)
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(asdict(self), fh, indent=2, sort_keys=True)
            fh.write("\n")
        return path

    @classmethod
    def load(cls, path: str | Path) -> "RunManifest":
        with open(path, "r", encoding="utf-8") as fh:
            raw = json.load(fh)
        known = {f for f in cls.__dataclass_fields__}
        return cls(**{k: v for k, v in raw.items() if k in known})


def check_input_digest(path: str | Path) -> None:
    """Verify a file against its manifest sidecar, if one exists.

    A digest mismatch means the file is partial or was overwritten after
    its manifest was written.
    """
    sidecar = manifest_path_for(path)
    if not sidecar.exists():
        return
    try:
        manifest = RunManifest.load(sidecar)
    except (json.JSONDecodeError, TypeError) as exc:
        raise DataFormatError(f"{sidecar}: unreadable manifest: {exc}") from exc
    if manifest.output_digest is None:
        return
    actual = sha256_file(path)
    if actual != manifest.output_digest:
        raise DataFormatError(
            f"{path}: digest {actual[:12]}... does not match its manifest "
            f"({manifest.output_digest[:12]}...); file is partial or modified"
        )
