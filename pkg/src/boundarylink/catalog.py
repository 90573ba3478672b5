"""Bundled example catalog with checksum verification."""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from pathlib import Path

from .diagrams import LinkDiagram
from .seifert import SeifertMatrix, StructureError

DATA_DIR = Path(__file__).resolve().parent / "data"


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    kind: str                    # "matrix" | "diagram"
    file: str
    sha256: str
    description: str


def _manifest() -> dict:
    return json.loads((DATA_DIR / "catalog.json").read_text())


def entries() -> list[CatalogEntry]:
    return [CatalogEntry(name=name, **info)
            for name, info in sorted(_manifest().items())]


def raw_payload(name: str) -> str:
    info = _manifest().get(name)
    if info is None:
        raise StructureError(f"no catalog entry named {name!r}")
    payload = (DATA_DIR / info["file"]).read_text()
    digest = hashlib.sha256(payload.encode()).hexdigest()
    if digest != info["sha256"]:
        raise StructureError(f"catalog entry {name!r} fails its checksum")
    return payload


def load(name: str) -> SeifertMatrix | LinkDiagram:
    info = _manifest().get(name)
    if info is None:
        raise StructureError(f"no catalog entry named {name!r}")
    payload = raw_payload(name)
    if info["kind"] == "matrix":
        return SeifertMatrix.from_json(payload)
    return LinkDiagram.from_json(payload)
