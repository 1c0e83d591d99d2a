"""Matrix files and the bundled example matrices.

A matrix file is a JSON object ``{"name": str, "matrix": [[int, ...], ...]}``.
Bundled fixtures live in the package's ``fixtures/`` directory; extra
directories listed in ``LINKSIG_FIXTURES`` (os.pathsep separated) are searched
first, so new matrices can be added without touching the code.
"""
from __future__ import annotations

import json
import os
from importlib import resources
from pathlib import Path

from .seifert import SeifertError, SeifertMatrix, validate_seifert

FIXTURE_ENV = "LINKSIG_FIXTURES"


def parse_matrix_document(doc) -> tuple:
    """(name, SeifertMatrix) from a decoded matrix document."""
    if not isinstance(doc, dict) or "matrix" not in doc:
        raise SeifertError('matrix file must be a JSON object with a "matrix" field')
    rows = doc["matrix"]
    if not isinstance(rows, list) or any(not isinstance(r, list) for r in rows):
        raise SeifertError('"matrix" must be a list of rows')
    return str(doc.get("name", "")), validate_seifert(rows)


def load_matrix_file(path) -> tuple:
    with open(path, encoding="utf-8") as fh:
        return parse_matrix_document(json.load(fh))


def dump_matrix(S: SeifertMatrix, name: str = "") -> str:
    return json.dumps(S.to_json(name))


def twist_family(n: int) -> SeifertMatrix:
    """Seifert matrix of the 3-component link with n full twists (zero Alexander polynomial)."""
    return validate_seifert([[-1, 1, 0, 0], [0, -1, 1, 0], [0, 1, n, 0], [0, 0, 0, 0]])


def _search_dirs() -> list:
    dirs = [Path(p) for p in os.environ.get(FIXTURE_ENV, "").split(os.pathsep) if p]
    dirs.append(Path(str(resources.files("linksig") / "fixtures")))
    return dirs


def fixture_names() -> list:
    names = set()
    for d in _search_dirs():
        if d.is_dir():
            names.update(p.stem for p in d.glob("*.json"))
    return sorted(names)


def load_fixture(name: str) -> SeifertMatrix:
    for d in _search_dirs():
        path = d / f"{name}.json"
        if path.is_file():
            return load_matrix_file(path)[1]
    raise KeyError(f"no fixture named {name!r}")
