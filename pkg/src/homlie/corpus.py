"""The fixture algebras shipped with the package."""

from __future__ import annotations

from importlib import resources

from homlie.algebra import HomLieAlgebra
from homlie.formats import algebra_from_json, parse_json_text

NAMES = ("A1", "A2", "A3", "S3", "H3", "H3q")


def data_path(filename: str):
    return resources.files("homlie") / "data" / filename


def load(name: str) -> HomLieAlgebra:
    if name not in NAMES:
        raise KeyError(f"unknown fixture {name!r}; choose from {', '.join(NAMES)}")
    path = data_path(f"{name}.json")
    return algebra_from_json(parse_json_text(path.read_text(encoding="utf-8"), str(path)), name)


def corpus() -> dict[str, HomLieAlgebra]:
    return {name: load(name) for name in NAMES}
