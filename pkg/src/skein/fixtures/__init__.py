"""Shipped fixture diagrams and polynomials.

The Petersen polynomial is the published value, bit-exact.  Diagram fixtures
whose source figures are not available (the Petersen embedding, the theta
between the holes) are reconstructions; they are validated by the package's
cross-oracles, not against any figure.
"""

from __future__ import annotations

from importlib import resources
from pathlib import Path

from ..diagrams import GraphDiagram, parse_diagram
from ..polyio import parse_poly_document
from ..rings import LocalizedElement


def fixture_dir() -> Path:
    return Path(str(resources.files(__package__)))


def fixture_path(name: str) -> Path:
    path = fixture_dir() / name
    if not path.is_file():
        raise FileNotFoundError(f"no fixture named {name!r}")
    return path


def list_fixtures() -> list[str]:
    return sorted(
        p.name for p in fixture_dir().iterdir() if p.suffix in (".graph", ".poly")
    )


def load_diagram(name: str) -> GraphDiagram:
    if not name.endswith(".graph"):
        name += ".graph"
    return parse_diagram(fixture_path(name).read_text())


def load_poly(name: str) -> LocalizedElement:
    if not name.endswith(".poly"):
        name += ".poly"
    return parse_poly_document(fixture_path(name).read_text())


def bouquet(m: int) -> GraphDiagram:
    """The m-loop bouquet with side-by-side petals."""
    slots: list[int] = []
    for i in range(m):
        slots += [i, i]
    return GraphDiagram([slots])
