"""Exact metric invariants of simplices.

Exact scalars are strings ("5/9216"); quadratic-extension values are
{"a", "b", "d"} dicts; vectors are {"n", "ring", "entries"} dicts, the same
documents the ``simplex-lab`` command reads and writes.
"""

from __future__ import annotations

import json
from typing import Any, Sequence

from . import _core
from ._core import ContradictionError, ParseError, PreconditionError, RingError

__all__ = [
    "ContradictionError",
    "ParseError",
    "PreconditionError",
    "RingError",
    "all_checks",
    "areas",
    "catalog",
    "curve",
    "edge_vector",
    "fiber",
    "images_equal",
    "jacobian",
    "probe",
    "volume",
    "witness",
]

_FIVE = (0, 1, 2, 3, 4)


def edge_vector(n: int, entries: Sequence[Any], ring: str = "rational") -> dict:
    """Build an edge/area document; plain numbers become exact strings."""
    return {"n": n, "ring": ring, "entries": [str(x) if isinstance(x, int) else x for x in entries]}


def _text(doc: Any) -> str:
    return doc if isinstance(doc, str) else json.dumps(doc)


def volume(edges: dict, route: str = "cm") -> Any:
    return json.loads(_core.volume(_text(edges), route))


def areas(edges: dict) -> dict:
    return json.loads(_core.areas(_text(edges)))


def catalog(n: int, verify: bool = False) -> dict:
    return json.loads(_core.catalog(n, verify))


def jacobian(n: int, point: str) -> dict:
    return json.loads(_core.jacobian(n, point))


def images_equal(n: int, a: str, b: str) -> bool:
    return _core.images_equal(n, a, b)


def curve(family: str, q: int = 3, a: str = "1", b: str = "1", c: str = "1", *, verify: bool = False,
          witness: str = "", indices: Sequence[int] = _FIVE) -> dict:
    return json.loads(_core.curve(family, q, str(a), str(b), str(c), verify, witness, list(indices)))


def witness(kind: str, areas: dict, indices: Sequence[int] = _FIVE) -> Any:
    return json.loads(_core.witness(kind, _text(areas), list(indices)))


def fiber(target: dict, seed: int = 7, tol: float = 1e-10) -> dict:
    return json.loads(_core.fiber(_text(target), seed, tol))


def probe(n: int = 5, trials: int = 200, seed: int = 7, tol: float = 1e-10) -> dict:
    return json.loads(_core.probe(n, trials, seed, tol))


def all_checks(dims: Sequence[int] = (4, 5, 6), q: Sequence[int] = (3, 4), seed: int = 7) -> dict:
    return json.loads(_core.all_checks(list(dims), list(q), seed))
