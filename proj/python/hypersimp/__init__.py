"""Hypergraph decomposition, forbidden-pattern detection and simplification."""

import json
import math
from typing import Dict, Iterable, Optional, Tuple

from ._core import (
    REPORT_SCHEMA_VERSION,
    Hypergraph,
    ParseError,
    RenderError,
    ValidationError,
    betti,
    force_layout,
    has_forbidden,
    ingest_contacts,
    ingest_friendship,
    is_convex_polygon_planar,
    is_zykov_planar,
)
from . import _core

__all__ = [
    "REPORT_SCHEMA_VERSION",
    "Hypergraph",
    "ParseError",
    "RenderError",
    "ValidationError",
    "betti",
    "decompose",
    "forbidden",
    "force_layout",
    "has_forbidden",
    "ingest_contacts",
    "ingest_friendship",
    "is_convex_polygon_planar",
    "is_zykov_planar",
    "planarity",
    "render_svg",
    "replay",
    "simplify",
    "stats",
]


def decompose(h: Hypergraph, jobs: int = 1) -> dict:
    return json.loads(_core._decompose(h, jobs))


def forbidden(h: Hypergraph) -> dict:
    return json.loads(_core._forbidden(h))


def planarity(h: Hypergraph, seed: int = 42) -> dict:
    return json.loads(_core._planarity(h, seed))


def stats(h: Hypergraph) -> dict:
    return json.loads(_core._stats(h))


def simplify(
    h: Hypergraph,
    *,
    targets: Iterable[str] = ("planar",),
    alpha: float = 0.0,
    beta: float = 0.9,
    gamma: float = 0.4,
    delta: float = 1.0,
    eta_threshold: float = 0.0,
    prune_threshold: float = math.inf,
    seed: int = 42,
    full_recompute: bool = False,
    jobs: int = 1,
) -> Tuple[Hypergraph, dict]:
    """Returns the simplified hypergraph and the op log as a dict.

    targets: any of "planar", "eta", "ops:N".
    """
    planar = eta = False
    max_ops: Optional[int] = None
    for t in targets:
        if t == "planar":
            planar = True
        elif t == "eta":
            eta = True
        elif t.startswith("ops:") and t[4:].isdigit():
            max_ops = int(t[4:])
        else:
            raise ValueError(f"unknown target {t!r} (planar, eta or ops:N)")
    out, log = _core._simplify(
        h, alpha, beta, gamma, delta, planar, eta, max_ops, eta_threshold, prune_threshold, seed,
        full_recompute, jobs,
    )
    return out, json.loads(log)


def replay(h: Hypergraph, log: dict) -> Hypergraph:
    return _core._replay(h, json.dumps(log))


def render_svg(
    h: Hypergraph,
    positions: Optional[Dict[str, Tuple[float, float]]] = None,
    log: Optional[dict] = None,
    *,
    seed: int = 42,
    iterations: int = 300,
    width: float = 800,
    height: float = 800,
) -> str:
    """SVG text. Without positions a force layout with `seed` is used; a log
    adds its cut annotations."""
    return _core._render(h, positions, None if log is None else json.dumps(log), seed, iterations, width, height)
