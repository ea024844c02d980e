"""Deterministic graph generators behind a single spec type.

Every kind is a pure function of its parameters and seed: the same spec
serializes to byte-identical output. The hajos-tower kind delegates to the
certified-member generator; hosted wraps any other kind in pendant trees
and triangles while keeping the core a block of the result.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Mapping

from .errors import UsageError
from .graph import Graph, complete_graph, cycle_graph, wheel_graph
from .rng import SplitMix64

KINDS = ("complete", "cycle", "wheel", "gnp", "hajos-tower", "hosted")


@dataclass(frozen=True)
class GeneratorSpec:
    kind: str
    params: Mapping[str, Any] = field(default_factory=dict)
    seed: int = 0


def _want_int(params: Mapping, key: str, minimum: int | None = None) -> int:
    if key not in params:
        raise UsageError(f"generator parameter {key!r} is required")
    value = params[key]
    if not isinstance(value, int) or isinstance(value, bool):
        raise UsageError(f"generator parameter {key!r} must be an integer")
    if minimum is not None and value < minimum:
        raise UsageError(f"generator parameter {key!r} must be >= {minimum}")
    return value


def generate(spec: GeneratorSpec) -> Graph:
    """Build the graph described by `spec`; deterministic for a fixed seed."""
    kind, params = spec.kind, spec.params
    if kind == "complete":
        return complete_graph(_want_int(params, "n", 0))
    if kind == "cycle":
        return cycle_graph(_want_int(params, "n", 3))
    if kind == "wheel":
        return wheel_graph(_want_int(params, "rim", 3))
    if kind == "gnp":
        n = _want_int(params, "n", 0)
        p = params.get("p")
        if not isinstance(p, (int, float)) or not (0.0 <= p <= 1.0):
            raise UsageError("gnp needs a probability p in [0, 1]")
        rng = SplitMix64(spec.seed)
        edges = [
            (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
        ]
        return Graph(n, edges)
    if kind == "hajos-tower":
        from .hajos import gen_hk_random

        k = _want_int(params, "k", 3)
        joins = _want_int(params, "joins", 0)
        return gen_hk_random(k, joins, spec.seed)[0]
    if kind == "hosted":
        from .hajos import embed_in_host

        core_params = params.get("core")
        if not isinstance(core_params, Mapping) or "kind" not in core_params:
            raise UsageError('hosted needs a nested "core" spec with a kind')
        core_spec = GeneratorSpec(
            core_params["kind"],
            {k: v for k, v in core_params.items() if k not in ("kind", "seed")},
            core_params.get("seed", spec.seed),
        )
        core = generate(core_spec)
        return embed_in_host(core, _want_int(params, "budget", 0), spec.seed)
    raise UsageError(f"unknown generator kind {kind!r}; known: {', '.join(KINDS)}")
