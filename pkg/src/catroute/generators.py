"""Seeded random instance generators for the workbench.

Every family yields a connected graph and the same spec always yields the same
graph. Random families that can come out disconnected (gnp, watts-strogatz)
are resampled up to 100 times and then, as a last resort, patched together by
random inter-component edges; that patching is a distribution caveat, not an
error.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .errors import GenerationError
from .graph import Graph

FAMILIES = (
    "gnp-connected",
    "random-tree",
    "path",
    "cycle",
    "grid",
    "star",
    "complete",
    "watts-strogatz",
)

_RESAMPLE_LIMIT = 100


@dataclass(frozen=True)
class GeneratorSpec:
    """One graph to generate: family, size, family parameters, seed."""

    family: str
    n: int
    seed: int = 0
    params: dict = field(default_factory=dict)

    @classmethod
    def from_dict(cls, payload):
        if not isinstance(payload, dict):
            raise GenerationError("generator spec must be an object")
        unknown = set(payload) - {"family", "n", "seed", "params"}
        if unknown:
            raise GenerationError(f"unknown generator spec keys: {sorted(unknown)}")
        try:
            return cls(
                family=payload["family"],
                n=int(payload["n"]),
                seed=int(payload.get("seed", 0)),
                params=dict(payload.get("params", {})),
            )
        except KeyError as exc:
            raise GenerationError(f"generator spec missing {exc}") from None

    def to_dict(self):
        out = {"family": self.family, "n": self.n, "seed": self.seed}
        if self.params:
            out["params"] = dict(self.params)
        return out


def generate(spec):
    """Build the connected graph a spec describes. Deterministic in the seed."""
    if spec.family not in FAMILIES:
        raise GenerationError(f"unknown family {spec.family!r}")
    if spec.n < 1:
        raise GenerationError("n must be at least 1")
    rng = random.Random(spec.seed)
    builder = _BUILDERS[spec.family]
    return builder(spec, rng)


def _build_path(spec, rng):
    return Graph(spec.n, ((i, i + 1) for i in range(spec.n - 1)))


def _build_cycle(spec, rng):
    if spec.n < 3:
        raise GenerationError("a cycle needs at least 3 vertices")
    return Graph(spec.n, ((i, (i + 1) % spec.n) for i in range(spec.n)))


def _build_star(spec, rng):
    return Graph(spec.n, ((0, i) for i in range(1, spec.n)))


def _build_complete(spec, rng):
    return Graph(spec.n, ((u, v) for u in range(spec.n) for v in range(u + 1, spec.n)))


def _build_grid(spec, rng):
    rows = spec.params.get("rows")
    cols = spec.params.get("cols")
    if rows is None and cols is None:
        rows = _largest_divisor_at_most_sqrt(spec.n)
        cols = spec.n // rows
    elif rows is None or cols is None:
        raise GenerationError("grid needs both rows and cols (or neither)")
    if rows * cols != spec.n:
        raise GenerationError(f"grid dims {rows}x{cols} do not match n={spec.n}")
    edges = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c
            if c + 1 < cols:
                edges.append((v, v + 1))
            if r + 1 < rows:
                edges.append((v, v + cols))
    return Graph(spec.n, edges)


def _build_random_tree(spec, rng):
    edges = [(rng.randrange(v), v) for v in range(1, spec.n)]
    return Graph(spec.n, edges)


def _build_gnp(spec, rng):
    p = spec.params.get("p")
    if p is None:
        raise GenerationError("gnp-connected needs params.p")
    if not 0.0 <= p <= 1.0:
        raise GenerationError(f"edge probability {p} not in [0, 1]")

    def sample():
        return [
            (u, v)
            for u in range(spec.n)
            for v in range(u + 1, spec.n)
            if rng.random() < p
        ]

    return _connected_sample(spec.n, rng, sample)


def _build_watts_strogatz(spec, rng):
    k = spec.params.get("k", 4)
    beta = spec.params.get("beta", 0.1)
    if k % 2 != 0 or k < 2:
        raise GenerationError(f"ring degree k={k} must be even and at least 2")
    if k >= spec.n:
        raise GenerationError(f"ring degree k={k} must be below n={spec.n}")
    if not 0.0 <= beta <= 1.0:
        raise GenerationError(f"rewiring probability {beta} not in [0, 1]")

    def sample():
        present = set()
        for j in range(1, k // 2 + 1):
            for u in range(spec.n):
                present.add(_norm(u, (u + j) % spec.n))
        for j in range(1, k // 2 + 1):
            for u in range(spec.n):
                edge = _norm(u, (u + j) % spec.n)
                if edge not in present or rng.random() >= beta:
                    continue
                for _ in range(2 * spec.n):
                    w = rng.randrange(spec.n)
                    candidate = _norm(u, w)
                    if w != u and candidate not in present:
                        present.remove(edge)
                        present.add(candidate)
                        break
        return sorted(present)

    return _connected_sample(spec.n, rng, sample)


def _norm(u, v):
    return (u, v) if u < v else (v, u)


def _largest_divisor_at_most_sqrt(n):
    best = 1
    d = 1
    while d * d <= n:
        if n % d == 0:
            best = d
        d += 1
    return best


def _components(n, edges):
    neighbors = [[] for _ in range(n)]
    for u, v in edges:
        neighbors[u].append(v)
        neighbors[v].append(u)
    seen = [False] * n
    components = []
    for s in range(n):
        if seen[s]:
            continue
        stack = [s]
        seen[s] = True
        component = []
        while stack:
            u = stack.pop()
            component.append(u)
            for v in neighbors[u]:
                if not seen[v]:
                    seen[v] = True
                    stack.append(v)
        components.append(component)
    return components


def _connected_sample(n, rng, sample):
    """Resample until connected, then patch components together if need be."""
    edges = None
    for _ in range(_RESAMPLE_LIMIT):
        edges = sample()
        if len(_components(n, edges)) == 1:
            return Graph(n, edges)
    parts = _components(n, edges)
    glued = list(edges)
    absorbed = parts[0]
    for part in parts[1:]:
        glued.append((rng.choice(absorbed), rng.choice(part)))
        absorbed = absorbed + part
    return Graph(n, glued)


_BUILDERS = {
    "gnp-connected": _build_gnp,
    "random-tree": _build_random_tree,
    "path": _build_path,
    "cycle": _build_cycle,
    "grid": _build_grid,
    "star": _build_star,
    "complete": _build_complete,
    "watts-strogatz": _build_watts_strogatz,
}
