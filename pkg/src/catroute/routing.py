"""Greedy category-based forwarding with verifiable traces.

A message at ``u`` headed for ``t`` moves to a neighbor strictly closer to the
target under the category distance; with several improving neighbors the one
at minimum distance wins, ties by smallest id. Getting stuck is an ordinary,
reportable outcome, not an exception: whole families of instances are supposed
to fail, and the verifiers in :mod:`catroute.checks` reason about where.
"""

from __future__ import annotations

from dataclasses import dataclass

from .categories import category_distance, membership_dimension
from .errors import InternalCheckError, ValidationError


@dataclass(frozen=True)
class RouteTrace:
    """One routing attempt: the vertex path, per-hop distances, and outcome.

    ``hop_distances[i]`` is the category distance from ``path[i]`` to the
    target; it is strictly decreasing, which also bounds the hop count by the
    initial distance.
    """

    source: int
    target: int
    path: tuple
    hop_distances: tuple
    delivered: bool

    @property
    def stuck_at(self):
        return None if self.delivered else self.path[-1]

    @property
    def hops(self):
        return len(self.path) - 1


def _check_pair(g, system, u, t):
    if system.n != g.n:
        raise ValidationError(f"category system is over n={system.n}, graph has n={g.n}")
    if not (0 <= u < g.n and 0 <= t < g.n):
        raise ValidationError(f"vertex out of range for n={g.n}")


def greedy_step(g, system, u, t):
    """Best next hop from ``u`` toward ``t``, or None if no neighbor improves.

    Only looks at u's neighborhood and the membership of u, t and those
    neighbors; there is no global distance oracle.
    """
    _check_pair(g, system, u, t)
    if u == t:
        raise ValidationError("nothing to forward: already at the target")
    best = None
    best_distance = category_distance(system, u, t)
    for v in g.adjacency[u]:
        dv = category_distance(system, v, t)
        if dv < best_distance:
            best_distance = dv
            best = v
    return best


def greedy_route(g, system, source, target, max_hops=None):
    """Forward greedily from ``source`` until ``target`` is reached or no
    neighbor improves, returning the full trace.

    Strict distance decrease already bounds the hop count by the initial
    distance; ``max_hops`` (default: membership dimension + 1) is only a
    defensive cap whose violation means the distance function is broken.
    """
    _check_pair(g, system, source, target)
    if max_hops is None:
        max_hops = membership_dimension(system) + 1
    current = source
    d_current = category_distance(system, current, target)
    path = [current]
    hop_distances = [d_current]
    while current != target:
        nxt = greedy_step(g, system, current, target)
        if nxt is None:
            return RouteTrace(source, target, tuple(path), tuple(hop_distances), False)
        d_next = category_distance(system, nxt, target)
        if d_next >= d_current:
            raise InternalCheckError(
                f"greedy step from {current} to {nxt} did not decrease the distance"
            )
        current, d_current = nxt, d_next
        path.append(current)
        hop_distances.append(d_current)
        if len(path) - 1 > max_hops:
            raise InternalCheckError(f"route exceeded {max_hops} hops; distance is broken")
    return RouteTrace(source, target, tuple(path), tuple(hop_distances), True)


def format_trace(trace, g=None):
    """Render a trace as text, one line per hop plus a final outcome line."""
    name = g.label if g is not None else str
    lines = []
    for i in range(trace.hops):
        lines.append(
            f"{name(trace.path[i])} -(d={trace.hop_distances[i + 1]})-> {name(trace.path[i + 1])}"
        )
    if trace.delivered:
        lines.append(f"DELIVERED in {trace.hops} hops")
    else:
        lines.append(f"STUCK at {name(trace.stuck_at)} (d={trace.hop_distances[-1]})")
    return "\n".join(lines)
