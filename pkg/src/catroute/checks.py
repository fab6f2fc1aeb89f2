"""Brute-force verifiers for the structural properties, with concrete witnesses.

Every check is exhaustive over its quantifiers (these are correctness oracles,
not production paths) and every failed check comes back with a witness that
can be re-verified in isolation: a disconnected category's index, or the first
ordered vertex pair, in lexicographic order, for which the property breaks.
"""

from __future__ import annotations

from dataclasses import dataclass

from .categories import iter_bits
from .errors import InternalCheckError, ValidationError
from .graph import is_tree
from .routing import RouteTrace, greedy_route

INTERNALLY_CONNECTED = "internally-connected"
SHATTERED = "shattered"
ALL_PAIRS_ROUTING = "all-pairs-routing"


@dataclass(frozen=True)
class PropertyReport:
    """Verdict for one structural property.

    ``witness`` is None when the property holds; otherwise it is a category
    index (connectivity), an ordered pair ``(s, t)`` (shattered), or a triple
    ``(s, t, stuck_at)`` (routing).
    """

    property_name: str
    holds: bool
    witness: object = None


def is_internally_connected(g, system):
    """Does every category induce a connected subgraph of ``g``?

    The witness is the index of the first category (in canonical order) whose
    induced subgraph falls apart.
    """
    adjacency = g.adjacency
    for index, mask in enumerate(system.category_masks):
        members = system.categories[index]
        start = members[0]
        seen = 1 << start
        stack = [start]
        while stack:
            u = stack.pop()
            for v in adjacency[u]:
                bit = 1 << v
                if mask & bit and not seen & bit:
                    seen |= bit
                    stack.append(v)
        if seen != mask:
            return PropertyReport(INTERNALLY_CONNECTED, False, index)
    return PropertyReport(INTERNALLY_CONNECTED, True)


def is_shattered(g, system):
    """For every ordered pair (s, t), s != t, does some neighbor u of s share a
    category with t that excludes s?

    The neighbor may be t itself. The witness is the first failing pair in
    lexicographic order.
    """
    n = g.n
    if system.n != n:
        raise ValidationError(f"category system is over n={system.n}, graph has n={n}")
    full = (1 << n) - 1
    # For category C, the sources it can witness for any target in C are the
    # vertices outside C with a neighbor inside C.
    witnessable = []
    for mask, members in zip(system.category_masks, system.categories):
        reach = 0
        for v in members:
            reach |= g.neighbor_masks[v]
        witnessable.append(reach & ~mask)
    covered_by_target = []
    for t in range(n):
        good = 0
        for i in iter_bits(system.vertex_masks[t]):
            good |= witnessable[i]
        covered_by_target.append(good)
    failing = [full & ~covered & ~(1 << t) for t, covered in enumerate(covered_by_target)]
    if not any(failing):
        return PropertyReport(SHATTERED, True)
    for s in range(n):
        bit = 1 << s
        for t in range(n):
            if t != s and failing[t] & bit:
                return PropertyReport(SHATTERED, False, (s, t))
    raise InternalCheckError("failing mask was non-empty but no witness pair found")


def iter_all_pair_routes(g, system):
    """Yield the greedy route trace for every ordered pair, grouped by target.

    Routes are walked against a per-target distance table, which is what makes
    exhaustive verification affordable; the step rule (strictly closer, then
    minimum distance, then smallest id) is identical to ``greedy_route``.
    """
    n = g.n
    vm = system.vertex_masks
    adjacency = g.adjacency
    for t in range(n):
        vt = vm[t]
        dist = [(vt & ~vm[v]).bit_count() for v in range(n)]
        for source in range(n):
            if source == t:
                continue
            current = source
            d_current = dist[source]
            path = [current]
            hops = [d_current]
            while current != t:
                best = None
                best_distance = d_current
                for v in adjacency[current]:
                    dv = dist[v]
                    if dv < best_distance:
                        best_distance = dv
                        best = v
                if best is None:
                    break
                current, d_current = best, best_distance
                path.append(current)
                hops.append(d_current)
            yield RouteTrace(source, t, tuple(path), tuple(hops), current == t)


def verify_all_pairs_routing(g, system):
    """Route every ordered pair; hold iff all are delivered.

    The witness is the lexicographically first failing ``(s, t)`` together
    with the vertex the message got stuck at.
    """
    worst = None
    for trace in iter_all_pair_routes(g, system):
        if not trace.delivered:
            key = (trace.source, trace.target)
            if worst is None or key < worst[:2]:
                worst = (trace.source, trace.target, trace.stuck_at)
    if worst is None:
        return PropertyReport(ALL_PAIRS_ROUTING, True)
    return PropertyReport(ALL_PAIRS_ROUTING, False, worst)


def route_statistics(g, system):
    """One sweep over all ordered pairs: the routing report plus hop stats.

    Returns ``(report, max_hops, mean_hops)``; the stats cover delivered
    routes and are what the benchmark records.
    """
    worst = None
    max_hops = 0
    total_hops = 0
    delivered = 0
    for trace in iter_all_pair_routes(g, system):
        if trace.delivered:
            delivered += 1
            total_hops += trace.hops
            if trace.hops > max_hops:
                max_hops = trace.hops
        else:
            key = (trace.source, trace.target)
            if worst is None or key < worst[:2]:
                worst = (trace.source, trace.target, trace.stuck_at)
    if worst is None:
        report = PropertyReport(ALL_PAIRS_ROUTING, True)
    else:
        report = PropertyReport(ALL_PAIRS_ROUTING, False, worst)
    mean_hops = total_hops / delivered if delivered else 0.0
    return report, max_hops, mean_hops


@dataclass(frozen=True)
class ImplicationReport:
    """All property verdicts for one instance plus which cross-checks applied.

    Two relationships between the properties always hold, so a violation is
    raised as an internal error rather than reported: a system that is not
    shattered cannot route every pair (and must fail at the witness pair
    itself), and on a tree, internal connectivity plus shattering force
    routing to succeed everywhere.
    """

    is_tree: bool
    internally_connected: PropertyReport
    shattered: PropertyReport
    routing: PropertyReport
    failure_necessity_applied: bool
    tree_sufficiency_applied: bool


def check_implications(g, system):
    """Evaluate all three properties plus tree-ness and cross-check them.

    Raises :class:`InternalCheckError` if either implication is violated,
    since that can only mean a bug in this package.
    """
    tree = is_tree(g)
    internal = is_internally_connected(g, system)
    shattered = is_shattered(g, system)
    routing = verify_all_pairs_routing(g, system)

    necessity_applied = not shattered.holds
    if necessity_applied:
        if routing.holds:
            raise InternalCheckError(
                "system is not shattered yet all pairs routed successfully"
            )
        s, t = shattered.witness
        trace = greedy_route(g, system, s, t)
        if trace.delivered:
            raise InternalCheckError(
                f"shattered witness pair ({s}, {t}) routed successfully"
            )

    sufficiency_applied = tree and internal.holds and shattered.holds
    if sufficiency_applied and not routing.holds:
        raise InternalCheckError(
            "tree with an internally connected, shattered system failed to route "
            f"pair {routing.witness[:2]}"
        )

    return ImplicationReport(
        is_tree=tree,
        internally_connected=internal,
        shattered=shattered,
        routing=routing,
        failure_necessity_applied=necessity_applied,
        tree_sufficiency_applied=sufficiency_applied,
    )
