"""Shared builders and independent reference oracles for the test suite.

The oracles here deliberately re-derive properties from their definitions
with plain data structures (no bitmasks, no per-target tables) so they stay
independent of the implementation paths they check.
"""

from __future__ import annotations

import random

from catroute import CategorySystem, Graph, RootedBinaryTree, RootedTree


def path_graph(n):
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n):
    return Graph(n, ((i, (i + 1) % n) for i in range(n)))


def star_graph(n):
    return Graph(n, ((0, i) for i in range(1, n)))


def complete_graph(n):
    return Graph(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def random_tree(rng, n, skew="uniform"):
    """Attachment tree; 'hub' skew concentrates parents near the root."""
    parents = [None]
    for v in range(1, n):
        if skew == "hub":
            parents.append(int(v * rng.random() ** 4))
        else:
            parents.append(rng.randrange(v))
    return RootedTree(parents, 0)


def random_binary_tree(rng, n):
    """Grow by attaching each new vertex to a uniformly random free slot."""
    parent = [None] * n
    left = [None] * n
    right = [None] * n
    slots = [(0, 0), (0, 1)]
    for v in range(1, n):
        index = rng.randrange(len(slots))
        slots[index], slots[-1] = slots[-1], slots[index]
        host, side = slots.pop()
        parent[v] = host
        if side == 0:
            left[host] = v
        else:
            right[host] = v
        slots.append((v, 0))
        slots.append((v, 1))
    return RootedBinaryTree(parent, 0, left, right)


def random_category_system(rng, n, max_sets=8):
    """A handful of arbitrary non-empty subsets of the universe."""
    sets = []
    for _ in range(rng.randint(0, max_sets)):
        size = rng.randint(1, n)
        sets.append(rng.sample(range(n), size))
    return CategorySystem(n, sets)


def random_connected_graph(rng, n, extra_edges=None):
    """A random spanning tree plus a few extra random edges."""
    edges = [(rng.randrange(v), v) for v in range(1, n)]
    if extra_edges is None:
        extra_edges = rng.randint(0, n)
    for _ in range(extra_edges):
        u = rng.randrange(n)
        v = rng.randrange(n)
        if u != v:
            edges.append((u, v))
    return Graph(n, edges)


# ---------------------------------------------------------------------------
# Reference oracles
# ---------------------------------------------------------------------------

def oracle_sets(system):
    return [set(members) for members in system.categories]


def oracle_cat(system, u):
    return {i for i, members in enumerate(system.categories) if u in members}


def oracle_distance(system, a, b):
    return len(oracle_cat(system, b) - oracle_cat(system, a))


def oracle_membership_dimension(system):
    if system.n == 0:
        return 0
    return max(len(oracle_cat(system, u)) for u in range(system.n))


def oracle_shattered(g, system):
    """Direct quantifier sweep over the definition; returns first failing pair."""
    sets = oracle_sets(system)
    for s in range(g.n):
        for t in range(g.n):
            if s == t:
                continue
            found = False
            for u in g.adjacency[s]:
                for members in sets:
                    if u in members and t in members and s not in members:
                        found = True
                        break
                if found:
                    break
            if not found:
                return (s, t)
    return None


def oracle_internally_connected(g, system):
    """Union-find over each category's induced edges; first failing index."""
    for index, members in enumerate(system.categories):
        parent = {v: v for v in members}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        inside = set(members)
        for u in members:
            for v in g.adjacency[u]:
                if v in inside:
                    parent[find(u)] = find(v)
        roots = {find(v) for v in members}
        if len(roots) > 1:
            return index
    return None


def oracle_is_ancestor(tree, a, b):
    """Is a an ancestor of b (inclusive) by walking parents?"""
    node = b
    while node is not None:
        if node == a:
            return True
        node = tree.parent[node]
    return False


def seeded(seed):
    return random.Random(seed)
