"""Undirected simple graphs on dense integer ids, BFS machinery, rooted tree views.

Vertices are always 0..n-1. Adjacency lists are kept sorted and every
tie-break is by smallest id, so traversals, root choices and derived trees are
reproducible run to run.
"""

from __future__ import annotations

from collections import deque

from .errors import DisconnectedGraphError, ParseError, ValidationError


class Graph:
    """Immutable undirected simple graph.

    Duplicate edges collapse silently; self-loops are rejected. ``labels`` is
    an optional per-vertex display string used only for rendering.
    """

    __slots__ = ("n", "adjacency", "labels", "neighbor_masks")

    def __init__(self, n, edges=(), labels=None):
        if n < 0:
            raise ValidationError("vertex count must be non-negative")
        neighbor_sets = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValidationError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValidationError(f"self-loop at vertex {u}")
            neighbor_sets[u].add(v)
            neighbor_sets[v].add(u)
        if labels is not None:
            labels = tuple(str(x) for x in labels)
            if len(labels) != n:
                raise ValidationError("labels must cover every vertex")
        self.n = n
        self.adjacency = tuple(tuple(sorted(s)) for s in neighbor_sets)
        self.labels = labels
        masks = []
        for nbrs in self.adjacency:
            m = 0
            for v in nbrs:
                m |= 1 << v
            masks.append(m)
        self.neighbor_masks = tuple(masks)

    @property
    def num_edges(self):
        return sum(len(nbrs) for nbrs in self.adjacency) // 2

    def degree(self, v):
        return len(self.adjacency[v])

    def edges(self):
        """Yield each edge once as (u, v) with u < v, in sorted order."""
        for u in range(self.n):
            for v in self.adjacency[u]:
                if u < v:
                    yield (u, v)

    def label(self, v):
        return self.labels[v] if self.labels is not None else str(v)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adjacency == other.adjacency

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.num_edges})"


def parse_edge_list(text):
    """Parse the edge-list text format into a Graph.

    Lines hold ``u v`` integer pairs; blank lines and lines starting with
    ``#`` are ignored. An optional first effective line ``n <count>`` declares
    the vertex count; otherwise n is one more than the largest id seen.
    Duplicate edges collapse; self-loops are rejected.
    """
    if hasattr(text, "read"):
        text = text.read()
    declared_n = None
    edges = []
    max_id = -1
    seen_effective_line = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if tokens[0] == "n":
            if seen_effective_line:
                raise ParseError("vertex-count header must be the first line", lineno)
            if len(tokens) != 2:
                raise ParseError("vertex-count header must be 'n <count>'", lineno)
            try:
                declared_n = int(tokens[1])
            except ValueError:
                raise ParseError(f"bad vertex count {tokens[1]!r}", lineno) from None
            if declared_n < 0:
                raise ParseError("vertex count must be non-negative", lineno)
            seen_effective_line = True
            continue
        seen_effective_line = True
        if len(tokens) != 2:
            raise ParseError(f"expected 'u v', got {line!r}", lineno)
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise ParseError(f"non-integer vertex id in {line!r}", lineno) from None
        if u < 0 or v < 0:
            raise ParseError(f"negative vertex id in {line!r}", lineno)
        if u == v:
            raise ValidationError(f"line {lineno}: self-loop at vertex {u}")
        if declared_n is not None and (u >= declared_n or v >= declared_n):
            raise ValidationError(
                f"line {lineno}: vertex id exceeds declared count n={declared_n}"
            )
        max_id = max(max_id, u, v)
        edges.append((u, v))
    n = declared_n if declared_n is not None else max_id + 1
    return Graph(n, edges)


def serialize_edge_list(g):
    """Canonical text form: ``n <count>`` header, then ``u v`` lines with u < v,
    sorted, newline-terminated. parse -> serialize -> parse is the identity."""
    lines = [f"n {g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def bfs_distances(g, source):
    """Hop counts from ``source`` to every vertex; None where unreachable."""
    if not (0 <= source < g.n):
        raise ValidationError(f"source vertex {source} out of range for n={g.n}")
    dist = [None] * g.n
    dist[source] = 0
    queue = deque([source])
    adjacency = g.adjacency
    while queue:
        u = queue.popleft()
        du = dist[u]
        for v in adjacency[u]:
            if dist[v] is None:
                dist[v] = du + 1
                queue.append(v)
    return dist


def disconnected_witness(g):
    """Return a pair of mutually unreachable vertices, or None if connected."""
    if g.n <= 1:
        return None
    dist = bfs_distances(g, 0)
    for v in range(g.n):
        if dist[v] is None:
            return (0, v)
    return None


def is_connected(g):
    return disconnected_witness(g) is None


def is_tree(g):
    return g.n >= 1 and g.num_edges == g.n - 1 and is_connected(g)


def is_path(g):
    """True for a simple path on at least two vertices."""
    if g.n < 2 or not is_connected(g):
        return False
    degree_counts = [0, 0, 0]
    for v in range(g.n):
        d = g.degree(v)
        if d > 2:
            return False
        degree_counts[d] += 1
    return degree_counts[1] == 2 and degree_counts[2] == g.n - 2


def eccentricity(g, v):
    """Max hop distance from v to any vertex. Requires a connected graph."""
    dist = bfs_distances(g, v)
    worst = 0
    for u, d in enumerate(dist):
        if d is None:
            raise DisconnectedGraphError(v, u)
        if d > worst:
            worst = d
    return worst


def diameter(g):
    """Max shortest-path distance over all pairs, by BFS from every vertex."""
    if g.n == 0:
        raise ValidationError("diameter of an empty graph is undefined")
    witness = disconnected_witness(g)
    if witness is not None:
        raise DisconnectedGraphError(*witness)
    return max(eccentricity(g, v) for v in range(g.n))


def choose_root(g, max_degree=None):
    """Deterministic root choice: minimum eccentricity, ties by smallest id.

    With ``max_degree`` set, only vertices of at most that degree are
    candidates; a connected graph is required either way.
    """
    if g.n == 0:
        raise ValidationError("cannot choose a root in an empty graph")
    witness = disconnected_witness(g)
    if witness is not None:
        raise DisconnectedGraphError(*witness)
    if max_degree is None:
        candidates = range(g.n)
    else:
        candidates = [v for v in range(g.n) if g.degree(v) <= max_degree]
        if not candidates:
            raise ValidationError(f"no vertex of degree <= {max_degree}")
    return min(candidates, key=lambda v: (eccentricity(g, v), v))


class RootedTree:
    """A tree with a distinguished root and derived per-vertex structure.

    ``parent[root]`` is None; ``children`` lists are sorted; ``depth`` counts
    hops from the root; ``height`` is the longest downward path length.
    """

    __slots__ = ("graph", "root", "parent", "children", "depth", "height")

    def __init__(self, parent, root, graph=None):
        parent = list(parent)
        n = len(parent)
        if not (0 <= root < n):
            raise ValidationError(f"root {root} out of range for n={n}")
        if parent[root] is not None:
            raise ValidationError("root must have no parent")
        children = [[] for _ in range(n)]
        for v, p in enumerate(parent):
            if v == root:
                continue
            if p is None or not (0 <= p < n):
                raise ValidationError(f"vertex {v} has invalid parent {p}")
            children[p].append(v)
        depth = [None] * n
        depth[root] = 0
        order = [root]
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for c in children[u]:
                depth[c] = depth[u] + 1
                order.append(c)
                queue.append(c)
        if len(order) != n:
            raise ValidationError("parent array does not form a tree on all vertices")
        height = [0] * n
        for u in reversed(order):
            if children[u]:
                height[u] = 1 + max(height[c] for c in children[u])
        self.root = root
        self.parent = tuple(parent)
        self.children = tuple(tuple(c) for c in children)
        self.depth = tuple(depth)
        self.height = tuple(height)
        if graph is None:
            graph = Graph(n, ((v, p) for v, p in enumerate(parent) if p is not None))
        self.graph = graph

    @property
    def n(self):
        return len(self.parent)

    def is_binary(self):
        return all(len(c) <= 2 for c in self.children)

    def __repr__(self):
        return f"{type(self).__name__}(n={self.n}, root={self.root})"


class RootedBinaryTree(RootedTree):
    """Rooted tree where each vertex has optional left/right children.

    ``origin`` maps each vertex back to an original vertex id; it is None for
    placeholder vertices introduced by the binary embedding and must be
    injective where present.
    """

    __slots__ = ("left", "right", "origin")

    def __init__(self, parent, root, left, right, origin=None, graph=None):
        super().__init__(parent, root, graph)
        n = self.n
        left = tuple(left)
        right = tuple(right)
        if len(left) != n or len(right) != n:
            raise ValidationError("left/right arrays must cover every vertex")
        for v in range(n):
            declared = {c for c in (left[v], right[v]) if c is not None}
            if declared != set(self.children[v]):
                raise ValidationError(f"left/right of vertex {v} disagree with its children")
        if origin is None:
            origin = tuple(range(n))
        else:
            origin = tuple(origin)
            if len(origin) != n:
                raise ValidationError("origin array must cover every vertex")
            present = [o for o in origin if o is not None]
            if len(present) != len(set(present)):
                raise ValidationError("origin must be injective over non-placeholder vertices")
        self.left = left
        self.right = right
        self.origin = origin


def bfs_spanning_tree(g, root):
    """BFS tree rooted at ``root``; each non-root vertex takes its smallest-id
    neighbor one level closer to the root as parent.

    Depth in the tree equals the BFS distance in ``g``, so the tree diameter is
    at most twice the graph diameter.
    """
    if not (0 <= root < g.n):
        raise ValidationError(f"root {root} out of range for n={g.n}")
    dist = bfs_distances(g, root)
    for v, d in enumerate(dist):
        if d is None:
            raise DisconnectedGraphError(root, v)
    parent = [None] * g.n
    for v in range(g.n):
        if v == root:
            continue
        want = dist[v] - 1
        parent[v] = next(w for w in g.adjacency[v] if dist[w] == want)
    return RootedTree(parent, root)


def as_binary(tree):
    """View a rooted tree with at most two children per vertex as a binary tree.

    A single child becomes the left child; two children are assigned left and
    right by ascending id. The origin map is the identity.
    """
    if not tree.is_binary():
        offender = next(v for v in range(tree.n) if len(tree.children[v]) > 2)
        raise ValidationError(f"vertex {offender} has more than two children")
    left = [None] * tree.n
    right = [None] * tree.n
    for v in range(tree.n):
        kids = tree.children[v]
        if len(kids) >= 1:
            left[v] = kids[0]
        if len(kids) == 2:
            right[v] = kids[1]
    return RootedBinaryTree(tree.parent, tree.root, left, right, graph=tree.graph)
