"""Simple undirected graphs on vertex labels 1..n, family generators, and
the purely graph-theoretic invariants used by the ideal-theoretic layers.

Vertex connectivity and the connected domination number are computed by
exhaustive subset search on purpose: at the sizes treated here (at most
~16 vertices) the searches are instant, and an exhaustive oracle is
trivially correct.  No flow-based or heuristic shortcut is used.
"""

import itertools
import json
import warnings

from .errors import DomainError, InvalidParameterError


class Graph:
    """An immutable simple graph on labels ``1..n``.

    Edges are stored canonically as a frozenset of ``(i, j)`` pairs with
    ``i < j``; two equal graphs compare equal.  ``labels`` optionally maps
    the vertex ``v`` of this graph back to a label ``labels[v-1]`` of a
    parent graph (set by :func:`induced_subgraph`); it does not take part
    in equality.
    """

    __slots__ = ("n", "edges", "family", "labels")

    def __init__(self, n, edges, family=None, labels=None):
        if n < 0:
            raise InvalidParameterError("vertex count must be >= 0, got %d" % n)
        canon = set()
        for e in edges:
            i, j = e
            if i == j:
                raise InvalidParameterError("self-loop at vertex %d" % i)
            if not (1 <= i <= n and 1 <= j <= n):
                raise InvalidParameterError(
                    "edge {%d,%d} leaves the vertex range 1..%d" % (i, j, n))
            canon.add((i, j) if i < j else (j, i))
        self.n = n
        self.edges = frozenset(canon)
        self.family = family
        self.labels = tuple(labels) if labels is not None else None

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return "Graph(%d, %s)" % (self.n, sorted(self.edges))

    @property
    def vertices(self):
        return range(1, self.n + 1)

    def adjacency(self):
        """Neighbor sets, as a dict vertex -> frozenset of neighbors."""
        nbrs = {v: set() for v in self.vertices}
        for i, j in self.edges:
            nbrs[i].add(j)
            nbrs[j].add(i)
        return {v: frozenset(s) for v, s in nbrs.items()}

    def neighbors(self, v):
        _check_vertex(self, v)
        return frozenset(u for e in self.edges for u in e if v in e) - {v}

    def degree(self, v):
        return len(self.neighbors(v))

    def has_edge(self, i, j):
        return ((i, j) if i < j else (j, i)) in self.edges

    def to_json(self):
        """Serialize as ``{"n": n, "edges": [[i, j], ...]}`` (1-based)."""
        return {"n": self.n, "edges": [list(e) for e in sorted(self.edges)]}

    @staticmethod
    def from_json(data):
        """Read a graph from the JSON dict format.

        Unlike the constructor (which canonicalizes), the reader rejects
        loops and duplicate edges outright: a file that contains them is
        taken to be corrupt.
        """
        n = data["n"]
        seen = set()
        for e in data["edges"]:
            if len(e) != 2:
                raise InvalidParameterError("edge %r is not a pair" % (e,))
            i, j = e
            if i == j:
                raise InvalidParameterError("self-loop at vertex %r" % (i,))
            key = (i, j) if i < j else (j, i)
            if key in seen:
                raise InvalidParameterError("duplicate edge {%r,%r}" % (i, j))
            seen.add(key)
        return Graph(n, seen)


def _check_vertex(g, v):
    if not (1 <= v <= g.n):
        raise InvalidParameterError("vertex %r outside 1..%d" % (v, g.n))


def _check_subset(g, vs):
    out = sorted(set(vs))
    for v in out:
        _check_vertex(g, v)
    return tuple(out)


# ---------------------------------------------------------------------------
# family generators


def crown_sides(n):
    """The bipartition of the crown graph: odd labels X and even labels Y."""
    x = tuple(2 * i - 1 for i in range(1, n + 1))
    y = tuple(2 * i for i in range(1, n + 1))
    return x, y


def generate(family, *args):
    """Build a canonical labeled graph from one of the named families.

    ``generate("crown", n)``                 crown graph on ``[2n]``: odd side X,
                                             even side Y, edges ``{2i-1, 2j}`` for ``i != j``
    ``generate("cycle", n)``                 cycle ``1-2-...-n-1``, n >= 3
    ``generate("path", n)``                  path ``1-2-...-n``
    ``generate("complete", n)``              complete graph
    ``generate("complete_multipartite", parts)``  parts labeled consecutively
    ``generate("empty", n)``                 no edges
    """
    if family == "crown":
        (n,) = args
        if n < 2:
            raise InvalidParameterError("crown graph needs n >= 2, got %d" % n)
        if n == 2:
            # 2K2; permitted as a degenerate member, but the structural
            # theorems all assume n >= 3.
            warnings.warn("crown graph with n=2 is a perfect matching; "
                          "results proved for n >= 3 do not apply", stacklevel=2)
        edges = [(2 * i - 1, 2 * j) for i in range(1, n + 1)
                 for j in range(1, n + 1) if i != j]
        return Graph(2 * n, edges, family=("crown", n))
    if family == "cycle":
        (n,) = args
        if n < 3:
            raise InvalidParameterError("cycle graph needs n >= 3, got %d" % n)
        edges = [(i, i + 1) for i in range(1, n)] + [(1, n)]
        return Graph(n, edges, family=("cycle", n))
    if family == "path":
        (n,) = args
        if n < 1:
            raise InvalidParameterError("path graph needs n >= 1, got %d" % n)
        return Graph(n, [(i, i + 1) for i in range(1, n)], family=("path", n))
    if family == "complete":
        (n,) = args
        if n < 1:
            raise InvalidParameterError("complete graph needs n >= 1, got %d" % n)
        return Graph(n, itertools.combinations(range(1, n + 1), 2),
                     family=("complete", n))
    if family == "complete_multipartite":
        (parts,) = args
        parts = tuple(parts)
        if len(parts) < 2:
            raise InvalidParameterError("complete multipartite graph needs >= 2 parts")
        if any(p < 1 for p in parts):
            raise InvalidParameterError("every part must have >= 1 vertex")
        blocks = []
        start = 1
        for p in parts:
            blocks.append(range(start, start + p))
            start += p
        edges = [(i, j) for a, b in itertools.combinations(blocks, 2)
                 for i in a for j in b]
        return Graph(start - 1, edges, family=("complete_multipartite", parts))
    if family == "empty":
        (n,) = args
        if n < 1:
            raise InvalidParameterError("empty graph needs n >= 1, got %d" % n)
        return Graph(n, [], family=("empty", n))
    raise InvalidParameterError("unknown graph family %r" % (family,))


def join(g1, g2):
    """Join product: shift g2's labels by ``g1.n`` and connect every vertex
    of g1 to every vertex of g2."""
    if g1.n == 0 or g2.n == 0:
        raise InvalidParameterError("join requires two nonempty graphs")
    s = g1.n
    edges = list(g1.edges)
    edges += [(i + s, j + s) for i, j in g2.edges]
    edges += [(i, j + s) for i in g1.vertices for j in g2.vertices]
    return Graph(g1.n + g2.n, edges)


def disjoint_union(g1, g2):
    """Disjoint union with g2's labels shifted by ``g1.n``; no cross edges."""
    s = g1.n
    edges = list(g1.edges) + [(i + s, j + s) for i, j in g2.edges]
    return Graph(g1.n + g2.n, edges)


def cone(g):
    """The cone over g: a new universal vertex.  Labeled so that the apex
    is vertex 1 and g keeps its order (shifted by 1)."""
    return join(generate("empty", 1), g)


# ---------------------------------------------------------------------------
# subgraphs and connectivity


def induced_subgraph(g, a):
    """Induced subgraph on the vertex set ``a``, relabeled order-preservingly
    to ``1..|a|``.  The returned graph's ``labels`` field maps each new label
    back to the old one."""
    a = _check_subset(g, a)
    pos = {v: k + 1 for k, v in enumerate(a)}
    keep = set(a)
    edges = [(pos[i], pos[j]) for i, j in g.edges if i in keep and j in keep]
    return Graph(len(a), edges, labels=a)


def components(g):
    """The partition of ``1..n`` into connected components, each sorted,
    ordered by smallest member."""
    nbrs = g.adjacency()
    seen = set()
    out = []
    for v in g.vertices:
        if v in seen:
            continue
        block = []
        stack = [v]
        seen.add(v)
        while stack:
            u = stack.pop()
            block.append(u)
            for w in nbrs[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        out.append(tuple(sorted(block)))
    return tuple(out)


def is_connected(g):
    return len(components(g)) <= 1


def _component_count_without(g, removed):
    """Number of connected components of G[V \\ removed] (union-find)."""
    keep = [v for v in g.vertices if v not in removed]
    if not keep:
        return 0
    parent = {v: v for v in keep}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    cnt = len(keep)
    for i, j in g.edges:
        if i in parent and j in parent:
            ri, rj = find(i), find(j)
            if ri != rj:
                parent[ri] = rj
                cnt -= 1
    return cnt


def cut_vertices(g):
    """All vertices whose removal increases the number of components."""
    base = len(components(g))
    out = []
    for v in g.vertices:
        if _component_count_without(g, {v}) > base:
            out.append(v)
    return tuple(out)


def local_completion(g, v):
    """The graph G_v on the same labels: G plus all edges between
    neighbors of v."""
    _check_vertex(g, v)
    nb = sorted(g.neighbors(v))
    extra = [(a, b) for a, b in itertools.combinations(nb, 2)]
    return Graph(g.n, list(g.edges) + extra)


def is_internal_vertex(g, v):
    """True iff v lies in more than one maximal complete subgraph.

    Equivalently (and this is what is tested): the neighborhood of v is
    not a clique.  A vertex whose neighborhood is a clique lies in exactly
    one maximal complete subgraph, namely the clique on ``{v} | N(v)``, so
    "internal" and "non-simplicial" coincide.
    """
    _check_vertex(g, v)
    nb = sorted(g.neighbors(v))
    return any(not g.has_edge(a, b) for a, b in itertools.combinations(nb, 2))


def vertex_connectivity(g):
    """Exact vertex connectivity by ascending exhaustive search over
    removal sets.  Complete graphs return n-1 by convention; disconnected
    input is a domain error."""
    n = g.n
    if n < 2:
        raise DomainError("vertex connectivity needs at least 2 vertices")
    if not is_connected(g):
        raise DomainError("vertex connectivity is defined for connected graphs")
    if len(g.edges) == n * (n - 1) // 2:
        return n - 1
    verts = list(g.vertices)
    for k in range(1, n - 1):
        for cut in itertools.combinations(verts, k):
            if _component_count_without(g, set(cut)) != 1:
                return k
    return n - 1  # unreachable for non-complete input, kept for safety


def connected_dominating_set(g):
    """Smallest connected dominating set, searched by size then
    lexicographically; the first witness found is returned."""
    if not is_connected(g):
        raise DomainError("connected domination is defined for connected graphs")
    nbrs = g.adjacency()
    verts = list(g.vertices)
    all_verts = set(verts)
    for k in range(1, g.n + 1):
        for cand in itertools.combinations(verts, k):
            dominated = set(cand)
            for v in cand:
                dominated |= nbrs[v]
            if dominated != all_verts:
                continue
            # a single vertex counts as trivially connected
            if k == 1 or len(components(induced_subgraph(g, cand))) == 1:
                return cand
    raise DomainError("no dominating set found (empty graph?)")


def connected_domination_number(g):
    """Size of the smallest connected dominating set (exhaustive)."""
    return len(connected_dominating_set(g))


def graph_to_text(g):
    return json.dumps(g.to_json(), separators=(",", ":"))
