"""Cut sets with the cut-point property and the dimension/height data of
the associated minimal primes.

A subset T of the vertices has the cut-point property when every i in T
is a cut vertex of G[T-bar + {i}]; equivalently c(T) > c(T \\ {i}) where
c(T) counts the connected components after removing T.  These sets index
the minimal primes of the binomial edge ideal, and the Krull dimension,
height, and big height of the quotient all fall out of the component
counts alone, with no polynomial arithmetic.
"""

import itertools

from .errors import InvalidParameterError, ResourceLimitError
from .graphs import components, crown_sides, generate, induced_subgraph

ENUMERATION_CAP = 20  # 2^n subset scans beyond this are refused


class PrimeSupport:
    """A cut set T together with the connected components of G[T-bar],
    in original vertex labels."""

    __slots__ = ("t", "comps")

    def __init__(self, t, comps):
        self.t = tuple(sorted(t))
        self.comps = tuple(sorted((tuple(sorted(c)) for c in comps),
                                  key=lambda c: c[0]))

    def __eq__(self, other):
        return (isinstance(other, PrimeSupport)
                and self.t == other.t and self.comps == other.comps)

    def __hash__(self):
        return hash((self.t, self.comps))

    def __repr__(self):
        return "PrimeSupport(t=%r, comps=%r)" % (list(self.t), [list(c) for c in self.comps])

    def validate(self, g):
        """Check the defining invariants against the ambient graph."""
        cover = sorted(self.t + tuple(v for c in self.comps for v in c))
        if cover != list(g.vertices):
            raise InvalidParameterError("t and components do not partition 1..n")
        where = {}
        for k, c in enumerate(self.comps):
            for v in c:
                where[v] = k
        for i, j in g.edges:
            if i in where and j in where and where[i] != where[j]:
                raise InvalidParameterError(
                    "edge {%d,%d} joins two distinct components" % (i, j))
        for c in self.comps:
            if len(components(induced_subgraph(g, c))) != 1:
                raise InvalidParameterError("component %r is not connected" % (c,))


class CutSetFamily:
    """All prime supports of a graph, sorted by (|T|, T)."""

    def __init__(self, graph, supports):
        self.graph = graph
        self.supports = tuple(sorted(supports, key=lambda s: (len(s.t), s.t)))

    def __len__(self):
        return len(self.supports)

    def __iter__(self):
        return iter(self.supports)

    def cut_sets(self):
        return [s.t for s in self.supports]

    def to_json(self):
        n2 = 2 * self.graph.n
        out = []
        for s in self.supports:
            d = quotient_dimension(self.graph, s.t)
            out.append({"t": list(s.t),
                        "components": [list(c) for c in s.comps],
                        "dim": d,
                        "height": n2 - d})
        return out


def _comps_after_removal(g, t):
    return components(induced_subgraph(g, [v for v in g.vertices if v not in t]))


def component_count_after_removal(g, t):
    """c_G(T): connected components of G[T-bar]."""
    t = set(t)
    if len(t) >= g.n:
        raise InvalidParameterError("cut set must leave at least one vertex")
    return len(_comps_after_removal(g, t))


def has_cut_point_property(g, t):
    """True for the empty set; otherwise every i in T must satisfy
    c(T) > c(T \\ {i})."""
    t = tuple(sorted(set(t)))
    if not t:
        return True
    if len(t) >= g.n:
        return False
    c_t = component_count_after_removal(g, t)
    for i in t:
        rest = tuple(v for v in t if v != i)
        if c_t <= component_count_after_removal(g, rest):
            return False
    return True


def enumerate_cutsets(g, cap=ENUMERATION_CAP):
    """Exhaustive scan of all 2^n subsets for the cut-point property.

    The property is not monotone, so no subset pruning is sound; the
    component counts c(T) are memoized per subset so that the c(T \\ {i})
    comparisons reuse earlier work.
    """
    n = g.n
    if n > cap:
        raise ResourceLimitError(
            "cut set enumeration over 2^%d subsets exceeds the cap of 2^%d" % (n, cap))
    verts = list(g.vertices)
    count_memo = {(): len(components(g))}

    def ccount(t):
        c = count_memo.get(t)
        if c is None:
            c = len(_comps_after_removal(g, set(t)))
            count_memo[t] = c
        return c

    found = [PrimeSupport((), components(g))]
    for k in range(1, n):
        for t in itertools.combinations(verts, k):
            c_t = ccount(t)
            if all(c_t > ccount(t[:idx] + t[idx + 1:]) for idx in range(k)):
                found.append(PrimeSupport(t, _comps_after_removal(g, set(t))))
    return CutSetFamily(g, found)


def crown_cutset_classification(n):
    """The closed-form cut-set family of the crown graph: the empty set,
    X, Y, every X minus one odd vertex, every Y minus one even vertex, and
    every A-type set A + (A+1) with A a subset of X of size n-2.

    Emitted directly from the classification, with no graph search, so it
    can serve as an independent cross-check of :func:`enumerate_cutsets`.
    """
    if n < 3:
        raise InvalidParameterError("the crown classification assumes n >= 3")
    g = generate("crown", n)
    x, y = crown_sides(n)
    supports = [PrimeSupport((), (tuple(range(1, 2 * n + 1)),))]
    # T = X: the evens survive as isolated vertices (and symmetrically)
    supports.append(PrimeSupport(x, tuple((v,) for v in y)))
    supports.append(PrimeSupport(y, tuple((v,) for v in x)))
    for i in range(1, n + 1):
        xi = 2 * i - 1
        t = tuple(v for v in x if v != xi)
        big = tuple(sorted((xi,) + tuple(v for v in y if v != 2 * i)))
        supports.append(PrimeSupport(t, ((2 * i,), big)))
        yi = 2 * i
        t = tuple(v for v in y if v != yi)
        big = tuple(sorted((yi,) + tuple(v for v in x if v != 2 * i - 1)))
        supports.append(PrimeSupport(t, ((2 * i - 1,), big)))
    for a in itertools.combinations(x, n - 2):
        t = tuple(sorted(a + tuple(v + 1 for v in a)))
        i, j = sorted(set(x) - set(a))  # the two odd survivors
        supports.append(PrimeSupport(t, ((i, j + 1), (i + 1, j))))
    return CutSetFamily(g, supports)


def quotient_dimension(g, t):
    """dim of the quotient by the prime of T: |V| - |T| + c(T)."""
    t = tuple(sorted(set(t)))
    return g.n - len(t) + component_count_after_removal(g, t)


def krull_dimension(g):
    """Krull dimension of the quotient by the binomial edge ideal:
    the maximum of :func:`quotient_dimension` over the cut-set family."""
    fam = enumerate_cutsets(g)
    return max(quotient_dimension(g, s.t) for s in fam)


def heights(g):
    """(height, big height) of the binomial edge ideal, from the ambient
    dimension 2|V| minus the extreme quotient dimensions."""
    fam = enumerate_cutsets(g)
    dims = [quotient_dimension(g, s.t) for s in fam]
    return 2 * g.n - max(dims), 2 * g.n - min(dims)
