"""
Transposition sets S, their transposition graphs T(S), and the group Aut(S_n,S) induced on the Cayley graph.
"""

import itertools
import logging
from collections import deque
from functools import total_ordering

import networkx

from .perm import Permutation, Transposition, PermutationError, all_permutations
from .permgroup import GeneratedGroup

logger = logging.getLogger(__name__)

DEFAULT_MAX_TGRAPH_VERTICES = 12
BRUTE_FORCE_LIMIT = 8


class TranspositionSet:
    """The generating set S: n points and a duplicate-free list of transpositions on them."""

    def __init__(self, n, edges):
        edges = list(edges)
        seen = set()
        for t in edges:
            if not isinstance(t, Transposition):
                raise GraphError('expected Transposition, got %r' % (t,))
            if t.b >= n:
                raise GraphError('transposition %s has an endpoint beyond %d points' % (t, n))
            if t in seen:
                raise GraphError('duplicate transposition %s' % t)
            seen.add(t)
        self.n = n
        self.edges = tuple(edges)
        self._permutations = None

    @classmethod
    def parse(cls, text, n=None):
        """
        Parse the edge-list format: whitespace-separated 1-based tokens 'a-b', e.g. '1-2 2-3 3-4 4-1'.
        :param n: point count; inferred as the largest endpoint if omitted
        """
        edges = []
        seen = {}
        position = 0
        for token in text.split():
            position = text.index(token, position)
            try:
                t = Transposition.parse(token)
            except PermutationError as e:
                raise EdgeListError(str(e), position)
            if t in seen:
                raise EdgeListError('duplicate edge "%s" (first given at position %d)' % (token, seen[t]), position)
            seen[t] = position
            edges.append(t)
            position += len(token)
        largest = max([t.b + 1 for t in edges] or [0])
        if n is None:
            n = largest
        elif n < largest:
            raise EdgeListError('edge endpoint %d exceeds the given point count %d' % (largest, n), 0)
        return cls(n, edges)

    @classmethod
    def fromGraph(cls, g):
        """The transposition set whose transposition graph is g."""
        return cls(g.vertexCount, [Transposition(u, v) for u, v in g.edges()])

    def permutations(self):
        """The transpositions as permutations of degree n, in edge order."""
        if self._permutations is None:
            self._permutations = tuple(t.toPermutation(self.n) for t in self.edges)
        return list(self._permutations)

    def __iter__(self):
        return iter(self.edges)

    def __len__(self):
        return len(self.edges)

    def __contains__(self, t):
        return t in self.edges

    def __eq__(self, other):
        return isinstance(other, TranspositionSet) and self.n == other.n and set(self.edges) == set(other.edges)

    def __hash__(self):
        return hash((self.n, frozenset(self.edges)))

    def __str__(self):
        return ' '.join(t.edgeToken() for t in self.edges)

    def __repr__(self):
        return 'TranspositionSet(%d, "%s")' % (self.n, self)


class SimpleGraph:
    """Undirected simple graph on vertices 0..vertexCount-1 with sorted neighbor lists."""

    def __init__(self, vertexCount, adjacency):
        adjacency = [tuple(sorted(set(nbrs))) for nbrs in adjacency]
        if len(adjacency) != vertexCount:
            raise GraphError('adjacency has %d rows for %d vertices' % (len(adjacency), vertexCount))
        self.vertexCount = vertexCount
        self.adjacency = tuple(adjacency)
        self._adjacent = [frozenset(nbrs) for nbrs in adjacency]
        for v, nbrs in enumerate(adjacency):
            for u in nbrs:
                if u == v:
                    raise GraphError('self-loop at vertex %d' % v)
                if v not in self._adjacent[u]:
                    raise GraphError('asymmetric adjacency between %d and %d' % (v, u))

    @classmethod
    def fromEdges(cls, vertexCount, edges):
        adjacency = [[] for _ in range(vertexCount)]
        for u, v in edges:
            adjacency[u].append(v)
            adjacency[v].append(u)
        return cls(vertexCount, adjacency)

    @classmethod
    def fromNetworkx(cls, g):
        """Relabel the nodes of a networkx graph to 0..n-1 in sorted order."""
        index = {node: i for i, node in enumerate(sorted(g.nodes()))}
        return cls.fromEdges(len(index), [(index[u], index[v]) for u, v in g.edges()])

    def toNetworkx(self):
        g = networkx.Graph()
        g.add_nodes_from(range(self.vertexCount))
        g.add_edges_from(self.edges())
        return g

    def neighbors(self, v):
        return self.adjacency[v]

    def degree(self, v):
        return len(self.adjacency[v])

    def hasEdge(self, u, v):
        return v in self._adjacent[u]

    def edges(self):
        return [(u, v) for u, nbrs in enumerate(self.adjacency) for v in nbrs if u < v]

    def edgeCount(self):
        return sum(len(nbrs) for nbrs in self.adjacency) // 2

    def isRegular(self):
        return len(set(len(nbrs) for nbrs in self.adjacency)) <= 1

    def isAutomorphism(self, p):
        """Whether the vertex permutation p maps edges onto edges."""
        if p.degree != self.vertexCount:
            return False
        images = p.images
        return all(self.hasEdge(images[u], images[v]) for u, v in self.edges())

    def __repr__(self):
        return 'SimpleGraph(%d, %s)' % (self.vertexCount, self.edges())


@total_ordering
class Girth:
    """Length of a shortest cycle, or INFINITE for forests; INFINITE compares above every integer."""

    def __init__(self, value=None):
        if value is not None and value < 3:
            raise GraphError('girth must be at least 3, got %d' % value)
        self.value = value

    def isInfinite(self):
        return self.value is None

    def __eq__(self, other):
        if isinstance(other, Girth):
            return self.value == other.value
        if isinstance(other, int):
            return self.value == other
        return NotImplemented

    def __lt__(self, other):
        if isinstance(other, Girth):
            other = other.value
        elif not isinstance(other, int):
            return NotImplemented
        if self.value is None:
            return False
        return other is None or self.value < other

    def __hash__(self):
        return hash(self.value)

    def toJson(self):
        return 'infinite' if self.value is None else self.value

    def __str__(self):
        return 'infinite' if self.value is None else str(self.value)

    def __repr__(self):
        return 'Girth(%s)' % self


INFINITE = Girth()


def build_tgraph(S):
    """T(S): vertices 0..n-1, an edge {a, b} for each transposition (a,b) in S."""
    return SimpleGraph.fromEdges(S.n, [(t.a, t.b) for t in S])


def bfs_layers(g, source):
    """Shortest-path distances from source; None for unreachable vertices."""
    distance = [None] * g.vertexCount
    distance[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for u in g.adjacency[v]:
            if distance[u] is None:
                distance[u] = distance[v] + 1
                queue.append(u)
    return distance


def is_connected(g):
    if g.vertexCount == 0:
        return True
    return all(d is not None for d in bfs_layers(g, 0))


def girth(g):
    """Shortest cycle length by a breadth-first search from every vertex."""
    best = None
    for root in range(g.vertexCount):
        distance = {root: 0}
        parent = {root: None}
        queue = deque([root])
        while queue:
            v = queue.popleft()
            if best is not None and 2 * distance[v] + 1 >= best:
                break
            for u in g.adjacency[v]:
                if u not in distance:
                    distance[u] = distance[v] + 1
                    parent[u] = v
                    queue.append(u)
                elif parent[v] != u:
                    length = distance[v] + distance[u] + 1
                    if best is None or length < best:
                        best = length
    return Girth(best)


def is_tree(g):
    return is_connected(g) and g.edgeCount() == g.vertexCount - 1


def is_triangle_free(g):
    return not any(g.hasEdge(u, w) for u, v in g.edges() for w in g.adjacency[v] if w != u)


def is_cycle_graph(g):
    """Connected and 2-regular on at least 3 vertices."""
    return g.vertexCount >= 3 and is_connected(g) and all(len(nbrs) == 2 for nbrs in g.adjacency)


def has_four_cycle(g):
    """Whether some two vertices have two common neighbors."""
    for u, v in itertools.combinations(range(g.vertexCount), 2):
        if len(g._adjacent[u] & g._adjacent[v]) >= 2:
            return True
    return False


def path_set(n):
    """Edges 1-2, 2-3, ..., (n-1)-n."""
    return TranspositionSet(n, [Transposition(i, i + 1) for i in range(n - 1)])


def star_set(n):
    """The star K_{1,n-1} centred at point 1."""
    return TranspositionSet(n, [Transposition(0, i) for i in range(1, n)])


def cycle_set(n):
    """The n-cycle 1-2, ..., (n-1)-n, n-1; needs n >= 3."""
    if n < 3:
        raise GraphError('a cycle needs at least 3 points, got %d' % n)
    return TranspositionSet(n, [Transposition(i, (i + 1) % n) for i in range(n)])


def tree_from_pruefer(sequence):
    """The tree on len(sequence) + 2 points with the given 1-based Pruefer sequence."""
    n = len(sequence) + 2
    sequence = [x - 1 for x in sequence]
    if any(not 0 <= x < n for x in sequence):
        raise GraphError('Pruefer sequence entries must lie in 1..%d' % n)
    degree = [1] * n
    for x in sequence:
        degree[x] += 1
    edges = []
    for x in sequence:
        leaf = min(v for v in range(n) if degree[v] == 1)
        edges.append(Transposition(leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, v = [v for v in range(n) if degree[v] == 1]
    edges.append(Transposition(u, v))
    return TranspositionSet(n, edges)


def graph_automorphisms(g, maxVertices=DEFAULT_MAX_TGRAPH_VERTICES):
    """Full automorphism group of a small graph (T(S) in practice), found by the autosearch engine."""
    if g.vertexCount > maxVertices:
        raise CapExceededError('graph with %d vertices exceeds the cap of %d' % (g.vertexCount, maxVertices))
    from .autosearch import ColoredGraph, automorphism_group
    return automorphism_group(ColoredGraph(g))


def brute_force_automorphisms(g):
    """Every vertex permutation that preserves edges; an oracle for graphs of at most 8 vertices."""
    if g.vertexCount > BRUTE_FORCE_LIMIT:
        raise CapExceededError('brute force is limited to %d vertices, got %d' % (BRUTE_FORCE_LIMIT, g.vertexCount))
    edges = g.edges()
    found = []
    for images in itertools.permutations(range(g.vertexCount)):
        if all(g.hasEdge(images[u], images[v]) for u, v in edges):
            found.append(Permutation._trusted(images))
    return found


class ConjugationGroup(GeneratedGroup):
    """Aut(S_n,S) acting on the Cayley graph vertices (ranks), with the Aut(T(S)) it was induced from."""

    def __init__(self, degree, generators, tgraphGroup):
        GeneratedGroup.__init__(self, degree, generators)
        self.tgraphGroup = tgraphGroup


def aut_sn_s(S, maxN=8, maxVertices=DEFAULT_MAX_TGRAPH_VERTICES):
    """
    Aut(S_n,S) as permutations of Cayley graph vertex ranks: each automorphism sigma of T(S) induces
    x -> sigma^-1 x sigma. Every induced map is checked to fix S setwise before it is used.
    """
    tgraph = build_tgraph(S)
    if not is_connected(tgraph):
        raise GenerationError('S does not generate S_%d' % S.n)
    if S.n > maxN:
        raise CapExceededError('n = %d exceeds the construction cap %d' % (S.n, maxN))

    tgraphGroup = graph_automorphisms(tgraph, maxVertices)
    generating = set(p.images for p in S.permutations())
    permutations = all_permutations(S.n)
    rankOf = {p.images: r for r, p in enumerate(permutations)}

    induced = []
    for sigma in tgraphGroup.generators:
        for s in S.permutations():
            if s.conjugateBy(sigma).images not in generating:
                raise ConsistencyError('conjugation by %s moves %s out of S' % (sigma, s))
        induced.append(Permutation._trusted(tuple(rankOf[p.conjugateBy(sigma).images] for p in permutations)))
    logger.debug('Aut(S_%d,S) induced from %d generators of Aut(T(S))', S.n, len(induced))
    return ConjugationGroup(len(permutations), induced, tgraphGroup)


class GraphError(ValueError):
    """Raised for invalid graphs and transposition sets."""
    def __init__(self, *args, **kwargs):
        ValueError.__init__(self, *args, **kwargs)


class EdgeListError(GraphError):
    """Raised for malformed edge-list text; 'position' is the character offset of the offending token."""
    def __init__(self, message, position):
        GraphError.__init__(self, '%s (at position %d)' % (message, position))
        self.message = message
        self.position = position


class CapExceededError(GraphError):
    """Raised when an input exceeds a configured size cap."""
    def __init__(self, *args, **kwargs):
        GraphError.__init__(self, *args, **kwargs)


class GenerationError(GraphError):
    """Raised when S does not generate S_n, i.e. T(S) is disconnected."""
    def __init__(self, *args, **kwargs):
        GraphError.__init__(self, *args, **kwargs)


class HypothesisError(GraphError):
    """Raised when an operation is called outside the hypothesis it is defined for."""
    def __init__(self, *args, **kwargs):
        GraphError.__init__(self, *args, **kwargs)


class NotACycleError(GraphError):
    """Raised when T(S) was required to be a cycle graph."""
    def __init__(self, *args, **kwargs):
        GraphError.__init__(self, *args, **kwargs)


class ConsistencyError(RuntimeError):
    """A mathematical certainty failed at run time; this indicates a bug, never bad input."""
    def __init__(self, *args, **kwargs):
        RuntimeError.__init__(self, *args, **kwargs)
