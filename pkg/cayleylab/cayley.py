"""
Cayley graphs Cay(S_n,S) of symmetric groups generated by transpositions.

Vertices are permutation ranks, e has rank 0. Vertex h is adjacent to 's then h' (written sh) for every s in S.
Right multiplication h -> (h then g) is then edge-preserving, which is what makes
R(S_n) from permgroup a group of automorphisms.
"""

import logging

from .perm import EVEN, Permutation, all_permutations
from .tgraph import SimpleGraph, build_tgraph, is_connected, girth, bfs_layers
from .tgraph import GraphError, CapExceededError, GenerationError, HypothesisError, ConsistencyError

logger = logging.getLogger(__name__)

DEFAULT_MAX_N = 8


class CayleyGraph:
    """Cay(S_n,S) on n! vertices indexed by rank; immutable once built."""

    def __init__(self, S, graph, permutations, rankOf):
        self.n = S.n
        self.S = S
        self.graph = graph
        self.permutations = permutations
        self.rankOf = rankOf
        self.eIndex = 0

    @property
    def vertexCount(self):
        return self.graph.vertexCount

    def vertexOf(self, p):
        return self.rankOf[p.images]

    def permutationAt(self, v):
        return self.permutations[v]

    def generatorVertex(self, t):
        """The neighbor of e belonging to the transposition t of S."""
        if t not in self.S:
            raise HypothesisError('transposition %s is not in S = {%s}' % (t, self.S))
        return self.vertexOf(t.toPermutation(self.n))

    def neighbors(self, v):
        return self.graph.neighbors(v)

    def __repr__(self):
        return 'CayleyGraph(S_%d, "%s")' % (self.n, self.S)


class CyclePath:
    """A cycle given by its distinct vertices in order; the closing edge back to the first vertex is implicit."""

    def __init__(self, vertices):
        self.vertices = tuple(vertices)
        if len(set(self.vertices)) != len(self.vertices):
            raise GraphError('cycle repeats a vertex: %s' % (self.vertices,))

    def canonical(self):
        """Least form over all rotations and both directions."""
        v = self.vertices
        rev = tuple(reversed(v))
        return min([v[i:] + v[:i] for i in range(len(v))] + [rev[i:] + rev[:i] for i in range(len(v))])

    def isCycleIn(self, graph):
        v = self.vertices
        return all(graph.hasEdge(v[i], v[(i + 1) % len(v)]) for i in range(len(v)))

    def render(self, cayley):
        return ' -> '.join(str(cayley.permutationAt(v)) for v in self.vertices)

    def __len__(self):
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def __contains__(self, v):
        return v in self.vertices

    def __eq__(self, other):
        return isinstance(other, CyclePath) and self.canonical() == other.canonical()

    def __hash__(self):
        return hash(self.canonical())

    def __lt__(self, other):
        return self.canonical() < other.canonical()

    def __repr__(self):
        return 'CyclePath(%s)' % (self.vertices,)


def build_cayley(S, maxN=DEFAULT_MAX_N):
    if S.n > maxN:
        raise CapExceededError('n = %d exceeds the construction cap %d' % (S.n, maxN))
    if not is_connected(build_tgraph(S)):
        raise GenerationError('S does not generate S_%d' % S.n)

    permutations = all_permutations(S.n)
    rankOf = {p.images: r for r, p in enumerate(permutations)}
    generators = [s.images for s in S.permutations()]
    adjacency = []
    for h in permutations:
        images = h.images
        adjacency.append([rankOf[tuple(images[x] for x in s)] for s in generators])
    graph = SimpleGraph(len(permutations), adjacency)
    logger.info('built Cay(S_%d, {%s}): %d vertices, %d edges', S.n, S, graph.vertexCount, graph.edgeCount())
    return CayleyGraph(S, graph, permutations, rankOf)


def bfs_distances(cayley, source):
    if not 0 <= source < cayley.vertexCount:
        raise GraphError('no vertex %d in a graph of %d vertices' % (source, cayley.vertexCount))
    return bfs_layers(cayley.graph, source)


def diameter(cayley):
    """Eccentricity of e, which is the diameter since Cayley graphs are vertex-transitive."""
    return max(bfs_distances(cayley, cayley.eIndex))


def bipartition_by_parity(cayley):
    """(even, odd) vertex sets; every edge is checked to join the two classes."""
    even = frozenset(v for v, p in enumerate(cayley.permutations) if p.parity() == EVEN)
    odd = frozenset(range(cayley.vertexCount)) - even
    for u, v in cayley.graph.edges():
        if (u in even) == (v in even):
            raise ConsistencyError('edge %s - %s inside one parity class' %
                                   (cayley.permutationAt(u), cayley.permutationAt(v)))
    return even, odd


def cycles_through_e(cayley, length):
    """
    Every simple cycle of the given length through e, once each. Paths are walked from e, the least vertex,
    and a cycle is kept only in the direction whose second vertex is smaller than its last.
    """
    adjacency = cayley.graph.adjacency
    e = cayley.eIndex
    found = []
    path = [e]
    onPath = {e}

    def extend():
        v = path[-1]
        if len(path) == length:
            if cayley.graph.hasEdge(v, e) and path[1] < path[-1]:
                found.append(CyclePath(path))
            return
        for u in adjacency[v]:
            if u not in onPath:
                path.append(u)
                onPath.add(u)
                extend()
                path.pop()
                onPath.discard(u)

    if length >= 3:
        extend()
    return found


def _pair_vertices(cayley, t, k):
    if t == k:
        raise HypothesisError('t and k must be distinct, got %s twice' % t)
    return cayley.generatorVertex(t), cayley.generatorVertex(k)


def count_4cycles_through(cayley, t, k):
    """All 4-cycles containing e, t and k."""
    vt, vk = _pair_vertices(cayley, t, k)
    return sorted(c for c in cycles_through_e(cayley, 4) if vt in c and vk in c)


def six_cycles_through_with_distance3(cayley, t, k, distances=None):
    """All 6-cycles containing e, t, k and some vertex at distance 3 from e; t and k must not commute."""
    vt, vk = _pair_vertices(cayley, t, k)
    if t.commutesWith(k):
        raise HypothesisError('hypothesis violated: %s and %s commute' % (t, k))
    if distances is None:
        distances = bfs_distances(cayley, cayley.eIndex)
    return sorted(c for c in cycles_through_e(cayley, 6)
                  if vt in c and vk in c and any(distances[v] == 3 for v in c))


def distance3_vertices(cayley, cycles, distances=None):
    """The distinct vertices at distance 3 from e lying on the given cycles."""
    if distances is None:
        distances = bfs_distances(cayley, cayley.eIndex)
    return sorted(set(v for c in cycles for v in c if distances[v] == 3))


def canonical_six_cycle(cayley, t, k):
    """The 6-cycle (e, t, kt, tkt, tk, k) that exists for every non-commuting pair t, k."""
    T = t.toPermutation(cayley.n)
    K = k.toPermutation(cayley.n)
    walk = [Permutation.identity(cayley.n), T, K.compose(T), T.compose(K).compose(T), T.compose(K), K]
    return CyclePath([cayley.vertexOf(p) for p in walk])


def girth_cayley(cayley):
    return girth(cayley.graph)
