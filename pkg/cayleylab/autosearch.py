"""
Automorphism groups of vertex-colored graphs by equitable refinement and individualize-refine search.

The search follows the first path of the search tree down to a discrete partition (the first leaf), then,
level by level from the bottom up, tries every vertex of the target cell that is not yet known to lie in the
orbit of the first path's choice. A subtree is searched for a leaf whose labeling maps the first leaf onto it
by an automorphism; nodes whose partition invariant differs from the first path's at the same depth are cut.
"""

import logging

from .permgroup import GeneratedGroup
from .perm import Permutation
from .tgraph import CapExceededError, ConsistencyError, bfs_layers

logger = logging.getLogger(__name__)

DEFAULT_MAX_SEARCH_VERTICES = 1000


class ColoredGraph:
    """A SimpleGraph with a sortable color per vertex; automorphisms must preserve colors."""

    def __init__(self, graph, colors=None):
        if colors is None:
            colors = [0] * graph.vertexCount
        colors = list(colors)
        if len(colors) != graph.vertexCount:
            raise ValueError('%d colors for %d vertices' % (len(colors), graph.vertexCount))
        self.graph = graph
        self.colors = colors

    @property
    def vertexCount(self):
        return self.graph.vertexCount

    def initialPartition(self):
        """One cell per color, cells in color order."""
        byColor = {}
        for v, c in enumerate(self.colors):
            byColor.setdefault(c, []).append(v)
        return OrderedPartition([byColor[c] for c in sorted(byColor)])

    def preserves(self, p):
        """Whether the vertex permutation p is a color-preserving automorphism."""
        return all(self.colors[v] == self.colors[p.images[v]] for v in range(self.vertexCount)) \
            and self.graph.isAutomorphism(p)


class OrderedPartition:
    """Ordered list of disjoint cells covering the vertex set; vertices inside a cell are kept sorted."""

    def __init__(self, cells):
        self.cells = tuple(tuple(sorted(c)) for c in cells)

    def cellIndex(self):
        """cellIndex()[v] is the position of the cell holding v."""
        return _cell_of(self.cells, sum(len(c) for c in self.cells))

    def isDiscrete(self):
        return all(len(c) == 1 for c in self.cells)

    def targetCell(self):
        """Position of the first smallest non-singleton cell."""
        best = None
        for i, c in enumerate(self.cells):
            if len(c) > 1 and (best is None or len(c) < len(self.cells[best])):
                best = i
        return best

    def individualize(self, i, v):
        """Split v off cell i into a singleton placed just before the rest of the cell."""
        rest = tuple(x for x in self.cells[i] if x != v)
        return OrderedPartition(self.cells[:i] + ((v,), rest) + self.cells[i + 1:])

    def shape(self):
        return tuple(len(c) for c in self.cells)

    def __eq__(self, other):
        return isinstance(other, OrderedPartition) and self.cells == other.cells

    def __hash__(self):
        return hash(self.cells)

    def __len__(self):
        return len(self.cells)

    def __repr__(self):
        return 'OrderedPartition(%s)' % (list(self.cells),)


def refine(g, p):
    """
    Coarsest equitable refinement of p. Each round splits every cell by the multiset of cells its vertices'
    neighbors lie in; fragments keep their cell's position and are ordered by that signature.
    """
    adjacency = g.graph.adjacency
    cells = p.cells
    while True:
        cellOf = _cell_of(cells, g.vertexCount)
        refined = []
        for cell in cells:
            if len(cell) == 1:
                refined.append(cell)
                continue
            fragments = {}
            for v in cell:
                signature = tuple(sorted(cellOf[u] for u in adjacency[v]))
                fragments.setdefault(signature, []).append(v)
            refined.extend(tuple(fragments[s]) for s in sorted(fragments))
        if len(refined) == len(cells):
            return OrderedPartition(refined)
        cells = tuple(refined)


def _cell_of(cells, vertexCount):
    index = [0] * vertexCount
    for i, c in enumerate(cells):
        for v in c:
            index[v] = i
    return index


def partition_invariant(g, p):
    """Cell sizes together with the quotient of an equitable partition (neighbor cells of each cell's first vertex)."""
    cellOf = _cell_of(p.cells, g.vertexCount)
    adjacency = g.graph.adjacency
    return tuple((len(c), tuple(sorted(cellOf[u] for u in adjacency[c[0]]))) for c in p.cells)


class AutomorphismSearch:
    """One run of the individualize-refine search on a ColoredGraph."""

    def __init__(self, g):
        self.g = g
        self.generators = []
        self.leavesVisited = 0

    def run(self):
        g = self.g
        path = []
        invariants = []
        p = refine(g, g.initialPartition())
        while not p.isDiscrete():
            i = p.targetCell()
            path.append((p, i, p.cells[i][0]))
            invariants.append(partition_invariant(g, p))
            p = refine(g, p.individualize(i, p.cells[i][0]))
        invariants.append(partition_invariant(g, p))
        self.firstLeaf = [c[0] for c in p.cells]
        self.invariants = invariants
        logger.debug('first path of depth %d on %d vertices', len(path), g.vertexCount)

        for depth in reversed(range(len(path))):
            node, i, v = path[depth]
            orbit = self._orbit(v)
            for w in node.cells[i]:
                if w in orbit:
                    continue
                gamma = self._searchSubtree(refine(g, node.individualize(i, w)), depth + 1)
                if gamma is not None:
                    self.generators.append(gamma)
                    orbit = self._orbit(v)
        logger.debug('found %d generators after %d leaves', len(self.generators), self.leavesVisited)
        return GeneratedGroup(g.vertexCount, self.generators)

    def _orbit(self, v):
        """Orbit of v under the generators found so far; all of them fix the first path above the current level."""
        seen = {v}
        stack = [v]
        while stack:
            x = stack.pop()
            for gamma in self.generators:
                y = gamma.images[x]
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return seen

    def _searchSubtree(self, p, depth):
        if partition_invariant(self.g, p) != self.invariants[depth]:
            return None
        if p.isDiscrete():
            return self._leafAutomorphism(p)
        i = p.targetCell()
        for x in p.cells[i]:
            gamma = self._searchSubtree(refine(self.g, p.individualize(i, x)), depth + 1)
            if gamma is not None:
                return gamma
        return None

    def _leafAutomorphism(self, p):
        self.leavesVisited += 1
        images = [0] * self.g.vertexCount
        for v, cell in zip(self.firstLeaf, p.cells):
            images[v] = cell[0]
        gamma = Permutation._trusted(tuple(images))
        if self.g.preserves(gamma):
            return gamma
        return None


def automorphism_group(g, maxVertices=DEFAULT_MAX_SEARCH_VERTICES):
    """Generators of the full color-preserving automorphism group of g."""
    if g.vertexCount > maxVertices:
        raise CapExceededError('automorphism search limited to %d vertices, got %d' % (maxVertices, g.vertexCount))
    group = AutomorphismSearch(g).run()
    for gamma in group.generators:
        if not g.preserves(gamma):
            raise ConsistencyError('search produced a non-automorphism %s' % gamma)
    return group


def _individualized(g, vertices, distanceSeed):
    """Colors giving each of 'vertices' its own class, optionally split further by distance from vertices[0]."""
    marker = {v: i for i, v in enumerate(vertices)}
    if distanceSeed:
        distance = [-1 if d is None else d for d in bfs_layers(g.graph, vertices[0])]
    else:
        distance = [0] * g.vertexCount
    colors = [(g.colors[u], distance[u], marker.get(u, -1)) for u in range(g.vertexCount)]
    return ColoredGraph(g.graph, colors)


def vertex_stabilizer(g, v, maxVertices=DEFAULT_MAX_SEARCH_VERTICES, distanceSeed=True):
    """Automorphisms fixing v."""
    return automorphism_group(_individualized(g, [v], distanceSeed), maxVertices)


def pointwise_neighborhood_stabilizer(g, v, maxVertices=DEFAULT_MAX_SEARCH_VERTICES, distanceSeed=True):
    """Automorphisms fixing v and each of its neighbors (the group L_v)."""
    return automorphism_group(_individualized(g, [v] + list(g.graph.neighbors(v)), distanceSeed), maxVertices)
