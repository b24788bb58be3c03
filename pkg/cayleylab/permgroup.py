"""
Permutation groups given by generators.

Order and membership come from a base and strong generating set built by the deterministic incremental
Schreier-Sims algorithm. Internally the chain works on raw image tuples; the public API takes and returns
Permutation objects.
"""

import logging
import math
import threading
from collections import deque

from .perm import Permutation, Transposition, all_permutations

logger = logging.getLogger(__name__)

DEFAULT_ENUMERATION_CAP = 10 ** 4
DEFAULT_MAX_REGULAR_N = 8


def _mul(p, q):
    """p then q on image tuples."""
    return tuple(q[x] for x in p)


def _inv(p):
    inv = [0] * len(p)
    for x, y in enumerate(p):
        inv[y] = x
    return tuple(inv)


def _first_moved(p):
    for x, y in enumerate(p):
        if x != y:
            return x
    return None


class StabilizerChain:
    """
    Base and strong generating set.

    base[i] is the i-th base point, levelGenerators[i] generate the pointwise stabilizer of base[:i],
    and transversals[i] maps each point beta of the fundamental orbit of base[i] to a pair (u, u^-1)
    with u(base[i]) = beta.
    """

    def __init__(self, degree, generators):
        self.degree = degree
        self.identity = tuple(range(degree))
        gens = [g for g in dict.fromkeys(generators) if g != self.identity]

        # every generator must move some base point
        self.base = []
        for g in gens:
            if all(g[b] == b for b in self.base):
                self.base.append(_first_moved(g))

        self.strongGenerators = list(gens)
        self.levelGenerators = [[g for g in gens if all(g[b] == b for b in self.base[:i])]
                                for i in range(len(self.base))]
        self.transversals = [self._transversal(i) for i in range(len(self.base))]
        self._schreierSims()
        logger.debug('chain of degree %d: base length %d, orbit lengths %s',
                     degree, len(self.base), [len(t) for t in self.transversals])

    def _transversal(self, i):
        b = self.base[i]
        transversal = {b: (self.identity, self.identity)}
        queue = deque([b])
        gens = self.levelGenerators[i]
        while queue:
            x = queue.popleft()
            u = transversal[x][0]
            for g in gens:
                y = g[x]
                if y not in transversal:
                    v = _mul(u, g)
                    transversal[y] = (v, _inv(v))
                    queue.append(y)
        return transversal

    def strip(self, h, start=0):
        """
        Sift h through the levels from 'start' on.
        :return: (residue, level) where level is the index of the level that rejected h, or len(base) if h
                 passed every level (h is in the group iff then the residue is the identity)
        """
        for i in range(start, len(self.base)):
            b = self.base[i]
            beta = h[b]
            if beta == b:
                continue
            entry = self.transversals[i].get(beta)
            if entry is None:
                return h, i
            h = _mul(h, entry[1])
        return h, len(self.base)

    def _schreierSims(self):
        i = len(self.base) - 1
        while i >= 0:
            restart = False
            transversal = self.transversals[i]
            for beta, (u, _) in list(transversal.items()):
                for g in self.levelGenerators[i]:
                    u1, u1inv = transversal[g[beta]]
                    g1 = _mul(u, g)
                    if g1 == u1:
                        continue
                    h, j = self.strip(_mul(g1, u1inv), i + 1)
                    if j == len(self.base):
                        if h == self.identity:
                            continue
                        # h fixes every base point: extend the base
                        self.base.append(_first_moved(h))
                        self.levelGenerators.append([])
                        self.transversals.append(None)
                    self.strongGenerators.append(h)
                    for level in range(i + 1, j + 1):
                        self.levelGenerators[level].append(h)
                        self.transversals[level] = self._transversal(level)
                    i = j
                    restart = True
                    break
                if restart:
                    break
            if not restart:
                i -= 1

    def order(self):
        result = 1
        for t in self.transversals:
            result *= len(t)
        return result

    def contains(self, h):
        residue, level = self.strip(h)
        return level == len(self.base) and residue == self.identity


class GeneratedGroup:
    """
    A permutation group of the given degree, generated by a list of Permutations.
    The stabilizer chain is built once, on first use, under a lock.
    """

    def __init__(self, degree, generators):
        generators = list(generators)
        for g in generators:
            if g.degree != degree:
                raise GroupError('generator %s has degree %d, group has degree %d' % (g, g.degree, degree))
        self.degree = degree
        self.generators = tuple(generators)
        self._chain = None
        self._lock = threading.Lock()

    @classmethod
    def trivial(cls, degree):
        return cls(degree, [])

    def chain(self):
        with self._lock:
            if self._chain is None:
                self._chain = StabilizerChain(self.degree, [g.images for g in self.generators])
            return self._chain

    def order(self):
        return self.chain().order()

    def contains(self, p):
        """Membership by sifting p through the chain."""
        if p.degree != self.degree:
            raise GroupError('cannot test a permutation of degree %d against a group of degree %d' %
                             (p.degree, self.degree))
        return self.chain().contains(p.images)

    def __contains__(self, p):
        return self.contains(p)

    def isSubgroupOf(self, other):
        return self.degree == other.degree and all(other.contains(g) for g in self.generators)

    def orbit(self, point):
        seen = {point}
        queue = deque([point])
        while queue:
            x = queue.popleft()
            for g in self.generators:
                y = g.images[x]
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return seen

    def elements(self, cap=DEFAULT_ENUMERATION_CAP):
        """All group elements by closure under the generators; refuses groups larger than 'cap'."""
        if self.order() > cap:
            raise EnumerationCapError('group of order %d exceeds the enumeration cap %d' % (self.order(), cap))
        identity = Permutation.identity(self.degree)
        found = {identity}
        queue = deque([identity])
        while queue:
            x = queue.popleft()
            for g in self.generators:
                y = x.compose(g)
                if y not in found:
                    found.add(y)
                    queue.append(y)
        return sorted(found)

    def __str__(self):
        if not self.generators:
            return '<e>'
        return '<%s>' % ', '.join(str(g) for g in self.generators)

    def __repr__(self):
        return 'GeneratedGroup(%d, %r)' % (self.degree, list(self.generators))


class GroupFacts:
    """Order, plus exponent and abelian/Klein-four flags when the group is small enough to enumerate (else None)."""

    def __init__(self, order, exponent=None, isAbelian=None):
        self.order = order
        self.exponent = exponent
        self.isAbelian = isAbelian
        if exponent is None:
            self.isKleinFour = None
        else:
            self.isKleinFour = order == 4 and exponent == 2

    def available(self):
        return self.exponent is not None

    def __repr__(self):
        return 'GroupFacts(order=%d, exponent=%s, isAbelian=%s, isKleinFour=%s)' % \
               (self.order, self.exponent, self.isAbelian, self.isKleinFour)


def group_facts(G, cap=DEFAULT_ENUMERATION_CAP):
    order = G.order()
    if order > cap:
        logger.info('group of order %d above enumeration cap %d: exponent unavailable', order, cap)
        return GroupFacts(order)
    exponent = 1
    for x in G.elements(cap):
        o = x.order()
        exponent = exponent * o // math.gcd(exponent, o)
    abelian = all(a.compose(b) == b.compose(a) for a in G.generators for b in G.generators)
    return GroupFacts(order, exponent, abelian)


def is_normal_in(N, G):
    """True iff N is normal in G: every generator of N conjugated by every generator of G stays in N."""
    if N.degree != G.degree:
        raise NotSubgroupError('degree mismatch: %d vs %d' % (N.degree, G.degree))
    for x in N.generators:
        if not G.contains(x):
            raise NotSubgroupError('generator %s of N is not contained in G' % x)
    for g in G.generators:
        for x in N.generators:
            if not N.contains(x.conjugateBy(g)):
                logger.debug('conjugate of %s by %s leaves N', x, g)
                return False
    return True


def intersection_is_trivial(A, B, cap=DEFAULT_ENUMERATION_CAP):
    """True iff A and B meet only in the identity, decided by enumerating the smaller group."""
    if A.degree != B.degree:
        raise GroupError('degree mismatch: %d vs %d' % (A.degree, B.degree))
    small, large = (A, B) if A.order() <= B.order() else (B, A)
    if small.order() > cap:
        raise UndecidedError('both groups exceed the enumeration cap %d (orders %d, %d)' %
                             (cap, A.order(), B.order()))
    return not any(large.contains(x) for x in small.elements(cap) if not x.isIdentity())


class RegularRepresentation(GeneratedGroup):
    """
    R(S_n): S_n acting on the ranks of its own elements by right multiplication,
    the element g mapping rank(h) to rank(h then g).
    """

    def __init__(self, n):
        self.n = n
        self.permutations = all_permutations(n)
        self.rankOf = {p.images: r for r, p in enumerate(self.permutations)}
        generators = [self.image(Transposition(i, i + 1).toPermutation(n)) for i in range(n - 1)]
        GeneratedGroup.__init__(self, len(self.permutations), generators)

    def image(self, g):
        """The permutation of ranks induced by g."""
        if g.degree != self.n:
            raise GroupError('element of degree %d in the regular representation of S_%d' % (g.degree, self.n))
        q = g.images
        rankOf = self.rankOf
        return Permutation._trusted(tuple(rankOf[tuple(q[x] for x in p.images)] for p in self.permutations))


def right_regular_representation(n, maxN=DEFAULT_MAX_REGULAR_N):
    if not 2 <= n <= maxN:
        raise GroupError('regular representation needs 2 <= n <= %d, got %d' % (maxN, n))
    return RegularRepresentation(n)


class GroupError(ValueError):
    """Raised for invalid group operations."""
    def __init__(self, *args, **kwargs):
        ValueError.__init__(self, *args, **kwargs)


class NotSubgroupError(GroupError):
    """Raised when a normality test is asked about a group that is not a subgroup."""
    def __init__(self, *args, **kwargs):
        GroupError.__init__(self, *args, **kwargs)


class EnumerationCapError(GroupError):
    """Raised instead of enumerating a group above the enumeration cap."""
    def __init__(self, *args, **kwargs):
        GroupError.__init__(self, *args, **kwargs)


class UndecidedError(GroupError):
    """Raised when a question would need enumerating a group above the enumeration cap."""
    def __init__(self, *args, **kwargs):
        GroupError.__init__(self, *args, **kwargs)
