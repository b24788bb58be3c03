"""
Permutations of {0..n-1} and transpositions.

Points are 0-based internally and rendered 1-based. Products use the right action:
p.compose(q) applies p first, then q, so that for k = (1,2), t = (2,3) the product kt is (1,3,2).
"""

import math
import re

EVEN = 'even'
ODD = 'odd'

EDGE_TOKEN = re.compile(r'([0-9]+)-([0-9]+)', re.ASCII)


class Permutation:
    """Immutable permutation given by its image table: images[i] is the image of point i."""

    __slots__ = ('images',)

    def __init__(self, images):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise PermutationError('not a bijection of {0..%d}: %s' % (len(images) - 1, list(images)))
        object.__setattr__(self, 'images', images)

    def __setattr__(self, key, value):
        raise AttributeError('Permutation is immutable')

    def __reduce__(self):
        return (Permutation, (self.images,))

    @classmethod
    def identity(cls, n):
        return cls._trusted(tuple(range(n)))

    @classmethod
    def fromCycles(cls, n, cycles, offset=1):
        """
        Build a permutation of degree n from disjoint cycles.
        :param cycles: iterable of point sequences, e.g. [(1, 2, 3)]
        :param offset: 1 for 1-based points as printed, 0 for internal points
        """
        images = list(range(n))
        seen = set()
        for cycle in cycles:
            cycle = [x - offset for x in cycle]
            for x in cycle:
                if not 0 <= x < n or x in seen:
                    raise PermutationError('cycles %s are not disjoint cycles on %d points' % (cycles, n))
                seen.add(x)
            for i, x in enumerate(cycle):
                images[x] = cycle[(i + 1) % len(cycle)]
        return cls._trusted(tuple(images))

    @classmethod
    def _trusted(cls, images):
        """Skip the bijection check for image tables produced by our own arithmetic."""
        p = cls.__new__(cls)
        object.__setattr__(p, 'images', images)
        return p

    @property
    def degree(self):
        return len(self.images)

    def __call__(self, x):
        return self.images[x]

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.images)

    def __lt__(self, other):
        return self.images < other.images

    def __mul__(self, other):
        return self.compose(other)

    def __repr__(self):
        return 'Permutation(%s)' % (list(self.images),)

    def __str__(self):
        """Disjoint cycle notation with 1-based points; the identity is 'e'."""
        cycles = self.cycleStructure().cycles
        if not cycles:
            return 'e'
        return ''.join('(%s)' % ','.join(str(x + 1) for x in c) for c in cycles)

    def _checkDegree(self, other):
        if self.degree != other.degree:
            raise PermutationError('degree mismatch: %d vs %d' % (self.degree, other.degree))

    def compose(self, other):
        """Product self then other: point x maps to other(self(x))."""
        self._checkDegree(other)
        q = other.images
        return Permutation._trusted(tuple(q[x] for x in self.images))

    def inverse(self):
        inv = [0] * self.degree
        for x, y in enumerate(self.images):
            inv[y] = x
        return Permutation._trusted(tuple(inv))

    def isIdentity(self):
        return all(x == y for x, y in enumerate(self.images))

    def conjugateBy(self, g):
        """g^-1 self g. Relabels the cycles of self by g: (a b ..) becomes (g(a) g(b) ..)."""
        self._checkDegree(g)
        return g.inverse().compose(self).compose(g)

    def cycleStructure(self):
        return CycleStructure.of(self)

    def support(self):
        return frozenset(x for x, y in enumerate(self.images) if x != y)

    def parity(self):
        """EVEN or ODD: a cycle of length l is a product of l-1 transpositions."""
        transpositions = sum(len(c) - 1 for c in self.cycleStructure().cycles)
        return ODD if transpositions % 2 else EVEN

    def order(self):
        """Element order: lcm of the cycle lengths."""
        result = 1
        for c in self.cycleStructure().cycles:
            result = result * len(c) // math.gcd(result, len(c))
        return result

    def rank(self):
        """Lexicographic rank via the Lehmer code; the identity has rank 0."""
        images = self.images
        n = len(images)
        r = 0
        for i in range(n):
            smaller = sum(1 for j in range(i + 1, n) if images[j] < images[i])
            r += smaller * math.factorial(n - 1 - i)
        return r


def unrank(r, n):
    """Inverse of Permutation.rank(): the permutation of degree n with lexicographic rank r."""
    if not 0 <= r < math.factorial(n):
        raise PermutationError('rank %d out of range for degree %d' % (r, n))
    remaining = list(range(n))
    images = []
    for i in range(n):
        digit, r = divmod(r, math.factorial(n - 1 - i))
        images.append(remaining.pop(digit))
    return Permutation._trusted(tuple(images))


def all_permutations(n):
    """All permutations of degree n in rank order."""
    return [unrank(r, n) for r in range(math.factorial(n))]


class CycleStructure:
    """Disjoint cycles of length >= 2, each starting at its least point, sorted by that point."""

    def __init__(self, cycles):
        self.cycles = tuple(tuple(c) for c in cycles)

    @classmethod
    def of(cls, p):
        cycles = []
        seen = set()
        for start in range(p.degree):
            if start in seen or p.images[start] == start:
                continue
            cycle = [start]
            seen.add(start)
            x = p.images[start]
            while x != start:
                cycle.append(x)
                seen.add(x)
                x = p.images[x]
            cycles.append(cycle)
        return cls(cycles)

    def cycleType(self):
        """Cycle lengths in decreasing order, e.g. (4,) for a single 4-cycle."""
        return tuple(sorted((len(c) for c in self.cycles), reverse=True))

    def __eq__(self, other):
        return isinstance(other, CycleStructure) and self.cycles == other.cycles

    def __hash__(self):
        return hash(self.cycles)

    def __len__(self):
        return len(self.cycles)

    def __repr__(self):
        return 'CycleStructure(%s)' % (list(self.cycles),)


class Transposition:
    """The unordered point pair {a, b}, stored with a < b."""

    __slots__ = ('a', 'b')

    def __init__(self, a, b):
        if a == b:
            raise PermutationError('transposition needs two distinct points, got %d twice' % (a + 1))
        if a < 0 or b < 0:
            raise PermutationError('negative point in transposition (%d,%d)' % (a, b))
        object.__setattr__(self, 'a', min(a, b))
        object.__setattr__(self, 'b', max(a, b))

    def __setattr__(self, key, value):
        raise AttributeError('Transposition is immutable')

    def __reduce__(self):
        return (Transposition, (self.a, self.b))

    @classmethod
    def parse(cls, token):
        """Parse the 1-based edge token 'a-b'."""
        match = EDGE_TOKEN.fullmatch(token)
        if match is None:
            raise PermutationError('malformed transposition "%s", expected "a-b"' % token)
        a, b = int(match.group(1)), int(match.group(2))
        if a < 1 or b < 1:
            raise PermutationError('points are 1-based, got "%s"' % token)
        return cls(a - 1, b - 1)

    def toPermutation(self, n):
        if self.b >= n:
            raise PermutationError('transposition %s does not act on %d points' % (self, n))
        images = list(range(n))
        images[self.a], images[self.b] = self.b, self.a
        return Permutation._trusted(tuple(images))

    def support(self):
        return frozenset((self.a, self.b))

    def commutesWith(self, other):
        """Two distinct transpositions commute iff their supports are disjoint."""
        return self == other or not (self.support() & other.support())

    def __eq__(self, other):
        return isinstance(other, Transposition) and (self.a, self.b) == (other.a, other.b)

    def __hash__(self):
        return hash((self.a, self.b))

    def __lt__(self, other):
        return (self.a, self.b) < (other.a, other.b)

    def __repr__(self):
        return 'Transposition(%d, %d)' % (self.a, self.b)

    def __str__(self):
        return '(%d,%d)' % (self.a + 1, self.b + 1)

    def edgeToken(self):
        return '%d-%d' % (self.a + 1, self.b + 1)


class PermutationError(ValueError):
    """Raised for invalid image tables, degree mismatches and out-of-range ranks."""
    def __init__(self, *args, **kwargs):
        ValueError.__init__(self, *args, **kwargs)
