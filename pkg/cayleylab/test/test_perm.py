import itertools
import math
import pickle
import random
import unittest

import networkx

from cayleylab.perm import Permutation, Transposition, CycleStructure, PermutationError, EVEN, ODD
from cayleylab.perm import unrank, all_permutations


def cyc(n, *cycles):
    return Permutation.fromCycles(n, cycles)


class PermutationTests(unittest.TestCase):
    def testComposeRightAction(self):
        """kt for k = (1,2), t = (2,3) is the 3-cycle (1,3,2): apply k first, then t."""
        k, t = cyc(3, (1, 2)), cyc(3, (2, 3))
        kt = k.compose(t)
        self.assertEqual(kt, cyc(3, (1, 3, 2)))
        self.assertEqual(str(kt), '(1,3,2)')
        self.assertEqual(kt.compose(kt), cyc(3, (1, 2, 3)))
        self.assertEqual(t.compose(k).compose(t), cyc(3, (1, 3)))
        self.assertEqual(k * t, kt)

    def testComposeIdentity(self):
        p = cyc(4, (1, 4), (2, 3))
        self.assertEqual(p.compose(Permutation.identity(4)), p)
        self.assertEqual(Permutation.identity(4).compose(p), p)

    def testComposeDegreeMismatch(self):
        with self.assertRaises(PermutationError):
            cyc(3, (1, 2)).compose(cyc(4, (1, 2)))

    def testInverse(self):
        """p then p^-1 is the identity; transpositions are involutions."""
        self.assertEqual(Permutation.identity(5).inverse(), Permutation.identity(5))
        self.assertEqual(cyc(3, (1, 2, 3)).inverse(), cyc(3, (1, 3, 2)))
        t = cyc(5, (2, 5))
        self.assertEqual(t.inverse(), t)
        for p in all_permutations(4):
            self.assertTrue(p.compose(p.inverse()).isIdentity())

    def testParity(self):
        self.assertEqual(cyc(4, (1, 3)).parity(), ODD)
        self.assertEqual(cyc(4, (1, 2, 3)).parity(), EVEN)
        self.assertEqual(Permutation.identity(4).parity(), EVEN)
        self.assertEqual(cyc(4, (1, 2, 3, 4)).parity(), ODD)

    def testRankUnrank(self):
        """Lexicographic ranks: identity first, the reversal last, unrank inverting rank."""
        self.assertEqual(Permutation.identity(4).rank(), 0)
        self.assertEqual(Permutation([3, 2, 1, 0]).rank(), 23)
        self.assertEqual(Permutation([0, 2, 1]).rank(), 1)
        perms = all_permutations(4)
        self.assertEqual([p.rank() for p in perms], list(range(24)))
        self.assertEqual(perms, sorted(perms))
        for r in range(24):
            self.assertEqual(unrank(r, 4).rank(), r)

    def testUnrankOutOfRange(self):
        with self.assertRaises(PermutationError):
            unrank(24, 4)
        with self.assertRaises(PermutationError):
            unrank(-1, 3)

    def testCycleStructure(self):
        """Least point first in each cycle, cycles sorted, fixed points left out."""
        p = Permutation.fromCycles(6, [(5, 3), (4, 1, 6)])
        self.assertEqual(p.cycleStructure(), CycleStructure([(0, 5, 3), (2, 4)]))
        self.assertEqual(p.cycleStructure().cycleType(), (3, 2))
        self.assertEqual(str(p), '(1,6,4)(3,5)')
        self.assertEqual(len(Permutation.identity(3).cycleStructure()), 0)
        self.assertEqual(str(Permutation.identity(3)), 'e')

    def testSupportAndOrder(self):
        p = cyc(6, (1, 2), (3, 4, 5))
        self.assertEqual(p.support(), frozenset([0, 1, 2, 3, 4]))
        self.assertEqual(p.order(), 6)
        self.assertEqual(Permutation.identity(6).order(), 1)
        self.assertEqual(Permutation.identity(6).support(), frozenset())

    def testConjugateBy(self):
        """Conjugation relabels cycles: g^-1 (1,2) g = (g(1), g(2))."""
        g = cyc(4, (2, 3))
        self.assertEqual(cyc(4, (1, 2)).conjugateBy(g), cyc(4, (1, 3)))
        g = cyc(4, (1, 2, 3, 4))
        self.assertEqual(cyc(4, (1, 3)).conjugateBy(g), cyc(4, (2, 4)))

    def testInvalidImages(self):
        with self.assertRaises(PermutationError):
            Permutation([0, 0, 1])
        with self.assertRaises(PermutationError):
            Permutation.fromCycles(3, [(1, 2), (2, 3)])
        with self.assertRaises(AttributeError):
            Permutation.identity(2).images = (1, 0)

    def testPickle(self):
        p = cyc(5, (1, 5, 2))
        self.assertEqual(pickle.loads(pickle.dumps(p)), p)


class TranspositionTests(unittest.TestCase):
    def testNormalized(self):
        self.assertEqual(Transposition(3, 1), Transposition(1, 3))
        self.assertEqual(Transposition(3, 1).a, 1)
        self.assertEqual(str(Transposition(3, 1)), '(2,4)')
        self.assertEqual(Transposition(3, 1).edgeToken(), '2-4')

    def testParse(self):
        self.assertEqual(Transposition.parse('2-1'), Transposition(0, 1))
        for bad in ('1-1', '0-2', '1-', 'a-b', '1-2-3', '12'):
            with self.assertRaises(PermutationError):
                Transposition.parse(bad)

    def testToPermutation(self):
        self.assertEqual(Transposition(0, 2).toPermutation(3), Permutation([2, 1, 0]))
        with self.assertRaises(PermutationError):
            Transposition(0, 3).toPermutation(3)

    def testCommutes(self):
        """Distinct transpositions commute exactly when their supports are disjoint."""
        t12, t23, t34 = Transposition(0, 1), Transposition(1, 2), Transposition(2, 3)
        self.assertTrue(t12.commutesWith(t34))
        self.assertFalse(t12.commutesWith(t23))
        for s, t in ((t12, t34), (t12, t23), (t23, t34)):
            p, q = s.toPermutation(4), t.toPermutation(4)
            self.assertEqual(s.commutesWith(t), p.compose(q) == q.compose(p))


def random_permutation(rng, n):
    return unrank(rng.randrange(math.factorial(n)), n)


class PermutationLawTests(unittest.TestCase):
    def setUp(self):
        self.rng = random.Random(20)

    def testAssociativity(self):
        for n in range(3, 8):
            for _ in range(200):
                p, q, r = (random_permutation(self.rng, n) for _ in range(3))
                self.assertEqual(p.compose(q).compose(r), p.compose(q.compose(r)))

    def testParityHomomorphism(self):
        """parity(pq) is parity(p) + parity(q) mod 2."""
        def bit(p):
            return 1 if p.parity() == ODD else 0
        perms = all_permutations(4)
        for p in perms:
            for q in perms:
                self.assertEqual(bit(p.compose(q)), (bit(p) + bit(q)) % 2)
        for _ in range(200):
            p, q = random_permutation(self.rng, 7), random_permutation(self.rng, 7)
            self.assertEqual(bit(p.compose(q)), (bit(p) + bit(q)) % 2)

    def testRankUnrankExhaustive(self):
        for n in range(2, 7):
            perms = all_permutations(n)
            self.assertEqual(len(perms), math.factorial(n))
            for r, p in enumerate(perms):
                self.assertEqual(p.rank(), r)
                self.assertEqual(unrank(r, n), p)

    def testConjugationKeepsCycleType(self):
        for _ in range(1000):
            n = self.rng.randrange(3, 8)
            p, g = random_permutation(self.rng, n), random_permutation(self.rng, n)
            self.assertEqual(p.conjugateBy(g).cycleStructure().cycleType(), p.cycleStructure().cycleType())

    def testFourCycleProductsOfThreeTranspositions(self):
        """A product of three distinct transpositions on 5 points is a 4-cycle iff they span a tree on 4 points."""
        transpositions = [Transposition(a, b) for a, b in itertools.combinations(range(5), 2)]
        fourCycles = 0
        for triple in itertools.permutations(transpositions, 3):
            product = Permutation.identity(5)
            for t in triple:
                product = product.compose(t.toPermutation(5))
            g = networkx.Graph([(t.a, t.b) for t in triple])
            spanningTree = g.number_of_nodes() == 4 and networkx.is_tree(g)
            self.assertEqual(product.cycleStructure().cycleType() == (4,), spanningTree, triple)
            fourCycles += spanningTree
        # 5 choices of the four points, 16 labeled trees on them, 3! orders each
        self.assertEqual(fourCycles, 5 * 16 * 6)
