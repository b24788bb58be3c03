import os
import unittest
from cayleylab.settings import Settings
from cayleylab.tgraph import TranspositionSet, build_tgraph, girth, cycle_set, path_set, star_set
from cayleylab.tgraph import GenerationError, NotACycleError, CapExceededError
from cayleylab.theory import PASSED, SKIPPED, check_lemma2, check_theorem4, six_cycle_census, check_feng_condition
from cayleylab.theory import four_cycle_witness, check_theorem1, check_ncycle_structure, full_report, normal_order
from cayleylab.theory import connected_graphs

SLOW = os.environ.get('CAYLEYLAB_SLOW_TESTS') == '1'


class PairCheckTests(unittest.TestCase):
    def testLemma2(self):
        """Commuting iff a unique 4-cycle: every pair of P_4 and C_4 passes, triangles are skipped."""
        result = check_lemma2(path_set(4))
        self.assertEqual((result.status, result.checked), (PASSED, 3))
        result = check_lemma2(cycle_set(4))
        self.assertEqual((result.status, result.checked), (PASSED, 6))
        result = check_lemma2(cycle_set(3))
        self.assertEqual(result.status, SKIPPED)
        self.assertEqual(result.failures(), [])

    def testTheorem4(self):
        """Girth >= 5 gives a unique qualifying 6-cycle per non-commuting pair."""
        result = check_theorem4(path_set(3))
        self.assertEqual((result.status, result.checked), (PASSED, 1))
        result = check_theorem4(cycle_set(5))
        self.assertEqual((result.status, result.checked), (PASSED, 5))
        self.assertEqual(check_theorem4(cycle_set(4)).status, SKIPPED)

    def testFourCycleCensus(self):
        """Without the girth gate, C_4 shows eight qualifying 6-cycles for each adjacent pair."""
        census = six_cycle_census(cycle_set(4))
        self.assertEqual(len(census), 4)
        self.assertEqual([p.count for p in census], [8, 8, 8, 8])
        self.assertFalse(any(p.passed for p in census))

    def testFengCondition(self):
        for S in (path_set(4), star_set(5), cycle_set(5), TranspositionSet.parse('1-2 2-3 2-4 4-5')):
            self.assertTrue(check_feng_condition(S), S)
        verdict = check_feng_condition(cycle_set(4))
        self.assertFalse(verdict)
        self.assertTrue(any(w.count == 8 and not w.commuting for w in verdict.witnesses))

    def testFourCycleWitness(self):
        witness = four_cycle_witness(cycle_set(4))
        self.assertEqual(witness.count, 8)
        self.assertFalse(witness.commuting)
        self.assertIsNone(four_cycle_witness(cycle_set(5)))

    def testParallelGivesSameResults(self):
        settings = Settings(parallel=True, workers=3)
        serial = check_lemma2(cycle_set(4))
        parallel = check_lemma2(cycle_set(4), settings)
        self.assertEqual([(p.t, p.k, p.count) for p in serial.pairs], [(p.t, p.k, p.count) for p in parallel.pairs])


class WholeGraphTests(unittest.TestCase):
    def testStar(self):
        """Trees have infinite girth, so all normality claims are asserted and hold."""
        result = check_theorem1(star_set(4))
        self.assertTrue(result.applicable)
        self.assertEqual(result.autOrder, 144)
        self.assertTrue(result.rNormal)
        self.assertEqual(result.leOrder, 1)
        self.assertTrue(result.confirmed)
        self.assertEqual(result.failures, [])

    def testFourCycle(self):
        """T(S) = C_4: 768 automorphisms, Klein four L_e, R(S_4) not normal, nothing asserted."""
        result = check_theorem1(cycle_set(4))
        self.assertFalse(result.applicable)
        self.assertEqual((result.autOrder, result.geOrder, result.leOrder), (768, 32, 4))
        self.assertTrue(result.leIsKlein)
        self.assertFalse(result.rNormal)
        self.assertFalse(result.confirmed)
        self.assertEqual(result.failures, [])

    def testFiveCycle(self):
        result = check_theorem1(cycle_set(5))
        self.assertEqual(result.autOrder, 1200)
        self.assertEqual(result.autSnSOrder, 10)
        self.assertTrue(result.rNormal)
        self.assertTrue(result.trivialIntersection)
        self.assertTrue(result.semidirectHolds)
        self.assertTrue(result.confirmed)

    def testAboveCap(self):
        """Above the automorphism cap only T(S) facts are filled in."""
        result = check_theorem1(cycle_set(5), Settings(maxAutN=4))
        self.assertFalse(result.available)
        self.assertIsNone(result.autOrder)
        self.assertEqual(result.tgraphAutOrder, 10)
        self.assertFalse(result.confirmed)
        self.assertIsNone(check_theorem1(cycle_set(4), skipFullAut=True).autOrder)

    def testNCycleStructure(self):
        """G_e splits as L_e by the dihedral Aut(S_n,S) for n = 4, 5."""
        four = check_ncycle_structure(cycle_set(4))
        self.assertEqual((four.geOrder, four.leOrder, four.autOrder, four.dihedralOrder), (32, 4, 768, 8))
        self.assertTrue(four.dihedralInGe)
        self.assertTrue(four.leNormalInGe)
        self.assertTrue(four.dihedralMeetsLeTrivially)
        self.assertTrue(four.holds)
        five = check_ncycle_structure(cycle_set(5))
        self.assertEqual((five.geOrder, five.leOrder, five.autOrder, five.dihedralOrder), (10, 1, 1200, 10))
        self.assertTrue(five.dihedralInGe)
        self.assertTrue(five.leNormalInGe)
        self.assertTrue(five.holds)
        with self.assertRaises(NotACycleError):
            check_ncycle_structure(path_set(4))
        with self.assertRaises(NotACycleError):
            check_ncycle_structure(cycle_set(3))
        with self.assertRaises(CapExceededError):
            check_ncycle_structure(cycle_set(5), Settings(maxAutN=4))

    def testNormalOrder(self):
        self.assertEqual(normal_order(cycle_set(4)), 192)
        self.assertEqual(normal_order(path_set(3)), 12)

    @unittest.skipUnless(SLOW, 'set CAYLEYLAB_SLOW_TESTS=1 for the 720-vertex runs')
    def testSixCycle(self):
        result = check_theorem1(cycle_set(6))
        self.assertEqual(result.autOrder, 8640)
        self.assertEqual(result.leOrder, 1)
        self.assertTrue(result.confirmed)
        self.assertTrue(check_ncycle_structure(cycle_set(6)).holds)


class ReportTests(unittest.TestCase):
    def testPath(self):
        report = full_report(path_set(3))
        self.assertEqual(report.autOrder, 12)
        self.assertTrue(report.theorem1Confirmed)
        self.assertEqual(report.failures, [])
        self.assertEqual(report.toJson()['girth'], 'infinite')

    def testTriangle(self):
        """Cay(S_3, triangle) = K_3,3 with 72 automorphisms; the girth-gated checks are skipped."""
        report = full_report(cycle_set(3))
        self.assertEqual(report.autOrder, 72)
        self.assertTrue(report.bipartite)
        self.assertFalse(report.theorem1Applicable)
        self.assertEqual(report.lemma2.status, SKIPPED)
        self.assertEqual(report.failures, [])

    def testFourCycle(self):
        report = full_report(cycle_set(4))
        self.assertTrue(report.leIsKlein)
        self.assertFalse(report.rNormal)
        self.assertFalse(report.fengCondition)
        self.assertEqual(report.autOrder, report.cayleyOrderV * report.geOrder)
        self.assertEqual(report.failures, [])
        data = report.toJson()
        self.assertEqual(data['girth'], 4)
        self.assertEqual(data['cayley'], {'vertices': 24, 'degree': 4, 'bipartite': True})
        self.assertEqual(data['lemma2'], {'checked': 6, 'failures': []})
        self.assertEqual(data['theorem4'], {'checked': 0, 'failures': []})

    def testDisconnected(self):
        with self.assertRaises(GenerationError):
            full_report(TranspositionSet.parse('1-2 3-4'))


class GraphFamilyTests(unittest.TestCase):
    def testConnectedGraphCounts(self):
        """1, 2, 6 and 21 connected graphs on 2, 3, 4 and 5 vertices."""
        counts = {}
        for S in connected_graphs(5):
            counts[S.n] = counts.get(S.n, 0) + 1
        self.assertEqual(counts, {2: 1, 3: 2, 4: 6, 5: 21})

    def testExhaustiveSmallGraphs(self):
        """Every connected T(S) on up to 4 points: pair checks never fail where they apply."""
        for S in connected_graphs(4):
            self.assertNotEqual(check_lemma2(S).status, 'failed', S)
            self.assertNotEqual(check_theorem4(S).status, 'failed', S)
            if girth(build_tgraph(S)) >= 5:
                self.assertTrue(check_feng_condition(S), S)
