"""
Each claim about Cay(S_n,S) as an executable check.

Checks never raise on a violated claim: a violation is recorded as a failure with its witness.
"""

import concurrent.futures
import itertools
import logging
import math
import time

import networkx

from .autosearch import ColoredGraph, automorphism_group, vertex_stabilizer, pointwise_neighborhood_stabilizer
from .cayley import build_cayley, bfs_distances, bipartition_by_parity, count_4cycles_through
from .cayley import six_cycles_through_with_distance3, canonical_six_cycle
from .permgroup import group_facts, intersection_is_trivial, is_normal_in, right_regular_representation
from .settings import Settings
from .tgraph import TranspositionSet, SimpleGraph, build_tgraph, girth, is_connected, is_cycle_graph
from .tgraph import has_four_cycle, graph_automorphisms, aut_sn_s
from .tgraph import GenerationError, NotACycleError, CapExceededError, ConsistencyError

logger = logging.getLogger(__name__)

PASSED = 'passed'
FAILED = 'failed'
SKIPPED = 'skipped'


class PairResult:
    """Outcome for one unordered pair t, k of S."""

    def __init__(self, t, k, commuting, count, passed, cycles=()):
        self.t, self.k = t, k
        self.commuting = commuting
        self.count = count
        self.passed = passed
        self.cycles = list(cycles)

    def describe(self):
        return 't=%s k=%s %s: %d cycle(s)' % (self.t, self.k, 'commuting' if self.commuting else 'non-commuting',
                                             self.count)

    def __repr__(self):
        return 'PairResult(%s, passed=%s)' % (self.describe(), self.passed)


class CheckResult:
    """Per-pair results of one check, or the reason it was skipped."""

    def __init__(self, name, pairs=(), reason=None):
        self.name = name
        self.pairs = list(pairs)
        self.reason = reason

    @property
    def status(self):
        if self.reason is not None:
            return SKIPPED
        return PASSED if all(p.passed for p in self.pairs) else FAILED

    @property
    def checked(self):
        return len(self.pairs)

    def failures(self):
        return [p for p in self.pairs if not p.passed]

    def __repr__(self):
        return 'CheckResult(%s, %s, checked=%d)' % (self.name, self.status, self.checked)


class FengVerdict:
    """Whether every pair satisfies both the 4-cycle and the 6-cycle conditions; witnesses are the pairs that do not."""

    def __init__(self, holds, witnesses):
        self.holds = holds
        self.witnesses = witnesses

    def __bool__(self):
        return self.holds


class Theorem1Result:
    """
    Whole-graph facts about Aut(Cay(S_n,S)). Orders are None when the graph is above the automorphism cap;
    'confirmed' is only ever true for applicable (girth >= 5) inputs.
    """

    def __init__(self, S, girth, tgraphAutOrder):
        self.S = S
        self.girth = girth
        self.applicable = girth >= 5
        self.tgraphAutOrder = tgraphAutOrder
        self.available = False
        self.autOrder = None
        self.geOrder = None
        self.leOrder = None
        self.leIsKlein = None
        self.autSnSOrder = None
        self.rNormal = None
        self.orderProductHolds = None
        self.trivialIntersection = None
        self.semidirectHolds = None
        self.confirmed = False
        self.failures = []


class NCycleStructure:
    """
    G_e = L_e x| D_2n for T(S) an n-cycle, by its parts: D_2n = Aut(S_n,S) lies in G_e, L_e is normal in G_e,
    the two meet trivially and |G_e| = |L_e| * 2n; plus |Aut| = n! * |G_e|.
    """

    def __init__(self, n, autOrder, geOrder, leOrder, dihedralOrder, dihedralMeetsLe, dihedralInGe, leNormalInGe):
        self.n = n
        self.autOrder = autOrder
        self.geOrder = geOrder
        self.leOrder = leOrder
        self.dihedralOrder = dihedralOrder
        self.dihedralMeetsLeTrivially = dihedralMeetsLe
        self.dihedralInGe = dihedralInGe
        self.leNormalInGe = leNormalInGe
        self.stabilizerEquationHolds = geOrder == leOrder * 2 * n
        self.orbitEquationHolds = autOrder == math.factorial(n) * geOrder

    @property
    def holds(self):
        return (self.stabilizerEquationHolds and self.orbitEquationHolds and self.dihedralMeetsLeTrivially and
                self.dihedralInGe and self.leNormalInGe)


class VerdictReport:
    """Everything full_report() found out about one transposition set."""

    def __init__(self, S):
        self.input = S
        self.n = S.n
        self.girth = None
        self.tgraphAutOrder = None
        self.cayleyOrderV = math.factorial(S.n)
        self.cayleyDegree = len(S)
        self.bipartite = None
        self.autOrder = None
        self.geOrder = None
        self.leOrder = None
        self.leIsKlein = None
        self.rNormal = None
        self.semidirectHolds = None
        self.theorem1Applicable = False
        self.theorem1Confirmed = False
        self.fengCondition = None
        self.lemma2 = None
        self.theorem4 = None
        self.failures = []
        self.runtimeMs = 0

    @property
    def lemma2PairsChecked(self):
        return self.lemma2.checked if self.lemma2 else 0

    @property
    def theorem4PairsChecked(self):
        return self.theorem4.checked if self.theorem4 else 0

    def toJson(self):
        """The fixed report schema; None serializes as null for fields above the automorphism cap."""
        return {
            'input': str(self.input),
            'n': self.n,
            'girth': self.girth.toJson(),
            'tgraph_aut_order': self.tgraphAutOrder,
            'cayley': {'vertices': self.cayleyOrderV, 'degree': self.cayleyDegree, 'bipartite': self.bipartite},
            'aut_order': self.autOrder,
            'ge_order': self.geOrder,
            'le_order': self.leOrder,
            'le_is_klein': self.leIsKlein,
            'r_normal': self.rNormal,
            'theorem1': {'applicable': self.theorem1Applicable, 'confirmed': self.theorem1Confirmed},
            'lemma2': {'checked': self.lemma2PairsChecked,
                       'failures': [p.describe() for p in self.lemma2.failures()] if self.lemma2 else []},
            'theorem4': {'checked': self.theorem4PairsChecked,
                         'failures': [p.describe() for p in self.theorem4.failures()] if self.theorem4 else []},
            'runtime_ms': self.runtimeMs,
        }


def _map(settings, fn, items):
    """fn over items in order, on a thread pool when the settings ask for it."""
    items = list(items)
    if settings.parallel and len(items) > 1:
        with concurrent.futures.ThreadPoolExecutor(max_workers=settings.workers) as pool:
            return list(pool.map(fn, items))
    return [fn(x) for x in items]


def _settings(settings):
    return settings if settings is not None else Settings()


def _cayley(S, settings, cayley):
    return cayley if cayley is not None else build_cayley(S, settings.maxN)


def check_lemma2(S, settings=None, cayley=None):
    """For triangle-free connected T(S): t and k commute iff exactly one 4-cycle contains e, t and k."""
    settings = _settings(settings)
    tgraph = build_tgraph(S)
    if not is_connected(tgraph):
        return CheckResult('lemma2', reason='T(S) is disconnected')
    if girth(tgraph) < 4:
        return CheckResult('lemma2', reason='T(S) contains triangles')
    cayley = _cayley(S, settings, cayley)

    def check(pair):
        t, k = pair
        cycles = count_4cycles_through(cayley, t, k)
        commuting = t.commutesWith(k)
        return PairResult(t, k, commuting, len(cycles), commuting == (len(cycles) == 1), cycles)

    return CheckResult('lemma2', _map(settings, check, itertools.combinations(S.edges, 2)))


def six_cycle_census(S, settings=None, cayley=None):
    """For every non-commuting pair, the 6-cycles through e, t, k with a vertex at distance 3; not gated by girth."""
    settings = _settings(settings)
    cayley = _cayley(S, settings, cayley)
    distances = bfs_distances(cayley, cayley.eIndex)

    def census(pair):
        t, k = pair
        cycles = six_cycles_through_with_distance3(cayley, t, k, distances)
        passed = len(cycles) == 1 and canonical_six_cycle(cayley, t, k) in cycles
        return PairResult(t, k, False, len(cycles), passed, cycles)

    pairs = [(t, k) for t, k in itertools.combinations(S.edges, 2) if not t.commutesWith(k)]
    return _map(settings, census, pairs)


def check_theorem4(S, settings=None, cayley=None):
    """For girth(T(S)) >= 5: every non-commuting pair has exactly one qualifying 6-cycle."""
    tgraph = build_tgraph(S)
    if not is_connected(tgraph):
        return CheckResult('theorem4', reason='T(S) is disconnected')
    g = girth(tgraph)
    if g < 5:
        return CheckResult('theorem4', reason='girth %s < 5' % g)
    return CheckResult('theorem4', six_cycle_census(S, settings, cayley))


def check_feng_condition(S, settings=None, cayley=None):
    """The combined hypothesis: commuting iff a unique 4-cycle, and a unique 6-cycle for non-commuting pairs."""
    settings = _settings(settings)
    cayley = _cayley(S, settings, cayley)
    witnesses = []
    for t, k in itertools.combinations(S.edges, 2):
        count = len(count_4cycles_through(cayley, t, k))
        commuting = t.commutesWith(k)
        if commuting != (count == 1):
            witnesses.append(PairResult(t, k, commuting, count, False))
    witnesses += [p for p in six_cycle_census(S, settings, cayley) if p.count != 1]
    return FengVerdict(not witnesses, witnesses)


def four_cycle_witness(S, settings=None, cayley=None):
    """For T(S) containing a 4-cycle: a non-commuting pair whose qualifying 6-cycle is not unique, or None."""
    if not has_four_cycle(build_tgraph(S)):
        return None
    for p in six_cycle_census(S, settings, cayley):
        if p.count != 1:
            return p
    return None


def normal_order(S, settings=None):
    """|R(S_n) x Aut(S_n,S)| = n! |Aut(T(S))|, the order Aut(Cay(S_n,S)) has exactly when the graph is normal."""
    settings = _settings(settings)
    return math.factorial(S.n) * graph_automorphisms(build_tgraph(S), settings.maxTgraphVertices).order()


def check_theorem1(S, settings=None, cayley=None, skipFullAut=False):
    """
    Normality facts. For girth >= 5 all of these must hold: R(S_n) normal in Aut, |Aut| = n! |Aut(S_n,S)|,
    R(S_n) meets Aut(S_n,S) trivially, and L_e is trivial. For smaller girth they are only recorded.
    """
    settings = _settings(settings)
    tgraph = build_tgraph(S)
    if not is_connected(tgraph):
        raise GenerationError('S does not generate S_%d' % S.n)
    n = S.n
    result = Theorem1Result(S, girth(tgraph), graph_automorphisms(tgraph, settings.maxTgraphVertices).order())
    if skipFullAut or n > settings.maxAutN:
        logger.info('whole-graph automorphisms skipped for n = %d (cap %d)', n, settings.maxAutN)
        return result

    cayley = _cayley(S, settings, cayley)
    colored = ColoredGraph(cayley.graph)
    e = cayley.eIndex
    aut = automorphism_group(colored, settings.maxSearchVertices)
    ge = vertex_stabilizer(colored, e, settings.maxSearchVertices)
    le = pointwise_neighborhood_stabilizer(colored, e, settings.maxSearchVertices)
    regular = right_regular_representation(n, settings.maxRegularN)
    autSnS = aut_sn_s(S, settings.maxN, settings.maxTgraphVertices)
    logger.info('Cay(S_%d, {%s}): |Aut| = %d, |G_e| = %d, |L_e| = %d', n, S, aut.order(), ge.order(), le.order())

    failures = result.failures
    for name, sub, parent in (('R(S_n)', regular, aut), ('G_e', ge, aut), ('L_e', le, ge),
                              ('Aut(S_n,S)', autSnS, ge)):
        if not sub.isSubgroupOf(parent):
            failures.append('%s is not contained in the group it must lie in' % name)
    orbit = aut.orbit(e)
    if len(orbit) != cayley.vertexCount:
        failures.append('Aut is not vertex-transitive: orbit of e has %d of %d vertices' %
                        (len(orbit), cayley.vertexCount))
    if aut.order() != cayley.vertexCount * ge.order():
        failures.append('orbit-stabilizer: |Aut| = %d but n! |G_e| = %d' % (aut.order(), cayley.vertexCount * ge.order()))
    if ge.order() % le.order() or (le.order() * math.factorial(len(S))) % ge.order():
        failures.append('|G_e| = %d is not a multiple of |L_e| = %d dividing |L_e| |S|!' % (ge.order(), le.order()))
    # S_2 is abelian, so conjugation induces nothing there
    if n >= 3 and autSnS.order() != result.tgraphAutOrder:
        failures.append('Aut(S_n,S) has order %d but Aut(T(S)) has order %d' % (autSnS.order(), result.tgraphAutOrder))

    result.available = True
    result.autOrder = aut.order()
    result.geOrder = ge.order()
    result.leOrder = le.order()
    result.leIsKlein = group_facts(le, settings.enumerationCap).isKleinFour
    result.autSnSOrder = autSnS.order()
    result.rNormal = regular.isSubgroupOf(aut) and is_normal_in(regular, aut)
    result.orderProductHolds = aut.order() == math.factorial(n) * autSnS.order()
    result.trivialIntersection = intersection_is_trivial(regular, autSnS, settings.enumerationCap)
    result.semidirectHolds = result.rNormal and result.orderProductHolds and result.trivialIntersection

    if result.applicable:
        claims = [(result.rNormal, 'R(S_%d) is not normal in Aut' % n),
                  (result.orderProductHolds, '|Aut| = %d differs from n! |Aut(S_n,S)| = %d' %
                   (aut.order(), math.factorial(n) * autSnS.order())),
                  (result.trivialIntersection, 'R(S_%d) meets Aut(S_n,S) non-trivially' % n),
                  (le.order() == 1, 'L_e has order %d, not 1' % le.order())]
        for holds, message in claims:
            if not holds:
                failures.append('girth %s: %s' % (result.girth, message))
        result.confirmed = all(holds for holds, _ in claims)
    return result


def check_ncycle_structure(S, settings=None, cayley=None):
    """For T(S) an n-cycle, n >= 4: the parts of G_e = L_e x| Aut(S_n,S) and the order equations."""
    settings = _settings(settings)
    tgraph = build_tgraph(S)
    if not is_cycle_graph(tgraph) or S.n < 4:
        raise NotACycleError('T(S) = {%s} is not an n-cycle with n >= 4' % S)
    if S.n > settings.maxAutN:
        raise CapExceededError('n = %d exceeds the automorphism cap %d' % (S.n, settings.maxAutN))
    cayley = _cayley(S, settings, cayley)
    colored = ColoredGraph(cayley.graph)
    aut = automorphism_group(colored, settings.maxSearchVertices)
    ge = vertex_stabilizer(colored, cayley.eIndex, settings.maxSearchVertices)
    le = pointwise_neighborhood_stabilizer(colored, cayley.eIndex, settings.maxSearchVertices)
    dihedral = aut_sn_s(S, settings.maxN, settings.maxTgraphVertices)
    leNormal = le.isSubgroupOf(ge) and is_normal_in(le, ge)
    return NCycleStructure(S.n, aut.order(), ge.order(), le.order(), dihedral.order(),
                           intersection_is_trivial(dihedral, le, settings.enumerationCap),
                           dihedral.isSubgroupOf(ge), leNormal)


def full_report(S, settings=None, skipFullAut=False):
    """Run every applicable check on S. Raises only for bad input; violated claims land in 'failures'."""
    settings = _settings(settings)
    started = time.time()
    if S.n > settings.maxN:
        raise CapExceededError('n = %d exceeds the construction cap %d' % (S.n, settings.maxN))
    tgraph = build_tgraph(S)
    if not is_connected(tgraph):
        raise GenerationError('S does not generate S_%d' % S.n)

    report = VerdictReport(S)
    report.girth = girth(tgraph)
    cayley = build_cayley(S, settings.maxN)
    try:
        bipartition_by_parity(cayley)
        report.bipartite = True
    except ConsistencyError as e:
        report.bipartite = False
        report.failures.append(str(e))

    report.lemma2 = check_lemma2(S, settings, cayley)
    report.theorem4 = check_theorem4(S, settings, cayley)
    report.failures += ['commuting iff unique 4-cycle: %s' % p.describe() for p in report.lemma2.failures()]
    report.failures += ['unique 6-cycle: %s' % p.describe() for p in report.theorem4.failures()]

    feng = check_feng_condition(S, settings, cayley)
    report.fengCondition = feng.holds
    if has_four_cycle(tgraph) and four_cycle_witness(S, settings, cayley) is None:
        report.failures.append('T(S) contains a 4-cycle but every non-commuting pair has a unique 6-cycle')

    t1 = check_theorem1(S, settings, cayley, skipFullAut)
    report.tgraphAutOrder = t1.tgraphAutOrder
    report.autOrder = t1.autOrder
    report.geOrder = t1.geOrder
    report.leOrder = t1.leOrder
    report.leIsKlein = t1.leIsKlein
    report.rNormal = t1.rNormal
    report.semidirectHolds = t1.semidirectHolds
    report.theorem1Applicable = t1.applicable
    report.theorem1Confirmed = t1.confirmed
    report.failures += t1.failures
    if t1.available and feng.holds and not t1.rNormal:
        report.failures.append('the 4-cycle/6-cycle condition holds but R(S_%d) is not normal' % S.n)

    report.runtimeMs = int(round((time.time() - started) * 1000))
    logger.info('report for {%s} done in %d ms with %d failure(s)', S, report.runtimeMs, len(report.failures))
    return report


def connected_graphs(maxN, minN=2):
    """Isomorphism-distinct connected graphs on minN..maxN vertices (maxN <= 7), as transposition sets."""
    for g in networkx.graph_atlas_g():
        if minN <= g.number_of_nodes() <= maxN and networkx.is_connected(g):
            yield TranspositionSet.fromGraph(SimpleGraph.fromNetworkx(g))
