# Copyright (C) 2026  list3col authors
#
# This library is free software; you can redistribute it and/or
# modify it under the terms of the GNU Lesser General Public
# License as published by the Free Software Foundation; either
# version 2.1 of the License, or (at your option) any later version.
#
# This library is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the GNU
# Lesser General Public License for more details.
#
# You should have received a copy of the GNU Lesser General Public
# License along with this library; if not, write to the Free Software
# Foundation, Inc., 51 Franklin Street, Fifth Floor, Boston, MA  02110-1301  USA

# pylint: disable=invalid-name
"""
Decision procedures for List 3-Colouring on diameter-2 graphs.

Drivers:
- fullN0Propagation: propagate every promising precolouring of a vertex set.
- fullPPropagation: the same, over every vertex set of size at most p, or
  over the vertex sets of every induced cycle of a given length.

Class algorithms, each of which may delegate to the previous one:
- solveC5Free: C5-free graphs (bipartite case, else triangle precolouring).
- solveC6Free: C6-free graphs (induced C5 precolouring).
- solveC4C7Free: (C4, C7)-free graphs (induced C5 precolouring).
- solveC4C8Free: (C4, C8)-free graphs (induced C6 sweep, then one induced C6
  with the c6 rule).
- solveC4C9Free: (C4, C9)-free graphs (induced C7 sweep, then one induced C7
  with the c7 rule).

A class algorithm raises ColouringErrorOutOfClass when propagation leaves
an undecided branch its class guarantees away: the input is not in the class
it was promised to be in. dispatchSolve picks an algorithm from the class
profile and turns such errors into an exact search.
"""
import collections
import concurrent.futures
import itertools
import logging
import time
from . import _common
from ._common import (
    raiseColouringError, checkLimit, ColouringErrorOutOfClass,
    ColouringErrorOverflow, MAX_PRECOLOURED, MAX_P, CYCLE_LIMIT,
    EXACT_NODE_BUDGET, FULL_MASK, ERROR_CONTRACT, ERROR_BUDGET,
    ERROR_CONFIGURATION, ERROR_OUT_OF_CLASS, OUTCOME_YES, OUTCOME_NO,
    OUTCOME_UNKNOWN, SUMMARY_YES, SUMMARY_ALL_NO, SUMMARY_MIXED,
    SUMMARY_EMPTY, POLICY_ALL, POLICY_CYCLES, ROUTE_THEOREM_4,
    ROUTE_THEOREM_5, ROUTE_THEOREM_6, ROUTE_THEOREM_7, ROUTE_THEOREM_8,
    ROUTE_HOFFMAN_SINGLETON, ROUTE_EXACT, ROUTE_UNSUPPORTED, ROUTE_FALLBACK,
)
from .graph import INFINITY, getBipartition, isCompleteBipartite
from .lists import (
    ListAssignment, colourToMask, maskToColours, checkListCount,
    iterPromising, restrictToPrecolouring,
)
from .patterns import (
    findK4, findTriangle, findInducedCycle, getCachedCycleList,
)
from .propagation import BASIC_RULES, C6_RULES, C7_RULES, propagate
from .twosat import solve2List

__all__ = [
    'N0Branch', 'N0Report', 'PReport', 'Layers', 'ClassProfile',
    'SolveReport', 'CLASS_NAME_LIST', 'fullN0Propagation',
    'fullPPropagation', 'isClaimOnePattern', 'getC7Case', 'getLayers',
    'getTriangleTSet', 'isInducedCycleFree', 'classify', 'isClassMember',
    'solveC5Free', 'solveC6Free', 'solveC4C7Free', 'solveC4C8Free',
    'solveC4C9Free', 'solveExact', 'dispatchSolve',
]

logger = logging.getLogger(__name__)

N0Branch = collections.namedtuple(
    'N0Branch',
    ['precolouring', 'outcome', 'reduction_count'],
)

class N0Report(collections.namedtuple(
    'N0Report',
    ['domain', 'branch_list', 'summary', 'witness'],
)):
    """
    Result of a full N0-propagation.

    domain (tuple of int)
        N0, ascending.
    branch_list (list of N0Branch)
        In precolouring enumeration order. Stops after the first yes branch
        when the run was asked to.
    summary (int)
        SUMMARY_YES, SUMMARY_ALL_NO or SUMMARY_MIXED.
    witness (dict, None)
        Colouring of the first yes branch.
    """
    __slots__ = ()

    def getUnknownBranchList(self):
        return [
            x for x in self.branch_list
            if x.outcome.status == OUTCOME_UNKNOWN
        ]

    def getReductionCount(self):
        return sum(x.reduction_count for x in self.branch_list)

class PReport(collections.namedtuple(
    'PReport',
    ['policy', 'entry_list', 'summary', 'witness', 'refutation'],
)):
    """
    Result of a full p-propagation.

    entry_list (list of (vertex tuple, N0Report))
        Vertex tuples are ascending under POLICY_ALL and in cycle order under
        POLICY_CYCLES.
    summary (int)
        SUMMARY_YES if some branch is yes, SUMMARY_ALL_NO if every branch is
        no, SUMMARY_EMPTY if there was no vertex set, SUMMARY_MIXED
        otherwise.
    refutation (tuple, None)
        First vertex set whose every branch is no, which proves the instance
        has no colouring.
    """
    __slots__ = ()

    def getReport(self, vertex_iterable):
        """
        N0Report of the given vertex set (in any order), or None.
        """
        key = tuple(sorted(vertex_iterable))
        for _, report in self.entry_list:
            if report.domain == key:
                return report
        return None

    def getBranchCount(self):
        return sum(len(x.branch_list) for _, x in self.entry_list)

Layers = collections.namedtuple('Layers', ['n0', 'n1', 'n2'])
Layers.__doc__ = """
n0 (frozenset)
    The precoloured set.
n1 (frozenset)
    Vertices outside n0 with a neighbour in it.
n2 (frozenset)
    All other vertices.
"""

CLASS_NAME_LIST = ('c5free', 'c6free', 'c4c7', 'c4c8', 'c4c9')
_CLASS_FORBIDDEN_DICT = {
    'c5free': (5, ),
    'c6free': (6, ),
    'c4c7': (4, 7),
    'c4c8': (4, 8),
    'c4c9': (4, 9),
}

class ClassProfile(collections.namedtuple(
    'ClassProfile',
    ['vertex_count', 'diameter', 'free_dict', 'has_k4', 'bipartite'],
)):
    """
    Membership facts of a graph.

    free_dict (dict)
        k in 3..9 to True if the graph has no induced k-cycle (a triangle for
        k = 3).
    """
    __slots__ = ()

    def isFree(self, *length_list):
        return all(self.free_dict[x] for x in length_list)

    def format(self):
        diameter = 'inf' if self.diameter is INFINITY else self.diameter
        return (
            f'diameter={diameter}, ' + ''.join(
                f'C{k}-free, '
                for k, free in sorted(self.free_dict.items())
                if free
            ) + f'K4={"present" if self.has_k4 else "absent"}\n'
            f'bipartite={"yes" if self.bipartite else "no"}'
        )

class SolveReport:
    """
    Decision of a solver and how it was reached.
    """
    def __init__(self, route):
        self.decision = None
        self.witness = None
        self.route = route
        # Every algorithm entered, outermost first.
        self.path = [route]
        self.stats = collections.Counter()
        self.elapsed = 0.
        self.note_list = []

    def __repr__(self):
        return (
            f'<{self.__class__.__name__} '
            f'{self.getDecisionTag()} via {_common.route.getTag(self.route)}>'
        )

    def getDecision(self):
        return self.decision

    def getDecisionTag(self):
        if self.decision is None:
            return 'undecided'
        return _common.outcome.getTag(self.decision)

    def getWitness(self):
        return self.witness

    def getRoute(self):
        return self.route

    def getPath(self):
        return list(self.path)

    def getStats(self):
        return dict(self.stats)

    def getNoteList(self):
        return list(self.note_list)

    def enter(self, route):
        self.route = route
        self.path.append(route)

    def addNote(self, note):
        logger.debug('note: %s', note)
        self.note_list.append(note)

    def setYes(self, witness):
        self.decision = OUTCOME_YES
        self.witness = witness
        return self

    def setNo(self):
        self.decision = OUTCOME_NO
        self.witness = None
        return self

    def format(self):
        """
        key=value lines, witness excluded.
        """
        getTag = _common.route.getTag
        line_list = [
            f'decision={self.getDecisionTag()}',
            f'route={getTag(self.route)}',
            f'path={",".join(getTag(x) for x in self.path)}',
        ]
        line_list.extend(
            f'{key}={value}'
            for key, value in sorted(self.stats.items())
        )
        line_list.append(f'elapsed={self.elapsed:.3f}')
        line_list.extend(f'note={x}' for x in self.note_list)
        return '\n'.join(line_list)

def _summarise(status_list):
    if not status_list:
        return SUMMARY_ALL_NO
    if OUTCOME_YES in status_list:
        return SUMMARY_YES
    if all(x == OUTCOME_NO for x in status_list):
        return SUMMARY_ALL_NO
    return SUMMARY_MIXED

def _runBranch(context, precolouring):
    graph, lists, rules, cycle_limit = context
    outcome, trace = propagate(
        graph,
        restrictToPrecolouring(lists, precolouring),
        rules,
        cycle_limit=cycle_limit,
    )
    return N0Branch(precolouring, outcome, len(trace))

def _runBranches(
    graph, lists, precolouring_list, rules, jobs, stop_on_yes, cycle_limit,
):
    """
    Propagate each precolouring, in order. With stop_on_yes, the result ends
    with the first yes branch, whether branches ran in parallel or not.
    """
    context = (graph, lists, rules, cycle_limit)
    if jobs > 1 and len(precolouring_list) > 1:
        with concurrent.futures.ProcessPoolExecutor(
            max_workers=jobs,
        ) as executor:
            branch_list = list(executor.map(
                _runBranch,
                itertools.repeat(context),
                precolouring_list,
                chunksize=max(1, len(precolouring_list) // (4 * jobs)),
            ))
        if stop_on_yes:
            for index, branch in enumerate(branch_list):
                if branch.outcome.status == OUTCOME_YES:
                    del branch_list[index + 1:]
                    break
        return branch_list
    branch_list = []
    for precolouring in precolouring_list:
        branch = _runBranch(context, precolouring)
        branch_list.append(branch)
        if stop_on_yes and branch.outcome.status == OUTCOME_YES:
            break
    return branch_list

def _makeN0Report(domain, branch_list):
    witness = None
    for branch in branch_list:
        if branch.outcome.status == OUTCOME_YES:
            witness = branch.outcome.colouring
            break
    return N0Report(
        domain,
        branch_list,
        _summarise([x.outcome.status for x in branch_list]),
        witness,
    )

def fullN0Propagation(
    graph, lists, n0, rules=BASIC_RULES, limit=MAX_PRECOLOURED,
    stop_on_yes=True, jobs=1, cycle_limit=CYCLE_LIMIT,
):
    """
    Run propagate on every L-promising precolouring of n0.

    n0 (iterable of int)
    limit (int)
        Bound on |n0|, raises ColouringErrorConfiguration above it.
    stop_on_yes (bool)
        Stop at the first yes branch.
    jobs (int)
        Number of worker processes branches are spread over.

    Returns an N0Report. A set with no promising precolouring gives an
    all-no report: no colouring exists.
    """
    checkListCount(graph, lists)
    precolouring_list = list(iterPromising(graph, lists, n0, limit=limit))
    domain = tuple(sorted(set(n0)))
    branch_list = _runBranches(
        graph, lists, precolouring_list, rules, jobs, stop_on_yes,
        cycle_limit,
    )
    report = _makeN0Report(domain, branch_list)
    logger.debug(
        'N0=%r: %i branches, %s', domain, len(branch_list),
        _common.summary.getTag(report.summary),
    )
    return report

def fullPPropagation(
    graph, lists, p, policy=POLICY_ALL, rules=BASIC_RULES,
    cycle_length=None, limit=MAX_P, stop_on_yes=True,
    stop_on_refutation=False, jobs=1, cycle_limit=CYCLE_LIMIT,
):
    """
    Full N0-propagation over a family of vertex sets.

    policy
        POLICY_ALL: every vertex set of size at most p, by increasing size
        then lexicographically.
        POLICY_CYCLES: the vertex set of every induced cycle of length
        cycle_length (default p), in enumeration order.
    stop_on_yes (bool)
        Stop at the first yes branch.
    stop_on_refutation (bool)
        Stop at the first vertex set whose branches are all no.

    Returns a PReport.
    """
    checkLimit(p, limit, 'p')
    checkListCount(graph, lists)
    if policy == POLICY_ALL:
        vertex_tuple_iterable = itertools.chain.from_iterable(
            itertools.combinations(graph, size)
            for size in range(1, min(p, len(graph)) + 1)
        )
    elif policy == POLICY_CYCLES:
        if cycle_length is None:
            cycle_length = p
        checkLimit(cycle_length, p, 'cycle length')
        vertex_tuple_iterable = (
            x.vertices
            for x in getCachedCycleList(graph, cycle_length, cycle_limit)
        )
    else:
        raiseColouringError(
            ERROR_CONFIGURATION, f'unknown propagation policy {policy!r}',
        )
    entry_list = []
    witness = None
    refutation = None
    for vertex_tuple in vertex_tuple_iterable:
        report = fullN0Propagation(
            graph, lists, vertex_tuple, rules, limit=p,
            stop_on_yes=stop_on_yes, jobs=jobs, cycle_limit=cycle_limit,
        )
        entry_list.append((vertex_tuple, report))
        if report.summary == SUMMARY_YES:
            witness = report.witness
            if stop_on_yes:
                break
        elif report.summary == SUMMARY_ALL_NO and refutation is None:
            refutation = vertex_tuple
            if stop_on_refutation:
                break
    if not entry_list:
        summary = SUMMARY_EMPTY
    elif witness is not None:
        summary = SUMMARY_YES
    elif all(x.summary == SUMMARY_ALL_NO for _, x in entry_list):
        summary = SUMMARY_ALL_NO
    else:
        summary = SUMMARY_MIXED
    logger.debug(
        'p=%i %s: %i vertex sets, %s', p, _common.policy.getTag(policy),
        len(entry_list), _common.summary.getTag(summary),
    )
    return PReport(policy, entry_list, summary, witness, refutation)

def _checkCycleColouring(cycle, colouring, length_tuple):
    if len(cycle) not in length_tuple:
        raiseColouringError(
            ERROR_CONTRACT,
            f'cycle of length {len(cycle)}, expected one of {length_tuple}',
        )
    return [colouring[x] for x in cycle]

def isClaimOnePattern(cycle, colouring):
    """
    True if colouring matches the pattern every theorem proof rules out on
    an induced cycle of a (C4, C8)-free (length 6) or (C4, C9)-free
    (length 7) diameter-2 graph.

    Length 6: two vertices at distance 2 on the cycle share a colour.
    Length 7: some colour appears exactly twice, on two vertices at distance
    2 on the cycle.
    """
    colour_list = _checkCycleColouring(cycle, colouring, (6, 7))
    length = len(colour_list)
    if length == 6:
        return any(
            colour_list[i] == colour_list[(i + 2) % 6]
            for i in range(6)
        )
    count = collections.Counter(colour_list)
    return any(
        count[colour_list[i]] == 2 and
        colour_list[i] == colour_list[(i + 2) % 7]
        for i in range(7)
    )

def getC7Case(cycle, colouring):
    """
    Classify a proper colouring of an induced 7-cycle not matching
    isClaimOnePattern.
    1: one colour appears exactly once.
    2: two colours appear exactly twice, each pair at distance 3.
    None: the colouring matches isClaimOnePattern or is not proper.
    """
    colour_list = _checkCycleColouring(cycle, colouring, (7, ))
    if any(colour_list[i] == colour_list[(i + 1) % 7] for i in range(7)):
        return None
    if isClaimOnePattern(cycle, colouring):
        return None
    count_list = sorted(collections.Counter(colour_list).values())
    if count_list == [1, 3, 3]:
        return 1
    if count_list == [2, 2, 3]:
        return 2
    return None

def getLayers(graph, n0):
    n0 = frozenset(n0)
    n1 = frozenset(graph.getNeighbourhood(n0))
    return Layers(n0, n1, frozenset(graph).difference(n0, n1))

def getTriangleTSet(graph, triangle):
    """
    Vertices outside the triangle and its neighbourhood having a neighbour
    adjacent to exactly two triangle vertices.
    """
    layers = getLayers(graph, triangle)
    two_set = {
        x for x in layers.n1
        if len(graph.getNeighbourSet(x) & layers.n0) == 2
    }
    return frozenset(
        x for x in layers.n2
        if graph.getNeighbourSet(x) & two_set
    )

def isInducedCycleFree(graph, length):
    """
    True if graph has no induced cycle of the given length (a triangle for
    3). Memoised on graph.
    """
    cache = graph.cache_dict.setdefault('cycle_free', {})
    try:
        return cache[length]
    except KeyError:
        pass
    if length == 3:
        result = findTriangle(graph) is None
    else:
        result = findInducedCycle(graph, length) is None
    cache[length] = result
    return result

def classify(graph):
    """
    Return the ClassProfile of graph.
    """
    return ClassProfile(
        len(graph),
        graph.getDiameter(),
        {k: isInducedCycleFree(graph, k) for k in range(3, 10)},
        findK4(graph) is not None,
        getBipartition(graph) is not None,
    )

def isClassMember(graph, class_name):
    """
    True if graph has diameter at most 2 and is in the named class, one of
    CLASS_NAME_LIST.
    """
    try:
        forbidden = _CLASS_FORBIDDEN_DICT[class_name]
    except KeyError:
        raiseColouringError(
            ERROR_CONFIGURATION,
            f'unknown class {class_name!r}, expected one of ' +
            ', '.join(CLASS_NAME_LIST),
        )
    return graph.getDiameter() <= 2 and all(
        isInducedCycleFree(graph, x) for x in forbidden
    )

def _requireClass(graph, forbidden, what):
    diameter = graph.getDiameter()
    if diameter > 2:
        raiseColouringError(
            ERROR_CONTRACT,
            f'{what} needs diameter at most 2, got {diameter}',
        )
    for length in forbidden:
        if not isInducedCycleFree(graph, length):
            raiseColouringError(
                ERROR_CONTRACT,
                f'{what} needs a C{length}-free graph',
            )

def _newReport(report, route):
    if report is None:
        return SolveReport(route)
    if report.route != route:
        report.enter(route)
    return report

def _raiseOutOfClass(graph, report, n0_report, stage):
    unknown_list = n0_report.getUnknownBranchList()
    first = unknown_list[0]
    layers = getLayers(graph, n0_report.domain)
    full_list = [
        x for x in sorted(layers.n2)
        if first.outcome.lists.getMask(x) == FULL_MASK
    ]
    raiseColouringError(
        ERROR_OUT_OF_CLASS,
        f'{_common.route.getTag(report.route)} {stage}: '
        f'{len(unknown_list)} undecided branches on N0={n0_report.domain}',
        route=report.route,
        stage=stage,
        precolouring=first.precolouring,
        full_list_vertices=full_list,
    )

def _finishN0(graph, report, n0_report, stage):
    report.stats['branches'] += len(n0_report.branch_list)
    report.stats['reductions'] += n0_report.getReductionCount()
    if n0_report.summary == SUMMARY_YES:
        return report.setYes(n0_report.witness)
    if n0_report.summary == SUMMARY_ALL_NO:
        return report.setNo()
    return _raiseOutOfClass(graph, report, n0_report, stage)

def _solveBipartite(graph, lists, report):
    bipartition = getBipartition(graph)
    if not isCompleteBipartite(graph, bipartition):
        raiseColouringError(
            ERROR_CONTRACT,
            'bipartite diameter-2 graph is not complete bipartite',
        )
    mask_tuple = lists.getMaskTuple()
    tried = False
    for side, other_side in (
        (bipartition.partA, bipartition.partB),
        (bipartition.partB, bipartition.partA),
    ):
        common = FULL_MASK
        for vertex in side:
            common &= mask_tuple[vertex]
        for colour in maskToColours(common):
            tried = True
            colour_mask = colourToMask(colour)
            mask_dict = {x: colour_mask for x in side}
            mask_dict.update(
                (x, mask_tuple[x] & ~colour_mask)
                for x in other_side
            )
            if not all(mask_dict.values()):
                continue
            report.stats['branches'] += 1
            colouring = solve2List(graph, lists.withMaskDict(mask_dict))
            if colouring is not None:
                return report.setYes(colouring)
    if not tried:
        report.addNote('no colour is available on all of either side')
    return report.setNo()

def solveC5Free(graph, lists, jobs=1, check=True, report=None):
    """
    Decide List 3-Colouring on a C5-free graph of diameter at most 2.

    Bipartite graphs are complete bipartite, and one side is monochromatic
    in any colouring: each common colour of a side is tried with the 2-list
    solver. Otherwise the graph has a triangle and precolouring it decides
    the instance.

    check (bool)
        Verify the class, raising ColouringErrorContract when outside it.
    Returns a SolveReport. Raises ColouringErrorOutOfClass if some triangle
    precolouring is left undecided.
    """
    checkListCount(graph, lists)
    report = _newReport(report, ROUTE_THEOREM_4)
    if check:
        _requireClass(graph, (5, ), 'C5-free solver')
    if getBipartition(graph) is not None:
        logger.info('C5-free solver: bipartite case')
        return _solveBipartite(graph, lists, report)
    if findK4(graph) is not None:
        report.addNote('K4 found')
        return report.setNo()
    triangle = findTriangle(graph)
    if triangle is None:
        raiseColouringError(
            ERROR_CONTRACT, 'non-bipartite C5-free graph without triangle',
        )
    layers = getLayers(graph, triangle)
    if getTriangleTSet(graph, triangle) != layers.n2:
        report.addNote(f'triangle {triangle}: N2 differs from T')
    logger.info('C5-free solver: precolouring triangle %r', triangle)
    return _finishN0(
        graph,
        report,
        fullN0Propagation(graph, lists, triangle, jobs=jobs),
        'triangle',
    )

def _solveByInducedC5(graph, lists, jobs, report):
    if isInducedCycleFree(graph, 5):
        return solveC5Free(graph, lists, jobs=jobs, check=False, report=report)
    if findK4(graph) is not None:
        report.addNote('K4 found')
        return report.setNo()
    cycle = findInducedCycle(graph, 5)
    logger.info(
        '%s solver: precolouring induced C5 %r',
        _common.route.getTag(report.route), cycle.vertices,
    )
    return _finishN0(
        graph,
        report,
        fullN0Propagation(graph, lists, cycle.vertices, jobs=jobs),
        'induced C5',
    )

def solveC6Free(graph, lists, jobs=1, check=True, report=None):
    """
    Decide List 3-Colouring on a C6-free graph of diameter at most 2.
    C5-free inputs go to solveC5Free, others are decided by precolouring an
    induced C5.
    """
    checkListCount(graph, lists)
    report = _newReport(report, ROUTE_THEOREM_5)
    if check:
        _requireClass(graph, (6, ), 'C6-free solver')
    return _solveByInducedC5(graph, lists, jobs, report)

def solveC4C7Free(graph, lists, jobs=1, check=True, report=None):
    """
    Decide List 3-Colouring on a (C4, C7)-free graph of diameter at most 2,
    as solveC6Free does.
    """
    checkListCount(graph, lists)
    report = _newReport(report, ROUTE_THEOREM_6)
    if check:
        _requireClass(graph, (4, 7), '(C4, C7)-free solver')
    return _solveByInducedC5(graph, lists, jobs, report)

def _solveByCycleSweep(
    graph, lists, length, rules, policy, jobs, report, cycle_limit,
):
    """
    Sweep stage: propagate every precolouring of every induced cycle of the
    given length (or of every small vertex set under POLICY_ALL). Undecided
    branches coloured with the forbidden pattern mean the graph is out of
    class.
    Cycle stage: every precolouring of the first induced cycle, propagated
    with the cycle rule, except those with the forbidden pattern, which the
    sweep stage showed to be no.
    """
    logger.info(
        '%s solver: sweeping induced C%i', _common.route.getTag(report.route),
        length,
    )
    p_report = fullPPropagation(
        graph, lists, length, policy, BASIC_RULES, cycle_length=length,
        stop_on_refutation=True, jobs=jobs, cycle_limit=cycle_limit,
    )
    report.stats['branches'] += p_report.getBranchCount()
    report.stats['reductions'] += sum(
        x.getReductionCount() for _, x in p_report.entry_list
    )
    if p_report.summary == SUMMARY_YES:
        return report.setYes(p_report.witness)
    if p_report.refutation is not None:
        report.addNote(f'refuted by N0={p_report.refutation}')
        return report.setNo()
    cycle_list = getCachedCycleList(graph, length, cycle_limit)
    for cycle in cycle_list:
        n0_report = p_report.getReport(cycle.vertices)
        for branch in n0_report.getUnknownBranchList():
            colouring = branch.precolouring.colouring
            if isClaimOnePattern(cycle.vertices, colouring):
                raiseColouringError(
                    ERROR_OUT_OF_CLASS,
                    f'{_common.route.getTag(report.route)} sweep: induced '
                    f'C{length} {cycle.vertices} precolouring '
                    f'{branch.precolouring.colouring} left undecided',
                    route=report.route,
                    stage='sweep',
                    precolouring=branch.precolouring,
                )
    cycle = cycle_list[0]
    logger.info(
        '%s solver: cycle stage on %r', _common.route.getTag(report.route),
        cycle.vertices,
    )
    sweep_report = p_report.getReport(cycle.vertices)
    pending_list = []
    case_count = collections.Counter()
    for branch in sweep_report.branch_list:
        colouring = branch.precolouring.colouring
        if isClaimOnePattern(cycle.vertices, colouring):
            continue
        if length == 7:
            case_count[getC7Case(cycle.vertices, colouring)] += 1
        pending_list.append(branch.precolouring)
    if case_count:
        report.addNote(
            'C7 precolourings: ' + ', '.join(
                f'case {x}: {case_count[x]}'
                for x in sorted(case_count, key=str)
            ),
        )
    n0_report = _makeN0Report(
        sweep_report.domain,
        _runBranches(
            graph, lists, pending_list, rules, jobs, True, cycle_limit,
        ),
    )
    return _finishN0(graph, report, n0_report, f'induced C{length}')

def solveC4C8Free(
    graph, lists, policy=POLICY_CYCLES, jobs=1, check=True, report=None,
    cycle_limit=CYCLE_LIMIT,
):
    """
    Decide List 3-Colouring on a (C4, C8)-free graph of diameter at most 2.

    C6-free inputs go to solveC6Free. Otherwise precolourings of induced C6
    are swept (policy POLICY_CYCLES), or of every vertex set of size at most
    6 (POLICY_ALL), then one induced C6 is precoloured with the c6 rule
    enabled.
    Raises ColouringErrorOutOfClass when a branch is left undecided.
    """
    checkListCount(graph, lists)
    report = _newReport(report, ROUTE_THEOREM_7)
    if check:
        _requireClass(graph, (4, 8), '(C4, C8)-free solver')
    if isInducedCycleFree(graph, 6):
        return solveC6Free(graph, lists, jobs=jobs, check=False, report=report)
    if findK4(graph) is not None:
        report.addNote('K4 found')
        return report.setNo()
    return _solveByCycleSweep(
        graph, lists, 6, C6_RULES, policy, jobs, report, cycle_limit,
    )

def solveC4C9Free(
    graph, lists, policy=POLICY_CYCLES, jobs=1, check=True, report=None,
    cycle_limit=CYCLE_LIMIT,
):
    """
    Decide List 3-Colouring on a (C4, C9)-free graph of diameter at most 2.
    As solveC4C8Free, with induced C7 and the c7 rule; C7-free inputs go to
    solveC4C7Free.
    """
    checkListCount(graph, lists)
    report = _newReport(report, ROUTE_THEOREM_8)
    if check:
        _requireClass(graph, (4, 9), '(C4, C9)-free solver')
    if isInducedCycleFree(graph, 7):
        return solveC4C7Free(
            graph, lists, jobs=jobs, check=False, report=report,
        )
    if findK4(graph) is not None:
        report.addNote('K4 found')
        return report.setNo()
    return _solveByCycleSweep(
        graph, lists, 7, C7_RULES, policy, jobs, report, cycle_limit,
    )

def _getColourClassList(mask_tuple, mask):
    """
    Partition the colours of mask into classes of colours any two of which
    can be swapped without changing any list.
    """
    result = []
    for colour in maskToColours(mask):
        for colour_class in result:
            other_bit = colourToMask(colour_class[0])
            bit = colourToMask(colour)
            if all(bool(x & bit) == bool(x & other_bit) for x in mask_tuple):
                colour_class.append(colour)
                break
        else:
            result.append([colour])
    return result

def solveExact(graph, lists, budget=EXACT_NODE_BUDGET, report=None):
    """
    Decide List 3-Colouring by branching.

    Each search node propagates with the basic rules, and is cut when the
    vertices with lists of size 1 or 2 admit no colouring. Other nodes branch
    on a vertex with a full list, having most full-list neighbours; colours
    interchangeable in every list are tried once.

    budget (int, None)
        Node bound, raises ColouringErrorBudget above it.
    """
    checkListCount(graph, lists)
    report = _newReport(report, ROUTE_EXACT)
    node_count = 0
    def search(current):
        nonlocal node_count
        node_count += 1
        if budget is not None and node_count > budget:
            raiseColouringError(
                ERROR_BUDGET,
                f'exact search exceeded {budget} nodes',
                budget=budget,
            )
        outcome, trace = propagate(graph, current, BASIC_RULES)
        report.stats['reductions'] += len(trace)
        if outcome.status == OUTCOME_YES:
            return outcome.colouring
        if outcome.status == OUTCOME_NO:
            return None
        mask_tuple = outcome.lists.getMaskTuple()
        # Any colouring restricts to one of the small-list vertices.
        small_list = [x for x in graph if mask_tuple[x] != FULL_MASK]
        if small_list and solve2List(
            graph.getInducedSubgraph(small_list),
            ListAssignment(mask_tuple[x] for x in small_list),
        ) is None:
            report.stats['pruned'] += 1
            return None
        def getScore(vertex):
            return (
                sum(
                    1 for x in graph.getNeighbourSet(vertex)
                    if mask_tuple[x] == FULL_MASK
                ),
                graph.getDegree(vertex),
                -vertex,
            )
        vertex = max(
            (x for x in graph if mask_tuple[x] == FULL_MASK),
            key=getScore,
        )
        for colour_class in _getColourClassList(
            mask_tuple, mask_tuple[vertex],
        ):
            result = search(outcome.lists.withMaskDict({
                vertex: colourToMask(colour_class[0]),
            }))
            if result is not None:
                return result
        return None
    start = time.perf_counter()
    try:
        colouring = search(lists)
    finally:
        report.stats['nodes'] += node_count
        report.elapsed += time.perf_counter() - start
    if colouring is None:
        return report.setNo()
    return report.setYes(colouring)

_ROUTE_LIST = (
    (ROUTE_THEOREM_4, (5, ), solveC5Free),
    (ROUTE_THEOREM_5, (6, ), solveC6Free),
    (ROUTE_THEOREM_6, (4, 7), solveC4C7Free),
    (ROUTE_THEOREM_7, (4, 8), solveC4C8Free),
    (ROUTE_THEOREM_8, (4, 9), solveC4C9Free),
)

def dispatchSolve(
    graph, lists, jobs=1, budget=EXACT_NODE_BUDGET, policy=POLICY_CYCLES,
):
    """
    Decide List 3-Colouring, picking the first class algorithm whose class
    contains graph:
    - diameter above 2: exact search (route "unsupported"),
    - C5-free, C6-free, (C4, C7)-free, (C4, C8)-free, (C4, C9)-free: the
      matching class algorithm,
    - (C3, C4)-free: exact search (route "hoffman-singleton"; there are only
      four such graphs of diameter 2, the largest having 50 vertices),
    - anything else: exact search (route "fallback").
    A class algorithm failing with ColouringErrorOutOfClass or
    ColouringErrorOverflow is replaced by exact search (route "fallback").

    Returns a SolveReport. Raises ColouringErrorBudget only from exact
    search.
    """
    checkListCount(graph, lists)
    start = time.perf_counter()
    diameter = graph.getDiameter()
    report = None
    if diameter > 2:
        logger.warning(
            'diameter %s above 2, unsupported class: exact search', diameter,
        )
        report = SolveReport(ROUTE_UNSUPPORTED)
        report.addNote(f'diameter {diameter}')
    else:
        for route, forbidden, solve in _ROUTE_LIST:
            if not all(isInducedCycleFree(graph, x) for x in forbidden):
                continue
            logger.info('routing to %s', _common.route.getTag(route))
            report = SolveReport(route)
            try:
                if route in (ROUTE_THEOREM_7, ROUTE_THEOREM_8):
                    solve(
                        graph, lists, policy=policy, jobs=jobs, check=False,
                        report=report,
                    )
                else:
                    solve(graph, lists, jobs=jobs, check=False, report=report)
            except (ColouringErrorOutOfClass, ColouringErrorOverflow) as exc:
                logger.warning(
                    '%s failed (%s), falling back to exact search',
                    _common.route.getTag(report.route), exc,
                )
                report.addNote(
                    f'{_common.route.getTag(report.route)} failed: '
                    f'{exc.getMessage()}',
                )
                report.enter(ROUTE_FALLBACK)
                break
            report.elapsed = time.perf_counter() - start
            return report
        else:
            if isInducedCycleFree(graph, 3) and isInducedCycleFree(graph, 4):
                logger.info(
                    '(C3, C4)-free diameter-2 graph: exact search',
                )
                report = SolveReport(ROUTE_HOFFMAN_SINGLETON)
            else:
                logger.warning('no class algorithm applies: exact search')
                report = SolveReport(ROUTE_FALLBACK)
    exact_route = report.route
    solveExact(graph, lists, budget=budget, report=report)
    # Name the reason exact search ran, the path shows it did.
    report.route = exact_route
    report.elapsed = time.perf_counter() - start
    return report
