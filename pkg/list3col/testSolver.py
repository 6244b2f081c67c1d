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

# pylint: disable=invalid-name, missing-docstring, too-many-public-methods

import unittest
import list3col
from list3col import (
    ListAssignment, buildGraph, fullN0Propagation, fullPPropagation,
    isClaimOnePattern, getC7Case, getLayers, getTriangleTSet, classify,
    isClassMember, solveC5Free, solveC6Free, solveC4C7Free, solveC4C8Free,
    solveC4C9Free, solveExact, dispatchSolve, oracleListColour, respects,
    genClassInstance, CLASS_NAME_LIST, SUMMARY_YES, SUMMARY_ALL_NO,
    SUMMARY_MIXED, SUMMARY_EMPTY, POLICY_ALL, POLICY_CYCLES, OUTCOME_YES,
    OUTCOME_NO, ROUTE_THEOREM_4, ROUTE_THEOREM_5, ROUTE_THEOREM_6,
    ROUTE_THEOREM_7, ROUTE_THEOREM_8, ROUTE_EXACT, ROUTE_UNSUPPORTED,
    ROUTE_HOFFMAN_SINGLETON,
)
from .solver import isInducedCycleFree
from ._testsupport import (
    getCycle, getComplete, getCompleteBipartite, getWheel, getPetersen,
    getHoffmanSingleton, getBook, genSweepInstance, iterSamples,
)

_SOLVER_DICT = {
    'c5free': solveC5Free,
    'c6free': solveC6Free,
    'c4c7': solveC4C7Free,
    'c4c8': solveC4C8Free,
    'c4c9': solveC4C9Free,
}

def _full(graph):
    return ListAssignment.full(len(graph))

class N0PropagationTests(unittest.TestCase):
    def testAllNo(self):
        k4 = getComplete(4)
        report = fullN0Propagation(k4, _full(k4), (2, 0, 1))
        self.assertEqual(report.domain, (0, 1, 2))
        self.assertEqual(report.summary, SUMMARY_ALL_NO)
        self.assertEqual(len(report.branch_list), 6)
        self.assertIsNone(report.witness)
        self.assertEqual(report.getUnknownBranchList(), [])

    def testYes(self):
        triangle = getComplete(3)
        report = fullN0Propagation(triangle, _full(triangle), (0, 1, 2))
        self.assertEqual(report.summary, SUMMARY_YES)
        self.assertEqual(len(report.branch_list), 1)
        self.assertEqual(report.witness, {0: 1, 1: 2, 2: 3})
        report = fullN0Propagation(
            triangle, _full(triangle), (0, 1, 2), stop_on_yes=False,
        )
        self.assertEqual(len(report.branch_list), 6)

    def testMixed(self):
        graph = buildGraph(2, [])
        report = fullN0Propagation(graph, _full(graph), (0, ))
        self.assertEqual(report.summary, SUMMARY_MIXED)
        self.assertEqual(len(report.getUnknownBranchList()), 3)

    def testNoPromisingPrecolouring(self):
        triangle = getComplete(3)
        report = fullN0Propagation(
            triangle, ListAssignment.fromColourLists([[1]] * 3), (0, 1),
        )
        self.assertEqual(report.summary, SUMMARY_ALL_NO)
        self.assertEqual(report.branch_list, [])

    def testLimit(self):
        graph = getCycle(9)
        self.assertRaises(
            list3col.ColouringErrorConfiguration,
            fullN0Propagation, graph, _full(graph), range(9),
        )

class PPropagationTests(unittest.TestCase):
    def testAllNo(self):
        k4 = getComplete(4)
        report = fullPPropagation(k4, _full(k4), 3, POLICY_ALL)
        self.assertEqual(report.summary, SUMMARY_ALL_NO)
        self.assertEqual(report.refutation, (0, ))
        # Every non-empty vertex set of size at most 3.
        self.assertEqual(len(report.entry_list), 4 + 6 + 4)
        report = fullPPropagation(
            k4, _full(k4), 3, POLICY_ALL, stop_on_refutation=True,
        )
        self.assertEqual(len(report.entry_list), 1)

    def testYes(self):
        triangle = getComplete(3)
        report = fullPPropagation(triangle, _full(triangle), 3)
        self.assertEqual(report.summary, SUMMARY_YES)
        self.assertTrue(respects(report.witness, triangle, _full(triangle)))
        self.assertIsNotNone(report.getReport((0, )))
        self.assertIsNone(report.getReport((1, 2)))

    def testCycles(self):
        triangle = getComplete(3)
        report = fullPPropagation(
            triangle, _full(triangle), 6, POLICY_CYCLES, cycle_length=6,
        )
        self.assertEqual(report.summary, SUMMARY_EMPTY)
        self.assertEqual(report.entry_list, [])
        cycle = getCycle(6)
        report = fullPPropagation(cycle, _full(cycle), 6, POLICY_CYCLES)
        self.assertEqual(report.summary, SUMMARY_YES)
        self.assertEqual(report.entry_list[0][0], (0, 1, 2, 3, 4, 5))
        self.assertEqual(
            report.getReport((5, 4, 3, 2, 1, 0)).domain, (0, 1, 2, 3, 4, 5),
        )

    def testConfiguration(self):
        triangle = getComplete(3)
        for kw in (
            {'p': 8},
            {'p': 3, 'policy': 7},
            {'p': 4, 'policy': POLICY_CYCLES, 'cycle_length': 5},
        ):
            self.assertRaises(
                list3col.ColouringErrorConfiguration,
                fullPPropagation, triangle, _full(triangle), **kw
            )

class ClaimOneTests(unittest.TestCase):
    @staticmethod
    def _check(function, colour_tuple):
        cycle = tuple(range(len(colour_tuple)))
        return function(cycle, dict(zip(cycle, colour_tuple)))

    def testC6(self):
        self.assertTrue(self._check(isClaimOnePattern, (1, 2, 1, 3, 2, 3)))
        self.assertFalse(self._check(isClaimOnePattern, (1, 2, 3, 1, 2, 3)))

    def testC7(self):
        self.assertTrue(
            self._check(isClaimOnePattern, (1, 2, 1, 3, 2, 3, 2)),
        )
        self.assertFalse(
            self._check(isClaimOnePattern, (1, 2, 3, 2, 3, 2, 3)),
        )
        self.assertEqual(self._check(getC7Case, (1, 2, 3, 2, 3, 2, 3)), 1)
        self.assertEqual(self._check(getC7Case, (1, 2, 3, 1, 3, 2, 3)), 2)
        self.assertIsNone(self._check(getC7Case, (1, 2, 1, 3, 2, 3, 2)))
        # Not proper.
        self.assertIsNone(self._check(getC7Case, (1, 1, 2, 3, 2, 3, 2)))

    def testContract(self):
        self.assertRaises(
            list3col.ColouringErrorContract,
            self._check, isClaimOnePattern, (1, 2, 1, 2, 3),
        )
        self.assertRaises(
            list3col.ColouringErrorContract,
            self._check, getC7Case, (1, 2, 1, 3, 2, 3),
        )

class LayerTests(unittest.TestCase):
    def testLayers(self):
        layers = getLayers(getCycle(5), (0, ))
        self.assertEqual(layers.n0, {0})
        self.assertEqual(layers.n1, {1, 4})
        self.assertEqual(layers.n2, {2, 3})

    def testTriangleTSet(self):
        # 3 sees two triangle vertices, 6 only one.
        graph = buildGraph(7, [
            (0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (3, 4), (0, 6), (5, 6),
        ])
        self.assertEqual(getTriangleTSet(graph, (0, 1, 2)), {4})
        self.assertEqual(getLayers(graph, (0, 1, 2)).n2, {4, 5})
        self.assertEqual(getTriangleTSet(getBook(), (0, 1, 2)), set())

class ClassifyTests(unittest.TestCase):
    def testPetersen(self):
        profile = classify(getPetersen())
        self.assertEqual(profile.vertex_count, 10)
        self.assertEqual(profile.diameter, 2)
        self.assertTrue(profile.isFree(3, 4, 7, 8, 9))
        self.assertFalse(profile.free_dict[5])
        self.assertFalse(profile.free_dict[6])
        self.assertFalse(profile.has_k4)
        self.assertFalse(profile.bipartite)
        self.assertEqual(
            profile.format().splitlines(),
            [
                'diameter=2, C3-free, C4-free, C7-free, C8-free, C9-free, '
                'K4=absent',
                'bipartite=no',
            ],
        )

    def testOthers(self):
        profile = classify(getComplete(4))
        self.assertEqual(profile.diameter, 1)
        self.assertTrue(profile.has_k4)
        profile = classify(getCycle(9))
        self.assertEqual(profile.diameter, 4)
        self.assertEqual(
            [k for k, free in sorted(profile.free_dict.items()) if not free],
            [9],
        )
        profile = classify(buildGraph(2, []))
        self.assertTrue(profile.format().startswith('diameter=inf,'))
        self.assertTrue(classify(getCompleteBipartite(2, 3)).bipartite)

    def testMembership(self):
        petersen = getPetersen()
        self.assertTrue(isClassMember(petersen, 'c4c7'))
        self.assertTrue(isClassMember(petersen, 'c4c9'))
        self.assertFalse(isClassMember(petersen, 'c5free'))
        self.assertFalse(isClassMember(getCycle(9), 'c5free'))
        self.assertRaises(
            list3col.ColouringErrorConfiguration,
            isClassMember, petersen, 'c4c10',
        )

class ClassSolverTests(unittest.TestCase):
    def _solve(self, solve, graph, lists=None, **kw):
        if lists is None:
            lists = _full(graph)
        report = solve(graph, lists, **kw)
        if report.getDecision() == OUTCOME_YES:
            self.assertTrue(respects(report.getWitness(), graph, lists))
        return report

    def testC5Free(self):
        report = self._solve(solveC5Free, getCompleteBipartite(3, 3))
        self.assertEqual(report.getDecision(), OUTCOME_YES)
        self.assertEqual(report.getRoute(), ROUTE_THEOREM_4)
        report = self._solve(solveC5Free, getBook())
        self.assertEqual(report.getDecision(), OUTCOME_YES)
        report = self._solve(solveC5Free, getComplete(4))
        self.assertEqual(report.getDecision(), OUTCOME_NO)
        self.assertEqual(report.getNoteList(), ['K4 found'])
        # Odd wheels need four colours.
        self.assertEqual(
            self._solve(solveC5Free, getWheel(7)).getDecision(), OUTCOME_NO,
        )
        self.assertEqual(
            self._solve(solveC5Free, getWheel(6)).getDecision(), OUTCOME_YES,
        )

    def testBipartite(self):
        graph = getCompleteBipartite(2, 2)
        # 0 and 1 on one side, 2 and 3 on the other.
        lists = ListAssignment.fromColourLists([[1], [2], [1, 2], [3]])
        report = self._solve(solveC5Free, graph, lists)
        self.assertEqual(report.getDecision(), OUTCOME_NO)
        lists = ListAssignment.fromColourLists([[1, 3], [3], [1, 2], [1]])
        report = self._solve(solveC5Free, graph, lists)
        self.assertEqual(report.getDecision(), OUTCOME_YES)
        self.assertEqual(report.getWitness()[3], 1)

    def testC6Free(self):
        report = self._solve(solveC6Free, getWheel(5))
        self.assertEqual(report.getDecision(), OUTCOME_NO)
        self.assertEqual(report.getRoute(), ROUTE_THEOREM_5)
        report = self._solve(solveC6Free, getCycle(5))
        self.assertEqual(report.getDecision(), OUTCOME_YES)
        report = self._solve(
            solveC6Free, getCycle(5),
            ListAssignment.fromColourLists([[1, 2]] * 5),
        )
        self.assertEqual(report.getDecision(), OUTCOME_NO)

    def testC4C7Free(self):
        report = self._solve(solveC4C7Free, getPetersen())
        self.assertEqual(report.getDecision(), OUTCOME_YES)
        self.assertEqual(report.getRoute(), ROUTE_THEOREM_6)
        self.assertGreater(report.getStats()['branches'], 0)

    def testC4C8Free(self):
        report = self._solve(solveC4C8Free, getCycle(5))
        self.assertEqual(report.getDecision(), OUTCOME_YES)
        self.assertEqual(report.getRoute(), ROUTE_THEOREM_5)
        self.assertEqual(report.getPath(), [ROUTE_THEOREM_7, ROUTE_THEOREM_5])

    def testC4C9Free(self):
        report = self._solve(solveC4C9Free, getPetersen())
        self.assertEqual(report.getDecision(), OUTCOME_YES)
        self.assertEqual(report.getPath(), [ROUTE_THEOREM_8, ROUTE_THEOREM_6])
        # The rim is an induced C7 and every colouring of it leaves the hub
        # without a colour.
        report = self._solve(solveC4C9Free, getWheel(7))
        self.assertEqual(report.getDecision(), OUTCOME_NO)
        self.assertEqual(report.getRoute(), ROUTE_THEOREM_8)
        self.assertTrue(report.getNoteList()[0].startswith('refuted by'))

    def testContract(self):
        for solve, graph in (
            (solveC5Free, getCycle(5)),
            (solveC5Free, getCycle(9)),
            (solveC6Free, getCycle(6)),
            (solveC4C7Free, getCompleteBipartite(2, 2)),
            (solveC4C8Free, getCompleteBipartite(2, 3)),
            (solveC4C9Free, getCompleteBipartite(3, 3)),
        ):
            self.assertRaises(
                list3col.ColouringErrorContract,
                solve, graph, _full(graph),
            )
        self.assertRaises(
            list3col.ColouringErrorInput,
            solveC5Free, getComplete(3), ListAssignment.full(2),
        )

    def testParallelBranches(self):
        petersen = getPetersen()
        serial = solveC4C7Free(petersen, _full(petersen))
        parallel = solveC4C7Free(petersen, _full(petersen), jobs=2)
        self.assertEqual(serial.getDecision(), parallel.getDecision())
        self.assertEqual(serial.getWitness(), parallel.getWitness())

    def testMatchesOracle(self):
        for class_name in CLASS_NAME_LIST:
            solve = _SOLVER_DICT[class_name]
            for vertex_count in range(3, 10):
                for seed in range(6):
                    graph, lists = genClassInstance(
                        class_name, vertex_count, seed,
                    )
                    report = self._solve(solve, graph, lists)
                    self.assertEqual(
                        report.getDecision() == OUTCOME_YES,
                        oracleListColour(graph, lists) is not None,
                        (class_name, vertex_count, seed),
                    )

class CycleSweepTests(unittest.TestCase):
    """
    Graphs grown around an induced C6 or C7, so the class solver runs its
    own sweep instead of handing over to a smaller class.
    """
    def _check(self, solve, class_name, length, generator, count, seed):
        route = ROUTE_THEOREM_7 if length == 6 else ROUTE_THEOREM_8
        for graph, lists in iterSamples(generator, count, seed):
            self.assertTrue(isClassMember(graph, class_name))
            self.assertFalse(isInducedCycleFree(graph, length))
            report = solve(graph, lists)
            self.assertEqual(report.getPath(), [route])
            witness = oracleListColour(graph, lists)
            if report.getDecision() == OUTCOME_YES:
                self.assertTrue(respects(report.getWitness(), graph, lists))
            self.assertEqual(
                report.getDecision() == OUTCOME_YES, witness is not None,
                report.format(),
            )

    def testC4C8Free(self):
        self._check(solveC4C8Free, 'c4c8', 6, genSweepInstance(6, 8), 30, 0)

    def testC4C9Free(self):
        self._check(solveC4C9Free, 'c4c9', 7, genSweepInstance(7, 9), 30, 1)

    def testFullLists(self):
        self._check(
            solveC4C8Free, 'c4c8', 6,
            genSweepInstance(6, 8, full_ratio=1), 10, 2,
        )
        self._check(
            solveC4C9Free, 'c4c9', 7,
            genSweepInstance(7, 9, full_ratio=1), 10, 3,
        )

    def testPolicyAgreement(self):
        for solve, length, forbidden, count in (
            (solveC4C8Free, 6, 8, 6),
            (solveC4C9Free, 7, 9, 4),
        ):
            for graph, lists in iterSamples(
                genSweepInstance(length, forbidden, max_extra=2), count, 5,
            ):
                cycles = solve(graph, lists, policy=POLICY_CYCLES)
                every_set = solve(graph, lists, policy=POLICY_ALL)
                self.assertEqual(cycles.getPath(), every_set.getPath())
                self.assertEqual(cycles.getDecision(), every_set.getDecision())

class ExactTests(unittest.TestCase):
    def testExamples(self):
        report = solveExact(getComplete(4), _full(getComplete(4)))
        self.assertEqual(report.getDecision(), OUTCOME_NO)
        self.assertEqual(report.getRoute(), ROUTE_EXACT)
        cycle = getCycle(9)
        report = solveExact(cycle, _full(cycle))
        self.assertEqual(report.getDecision(), OUTCOME_YES)
        self.assertTrue(respects(report.getWitness(), cycle, _full(cycle)))
        self.assertGreater(report.getStats()['nodes'], 0)

    def testBudget(self):
        wheel = getWheel(9)
        with self.assertRaises(list3col.ColouringErrorBudget) as context:
            solveExact(wheel, _full(wheel), budget=1)
        self.assertEqual(context.exception.detail['budget'], 1)

    def testHoffmanSingleton(self):
        graph = getHoffmanSingleton()
        report = solveExact(graph, _full(graph))
        self.assertEqual(report.getDecision(), OUTCOME_NO)

class DispatchTests(unittest.TestCase):
    def _dispatch(self, graph, lists=None):
        if lists is None:
            lists = _full(graph)
        report = dispatchSolve(graph, lists)
        if report.getDecision() == OUTCOME_YES:
            self.assertTrue(respects(report.getWitness(), graph, lists))
        return report

    def testRoutes(self):
        for graph, decision, route in (
            (getCompleteBipartite(3, 3), OUTCOME_YES, ROUTE_THEOREM_4),
            (getComplete(4), OUTCOME_NO, ROUTE_THEOREM_4),
            (getWheel(6), OUTCOME_YES, ROUTE_THEOREM_4),
            (getWheel(5), OUTCOME_NO, ROUTE_THEOREM_5),
            (getCycle(5), OUTCOME_YES, ROUTE_THEOREM_5),
            (getPetersen(), OUTCOME_YES, ROUTE_THEOREM_6),
        ):
            report = self._dispatch(graph)
            self.assertEqual(report.getDecision(), decision)
            self.assertEqual(report.getRoute(), route)
            self.assertEqual(report.getPath(), [route])

    def testUnsupported(self):
        report = self._dispatch(getCycle(9))
        self.assertEqual(report.getDecision(), OUTCOME_YES)
        self.assertEqual(report.getRoute(), ROUTE_UNSUPPORTED)
        self.assertEqual(report.getPath(), [ROUTE_UNSUPPORTED, ROUTE_EXACT])
        self.assertEqual(report.getNoteList(), ['diameter 4'])
        self.assertIn('route=unsupported', report.format().splitlines())

    def testHoffmanSingleton(self):
        report = self._dispatch(getHoffmanSingleton())
        self.assertEqual(report.getDecision(), OUTCOME_NO)
        self.assertEqual(report.getRoute(), ROUTE_HOFFMAN_SINGLETON)
        self.assertEqual(
            report.getPath(), [ROUTE_HOFFMAN_SINGLETON, ROUTE_EXACT],
        )

    def testMatchesOracle(self):
        for class_name in CLASS_NAME_LIST:
            for vertex_count in range(4, 10, 2):
                for seed in range(4):
                    graph, lists = genClassInstance(
                        class_name, vertex_count, seed,
                    )
                    report = self._dispatch(graph, lists)
                    self.assertEqual(
                        report.getDecision() == OUTCOME_YES,
                        oracleListColour(graph, lists) is not None,
                    )

if __name__ == '__main__':
    unittest.main()
