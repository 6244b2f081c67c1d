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

# pylint: disable=invalid-name, missing-docstring

import unittest
import list3col
from list3col import (
    ImplicationGraph, ListAssignment, solve2List, respects, oracleListColour,
)
from .twosat import negate
from ._testsupport import getCycle, getPath, genGraph, genRange, iterSamples

class ImplicationGraphTests(unittest.TestCase):
    def testContraposition(self):
        implication_graph = ImplicationGraph(3)
        implication_graph.addClause(0, 3)
        implication_graph.addClause(5, 5)
        digraph = implication_graph.getDiGraph()
        for a, b in digraph.edges():
            self.assertTrue(digraph.has_edge(negate(b), negate(a)))
        self.assertEqual(len(digraph), 6)

    def testSolve(self):
        implication_graph = ImplicationGraph(2)
        # x0, and (not x0 or not x1).
        implication_graph.addClause(0, 0)
        implication_graph.addClause(1, 3)
        self.assertEqual(implication_graph.solve(), [True, False])
        # Contradiction with x1.
        implication_graph.addClause(2, 2)
        self.assertIsNone(implication_graph.solve())

class Solve2ListTests(unittest.TestCase):
    def testExamples(self):
        edge = getPath(2)
        lists = ListAssignment.fromColourLists([[1, 2], [1, 2]])
        colouring = solve2List(edge, lists)
        self.assertTrue(respects(colouring, edge, lists))
        self.assertIsNone(solve2List(
            getCycle(5), ListAssignment.fromColourLists([[1, 2]] * 5),
        ))
        colouring = solve2List(
            getCycle(4), ListAssignment.fromColourLists([[1, 2]] * 4),
        )
        self.assertIn(colouring, (
            {0: 1, 1: 2, 2: 1, 3: 2},
            {0: 2, 1: 1, 2: 2, 3: 1},
        ))
        self.assertEqual(
            solve2List(edge, ListAssignment.fromColourLists([[1], [1, 2]])),
            {0: 1, 1: 2},
        )

    def testContract(self):
        for mask in (0, 0b111):
            with self.assertRaises(list3col.ColouringErrorContract) as context:
                solve2List(getPath(2), ListAssignment([0b011, mask]))
            self.assertEqual(context.exception.detail['vertex'], 1)

    def testRandomListsMatchOracle(self):
        def genSmallLists(rng):
            graph = genGraph(genRange(1, 9), .35)(rng)
            return graph, ListAssignment(
                rng.choice((1, 2, 3, 4, 5, 6)) for _ in graph
            )
        for graph, lists in iterSamples(genSmallLists, 300, 6):
            colouring = solve2List(graph, lists)
            expected = oracleListColour(graph, lists)
            self.assertEqual(colouring is None, expected is None)
            if colouring is not None:
                self.assertTrue(respects(colouring, graph, lists))

if __name__ == '__main__':
    unittest.main()
