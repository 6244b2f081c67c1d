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

import random
import unittest
import list3col
from list3col import (
    ListAssignment, buildGraph, oracleListColour, countColourings, respects,
)
from ._testsupport import (
    getCycle, getComplete, getPath, getPetersen, genInstance, genRange,
    iterSamples,
)

class OracleTests(unittest.TestCase):
    def testExamples(self):
        triangle = getComplete(3)
        self.assertEqual(
            oracleListColour(
                triangle, ListAssignment.fromColourLists([[1], [2], [3]]),
            ),
            {0: 1, 1: 2, 2: 3},
        )
        self.assertIsNone(oracleListColour(
            triangle, ListAssignment.fromColourLists([[1, 2]] * 3),
        ))
        petersen = getPetersen()
        full = ListAssignment.full(10)
        self.assertTrue(
            respects(oracleListColour(petersen, full), petersen, full),
        )
        self.assertIsNone(
            oracleListColour(getComplete(4), ListAssignment.full(4)),
        )

    def testCount(self):
        self.assertEqual(
            countColourings(getComplete(3), ListAssignment.full(3)), 6,
        )
        self.assertEqual(
            countColourings(
                getPath(2), ListAssignment.fromColourLists([[1, 2]] * 2),
            ),
            2,
        )
        self.assertEqual(
            countColourings(getCycle(5), ListAssignment.full(5)), 30,
        )
        self.assertEqual(
            countColourings(buildGraph(0, []), ListAssignment([])), 1,
        )

    def testBudget(self):
        self.assertRaises(
            list3col.ColouringErrorBudget,
            oracleListColour, getCycle(61), ListAssignment.full(61),
        )
        self.assertRaises(
            list3col.ColouringErrorBudget,
            countColourings, getCycle(17), ListAssignment.full(17),
        )
        self.assertRaises(
            list3col.ColouringErrorBudget,
            oracleListColour, getCycle(21), ListAssignment.full(21),
            exhaustive=True,
        )

    def testSearchModesAgree(self):
        for graph, lists in iterSamples(
            genInstance(genRange(1, 8), .4, .5), 300, 9,
        ):
            colouring = oracleListColour(graph, lists)
            enumerated = oracleListColour(graph, lists, exhaustive=True)
            count = countColourings(graph, lists)
            self.assertEqual(colouring is None, enumerated is None)
            self.assertEqual(colouring is None, count == 0)
            if colouring is not None:
                self.assertTrue(respects(colouring, graph, lists))
                self.assertTrue(respects(enumerated, graph, lists))

    def testRelabelling(self):
        rng = random.Random(10)
        for graph, lists in iterSamples(
            genInstance(genRange(1, 8), .4, .5), 100, 11,
        ):
            permutation = list(graph)
            rng.shuffle(permutation)
            relabelled = buildGraph(
                len(graph),
                [
                    (permutation[u], permutation[v])
                    for u, v in graph.iterEdges()
                ],
            )
            mask_list = [0] * len(graph)
            for vertex, mask in enumerate(lists.getMaskTuple()):
                mask_list[permutation[vertex]] = mask
            self.assertEqual(
                countColourings(graph, lists),
                countColourings(relabelled, ListAssignment(mask_list)),
            )

if __name__ == '__main__':
    unittest.main()
