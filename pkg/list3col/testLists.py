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
    ListAssignment, Precolouring, buildGraph, colourToMask, maskToColours,
    getMaskSize, formatMask, isProper, respects, iterPromising,
    restrictToPrecolouring,
)
from .lists import checkListCount
from ._testsupport import getCycle, getComplete, getPath

class MaskTests(unittest.TestCase):
    def testConversions(self):
        self.assertEqual(colourToMask(1), 0b001)
        self.assertEqual(colourToMask(3), 0b100)
        self.assertEqual(maskToColours(0b101), (1, 3))
        self.assertEqual(maskToColours(0), ())
        self.assertEqual(getMaskSize(0b111), 3)
        self.assertEqual(formatMask(0b011), '{1,2}')
        self.assertEqual(formatMask(0), '{}')

class ListAssignmentTests(unittest.TestCase):
    def testBuild(self):
        lists = ListAssignment.fromColourLists([[1], [2, 3], [], [3, 1, 2]])
        self.assertEqual(lists.getMaskTuple(), (0b001, 0b110, 0, 0b111))
        self.assertEqual(lists.getColours(1), (2, 3))
        self.assertEqual(lists.getSize(2), 0)
        self.assertEqual(lists.getTotalSize(), 6)
        self.assertTrue(lists.isFull(3))
        self.assertEqual(lists.format(), '{1} {2,3} {} {1,2,3}')
        self.assertEqual(ListAssignment.full(2).getMaskTuple(), (7, 7))

    def testBuildErrors(self):
        self.assertRaises(
            list3col.ColouringErrorInput,
            ListAssignment.fromColourLists, [[4]],
        )
        self.assertRaises(list3col.ColouringErrorInput, ListAssignment, [8])
        self.assertRaises(list3col.ColouringErrorInput, ListAssignment, [-1])
        self.assertRaises(
            list3col.ColouringErrorInput,
            checkListCount, getCycle(3), ListAssignment.full(2),
        )

    def testImmutable(self):
        lists = ListAssignment.full(3)
        changed = lists.withMaskDict({1: 0b010})
        self.assertEqual(lists, ListAssignment.full(3))
        self.assertEqual(changed.getMaskTuple(), (7, 2, 7))
        self.assertTrue(changed.isSubsetOf(lists))
        self.assertFalse(lists.isSubsetOf(changed))
        self.assertEqual(hash(changed), hash(ListAssignment([7, 2, 7])))

class ColouringTests(unittest.TestCase):
    def testIsProper(self):
        graph = getComplete(3)
        self.assertTrue(isProper(graph, {0: 1, 1: 2, 2: 3}))
        self.assertFalse(isProper(graph, {0: 1, 1: 1, 2: 2}))
        self.assertTrue(isProper(graph, {0: 1, 2: 2}))

    def testRespects(self):
        graph = getComplete(3)
        full = ListAssignment.full(3)
        self.assertTrue(respects({0: 1, 1: 2, 2: 3}, graph, full))
        self.assertFalse(respects({0: 1, 1: 1, 2: 2}, graph, full))
        self.assertFalse(respects({0: 1, 1: 2}, graph, full))
        edge = buildGraph(2, [(0, 1)])
        self.assertFalse(respects(
            {0: 1, 1: 2}, edge, ListAssignment.fromColourLists([[2, 3], [1, 2]]),
        ))
        self.assertFalse(respects({0: 4, 1: 2}, edge, ListAssignment.full(2)))

class PrecolouringTests(unittest.TestCase):
    def testSingleVertex(self):
        graph = buildGraph(1, [])
        lists = ListAssignment.fromColourLists([[1, 2]])
        self.assertEqual(
            list(iterPromising(graph, lists, [0])),
            [
                Precolouring((0, ), {0: 1}),
                Precolouring((0, ), {0: 2}),
            ],
        )

    def testCounts(self):
        triangle_list = list(iterPromising(
            getComplete(3), ListAssignment.full(3), [2, 1, 0],
        ))
        self.assertEqual(len(triangle_list), 6)
        self.assertEqual(triangle_list[0].colouring, {0: 1, 1: 2, 2: 3})
        self.assertEqual(triangle_list[0].domain, (0, 1, 2))
        self.assertEqual(
            len(list(iterPromising(getCycle(5), ListAssignment.full(5), range(5)))),
            30,
        )
        self.assertEqual(
            list(iterPromising(getCycle(3), ListAssignment.full(3), [])),
            [Precolouring((), {})],
        )

    def testListsRespected(self):
        graph = getPath(2)
        lists = ListAssignment.fromColourLists([[1], [1, 2]])
        self.assertEqual(
            [x.colouring for x in iterPromising(graph, lists, [0, 1])],
            [{0: 1, 1: 2}],
        )

    def testLimit(self):
        self.assertRaises(
            list3col.ColouringErrorConfiguration,
            iterPromising, getCycle(9), ListAssignment.full(9), range(9),
        )
        self.assertEqual(
            len(list(iterPromising(
                getCycle(9), ListAssignment.full(9), range(9), limit=9,
            ))),
            2 ** 9 - 2,
        )

    def testRestrict(self):
        full = ListAssignment.full(3)
        self.assertEqual(
            restrictToPrecolouring(full, Precolouring((1, ), {1: 2})),
            ListAssignment([7, 0b010, 7]),
        )
        self.assertEqual(
            restrictToPrecolouring(full, Precolouring((), {})), full,
        )
        lists = ListAssignment.fromColourLists([[1, 3]])
        self.assertEqual(
            restrictToPrecolouring(lists, Precolouring((0, ), {0: 3})),
            ListAssignment([0b100]),
        )

if __name__ == '__main__':
    unittest.main()
