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
    buildGraph, findK4, findTriangle, findInducedCycle, enumerateInducedCycles,
    findTriangleOrInducedC5, getDiamondSiteList, getBullSiteList,
    isInducedCycle, DiamondSite, BullSite, InducedCycle,
)
from .patterns import getDiamondPartnerSet, iterOrientations, iterTriangles
from ._testsupport import (
    getCycle, getComplete, getCompleteBipartite, getWheel, getPetersen,
    getDiamond, getBull, genGraph, genRange, iterSamples, iterAllGraphs,
    countInducedCyclesBruteForce, iterAtlasGraphs,
)

class CliqueTests(unittest.TestCase):
    def testK4(self):
        self.assertEqual(findK4(getComplete(4)), (0, 1, 2, 3))
        self.assertIsNone(findK4(getPetersen()))
        self.assertIsNone(findK4(getCycle(5)))
        self.assertEqual(findK4(getComplete(6)), (0, 1, 2, 3))

    def testTriangle(self):
        self.assertEqual(findTriangle(getComplete(3)), (0, 1, 2))
        self.assertIsNone(findTriangle(getCycle(6)))
        # Hub 0 with the rim edge 1-2.
        self.assertEqual(findTriangle(getWheel(5)), (0, 1, 2))
        self.assertEqual(len(list(iterTriangles(getComplete(5)))), 10)
        self.assertEqual(list(iterTriangles(getPetersen())), [])

class InducedCycleTests(unittest.TestCase):
    def testFind(self):
        self.assertEqual(
            findInducedCycle(getCycle(6), 6),
            InducedCycle((0, 1, 2, 3, 4, 5)),
        )
        chorded = buildGraph(
            6, [(x, (x + 1) % 6) for x in range(6)] + [(0, 3)],
        )
        self.assertIsNone(findInducedCycle(chorded, 6))
        self.assertEqual(len(enumerateInducedCycles(chorded, 4)), 2)
        petersen = getPetersen()
        cycle = findInducedCycle(petersen, 5)
        self.assertEqual(len(cycle), 5)
        self.assertTrue(isInducedCycle(petersen, cycle.vertices))
        self.assertIsNone(findInducedCycle(petersen, 7))

    def testCounts(self):
        self.assertEqual(len(enumerateInducedCycles(getCycle(6), 6)), 1)
        self.assertEqual(
            len(enumerateInducedCycles(getCompleteBipartite(3, 3), 4)), 9,
        )
        petersen = getPetersen()
        for length, count in ((4, 0), (5, 12), (6, 10), (7, 0)):
            self.assertEqual(
                len(enumerateInducedCycles(petersen, length)), count, length,
            )

    def testMatchesBruteForce(self):
        for graph in iterSamples(genGraph(genRange(4, 8), .45), 150, 2):
            for length in range(4, len(graph) + 1):
                cycle_list = enumerateInducedCycles(graph, length)
                self.assertEqual(
                    len(cycle_list),
                    countInducedCyclesBruteForce(graph, length),
                )
                for cycle in cycle_list:
                    self.assertTrue(isInducedCycle(graph, cycle.vertices))

    def testCanonicalOrder(self):
        for graph in iterSamples(genGraph(genRange(5, 9), .4), 60, 3):
            for length in (4, 5, 6):
                cycle_list = enumerateInducedCycles(graph, length)
                vertex_tuple_list = [x.vertices for x in cycle_list]
                self.assertEqual(vertex_tuple_list, sorted(vertex_tuple_list))
                self.assertEqual(
                    len(set(x.getVertexSet() for x in cycle_list)),
                    len(cycle_list),
                )
                for vertex_tuple in vertex_tuple_list:
                    self.assertEqual(vertex_tuple[0], min(vertex_tuple))
                    self.assertLess(vertex_tuple[1], vertex_tuple[-1])

    def testOverflow(self):
        with self.assertRaises(list3col.ColouringErrorOverflow) as context:
            enumerateInducedCycles(getCompleteBipartite(3, 3), 4, limit=5)
        self.assertEqual(context.exception.detail['limit'], 5)
        self.assertEqual(
            len(enumerateInducedCycles(getCompleteBipartite(3, 3), 4, limit=9)),
            9,
        )

    def testLengthChecks(self):
        self.assertRaises(
            list3col.ColouringErrorContract,
            enumerateInducedCycles, getCycle(5), 3,
        )
        self.assertRaises(
            list3col.ColouringErrorConfiguration,
            findInducedCycle, getCycle(20), 20,
        )

    def testOrientations(self):
        orientation_list = list(iterOrientations(InducedCycle((0, 1, 2, 3))))
        self.assertEqual(len(orientation_list), 8)
        self.assertEqual(orientation_list[0], (0, 1, 2, 3))
        self.assertEqual(orientation_list[1], (1, 2, 3, 0))
        self.assertEqual(orientation_list[4], (3, 2, 1, 0))
        self.assertEqual(len(set(orientation_list)), 8)

class TriangleOrC5Tests(unittest.TestCase):
    def testExamples(self):
        self.assertEqual(findTriangleOrInducedC5(getComplete(3)), (0, 1, 2))
        cycle = findTriangleOrInducedC5(getPetersen())
        self.assertIsInstance(cycle, InducedCycle)
        self.assertEqual(len(cycle), 5)
        self.assertEqual(
            findTriangleOrInducedC5(getCycle(5)),
            InducedCycle((0, 1, 2, 3, 4)),
        )

    def testContract(self):
        self.assertRaises(
            list3col.ColouringErrorContract,
            findTriangleOrInducedC5, getCycle(4),
        )
        self.assertRaises(
            list3col.ColouringErrorContract,
            findTriangleOrInducedC5, getCycle(7),
        )

    def _checkTriangleOrC5(self, graph):
        if graph.getDiameter() > 2 or (
            list3col.getBipartition(graph) is not None
        ):
            return False
        result = findTriangleOrInducedC5(graph)
        if isinstance(result, InducedCycle):
            self.assertTrue(isInducedCycle(graph, result.vertices))
            self.assertIsNone(findTriangle(graph))
        else:
            self.assertEqual(len(result), 3)
            self.assertTrue(all(
                graph.hasEdge(u, v) for u, v in (
                    (result[0], result[1]),
                    (result[0], result[2]),
                    (result[1], result[2]),
                )
            ))
        return True

    def testEverySmallGraph(self):
        """
        Every non-bipartite graph of diameter at most 2 on up to 7 vertices
        has a triangle or an induced C5.
        """
        checked = sum(
            self._checkTriangleOrC5(graph) for graph in iterAtlasGraphs(3)
        )
        self.assertGreater(checked, 0)
        # Labelled, so every vertex order the search may meet shows up.
        for vertex_count in range(3, 6):
            for graph in iterAllGraphs(vertex_count):
                self._checkTriangleOrC5(graph)

    def testRandomLargerGraphs(self):
        checked = sum(
            self._checkTriangleOrC5(graph)
            for graph in iterSamples(genGraph(genRange(8, 9), .6), 300, 4)
        )
        self.assertGreater(checked, 0)

class SiteTests(unittest.TestCase):
    def testDiamond(self):
        graph = getDiamond()
        self.assertEqual(getDiamondSiteList(graph, 2), [DiamondSite(0, 1, 2, 3)])
        self.assertEqual(getDiamondSiteList(graph, 3), [DiamondSite(0, 1, 3, 2)])
        self.assertEqual(getDiamondSiteList(graph, 0), [])
        self.assertEqual(getDiamondPartnerSet(graph, 2), {3})
        for x in range(5):
            self.assertEqual(getDiamondSiteList(getCycle(5), x), [])
        for x in range(4):
            self.assertEqual(getDiamondSiteList(getComplete(4), x), [])

    def testDiamondPartnersMatchSites(self):
        for graph in iterSamples(genGraph(genRange(4, 9), .5), 80, 4):
            for x in graph:
                self.assertEqual(
                    getDiamondPartnerSet(graph, x),
                    {site.y for site in getDiamondSiteList(graph, x)},
                )

    def testBull(self):
        graph = getBull()
        self.assertEqual(getBullSiteList(graph, 2), [BullSite(3, 4, 2, 0, 1)])
        for w in (0, 1, 3, 4):
            self.assertEqual(getBullSiteList(graph, w), [])
        for w in range(5):
            self.assertEqual(getBullSiteList(getCycle(5), w), [])
        closed = buildGraph(5, list(graph.iterEdges()) + [(3, 4)])
        self.assertEqual(getBullSiteList(closed, 2), [])

if __name__ == '__main__':
    unittest.main()
