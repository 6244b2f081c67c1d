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

import pickle
import unittest
import networkx
import list3col
from list3col import (
    buildGraph, fromNetworkX, getBipartition, isCompleteBipartite, INFINITY,
)
from ._testsupport import (
    getCycle, getPath, getComplete, getCompleteBipartite, getPetersen,
    genGraph, genRange, iterSamples,
)

class GraphTests(unittest.TestCase):
    def testBuild(self):
        graph = getCycle(5)
        self.assertEqual(len(graph), 5)
        self.assertEqual(graph.getEdgeCount(), 5)
        self.assertEqual([graph.getDegree(x) for x in graph], [2] * 5)
        self.assertEqual(
            list(graph.iterEdges()),
            [(0, 1), (0, 4), (1, 2), (2, 3), (3, 4)],
        )
        graph = getComplete(4)
        self.assertEqual([graph.getDegree(x) for x in graph], [3] * 4)

    def testBuildMergesDuplicates(self):
        graph = buildGraph(3, [(0, 1), (0, 1), (1, 0)])
        self.assertEqual(graph.getEdgeCount(), 1)
        self.assertTrue(graph.hasEdge(1, 0))
        self.assertFalse(graph.hasEdge(1, 2))

    def testBuildErrors(self):
        self.assertRaises(
            list3col.ColouringErrorInput, buildGraph, 2, [(0, 2)],
        )
        self.assertRaises(
            list3col.ColouringErrorInput, buildGraph, 2, [(1, 1)],
        )
        self.assertRaises(list3col.ColouringErrorInput, buildGraph, -1, [])
        try:
            buildGraph(3, [(0, 5)])
        except list3col.ColouringError as exc:
            self.assertEqual(exc.value, list3col.ERROR_INPUT)
            self.assertEqual(exc.detail['edge'], (0, 5))
        else:
            self.fail('out of range edge accepted')

    def testDiameter(self):
        self.assertEqual(getCycle(5).getDiameter(), 2)
        self.assertEqual(getPath(4).getDiameter(), 3)
        self.assertEqual(getPetersen().getDiameter(), 2)
        self.assertEqual(getComplete(4).getDiameter(), 1)
        self.assertIs(buildGraph(2, []).getDiameter(), INFINITY)
        self.assertEqual(buildGraph(1, []).getDiameter(), 0)
        self.assertEqual(buildGraph(0, []).getDiameter(), 0)
        self.assertEqual(list3col.getDiameter(getCycle(9)), 4)

    @staticmethod
    def _getNetworkXDiameter(graph):
        nx_graph = networkx.Graph()
        nx_graph.add_nodes_from(graph)
        nx_graph.add_edges_from(graph.iterEdges())
        if len(graph) and not networkx.is_connected(nx_graph):
            return INFINITY
        if len(graph) < 2:
            return 0
        return networkx.diameter(nx_graph)

    def testDiameterMatchesNetworkX(self):
        for graph in iterSamples(genGraph(genRange(0, 10), .3), 200, 1):
            self.assertEqual(
                graph.getDiameter(), self._getNetworkXDiameter(graph),
            )

    def testSecondNeighbourhood(self):
        graph = getCycle(5)
        self.assertEqual(graph.getSecondNeighbourSet(0), {2, 3})
        self.assertEqual(graph.getNeighbourhood({0, 1}), {2, 4})
        self.assertEqual(graph.getDistanceList(0), [0, 1, 2, 2, 1])

    def testBipartition(self):
        bipartition = getBipartition(getCycle(4))
        self.assertEqual(bipartition.partA, {0, 2})
        self.assertEqual(bipartition.partB, {1, 3})
        self.assertIsNone(getBipartition(getCycle(5)))
        bipartition = getBipartition(getCompleteBipartite(3, 3))
        self.assertEqual(
            sorted(len(x) for x in bipartition), [3, 3],
        )

    def testCompleteBipartite(self):
        for graph, expected in (
            (getCompleteBipartite(3, 3), True),
            (getCycle(4), True),
            (getCycle(6), False),
        ):
            self.assertEqual(
                isCompleteBipartite(graph, getBipartition(graph)), expected,
            )

    def testFromNetworkX(self):
        graph, label_list = fromNetworkX(networkx.petersen_graph())
        self.assertEqual(len(graph), 10)
        self.assertEqual(graph.getEdgeCount(), 15)
        self.assertEqual(label_list, list(range(10)))
        nx_graph = networkx.Graph([('b', 'a'), ('b', 'c')])
        graph, label_list = fromNetworkX(nx_graph)
        self.assertEqual(label_list, ['a', 'b', 'c'])
        self.assertEqual(list(graph.iterEdges()), [(0, 1), (1, 2)])

    def testInducedSubgraph(self):
        graph = getCycle(6).getInducedSubgraph([4, 5, 0, 1])
        self.assertEqual(list(graph.iterEdges()), [(0, 1), (1, 2), (2, 3)])

    def testPickle(self):
        graph = getPetersen()
        graph.getDiameter()
        graph.getSecondNeighbourSet(0)
        copy = pickle.loads(pickle.dumps(graph))
        self.assertEqual(copy, graph)
        self.assertEqual(hash(copy), hash(graph))
        self.assertEqual(copy.cache_dict, {})
        self.assertNotEqual(graph, getCycle(10))

if __name__ == '__main__':
    unittest.main()
