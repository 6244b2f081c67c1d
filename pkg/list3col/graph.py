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
Immutable simple undirected graphs on vertices 0..n-1.

Distances are computed by breadth-first search only; graphs handled here are
desk-sized.
"""
import collections
import math
from ._common import raiseColouringError, ERROR_INPUT

__all__ = [
    'Graph', 'Bipartition', 'INFINITY', 'buildGraph', 'getDiameter',
    'getBipartition', 'isCompleteBipartite', 'fromNetworkX',
]

INFINITY = math.inf

Bipartition = collections.namedtuple('Bipartition', ['partA', 'partB'])

class Graph:
    """
    Simple undirected graph.

    Do not instanciate directly, use buildGraph (or fromNetworkX).
    Instances must not be modified once built: derived structures (diameter,
    cycle lists, site indexes) are cached on them.
    """
    def __init__(self, vertex_count, neighbour_list):
        self.__vertex_count = vertex_count
        self.__neighbour_list = neighbour_list
        self.__edge_count = sum(len(x) for x in neighbour_list) // 2
        self.__diameter = None
        # Free-form cache for other modules, keyed by their own names.
        self.cache_dict = {}

    def __len__(self):
        return self.__vertex_count

    def __iter__(self):
        return iter(range(self.__vertex_count))

    def __eq__(self, other):
        # pylint: disable=unidiomatic-typecheck
        return type(self) == type(other) and (
            # pylint: enable=unidiomatic-typecheck
            self.__vertex_count == len(other) and
            # pylint: disable=protected-access
            self.__neighbour_list == other.__neighbour_list
            # pylint: enable=protected-access
        )

    def __hash__(self):
        return hash((self.__vertex_count, tuple(self.iterEdges())))

    def __repr__(self):
        return (
            f'<{self.__class__.__name__} n={self.__vertex_count} '
            f'm={self.__edge_count}>'
        )

    # Pickling drops the cache, it is rebuilt on demand.
    def __getstate__(self):
        return (self.__vertex_count, self.__neighbour_list)

    def __setstate__(self, state):
        self.__init__(*state)

    def getVertexCount(self):
        return self.__vertex_count

    def getEdgeCount(self):
        return self.__edge_count

    def getNeighbourSet(self, vertex):
        """
        Return the (frozen) set of neighbours of vertex.
        """
        return self.__neighbour_list[vertex]

    def getDegree(self, vertex):
        return len(self.__neighbour_list[vertex])

    def hasEdge(self, u, v):
        return v in self.__neighbour_list[u]

    def iterEdges(self):
        """
        Yield each edge once, as (u, v) with u < v, in ascending order.
        """
        for u, neighbour_set in enumerate(self.__neighbour_list):
            for v in sorted(neighbour_set):
                if u < v:
                    yield u, v

    def getNeighbourhood(self, vertex_set):
        """
        N(U): vertices outside vertex_set adjacent to some vertex in it.
        """
        neighbour_list = self.__neighbour_list
        result = set()
        for vertex in vertex_set:
            result.update(neighbour_list[vertex])
        result.difference_update(vertex_set)
        return result

    def getSecondNeighbourSet(self, vertex):
        """
        Vertices at distance exactly 2 from vertex.
        """
        cache = self.cache_dict.setdefault('second_neighbour', {})
        try:
            return cache[vertex]
        except KeyError:
            pass
        neighbour_list = self.__neighbour_list
        first = neighbour_list[vertex]
        result = set()
        for neighbour in first:
            result.update(neighbour_list[neighbour])
        result.difference_update(first)
        result.discard(vertex)
        result = cache[vertex] = frozenset(result)
        return result

    def getDistanceList(self, source):
        """
        Breadth-first search from source.
        Returns a list of distances, INFINITY for unreachable vertices.
        """
        neighbour_list = self.__neighbour_list
        distance_list = [INFINITY] * self.__vertex_count
        distance_list[source] = 0
        queue = collections.deque([source])
        while queue:
            vertex = queue.popleft()
            next_distance = distance_list[vertex] + 1
            for neighbour in neighbour_list[vertex]:
                if distance_list[neighbour] is INFINITY:
                    distance_list[neighbour] = next_distance
                    queue.append(neighbour)
        return distance_list

    def getDistance(self, u, v):
        return self.getDistanceList(u)[v]

    def getDiameter(self):
        """
        Maximum distance over all vertex pairs: INFINITY when disconnected,
        0 when there are less than two vertices.
        """
        if self.__diameter is None:
            result = 0
            for source in range(self.__vertex_count):
                result = max(result, max(self.getDistanceList(source)))
                if result is INFINITY:
                    break
            self.__diameter = result
        return self.__diameter

    def getInducedSubgraph(self, vertex_list):
        """
        Return G[vertex_list], vertex_list[i] becoming vertex i.
        """
        index_dict = {x: i for i, x in enumerate(vertex_list)}
        return buildGraph(
            len(vertex_list),
            [
                (index_dict[u], index_dict[v])
                for u in vertex_list
                for v in self.__neighbour_list[u]
                if v in index_dict and u < v
            ],
        )

def buildGraph(vertex_count, edge_list):
    """
    Build a Graph.

    vertex_count (int)
        Vertices are 0..vertex_count-1.
    edge_list (iterable of 2-tuples)
        Duplicates (in either orientation) are merged.

    Raises ColouringErrorInput on out-of-range endpoints and self-loops.
    """
    if vertex_count < 0:
        raiseColouringError(
            ERROR_INPUT, f'negative vertex count: {vertex_count!r}',
        )
    neighbour_list = [set() for _ in range(vertex_count)]
    for u, v in edge_list:
        for vertex in (u, v):
            if not 0 <= vertex < vertex_count:
                raiseColouringError(
                    ERROR_INPUT,
                    f'vertex {vertex!r} of edge ({u!r}, {v!r}) out of range '
                    f'0..{vertex_count - 1}',
                    edge=(u, v),
                )
        if u == v:
            raiseColouringError(
                ERROR_INPUT, f'self-loop on vertex {u!r}', edge=(u, v),
            )
        neighbour_list[u].add(v)
        neighbour_list[v].add(u)
    return Graph(vertex_count, [frozenset(x) for x in neighbour_list])

def fromNetworkX(nx_graph):
    """
    Convert a networkx graph, relabelling its nodes 0..n-1 in sorted order
    when sortable, in iteration order otherwise.
    Returns (Graph, label list), label_list[i] being the node for vertex i.
    """
    label_list = list(nx_graph.nodes())
    try:
        label_list.sort()
    except TypeError:
        pass
    index_dict = {x: i for i, x in enumerate(label_list)}
    return buildGraph(
        len(label_list),
        [
            (index_dict[u], index_dict[v])
            for u, v in nx_graph.edges()
        ],
    ), label_list

def getDiameter(graph):
    return graph.getDiameter()

def getBipartition(graph):
    """
    Two-colour each component by breadth-first search.
    Returns a Bipartition, or None if graph has an odd cycle.
    Vertex 0 of each component goes to partA.
    """
    side_list = [None] * len(graph)
    for root in graph:
        if side_list[root] is not None:
            continue
        side_list[root] = 0
        queue = collections.deque([root])
        while queue:
            vertex = queue.popleft()
            other_side = 1 - side_list[vertex]
            for neighbour in graph.getNeighbourSet(vertex):
                side = side_list[neighbour]
                if side is None:
                    side_list[neighbour] = other_side
                    queue.append(neighbour)
                elif side != other_side:
                    return None
    return Bipartition(
        frozenset(x for x, side in enumerate(side_list) if side == 0),
        frozenset(x for x, side in enumerate(side_list) if side == 1),
    )

def isCompleteBipartite(graph, bipartition):
    """
    True if every vertex of partA is adjacent to every vertex of partB.
    """
    part_b = bipartition.partB
    return all(
        part_b <= graph.getNeighbourSet(vertex)
        for vertex in bipartition.partA
    )
