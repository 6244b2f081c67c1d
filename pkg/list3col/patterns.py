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
Detection of the small induced patterns propagation and the drivers rely on:
K4, triangles, diamonds, bulls and induced cycles.

Induced cycles are found by depth-first extension of induced paths starting
at their smallest vertex, neighbours being visited in ascending order. A
cycle is reported once, as the rotation starting at its smallest vertex and
the direction whose second vertex is smaller than its last. Enumeration
order is lexicographic over this canonical form, so the first cycle found is
the lexicographically least one.
"""
import collections
import itertools
from ._common import (
    raiseColouringError, checkLimit, CYCLE_LIMIT, MAX_CYCLE_LENGTH,
    ERROR_CONTRACT, ERROR_OVERFLOW, ERROR_CONFIGURATION,
)
from .graph import getBipartition

__all__ = [
    'DiamondSite', 'BullSite', 'InducedCycle', 'findK4', 'findTriangle',
    'findInducedCycle', 'iterInducedCycles', 'enumerateInducedCycles',
    'getCachedCycleList', 'findTriangleOrInducedC5', 'getDiamondSiteList',
    'getBullSiteList', 'getDiamondPartnerSet', 'isInducedCycle',
    'iterOrientations', 'iterTriangles',
]

DiamondSite = collections.namedtuple('DiamondSite', ['u', 'v', 'x', 'y'])
BullSite = collections.namedtuple('BullSite', ['u', 'v', 'w', 'x', 'y'])

class InducedCycle(collections.namedtuple('InducedCycle', ['vertices'])):
    __slots__ = ()

    def __len__(self):
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def getVertexSet(self):
        return frozenset(self.vertices)

def findK4(graph):
    """
    Return the lexicographically least K4 as an ascending 4-tuple, or None.
    """
    for a in graph:
        neighbour_a = graph.getNeighbourSet(a)
        for b in sorted(x for x in neighbour_a if x > a):
            common_ab = neighbour_a & graph.getNeighbourSet(b)
            for c in sorted(x for x in common_ab if x > b):
                common_abc = common_ab & graph.getNeighbourSet(c)
                for d in sorted(common_abc):
                    if d > c:
                        return (a, b, c, d)
    return None

def findTriangle(graph):
    """
    Return the lexicographically least triangle as an ascending triple, or
    None.
    """
    for a in graph:
        neighbour_a = graph.getNeighbourSet(a)
        for b in sorted(x for x in neighbour_a if x > a):
            common = [
                x for x in neighbour_a & graph.getNeighbourSet(b)
                if x > b
            ]
            if common:
                return (a, b, min(common))
    return None

def iterTriangles(graph):
    """
    Yield every triangle once, as an ascending triple.
    """
    for a in graph:
        neighbour_a = graph.getNeighbourSet(a)
        for b in sorted(x for x in neighbour_a if x > a):
            for c in sorted(neighbour_a & graph.getNeighbourSet(b)):
                if c > b:
                    yield (a, b, c)

def isInducedCycle(graph, vertex_list):
    """
    True if vertex_list, in this cyclic order, is an induced cycle of
    length at least 3.
    """
    length = len(vertex_list)
    if length < 3 or len(set(vertex_list)) != length:
        return False
    for i, u in enumerate(vertex_list):
        for j in range(i + 1, length):
            consecutive = j == i + 1 or (i == 0 and j == length - 1)
            if graph.hasEdge(u, vertex_list[j]) != consecutive:
                return False
    return True

def _checkLength(length, max_length):
    if length < 4:
        raiseColouringError(
            ERROR_CONTRACT,
            f'induced cycle length must be at least 4, got {length}',
        )
    checkLimit(length, max_length, 'induced cycle length', ERROR_CONFIGURATION)

def iterInducedCycles(graph, length, max_length=MAX_CYCLE_LENGTH):
    """
    Yield every induced cycle of the given length (>= 4) once, in canonical
    form and lexicographic order.
    """
    _checkLength(length, max_length)
    getNeighbourSet = graph.getNeighbourSet
    last_index = length - 1
    for start in graph:
        start_neighbour_set = getNeighbourSet(start)
        path = [start]
        # Vertices adjacent to some interior path vertex (all but both ends),
        # with multiplicity.
        blocked = collections.Counter()
        def extend():
            tail = path[-1]
            position = len(path)
            closing = position == last_index
            for candidate in sorted(getNeighbourSet(tail)):
                if candidate <= start or blocked[candidate] or (
                    candidate in path
                ):
                    continue
                if position == 1:
                    path.append(candidate)
                    yield from extend()
                    path.pop()
                    continue
                if candidate in start_neighbour_set:
                    # Canonical direction has path[1] below the last vertex.
                    if closing and candidate > path[1]:
                        yield InducedCycle(tuple(path) + (candidate, ))
                    continue
                if closing:
                    continue
                # Tail becomes interior.
                blocked.update(getNeighbourSet(tail))
                path.append(candidate)
                yield from extend()
                path.pop()
                blocked.subtract(getNeighbourSet(tail))
        yield from extend()

def findInducedCycle(graph, length, max_length=MAX_CYCLE_LENGTH):
    """
    Return the lexicographically least induced cycle of the given length in
    canonical form, or None if graph is C_length-free.
    """
    for cycle in iterInducedCycles(graph, length, max_length=max_length):
        return cycle
    return None

def enumerateInducedCycles(
    graph, length, limit=CYCLE_LIMIT, max_length=MAX_CYCLE_LENGTH,
):
    """
    Return the list of all induced cycles of the given length.
    Raises ColouringErrorOverflow if there are more than limit of them.
    """
    result = []
    append = result.append
    for cycle in iterInducedCycles(graph, length, max_length=max_length):
        if limit is not None and len(result) >= limit:
            raiseColouringError(
                ERROR_OVERFLOW,
                f'more than {limit} induced C{length}',
                length=length,
                limit=limit,
            )
        append(cycle)
    return result

def getCachedCycleList(graph, length, limit=CYCLE_LIMIT):
    """
    enumerateInducedCycles, memoised on the (immutable) graph.
    """
    cache = graph.cache_dict.setdefault('cycle_list', {})
    try:
        return cache[length]
    except KeyError:
        pass
    result = cache[length] = enumerateInducedCycles(graph, length, limit=limit)
    return result

def getCachedCycleIndex(graph, length, limit=CYCLE_LIMIT):
    """
    Map each vertex to the indexes (in getCachedCycleList order) of the
    induced cycles of the given length containing it.
    """
    cache = graph.cache_dict.setdefault('cycle_index', {})
    try:
        return cache[length]
    except KeyError:
        pass
    index_dict = collections.defaultdict(list)
    for index, cycle in enumerate(getCachedCycleList(graph, length, limit)):
        for vertex in cycle:
            index_dict[vertex].append(index)
    result = cache[length] = dict(index_dict)
    return result

def iterOrientations(cycle):
    """
    Yield the vertex sequences of every rotation and reflection of cycle.
    """
    vertex_tuple = tuple(cycle)
    length = len(vertex_tuple)
    for sequence in (vertex_tuple, vertex_tuple[::-1]):
        for shift in range(length):
            yield sequence[shift:] + sequence[:shift]

def findTriangleOrInducedC5(graph):
    """
    In a non-bipartite graph of diameter at most 2, return a triangle
    (ascending triple) if one exists, else an InducedCycle of length 5.

    Raises ColouringErrorContract when graph is bipartite or its diameter
    exceeds 2.
    """
    if getBipartition(graph) is not None:
        raiseColouringError(ERROR_CONTRACT, 'graph is bipartite')
    if graph.getDiameter() > 2:
        raiseColouringError(
            ERROR_CONTRACT,
            f'graph has diameter {graph.getDiameter()}, above 2',
        )
    triangle = findTriangle(graph)
    if triangle is not None:
        return triangle
    cycle = findInducedCycle(graph, 5)
    if cycle is None:
        raiseColouringError(
            ERROR_CONTRACT,
            'non-bipartite diameter-2 graph without triangle nor induced C5',
        )
    return cycle

def getDiamondSiteList(graph, x):
    """
    Every diamond in which x is one of the two non-adjacent vertices.
    Sites are sorted, and the two (u, v) orders of a site are reported once
    (u < v).
    """
    neighbour_x = graph.getNeighbourSet(x)
    result = []
    for u, v in itertools.combinations(sorted(neighbour_x), 2):
        if not graph.hasEdge(u, v):
            continue
        for y in sorted(graph.getNeighbourSet(u) & graph.getNeighbourSet(v)):
            if y != x and y not in neighbour_x:
                result.append(DiamondSite(u, v, x, y))
    result.sort(key=lambda site: (site.y, site.u, site.v))
    return result

def getDiamondPartnerSet(graph, x):
    """
    Vertices y such that x and y are the non-adjacent pair of some diamond.
    Memoised on graph.
    """
    cache = graph.cache_dict.setdefault('diamond_partner', {})
    try:
        return cache[x]
    except KeyError:
        pass
    neighbour_x = graph.getNeighbourSet(x)
    result = set()
    for u in neighbour_x:
        # Common neighbours of x and y contain an edge uv.
        common_u = graph.getNeighbourSet(u) & neighbour_x
        if not common_u:
            continue
        for y in graph.getNeighbourSet(u):
            if y == x or y in neighbour_x or y in result:
                continue
            if common_u & graph.getNeighbourSet(y):
                result.add(y)
    result = cache[x] = frozenset(result)
    return result

def iterBullLeafPairs(graph, w):
    """
    Yield (x, y, u, v) for every induced bull with apex w, triangle {x, y, w},
    and leaves u (adjacent to x) and v (adjacent to y), in ascending order.
    """
    getNeighbourSet = graph.getNeighbourSet
    neighbour_w = getNeighbourSet(w)
    for x in sorted(neighbour_w):
        neighbour_x = getNeighbourSet(x)
        for y in sorted(neighbour_w & neighbour_x):
            if y == x:
                continue
            neighbour_y = getNeighbourSet(y)
            for u in sorted(neighbour_x):
                if u in (w, y) or u in neighbour_w or u in neighbour_y:
                    continue
                neighbour_u = getNeighbourSet(u)
                for v in sorted(neighbour_y):
                    if v in (w, x, u) or v in neighbour_w or (
                        v in neighbour_x or v in neighbour_u
                    ):
                        continue
                    yield x, y, u, v

def getBullSiteList(graph, w):
    """
    Every induced bull with apex (degree-2 vertex) w.
    A bull is reported once per leaf ordering, with u < v.
    """
    result = set()
    for x, y, u, v in iterBullLeafPairs(graph, w):
        if u < v:
            result.add(BullSite(u, v, w, x, y))
        else:
            result.add(BullSite(v, u, w, y, x))
    return sorted(result)
