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
Brute-force list colouring, for cross-checking everything else.

Only plain adjacency queries are used here: no rule, no 2-SAT.
"""
import itertools
from ._common import (
    checkLimit, ORACLE_MAX_VERTICES, ORACLE_ENUMERATION_MAX_VERTICES,
    COUNT_MAX_VERTICES, ERROR_BUDGET,
)
from .lists import maskToColours

__all__ = ['oracleListColour', 'countColourings']

def _getOrder(graph):
    # Descending degree, ties by index.
    return sorted(graph, key=lambda x: (-graph.getDegree(x), x))

def _enumerate(graph, lists):
    vertex_list = list(graph)
    for colour_tuple in itertools.product(
        *(maskToColours(lists.getMask(x)) for x in vertex_list)
    ):
        if all(
            colour_tuple[u] != colour_tuple[v]
            for u, v in graph.iterEdges()
        ):
            return dict(zip(vertex_list, colour_tuple))
    return None

def oracleListColour(
    graph, lists, limit=ORACLE_MAX_VERTICES, exhaustive=False,
    enumeration_limit=ORACLE_ENUMERATION_MAX_VERTICES,
):
    """
    Return a total colouring respecting lists, or None.

    exhaustive (bool)
        Enumerate the full product of lists instead of backtracking, bounded
        by enumeration_limit.
    Raises ColouringErrorBudget when the graph exceeds the bound.
    """
    if exhaustive:
        checkLimit(
            len(graph), enumeration_limit, 'oracle enumeration size',
            ERROR_BUDGET,
        )
        return _enumerate(graph, lists)
    checkLimit(len(graph), limit, 'oracle graph size', ERROR_BUDGET)
    order = _getOrder(graph)
    colouring = {}
    def recurse(index):
        if index == len(order):
            return True
        vertex = order[index]
        neighbour_set = graph.getNeighbourSet(vertex)
        for colour in maskToColours(lists.getMask(vertex)):
            if any(
                colouring.get(x) == colour
                for x in neighbour_set
            ):
                continue
            colouring[vertex] = colour
            if recurse(index + 1):
                return True
            del colouring[vertex]
        return False
    if recurse(0):
        return dict(sorted(colouring.items()))
    return None

def countColourings(graph, lists, limit=COUNT_MAX_VERTICES):
    """
    Number of total colourings respecting lists.
    Raises ColouringErrorBudget when the graph exceeds the bound.
    """
    checkLimit(len(graph), limit, 'counted graph size', ERROR_BUDGET)
    order = _getOrder(graph)
    colouring = {}
    def recurse(index):
        if index == len(order):
            return 1
        vertex = order[index]
        neighbour_set = graph.getNeighbourSet(vertex)
        result = 0
        for colour in maskToColours(lists.getMask(vertex)):
            if any(colouring.get(x) == colour for x in neighbour_set):
                continue
            colouring[vertex] = colour
            result += recurse(index + 1)
            del colouring[vertex]
        return result
    return recurse(0)
