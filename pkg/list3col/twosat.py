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
2-List Colouring through 2-SAT.

Each vertex v gets one boolean meaning "v takes the first (smallest) colour
of its list". Literal 2*v is that boolean, literal 2*v+1 its negation.
"""
import networkx
from ._common import raiseColouringError, ERROR_CONTRACT
from .lists import getMaskSize, maskToColours

__all__ = ['ImplicationGraph', 'solve2List']

def negate(literal):
    return literal ^ 1

class ImplicationGraph:
    """
    Directed graph on 2n literals, closed under contraposition.
    """
    def __init__(self, vertex_count):
        self.__vertex_count = vertex_count
        self.__digraph = digraph = networkx.DiGraph()
        digraph.add_nodes_from(range(2 * vertex_count))
        self.__component_order = None

    def getDiGraph(self):
        return self.__digraph

    def addClause(self, literal_a, literal_b):
        """
        Add (literal_a or literal_b), as the two implications
        not a -> b and not b -> a.
        """
        add_edge = self.__digraph.add_edge
        add_edge(negate(literal_a), literal_b)
        add_edge(negate(literal_b), literal_a)
        self.__component_order = None

    def getComponentOrder(self):
        """
        Map each literal to the topological rank of its strongly connected
        component in the condensation.
        """
        if self.__component_order is None:
            condensation = networkx.condensation(self.__digraph)
            rank_dict = {
                component: rank
                for rank, component in enumerate(
                    networkx.topological_sort(condensation),
                )
            }
            mapping = condensation.graph['mapping']
            self.__component_order = [
                rank_dict[mapping[x]]
                for x in range(2 * self.__vertex_count)
            ]
        return self.__component_order

    def solve(self):
        """
        Returns a list of booleans, one per variable, or None if
        unsatisfiable.
        A variable is true when its positive literal's component comes
        later in topological order than its negation's.
        """
        order = self.getComponentOrder()
        result = []
        for variable in range(self.__vertex_count):
            positive = order[2 * variable]
            negative = order[2 * variable + 1]
            if positive == negative:
                return None
            result.append(positive > negative)
        return result

def solve2List(graph, lists):
    """
    Decide 2-List Colouring.

    Every list must have size 1 or 2, raises ColouringErrorContract
    otherwise.
    Returns a total colouring (dict) respecting lists, or None.
    """
    mask_tuple = lists.getMaskTuple()
    colour_pair_list = []
    for vertex, mask in enumerate(mask_tuple):
        size = getMaskSize(mask)
        if size not in (1, 2):
            raiseColouringError(
                ERROR_CONTRACT,
                f'vertex {vertex} has a list of size {size}, 2-list solving '
                'needs sizes 1 or 2',
                vertex=vertex,
            )
        colour_pair_list.append(maskToColours(mask))
    implication_graph = ImplicationGraph(len(mask_tuple))
    addClause = implication_graph.addClause
    def getLiteral(vertex, colour):
        # Literal stating that vertex takes colour.
        colour_pair = colour_pair_list[vertex]
        if colour == colour_pair[0]:
            return 2 * vertex
        return 2 * vertex + 1
    for vertex, colour_pair in enumerate(colour_pair_list):
        if len(colour_pair) == 1:
            literal = 2 * vertex
            addClause(literal, literal)
    for u, v in graph.iterEdges():
        for colour in maskToColours(mask_tuple[u] & mask_tuple[v]):
            addClause(
                negate(getLiteral(u, colour)),
                negate(getLiteral(v, colour)),
            )
    assignment = implication_graph.solve()
    if assignment is None:
        return None
    return {
        vertex: colour_pair_list[vertex][0 if value else 1]
        for vertex, value in enumerate(assignment)
    }
