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
"""
Named graphs and seeded random generators for the test modules.

Generators are callables taking a random.Random instance, so a corpus is
reproduced from its seed alone.
"""
import itertools
import random
import networkx
from .graph import buildGraph, fromNetworkX
from .instance import genRandomLists
from .patterns import findK4
from .solver import isInducedCycleFree

def getCycle(vertex_count):
    return buildGraph(
        vertex_count,
        [(x, (x + 1) % vertex_count) for x in range(vertex_count)],
    )

def getPath(vertex_count):
    return buildGraph(
        vertex_count, [(x, x + 1) for x in range(vertex_count - 1)],
    )

def getComplete(vertex_count):
    return buildGraph(
        vertex_count, itertools.combinations(range(vertex_count), 2),
    )

def getCompleteBipartite(size_a, size_b):
    return fromNetworkX(networkx.complete_bipartite_graph(size_a, size_b))[0]

def getWheel(rim_length):
    """
    Hub 0 adjacent to every vertex of the rim cycle 1..rim_length.
    """
    return fromNetworkX(networkx.wheel_graph(rim_length + 1))[0]

def getPetersen():
    return fromNetworkX(networkx.petersen_graph())[0]

def getHoffmanSingleton():
    return fromNetworkX(networkx.hoffman_singleton_graph())[0]

def getDiamond():
    """
    Edge 0-1 (u, v), and 2, 3 (x, y) adjacent to both but not to each other.
    """
    return buildGraph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])

def getBull():
    """
    Triangle 0 (x), 1 (y), 2 (w), leaf 3 (u) on 0 and leaf 4 (v) on 1.
    """
    return buildGraph(5, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 4)])

def getBook(page_count=3):
    """
    Edge 0-1 plus page_count vertices adjacent to both.
    """
    edge_list = [(0, 1)]
    for page in range(2, page_count + 2):
        edge_list.extend(((0, page), (1, page)))
    return buildGraph(page_count + 2, edge_list)

def genRange(start, stop):
    return lambda rng: rng.randint(start, stop)

def genGraph(gen_vertex_count, density=.5):
    def generate(rng):
        vertex_count = gen_vertex_count(rng)
        return buildGraph(
            vertex_count,
            [
                x for x in itertools.combinations(range(vertex_count), 2)
                if rng.random() < density
            ],
        )
    return generate

def genInstance(gen_vertex_count, density=.5, full_ratio=.6):
    gen_graph = genGraph(gen_vertex_count, density)
    def generate(rng):
        graph = gen_graph(rng)
        return graph, genRandomLists(rng, len(graph), full_ratio)
    return generate

def iterSamples(generator, count, seed):
    rng = random.Random(seed)
    for _ in range(count):
        yield generator(rng)

def iterAllGraphs(vertex_count):
    """
    Every labelled graph on vertex_count vertices.
    """
    pair_list = list(itertools.combinations(range(vertex_count), 2))
    for selection in itertools.product((False, True), repeat=len(pair_list)):
        yield buildGraph(
            vertex_count,
            itertools.compress(pair_list, selection),
        )

def iterAtlasGraphs(min_vertex_count=0):
    """
    Every graph on up to 7 vertices, up to isomorphism.
    """
    for nx_graph in networkx.graph_atlas_g():
        if len(nx_graph) >= min_vertex_count:
            yield fromNetworkX(nx_graph)[0]

def countInducedCyclesBruteForce(graph, length):
    """
    Vertex subsets of the given size inducing a cycle.
    """
    result = 0
    for vertex_tuple in itertools.combinations(graph, length):
        vertex_set = set(vertex_tuple)
        degree_list = [
            len(graph.getNeighbourSet(x) & vertex_set) for x in vertex_tuple
        ]
        if any(x != 2 for x in degree_list):
            continue
        # 2-regular: a cycle iff connected.
        seen = {vertex_tuple[0]}
        stack = [vertex_tuple[0]]
        while stack:
            for neighbour in graph.getNeighbourSet(stack.pop()) & vertex_set:
                if neighbour not in seen:
                    seen.add(neighbour)
                    stack.append(neighbour)
        if len(seen) == length:
            result += 1
    return result

def genSweepGraph(
    cycle_length, forbidden_length, max_extra=4, attempt_count=30,
):
    """
    Diameter-2 K4-free graph with no induced C4 and no induced cycle of
    forbidden_length, grown vertex by vertex around the induced cycle
    0..cycle_length-1, which stays induced.
    Growth restarts from the bare cycle when max_extra vertices were not
    enough.
    """
    def isAcceptable(graph):
        return (
            findK4(graph) is None and
            isInducedCycleFree(graph, 4) and
            isInducedCycleFree(graph, forbidden_length)
        )
    def generate(rng):
        while True:
            vertex_count = cycle_length
            edge_list = [
                (x, (x + 1) % cycle_length) for x in range(cycle_length)
            ]
            graph = buildGraph(vertex_count, edge_list)
            while (
                graph.getDiameter() > 2 and
                vertex_count < cycle_length + max_extra
            ):
                density = rng.uniform(.3, .9)
                for _ in range(attempt_count):
                    candidate_list = edge_list + [
                        (x, vertex_count) for x in range(vertex_count)
                        if rng.random() < density
                    ]
                    if len(candidate_list) == len(edge_list):
                        continue
                    candidate = buildGraph(vertex_count + 1, candidate_list)
                    if isAcceptable(candidate):
                        break
                else:
                    break
                edge_list = candidate_list
                vertex_count += 1
                graph = candidate
            if graph.getDiameter() == 2:
                return graph
    return generate

def genSweepInstance(
    cycle_length, forbidden_length, max_extra=4, full_ratio=.6,
):
    gen_graph = genSweepGraph(cycle_length, forbidden_length, max_extra)
    def generate(rng):
        graph = gen_graph(rng)
        return graph, genRandomLists(rng, len(graph), full_ratio)
    return generate

def iterColourings(graph, lists):
    """
    Every total colouring respecting lists, as colour tuples.
    """
    edge_list = list(graph.iterEdges())
    for colour_tuple in itertools.product(
        *(lists.getColours(x) for x in range(len(lists))),
    ):
        if all(colour_tuple[u] != colour_tuple[v] for u, v in edge_list):
            yield colour_tuple
