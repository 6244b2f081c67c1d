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
Instance files, DIMACS graph import and random class instances.

Instance format, blank lines and lines starting with "#" ignored:
    n m
    u v          (m edge lines, vertices 0..n-1)
    v: c1 c2     (optional list lines, unlisted vertices get {1, 2, 3})
"""
import itertools
import logging
import random
from ._common import (
    raiseColouringError, checkLimit, PALETTE, FULL_MASK,
    GENERATOR_RETRY_BUDGET, GENERATOR_MAX_VERTICES, ERROR_PARSE,
    ERROR_CONFIGURATION, ERROR_GENERATION, ColouringErrorInput,
)
from .graph import buildGraph
from .hardness import formatRole
from .lists import ListAssignment, colourToMask, maskToColours
from .solver import CLASS_NAME_LIST, isClassMember

__all__ = [
    'parseInstance', 'readInstance', 'formatInstance', 'writeInstance',
    'parseDimacsGraph', 'readDimacsGraph', 'formatColouring',
    'formatRoleMap', 'genRandomLists', 'genClassInstance',
]

logger = logging.getLogger(__name__)

def _iterLines(text):
    for line_number, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if line and not line.startswith('#'):
            yield line_number, line

def _parseIntList(line_number, text, what):
    try:
        return [int(x) for x in text.split()]
    except ValueError:
        raiseColouringError(
            ERROR_PARSE,
            f'line {line_number}: malformed {what}: {text!r}',
            line=line_number,
        )

def parseInstance(text):
    """
    Parse an instance. Returns (Graph, ListAssignment).
    Raises ColouringErrorParse with the offending line number as "line"
    detail.
    """
    line_iterator = _iterLines(text)
    try:
        line_number, line = next(line_iterator)
    except StopIteration:
        raiseColouringError(ERROR_PARSE, 'empty instance', line=0)
    header = _parseIntList(line_number, line, 'header')
    if len(header) != 2 or min(header) < 0:
        raiseColouringError(
            ERROR_PARSE,
            f'line {line_number}: header must be "n m"',
            line=line_number,
        )
    vertex_count, edge_count = header
    edge_list = []
    for line_number, line in itertools.islice(line_iterator, edge_count):
        edge = _parseIntList(line_number, line, 'edge')
        if len(edge) != 2:
            raiseColouringError(
                ERROR_PARSE,
                f'line {line_number}: edge must be "u v"',
                line=line_number,
            )
        u, v = edge
        if not (0 <= u < vertex_count and 0 <= v < vertex_count) or u == v:
            raiseColouringError(
                ERROR_PARSE,
                f'line {line_number}: edge ({u}, {v}) out of range or loop',
                line=line_number,
            )
        edge_list.append((u, v))
    if len(edge_list) != edge_count:
        raiseColouringError(
            ERROR_PARSE,
            f'{edge_count} edges declared, {len(edge_list)} found',
            line=line_number,
        )
    mask_list = [FULL_MASK] * vertex_count
    listed = set()
    for line_number, line in line_iterator:
        vertex_text, separator, colour_text = line.partition(':')
        if not separator:
            raiseColouringError(
                ERROR_PARSE,
                f'line {line_number}: list must be "v: colours"',
                line=line_number,
            )
        vertex_list = _parseIntList(line_number, vertex_text, 'list vertex')
        if len(vertex_list) != 1 or not 0 <= vertex_list[0] < vertex_count:
            raiseColouringError(
                ERROR_PARSE,
                f'line {line_number}: bad list vertex {vertex_text!r}',
                line=line_number,
            )
        vertex, = vertex_list
        if vertex in listed:
            raiseColouringError(
                ERROR_PARSE,
                f'line {line_number}: second list for vertex {vertex}',
                line=line_number,
            )
        listed.add(vertex)
        mask = 0
        for colour in _parseIntList(line_number, colour_text, 'list'):
            if colour not in PALETTE:
                raiseColouringError(
                    ERROR_PARSE,
                    f'line {line_number}: colour {colour} not in palette',
                    line=line_number,
                )
            mask |= colourToMask(colour)
        mask_list[vertex] = mask
    try:
        graph = buildGraph(vertex_count, edge_list)
    except ColouringErrorInput as exc:
        raiseColouringError(ERROR_PARSE, exc.getMessage(), **exc.detail)
    return graph, ListAssignment(mask_list)

def readInstance(path):
    with open(path, encoding='ascii') as instance_file:
        return parseInstance(instance_file.read())

def formatInstance(graph, lists=None):
    """
    Inverse of parseInstance. Only lists other than {1, 2, 3} are written.
    """
    line_list = [f'{len(graph)} {graph.getEdgeCount()}']
    line_list.extend(f'{u} {v}' for u, v in graph.iterEdges())
    if lists is not None:
        line_list.extend(
            f'{vertex}:' + ''.join(
                f' {x}' for x in maskToColours(mask)
            )
            for vertex, mask in enumerate(lists.getMaskTuple())
            if mask != FULL_MASK
        )
    return '\n'.join(line_list) + '\n'

def writeInstance(path, graph, lists=None):
    with open(path, 'w', encoding='ascii') as instance_file:
        instance_file.write(formatInstance(graph, lists))

def parseDimacsGraph(text):
    """
    Parse a DIMACS edge file ("p edge n m" then "e u v" lines, 1-based).
    Returns a Graph, vertex i being DIMACS vertex i + 1.
    """
    vertex_count = None
    edge_list = []
    for line_number, line in _iterLines(text):
        field_list = line.split()
        kind = field_list[0]
        if kind == 'c':
            continue
        if kind == 'p':
            if len(field_list) != 4 or vertex_count is not None:
                raiseColouringError(
                    ERROR_PARSE,
                    f'line {line_number}: malformed problem line',
                    line=line_number,
                )
            vertex_count = _parseIntList(
                line_number, field_list[2], 'vertex count',
            )[0]
        elif kind == 'e':
            if vertex_count is None or len(field_list) != 3:
                raiseColouringError(
                    ERROR_PARSE,
                    f'line {line_number}: edge before problem line or '
                    'malformed',
                    line=line_number,
                )
            u, v = _parseIntList(line_number, ' '.join(field_list[1:]), 'edge')
            if not (0 < u <= vertex_count and 0 < v <= vertex_count) or (
                u == v
            ):
                raiseColouringError(
                    ERROR_PARSE,
                    f'line {line_number}: edge ({u}, {v}) out of range or '
                    'loop',
                    line=line_number,
                )
            edge_list.append((u - 1, v - 1))
        else:
            raiseColouringError(
                ERROR_PARSE,
                f'line {line_number}: unknown line kind {kind!r}',
                line=line_number,
            )
    if vertex_count is None:
        raiseColouringError(ERROR_PARSE, 'no problem line', line=0)
    return buildGraph(vertex_count, edge_list)

def readDimacsGraph(path):
    with open(path, encoding='ascii') as dimacs_file:
        return parseDimacsGraph(dimacs_file.read())

def formatColouring(colouring):
    """
    "v colour" lines, vertices ascending.
    """
    return ''.join(
        f'{vertex} {colour}\n'
        for vertex, colour in sorted(colouring.items())
    )

def formatRoleMap(gadget):
    """
    "index role" lines, one per gadget vertex.
    """
    return ''.join(
        f'{vertex} {formatRole(role)}\n'
        for vertex, role in enumerate(gadget.role_list)
    )

def genRandomLists(rng, vertex_count, full_ratio=.6):
    """
    Each vertex gets {1, 2, 3} with probability full_ratio, a uniformly
    random non-empty list otherwise.
    """
    return ListAssignment(
        FULL_MASK if rng.random() < full_ratio else rng.randint(1, FULL_MASK)
        for _ in range(vertex_count)
    )

def _genGraph(rng, vertex_count, density, hub):
    edge_list = [
        (u, v)
        for u, v in itertools.combinations(range(hub, vertex_count), 2)
        if rng.random() < density
    ]
    if hub:
        edge_list.extend((0, x) for x in range(1, vertex_count))
    return buildGraph(vertex_count, edge_list)

def genClassInstance(
    class_name, vertex_count, seed, retry_budget=GENERATOR_RETRY_BUDGET,
    max_vertices=GENERATOR_MAX_VERTICES,
):
    """
    Random graph of diameter at most 2 in the named class (one of
    CLASS_NAME_LIST), with genRandomLists lists.

    Random graphs of increasing density are tried first. Then vertex 0 is
    made adjacent to every other vertex (which gives diameter at most 2 and
    puts it on no induced cycle longer than a triangle) and the rest gets
    decreasing density, down to no edge at all.

    Returns (Graph, ListAssignment). Raises ColouringErrorGeneration if no
    attempt succeeded.
    """
    if class_name not in CLASS_NAME_LIST:
        raiseColouringError(
            ERROR_CONFIGURATION,
            f'unknown class {class_name!r}, expected one of ' +
            ', '.join(CLASS_NAME_LIST),
        )
    checkLimit(vertex_count, max_vertices, 'generated vertex count')
    rng = random.Random(seed)
    half = retry_budget // 2
    attempt_list = [
        (.2 + .75 * attempt / max(1, half), 0)
        for attempt in range(half)
    ] + [
        (.5 * (1 - attempt / max(1, retry_budget - half - 1)), 1)
        for attempt in range(retry_budget - half)
    ]
    for attempt, (density, hub) in enumerate(attempt_list):
        graph = _genGraph(rng, vertex_count, density, hub and vertex_count > 1)
        if isClassMember(graph, class_name):
            if hub:
                logger.info(
                    '%s n=%i seed=%r: hub fallback after %i attempts',
                    class_name, vertex_count, seed, attempt,
                )
            return graph, genRandomLists(rng, vertex_count)
    raiseColouringError(
        ERROR_GENERATION,
        f'no {class_name} graph on {vertex_count} vertices after '
        f'{retry_budget} attempts',
        seed=seed,
    )
