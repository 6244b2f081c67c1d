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
List assignments over the palette {1, 2, 3}, colourings and precolourings.

A list is stored as a 3-bit mask, colour c being bit (c - 1).
A colouring is a dict mapping vertices to colours; it is total when it maps
every vertex of the graph.
"""
import collections
from ._common import (
    raiseColouringError, checkLimit, PALETTE, FULL_MASK, EMPTY_MASK,
    MAX_PRECOLOURED, ERROR_INPUT,
)

__all__ = [
    'ListAssignment', 'Precolouring', 'colourToMask', 'maskToColours',
    'getMaskSize', 'formatMask', 'checkListCount', 'isProper', 'respects',
    'iterPromising', 'restrictToPrecolouring',
]

Precolouring = collections.namedtuple('Precolouring', ['domain', 'colouring'])
Precolouring.__doc__ = """
domain (tuple of int)
    N0, ascending.
colouring (dict)
    Vertex to colour, defined exactly on domain.
"""

_MASK_SIZE = tuple(bin(x).count('1') for x in range(FULL_MASK + 1))
_MASK_COLOURS = tuple(
    tuple(c for c in PALETTE if x & (1 << (c - 1)))
    for x in range(FULL_MASK + 1)
)

def colourToMask(colour):
    return 1 << (colour - 1)

def maskToColours(mask):
    """
    Ascending tuple of the colours in mask.
    """
    return _MASK_COLOURS[mask]

def getMaskSize(mask):
    return _MASK_SIZE[mask]

def formatMask(mask):
    return '{' + ','.join(str(x) for x in _MASK_COLOURS[mask]) + '}'

class ListAssignment:
    """
    Immutable per-vertex lists. Modifying methods return a new instance.
    """
    __slots__ = ('__mask_tuple', )

    def __init__(self, mask_iterable):
        mask_tuple = tuple(mask_iterable)
        for vertex, mask in enumerate(mask_tuple):
            if not 0 <= mask <= FULL_MASK:
                raiseColouringError(
                    ERROR_INPUT,
                    f'list mask {mask!r} of vertex {vertex} is not a subset '
                    'of the palette',
                )
        self.__mask_tuple = mask_tuple

    @classmethod
    def full(cls, vertex_count):
        """
        Every vertex gets {1, 2, 3}.
        """
        return cls((FULL_MASK, ) * vertex_count)

    @classmethod
    def fromColourLists(cls, colour_list_list):
        """
        Build from an iterable of per-vertex colour iterables.
        """
        result = []
        for vertex, colour_list in enumerate(colour_list_list):
            mask = EMPTY_MASK
            for colour in colour_list:
                if colour not in PALETTE:
                    raiseColouringError(
                        ERROR_INPUT,
                        f'colour {colour!r} of vertex {vertex} not in palette',
                    )
                mask |= colourToMask(colour)
            result.append(mask)
        return cls(result)

    def __len__(self):
        return len(self.__mask_tuple)

    def __eq__(self, other):
        return isinstance(other, ListAssignment) and (
            # pylint: disable=protected-access
            self.__mask_tuple == other.__mask_tuple
            # pylint: enable=protected-access
        )

    def __hash__(self):
        return hash(self.__mask_tuple)

    def __repr__(self):
        return f'<{self.__class__.__name__} {self.format()}>'

    def format(self):
        return ' '.join(formatMask(x) for x in self.__mask_tuple)

    def getMaskTuple(self):
        return self.__mask_tuple

    def getMask(self, vertex):
        return self.__mask_tuple[vertex]

    def getColours(self, vertex):
        return _MASK_COLOURS[self.__mask_tuple[vertex]]

    def getSize(self, vertex):
        return _MASK_SIZE[self.__mask_tuple[vertex]]

    def getTotalSize(self):
        """
        Sum of list sizes, the quantity every rule strictly decreases.
        """
        return sum(_MASK_SIZE[x] for x in self.__mask_tuple)

    def isFull(self, vertex):
        return self.__mask_tuple[vertex] == FULL_MASK

    def withMaskDict(self, mask_dict):
        """
        Copy with the lists of some vertices replaced.
        mask_dict (dict)
            vertex to new mask.
        """
        mask_list = list(self.__mask_tuple)
        for vertex, mask in mask_dict.items():
            mask_list[vertex] = mask
        return self.__class__(mask_list)

    def isSubsetOf(self, other):
        """
        True if every list is contained in other's list of the same vertex.
        """
        # pylint: disable=protected-access
        return len(self) == len(other) and all(
            mine & ~theirs == 0
            for mine, theirs in zip(self.__mask_tuple, other.__mask_tuple)
        )
        # pylint: enable=protected-access

def checkListCount(graph, lists):
    """
    Raise ColouringErrorInput unless lists has one list per vertex of graph.
    """
    if len(lists) != len(graph):
        raiseColouringError(
            ERROR_INPUT,
            f'{len(lists)} lists for a graph of {len(graph)} vertices',
        )

def isProper(graph, colouring):
    """
    True if no edge has both ends coloured alike.
    colouring may be partial.
    """
    for vertex, colour in colouring.items():
        for neighbour in graph.getNeighbourSet(vertex):
            if colouring.get(neighbour) == colour:
                return False
    return True

def respects(colouring, graph, lists):
    """
    True if colouring is total, proper, and colouring[v] is in lists[v] for
    every vertex v.
    """
    if len(colouring) != len(graph):
        return False
    for vertex in graph:
        colour = colouring.get(vertex)
        if colour not in PALETTE or not (
            lists.getMask(vertex) & colourToMask(colour)
        ):
            return False
    return isProper(graph, colouring)

def iterPromising(graph, lists, vertex_iterable, limit=MAX_PRECOLOURED):
    """
    Yield every L-promising precolouring of the given vertex set, that is
    every proper colouring of G[N0] respecting lists, in lexicographic order
    of its colour sequence over ascending N0.

    Raises ColouringErrorConfiguration if |N0| exceeds limit.
    """
    domain = tuple(sorted(set(vertex_iterable)))
    checkLimit(len(domain), limit, 'precoloured set size')
    colour_option_list = [lists.getColours(x) for x in domain]
    earlier_neighbour_list = [
        [
            j for j in range(i)
            if graph.hasEdge(domain[i], domain[j])
        ]
        for i in range(len(domain))
    ]
    chosen = [None] * len(domain)
    def recurse(index):
        if index == len(domain):
            yield Precolouring(domain, dict(zip(domain, chosen)))
            return
        for colour in colour_option_list[index]:
            if any(
                chosen[j] == colour
                for j in earlier_neighbour_list[index]
            ):
                continue
            chosen[index] = colour
            yield from recurse(index + 1)
        chosen[index] = None
    return recurse(0)

def restrictToPrecolouring(lists, precolouring):
    """
    L_c: singleton lists on the precoloured domain, unchanged elsewhere.
    """
    return lists.withMaskDict({
        vertex: colourToMask(colour)
        for vertex, colour in precolouring.colouring.items()
    })
