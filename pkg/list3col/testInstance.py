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

import os
import tempfile
import unittest
import list3col
from list3col import (
    ListAssignment, parseInstance, readInstance, formatInstance,
    writeInstance, parseDimacsGraph, formatColouring, formatRoleMap,
    genClassInstance, isClassMember, buildGadget, parseFormula,
    CLASS_NAME_LIST,
)
from ._testsupport import getCycle, getPetersen

TRIANGLE = '''# a triangle
3 3
0 1
1 2

0 2
0: 1
2: 3 2
'''

class InstanceTests(unittest.TestCase):
    def testParse(self):
        graph, lists = parseInstance(TRIANGLE)
        self.assertEqual(len(graph), 3)
        self.assertEqual(sorted(graph.iterEdges()), [(0, 1), (0, 2), (1, 2)])
        self.assertEqual(lists.getMaskTuple(), (0b001, 0b111, 0b110))
        graph, lists = parseInstance('2 0\n')
        self.assertEqual(graph.getEdgeCount(), 0)
        self.assertEqual(lists, ListAssignment.full(2))

    def testParseErrors(self):
        for text, line in (
            ('', 0),
            ('3\n', 1),
            ('2 1\n0 x\n', 2),
            ('2 1\n0 2\n', 2),
            ('2 1\n1 1\n', 2),
            ('2 1\n0 1 1\n', 2),
            ('3 2\n0 1\n', 2),
            ('2 1\n0 1\n0 1\n', 3),
            ('2 0\n0: 4\n', 2),
            ('2 0\n5: 1\n', 2),
            ('2 0\n0: 1\n0: 2\n', 3),
            ('2 1\n# edge\n0 1\n1: x\n', 4),
        ):
            with self.assertRaises(list3col.ColouringErrorParse) as context:
                parseInstance(text)
            self.assertEqual(context.exception.detail['line'], line, text)

    def testFormat(self):
        graph, lists = parseInstance(TRIANGLE)
        self.assertEqual(
            formatInstance(graph, lists),
            '3 3\n0 1\n0 2\n1 2\n0: 1\n2: 2 3\n',
        )
        self.assertEqual(formatInstance(graph), '3 3\n0 1\n0 2\n1 2\n')
        petersen = getPetersen()
        lists = ListAssignment([1, 2, 3, 4, 5, 6, 7, 1, 2, 3])
        self.assertEqual(
            parseInstance(formatInstance(petersen, lists)),
            (petersen, lists),
        )

    def testFiles(self):
        graph = getCycle(5)
        lists = ListAssignment.fromColourLists([[1, 2]] * 5)
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, 'cycle.txt')
            writeInstance(path, graph, lists)
            self.assertEqual(readInstance(path), (graph, lists))
        self.assertRaises(OSError, readInstance, path)

class DimacsTests(unittest.TestCase):
    def testParse(self):
        graph = parseDimacsGraph(
            'c a path\np edge 3 2\ne 1 2\ne 2 3\n',
        )
        self.assertEqual(len(graph), 3)
        self.assertEqual(sorted(graph.iterEdges()), [(0, 1), (1, 2)])

    def testErrors(self):
        for text, line in (
            ('e 1 2\n', 1),
            ('p edge 2 1\np edge 2 1\n', 2),
            ('p edge 2 1\ne 1 3\n', 2),
            ('p edge 2 1\ne 1 1\n', 2),
            ('p edge 2 1\nx 1 2\n', 2),
            ('c nothing\n', 0),
        ):
            with self.assertRaises(list3col.ColouringErrorParse) as context:
                parseDimacsGraph(text)
            self.assertEqual(context.exception.detail['line'], line, text)

class FormatTests(unittest.TestCase):
    def testColouring(self):
        self.assertEqual(formatColouring({2: 3, 0: 1, 1: 2}), '0 1\n1 2\n2 3\n')
        self.assertEqual(formatColouring({}), '')

    def testRoleMap(self):
        line_list = formatRoleMap(
            buildGadget(parseFormula('1 -2 2 0\n')),
        ).splitlines()
        self.assertEqual(len(line_list), 8)
        self.assertEqual(line_list[0], '0 z')
        self.assertEqual(line_list[4], '4 literal 2 -')
        self.assertEqual(line_list[7], '7 clause 0 2')

class GeneratorTests(unittest.TestCase):
    def testClassMembers(self):
        for class_name in CLASS_NAME_LIST:
            for vertex_count in (1, 5, 12):
                graph, lists = genClassInstance(class_name, vertex_count, 3)
                self.assertEqual(len(graph), vertex_count)
                self.assertEqual(len(lists), vertex_count)
                self.assertTrue(isClassMember(graph, class_name))

    def testReproducible(self):
        self.assertEqual(
            genClassInstance('c6free', 9, 42),
            genClassInstance('c6free', 9, 42),
        )

    def testErrors(self):
        self.assertRaises(
            list3col.ColouringErrorConfiguration,
            genClassInstance, 'c4c10', 5, 0,
        )
        self.assertRaises(
            list3col.ColouringErrorConfiguration,
            genClassInstance, 'c5free', 65, 0,
        )
        with self.assertRaises(list3col.ColouringErrorGeneration) as context:
            genClassInstance('c5free', 5, 7, retry_budget=0)
        self.assertEqual(context.exception.detail['seed'], 7)

if __name__ == '__main__':
    unittest.main()
