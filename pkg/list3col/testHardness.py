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

import random
import unittest
import list3col
from list3col import (
    NaeFormula, parseFormula, naeSatisfiable, buildGadget, subdivideGadget,
    verifyGadget, checkEquivalence,
)
from .hardness import Z_VERTEX, formatRole

TWO_CLAUSES = '''c two clauses
p cnf 4 2
1 2 3 0
3 -3 4 0
'''

def genFormula(rng, max_variables=4, max_clauses=4):
    variable_count = rng.randint(1, max_variables)
    return NaeFormula(
        variable_count,
        tuple(
            tuple(
                rng.choice((1, -1)) * rng.randint(1, variable_count)
                for _ in range(3)
            )
            for _ in range(rng.randint(1, max_clauses))
        ),
    )

class FormulaTests(unittest.TestCase):
    def testParse(self):
        formula = parseFormula(TWO_CLAUSES)
        self.assertEqual(formula.variable_count, 4)
        self.assertEqual(formula.clause_list, ((1, 2, 3), (3, -3, 4)))
        self.assertEqual(parseFormula('1 -2 5 0\n').variable_count, 5)
        self.assertEqual(parseFormula('p cnf 1 0\n'), NaeFormula(1, ()))

    def testParseErrors(self):
        for text, line in (
            ('1 2 0\n', 1),
            ('c\n1 2 3\n', 2),
            ('1 2 x 0\n', 1),
            ('1 0 2 0\n', 1),
            ('p cnf 2 1\n1 2 3 0\n', 2),
            ('p cnf two\n', 1),
        ):
            with self.assertRaises(list3col.ColouringErrorParse) as context:
                parseFormula(text)
            self.assertEqual(context.exception.detail['line'], line, text)

    def testOccurrences(self):
        formula = NaeFormula(2, ((1, 1, 2), (1, -2, 2), (-1, 2, 2), (1, 2, 2)))
        self.assertEqual(formula.getOccurrenceDict(), {1: 4, 2: 4})
        self.assertEqual(formula.getOverusedVariableList(), [1, 2])
        self.assertEqual(
            parseFormula(TWO_CLAUSES).getOverusedVariableList(), [],
        )

    def testNaeSatisfiable(self):
        formula = parseFormula(TWO_CLAUSES)
        assignment = naeSatisfiable(formula)
        self.assertTrue(formula.isSatisfiedBy(assignment))
        self.assertIsNone(
            naeSatisfiable(NaeFormula(1, ((1, 1, 1), ))),
        )
        self.assertFalse(formula.isSatisfiedBy(
            {1: True, 2: True, 3: True, 4: False},
        ))
        self.assertRaises(
            list3col.ColouringErrorBudget,
            naeSatisfiable, NaeFormula(31, ()),
        )

class GadgetTests(unittest.TestCase):
    def testSizes(self):
        formula = parseFormula(TWO_CLAUSES)
        gadget = buildGadget(formula)
        self.assertEqual(len(gadget.graph), 15)
        self.assertEqual(gadget.graph.getEdgeCount(), 24)
        self.assertEqual(gadget.subdivision, 0)
        self.assertEqual(len(gadget.occurrence_path_list), 6)
        subdivided = subdivideGadget(gadget, 4)
        self.assertEqual(len(subdivided.graph), 15 + 24)
        self.assertEqual(subdivided.graph.getEdgeCount(), 24 - 6 + 6 * 9)
        single = buildGadget(parseFormula('1 2 3 0\n'))
        self.assertEqual(len(single.graph), 10)
        self.assertEqual(single.graph.getEdgeCount(), 15)
        subdivided = subdivideGadget(single, 2)
        self.assertEqual(len(subdivided.graph), 16)
        self.assertEqual(subdivided.graph.getEdgeCount(), 27)
        empty = buildGadget(parseFormula('p cnf 1 0\n'))
        self.assertEqual(len(empty.graph), 3)
        self.assertEqual(empty.graph.getEdgeCount(), 3)

    def testLayout(self):
        gadget = subdivideGadget(buildGadget(parseFormula(TWO_CLAUSES)), 2)
        graph = gadget.graph
        self.assertEqual(gadget.role_list[Z_VERTEX], ('z', ))
        self.assertEqual(gadget.role_list[5], ('literal', 3, True))
        self.assertEqual(gadget.role_list[6], ('literal', 3, False))
        self.assertEqual(gadget.role_list[9], ('clause', 0, 0))
        self.assertEqual(formatRole(gadget.role_list[6]), 'literal 3 -')
        self.assertEqual(formatRole(gadget.role_list[12]), 'clause 1 0')
        # Second clause, first literal: 3 to clause vertex 12.
        path = gadget.occurrence_path_list[3]
        self.assertEqual(len(path), 4)
        self.assertEqual((path[0], path[-1]), (5, 12))
        for u, v in zip(path, path[1:]):
            self.assertIn(v, graph.getNeighbourSet(u))
        for vertex in path[1:-1]:
            self.assertIn(Z_VERTEX, graph.getNeighbourSet(vertex))
            self.assertEqual(gadget.role_list[vertex][:2], ('subdivision', 3))
        self.assertNotIn(12, graph.getNeighbourSet(5))

    def testContract(self):
        gadget = subdivideGadget(buildGadget(parseFormula('1 2 3 0\n')), 1)
        self.assertRaises(
            list3col.ColouringErrorContract, subdivideGadget, gadget, 1,
        )
        self.assertRaises(
            list3col.ColouringErrorConfiguration,
            subdivideGadget, buildGadget(parseFormula('1 2 3 0\n')), -1,
        )
        self.assertRaises(
            list3col.ColouringErrorContract,
            buildGadget, NaeFormula(1, ((1, 2, 1), )),
        )

class VerificationTests(unittest.TestCase):
    def testSubdivided(self):
        formula = parseFormula(TWO_CLAUSES)
        verification = verifyGadget(
            subdivideGadget(buildGadget(formula), 8), 8,
        )
        self.assertTrue(verification.passed)
        self.assertLessEqual(verification.diameter, 4)
        self.assertEqual(verification.even_cycle_dict, {4: 0, 6: 0, 8: 0})
        self.assertGreater(verification.census[3], 0)
        self.assertEqual(verification.c5_without_z, [])
        self.assertEqual(verification.note_list, [])
        verification = verifyGadget(
            subdivideGadget(buildGadget(parseFormula('1 2 3 0\n')), 6), 6,
        )
        self.assertTrue(verification.passed)

    def testUnsubdivided(self):
        gadget = buildGadget(parseFormula(TWO_CLAUSES))
        verification = verifyGadget(gadget, 6)
        self.assertFalse(verification.passed)
        self.assertGreater(verification.even_cycle_dict[4], 0)
        self.assertEqual(len(verification.note_list), 1)

    def testConfiguration(self):
        gadget = buildGadget(parseFormula('1 2 3 0\n'))
        for t in (4, 7):
            self.assertRaises(
                list3col.ColouringErrorConfiguration, verifyGadget, gadget, t,
            )

    def testEquivalence(self):
        formula = parseFormula(TWO_CLAUSES)
        gadget = buildGadget(formula)
        self.assertTrue(checkEquivalence(formula, gadget))
        unsatisfiable = NaeFormula(1, ((1, 1, 1), (-1, -1, -1)))
        self.assertTrue(checkEquivalence(
            unsatisfiable, subdivideGadget(buildGadget(unsatisfiable), 2),
        ))

    def testRandomFormulas(self):
        rng = random.Random(12)
        for _ in range(40):
            formula = genFormula(rng, 3, 3)
            gadget = buildGadget(formula)
            for p in (0, 1, 2, 3):
                self.assertTrue(
                    checkEquivalence(formula, subdivideGadget(gadget, p)),
                    (formula, p),
                )
            for t in (6, 8):
                verification = verifyGadget(subdivideGadget(gadget, t), t)
                self.assertTrue(verification.passed, (formula, t))
                self.assertEqual(verification.c5_without_z, [])

if __name__ == '__main__':
    unittest.main()
