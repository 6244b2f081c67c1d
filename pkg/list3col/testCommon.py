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

import unittest
import list3col
from . import _common

class CommonTests(unittest.TestCase):
    def testExplicitEnumScope(self):
        """
        Enum instances must only affect the scope they are given.
        """
        scope_dict = {}
        enum = _common.Enum({'KIND_SMALL': 1, 'KIND_LARGE_ONE': None}, scope_dict)
        self.assertEqual(scope_dict, {'KIND_SMALL': 1, 'KIND_LARGE_ONE': 0})
        self.assertEqual(enum(1), 'KIND_SMALL')
        self.assertEqual(enum.getTag(0), 'large-one')
        self.assertIsNone(enum.get(5))
        self.assertIsNone(getattr(_common, 'KIND_SMALL', None))

    def testDuplicateEnumValue(self):
        self.assertRaises(
            ValueError, _common.Enum, {'A_X': 1, 'A_Y': 1}, {},
        )

    def testTags(self):
        self.assertEqual(
            _common.rule.getTag(list3col.RULE_SINGLE_COLOUR), 'single-colour',
        )
        self.assertEqual(
            _common.route.getTag(list3col.ROUTE_HOFFMAN_SINGLETON),
            'hoffman-singleton',
        )
        self.assertEqual(_common.summary.getTag(list3col.SUMMARY_ALL_NO), 'all-no')

    def testExceptionClasses(self):
        for value, exception_class in list3col.STATUS_TO_EXCEPTION_DICT.items():
            self.assertTrue(issubclass(exception_class, list3col.ColouringError))
            self.assertEqual(exception_class.value, value)
            self.assertIs(
                getattr(list3col, exception_class.__name__), exception_class,
            )
        self.assertIs(
            list3col.STATUS_TO_EXCEPTION_DICT[list3col.ERROR_OUT_OF_CLASS],
            list3col.ColouringErrorOutOfClass,
        )

    def testErrorFormatting(self):
        try:
            _common.raiseColouringError(
                list3col.ERROR_BUDGET, 'too many nodes', budget=3,
            )
        except list3col.ColouringErrorBudget as exc:
            self.assertEqual(str(exc), 'too many nodes [ERROR_BUDGET]')
            self.assertEqual(exc.getMessage(), 'too many nodes')
            self.assertEqual(exc.detail, {'budget': 3})
        else:
            self.fail('no exception raised')
        self.assertEqual(
            str(list3col.ColouringErrorParse()), 'ERROR_PARSE [-7]',
        )
        # Detail keys may shadow the positional parameter names.
        with self.assertRaises(list3col.ColouringErrorInput) as context:
            _common.raiseColouringError(
                list3col.ERROR_INPUT, 'bad vertex', value=9, message='x',
            )
        self.assertEqual(context.exception.value, list3col.ERROR_INPUT)
        self.assertEqual(context.exception.getMessage(), 'bad vertex')
        self.assertEqual(
            context.exception.detail, {'value': 9, 'message': 'x'},
        )

    def testCheckLimit(self):
        _common.checkLimit(3, 3, 'size')
        _common.checkLimit(30, None, 'size')
        with self.assertRaises(list3col.ColouringErrorConfiguration) as context:
            _common.checkLimit(4, 3, 'size')
        self.assertEqual(context.exception.detail, {'amount': 4, 'limit': 3})
        self.assertRaises(
            list3col.ColouringErrorBudget,
            _common.checkLimit, 4, 3, 'size', list3col.ERROR_BUDGET,
        )

    def testPackageConstants(self):
        self.assertEqual(list3col.PALETTE, (1, 2, 3))
        self.assertEqual(list3col.FULL_MASK, 7)
        self.assertIn('ColouringErrorInput', list3col.__all__)
        self.assertIn('OUTCOME_UNKNOWN', list3col.__all__)

if __name__ == '__main__':
    unittest.main()
