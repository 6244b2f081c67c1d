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

# pylint: disable=invalid-name, too-few-public-methods
"""
Constants, limits and the exception hierarchy shared by every list3col module.

You should not need to import this if you use list3col package.

All constants declared through Enum are bound in this module's namespace, and
re-exported by the package.
"""
import sys

class Enum:
    def __init__(self, member_dict, scope_dict=None):
        if scope_dict is None:
            # Affect caller's locals, not this module's.
            # pylint: disable=protected-access
            scope_dict = sys._getframe(1).f_locals
            # pylint: enable=protected-access
        forward_dict = {}
        reverse_dict = {}
        next_value = 0
        for name, value in member_dict.items():
            if value is None:
                value = next_value
                next_value += 1
            forward_dict[name] = value
            if value in reverse_dict:
                raise ValueError(
                    'Multiple names for value '
                    f'{value!r}: {reverse_dict[value]!r}, {name!r}'
                )
            reverse_dict[value] = name
            scope_dict[name] = value
        self.forward_dict = forward_dict
        self.reverse_dict = reverse_dict

    def __call__(self, value):
        return self.reverse_dict[value]

    def get(self, value, default=None):
        return self.reverse_dict.get(value, default)

    def getTag(self, value):
        """
        Lower-case, dash-separated form of a member name without its common
        prefix, as used in reports and on the command line.
        """
        name = self.reverse_dict[value]
        return name.split('_', 1)[1].lower().replace('_', '-')

# Palette. Lists are 3-bit masks, colour c being bit (c - 1).
PALETTE = (1, 2, 3)
FULL_MASK = 0b111
EMPTY_MASK = 0

# Tunable limits. Every function using one accepts a keyword argument
# overriding it.
MAX_PRECOLOURED = 8
MAX_P = 7
MAX_CYCLE_LENGTH = 12
CYCLE_LIMIT = 100000
ORACLE_MAX_VERTICES = 60
ORACLE_ENUMERATION_MAX_VERTICES = 20
COUNT_MAX_VERTICES = 16
NAE_MAX_VARIABLES = 30
EXACT_NODE_BUDGET = 2000000
GENERATOR_RETRY_BUDGET = 400
GENERATOR_MAX_VERTICES = 64

error = Enum({
    'ERROR_INPUT': -1,
    'ERROR_CONTRACT': -2,
    'ERROR_CONFIGURATION': -3,
    'ERROR_BUDGET': -4,
    'ERROR_OVERFLOW': -5,
    'ERROR_OUT_OF_CLASS': -6,
    'ERROR_PARSE': -7,
    'ERROR_GENERATION': -8,
})

outcome = Enum({
    'OUTCOME_YES': 0,
    'OUTCOME_NO': 1,
    'OUTCOME_UNKNOWN': 2,
})

# Rule priority follows declaration order.
rule = Enum({
    'RULE_NO_EMPTY': 1,
    'RULE_SINGLE_COLOUR': 3,
    'RULE_DIAMOND': 4,
    'RULE_BULL': 5,
    'RULE_C6': 6,
    'RULE_C7': 7,
    'RULE_ALL_SMALL': 2,
})

summary = Enum({
    'SUMMARY_YES': 0,
    'SUMMARY_ALL_NO': 1,
    'SUMMARY_MIXED': 2,
    'SUMMARY_EMPTY': 3,
})

policy = Enum({
    'POLICY_ALL': 0,
    'POLICY_CYCLES': 1,
})

route = Enum({
    'ROUTE_THEOREM_4': 4,
    'ROUTE_THEOREM_5': 5,
    'ROUTE_THEOREM_6': 6,
    'ROUTE_THEOREM_7': 7,
    'ROUTE_THEOREM_8': 8,
    'ROUTE_HOFFMAN_SINGLETON': 3,
    'ROUTE_EXACT': 0,
    'ROUTE_UNSUPPORTED': 1,
    'ROUTE_FALLBACK': 2,
})

class ColouringError(Exception):
    value = None

    def __init__(self, value=None, message=None, /, **detail):
        Exception.__init__(self)
        if value is not None:
            self.value = value
        self.message = message
        self.detail = detail

    def __str__(self):
        name = error.get(self.value, 'ERROR_UNKNOWN')
        if self.message is None:
            return f'{name} [{self.value}]'
        return f'{self.message} [{name}]'

    def getMessage(self):
        """
        Get the message given when the error was raised, or None.
        """
        return self.message

STATUS_TO_EXCEPTION_DICT = {}
def __bindErrors():
    global_dict = globals()
    for name, value in error.forward_dict.items():
        assert name.startswith('ERROR_'), name
        name = 'ColouringError' + ''.join(
            x.capitalize() for x in name.split('_')[1:]
        )
        assert name not in global_dict, name
        STATUS_TO_EXCEPTION_DICT[value] = global_dict[name] = type(
            name,
            (ColouringError, ),
            {'value': value},
        )
__bindErrors()
del __bindErrors

def raiseColouringError(value, message=None, /, **detail):
    raise STATUS_TO_EXCEPTION_DICT.get(value, ColouringError)(
        value, message, **detail
    )

def checkLimit(value, limit, what, status=ERROR_CONFIGURATION): # pylint: disable=undefined-variable
    """
    Raise if value exceeds limit.
    limit (int, None)
        None disables the check.
    """
    if limit is not None and value > limit:
        raiseColouringError(
            status,
            f'{what} is {value}, above the configured bound of {limit}',
            amount=value,
            limit=limit,
        )
