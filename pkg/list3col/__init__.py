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

"""
List 3-Colouring for graphs of diameter 2 with forbidden induced cycles.

Usage:
- Build a graph (buildGraph, fromNetworkX, readInstance).
- Give it lists (ListAssignment.full, ListAssignment.fromColourLists).
- Call dispatchSolve, which picks the polynomial algorithm of the graph's
  class when there is one, and exact search otherwise.

Lower-level pieces (propagate, fullN0Propagation, fullPPropagation, the
per-class solvers, the brute-force oracle) are exported as well, along with
the gadget tooling of the hardness module.

All errors are ColouringError subclasses, one per ERROR_* status.
"""
from . import _common
from ._common import ColouringError, STATUS_TO_EXCEPTION_DICT
from .graph import (
    Graph, Bipartition, INFINITY, buildGraph, getDiameter, getBipartition,
    isCompleteBipartite, fromNetworkX,
)
from .lists import (
    ListAssignment, Precolouring, colourToMask, maskToColours, getMaskSize,
    formatMask, isProper, respects, iterPromising, restrictToPrecolouring,
)
from .patterns import (
    DiamondSite, BullSite, InducedCycle, findK4, findTriangle,
    findInducedCycle, iterInducedCycles, enumerateInducedCycles,
    findTriangleOrInducedC5, getDiamondSiteList, getBullSiteList,
    isInducedCycle,
)
from .twosat import ImplicationGraph, solve2List
from .propagation import (
    RuleSet, BASIC_RULES, C6_RULES, C7_RULES, NO_RULES, Reduction, Trace,
    PropagationOutcome, parseRuleSet, ruleNoEmpty, ruleAllSmall,
    ruleSingleColour, ruleDiamond, ruleBull, ruleC6, ruleC7, applyReduction,
    propagate,
)
from .oracle import oracleListColour, countColourings
from .solver import (
    N0Report, PReport, ClassProfile, SolveReport, CLASS_NAME_LIST,
    fullN0Propagation, fullPPropagation, isClaimOnePattern, getC7Case,
    getLayers, getTriangleTSet, classify, isClassMember, solveC5Free,
    solveC6Free, solveC4C7Free, solveC4C8Free, solveC4C9Free, solveExact,
    dispatchSolve,
)
from .hardness import (
    NaeFormula, GadgetGraph, GadgetVerification, parseFormula,
    naeSatisfiable, buildGadget, subdivideGadget, verifyGadget,
    checkEquivalence,
)
from .instance import (
    parseInstance, readInstance, formatInstance, writeInstance,
    parseDimacsGraph, readDimacsGraph, formatColouring, formatRoleMap,
    genClassInstance,
)

__version__ = '1.0.0'

__all__ = [
    'ColouringError', 'Graph', 'Bipartition', 'INFINITY', 'buildGraph',
    'getDiameter', 'getBipartition', 'isCompleteBipartite', 'fromNetworkX',
    'ListAssignment', 'Precolouring', 'colourToMask', 'maskToColours',
    'getMaskSize', 'formatMask', 'isProper', 'respects', 'iterPromising',
    'restrictToPrecolouring', 'DiamondSite', 'BullSite', 'InducedCycle',
    'findK4', 'findTriangle', 'findInducedCycle', 'iterInducedCycles',
    'enumerateInducedCycles', 'findTriangleOrInducedC5',
    'getDiamondSiteList', 'getBullSiteList', 'isInducedCycle',
    'ImplicationGraph', 'solve2List', 'RuleSet', 'BASIC_RULES', 'C6_RULES',
    'C7_RULES', 'NO_RULES', 'Reduction', 'Trace', 'PropagationOutcome',
    'parseRuleSet', 'ruleNoEmpty', 'ruleAllSmall', 'ruleSingleColour',
    'ruleDiamond', 'ruleBull', 'ruleC6', 'ruleC7', 'applyReduction',
    'propagate', 'oracleListColour', 'countColourings', 'N0Report',
    'PReport', 'ClassProfile', 'SolveReport', 'CLASS_NAME_LIST',
    'fullN0Propagation', 'fullPPropagation', 'isClaimOnePattern',
    'getC7Case', 'getLayers', 'getTriangleTSet', 'classify',
    'isClassMember', 'solveC5Free', 'solveC6Free', 'solveC4C7Free',
    'solveC4C8Free', 'solveC4C9Free', 'solveExact', 'dispatchSolve',
    'NaeFormula', 'GadgetGraph', 'GadgetVerification', 'parseFormula',
    'naeSatisfiable', 'buildGadget', 'subdivideGadget', 'verifyGadget',
    'checkEquivalence', 'parseInstance', 'readInstance', 'formatInstance',
    'writeInstance', 'parseDimacsGraph', 'readDimacsGraph',
    'formatColouring', 'formatRoleMap', 'genClassInstance',
]

# Bind constants and exception classes in this namespace, so users only
# have to import one module.
def __bindConstants():
    global_dict = globals()
    for name, value in _common.__dict__.items():
        if name.isupper() and not name.startswith('_') and (
            isinstance(value, (int, tuple))
        ):
            assert name not in global_dict, name
            global_dict[name] = value
            __all__.append(name)
    for exception_class in STATUS_TO_EXCEPTION_DICT.values():
        name = exception_class.__name__
        global_dict[name] = exception_class
        __all__.append(name)
__bindConstants()
del __bindConstants
