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

# pylint: disable=invalid-name, missing-docstring, too-many-public-methods

import random
import unittest
import list3col
from list3col import (
    ListAssignment, BASIC_RULES, C6_RULES, NO_RULES, DiamondSite, BullSite,
    parseRuleSet, ruleNoEmpty, ruleAllSmall, ruleSingleColour, ruleDiamond,
    ruleBull, ruleC6, ruleC7, applyReduction, propagate, respects,
    countColourings, OUTCOME_YES, OUTCOME_NO, OUTCOME_UNKNOWN,
    RULE_NO_EMPTY, RULE_ALL_SMALL, RULE_SINGLE_COLOUR, RULE_DIAMOND,
    RULE_BULL, RULE_C6, RULE_C7, colourToMask,
    isClaimOnePattern, getDiamondSiteList,
    getBullSiteList,
)
from .propagation import formatRuleSet
from .instance import genRandomLists
from .patterns import getCachedCycleList
from ._testsupport import (
    getCycle, getComplete, getPath, getDiamond, getBull, genInstance,
    genRange, iterSamples, genSweepGraph, iterColourings,
)

FULL = (1, 2, 3)

def getLists(*colour_list_list):
    return ListAssignment.fromColourLists(colour_list_list)

class RuleSetTests(unittest.TestCase):
    def testParse(self):
        self.assertEqual(parseRuleSet('basic'), BASIC_RULES)
        self.assertEqual(parseRuleSet('basic,c6'), C6_RULES)
        self.assertEqual(
            parseRuleSet('single-colour, Diamond,bull'), BASIC_RULES,
        )
        self.assertEqual(parseRuleSet('none'), NO_RULES)
        self.assertEqual(parseRuleSet(''), NO_RULES)
        self.assertEqual(parseRuleSet('c7').c7, True)
        self.assertRaises(
            list3col.ColouringErrorConfiguration, parseRuleSet, 'basic,c8',
        )

    def testFormat(self):
        self.assertEqual(formatRuleSet(BASIC_RULES), 'single-colour,diamond,bull')
        self.assertEqual(formatRuleSet(NO_RULES), 'none')
        self.assertEqual(parseRuleSet(formatRuleSet(C6_RULES)), C6_RULES)

class TerminalRuleTests(unittest.TestCase):
    def testNoEmpty(self):
        self.assertEqual(ruleNoEmpty(ListAssignment([7, 0, 0])), 1)
        self.assertIsNone(ruleNoEmpty(ListAssignment.full(3)))
        self.assertIsNone(ruleNoEmpty(ListAssignment([])))

    def testAllSmall(self):
        outcome = ruleAllSmall(getPath(2), getLists((1, 2), (1, 2)))
        self.assertEqual(outcome.status, OUTCOME_YES)
        self.assertTrue(respects(
            outcome.colouring, getPath(2), getLists((1, 2), (1, 2)),
        ))
        outcome = ruleAllSmall(getCycle(5), getLists(*[(1, 2)] * 5))
        self.assertEqual(outcome.status, OUTCOME_NO)
        self.assertIsNone(outcome.colouring)
        self.assertIsNone(ruleAllSmall(getPath(2), getLists((1, 2), FULL)))

class ReducingRuleTests(unittest.TestCase):
    def testSingleColour(self):
        edge = getPath(2)
        reduction = ruleSingleColour(edge, getLists((1, ), (1, 2)))
        self.assertEqual(reduction.rule, RULE_SINGLE_COLOUR)
        self.assertEqual(reduction.site, (0, 1))
        self.assertEqual(reduction.changes, ((1, 0b011, 0b010), ))
        self.assertIsNone(ruleSingleColour(edge, getLists((1, ), (2, 3))))
        reduction = ruleSingleColour(edge, getLists((1, ), (1, )))
        self.assertEqual(reduction.changes, ((1, 0b001, 0), ))

    def testDiamond(self):
        graph = getDiamond()
        reduction = ruleDiamond(graph, getLists(FULL, FULL, (1, 2), (1, 3)))
        self.assertEqual(reduction.rule, RULE_DIAMOND)
        self.assertEqual(reduction.site, DiamondSite(0, 1, 2, 3))
        self.assertEqual(
            reduction.changes, ((2, 0b011, 0b001), (3, 0b101, 0b001)),
        )
        self.assertEqual(
            applyReduction(
                getLists(FULL, FULL, (1, 2), (1, 3)), reduction,
            ),
            getLists(FULL, FULL, (1, ), (1, )),
        )
        self.assertIsNone(
            ruleDiamond(graph, getLists(FULL, FULL, (1, 2), (1, 2))),
        )
        self.assertIsNone(
            ruleDiamond(graph, getLists(FULL, FULL, (1, ), (1, 2))),
        )

    def testBull(self):
        graph = getBull()
        reduction = ruleBull(graph, getLists(FULL, FULL, FULL, (1, ), (1, )))
        self.assertEqual(reduction.rule, RULE_BULL)
        self.assertEqual(reduction.site, BullSite(3, 4, 2, 0, 1))
        self.assertEqual(reduction.changes, ((2, 0b111, 0b001), ))
        reduction = ruleBull(
            graph, getLists(FULL, FULL, (2, 3), (1, ), (1, )),
        )
        self.assertEqual(reduction.changes, ((2, 0b110, 0), ))
        self.assertIsNone(
            ruleBull(graph, getLists(FULL, FULL, FULL, (1, ), (2, ))),
        )
        self.assertIsNone(
            ruleBull(graph, getLists(FULL, FULL, (1, ), (1, ), (1, ))),
        )

    def testC6(self):
        graph = getCycle(6)
        reduction = ruleC6(
            graph, getLists((1, ), (2, ), (3, ), FULL, FULL, FULL),
        )
        self.assertEqual(reduction.rule, RULE_C6)
        self.assertEqual(reduction.changes, ((4, 0b111, 0b010), ))
        self.assertIsNone(ruleC6(
            graph, getLists((1, ), (2, ), (3, ), FULL, (2, ), FULL),
        ))
        reduction = ruleC6(
            graph, getLists((1, ), (2, ), (3, ), FULL, (1, 3), FULL),
        )
        self.assertEqual(reduction.changes, ((4, 0b101, 0), ))
        # Same pattern, another rotation.
        reduction = ruleC6(
            graph, getLists(FULL, FULL, FULL, (3, ), (2, ), (1, )),
        )
        self.assertEqual(reduction.changes, ((1, 0b111, 0b010), ))

    def testC7(self):
        graph = getCycle(7)
        reduction = ruleC7(
            graph, getLists((1, ), (2, ), (3, ), (2, ), FULL, FULL, FULL),
        )
        self.assertEqual(reduction.rule, RULE_C7)
        self.assertEqual(reduction.changes, ((5, 0b111, 0b110), ))
        self.assertIsNone(ruleC7(
            graph, getLists((1, ), (2, ), (3, ), (2, ), FULL, (2, 3), FULL),
        ))
        self.assertIsNone(ruleC7(
            graph, getLists((1, ), (2, ), (3, ), (3, ), FULL, FULL, FULL),
        ))

    def testSitesAreInduced(self):
        seen = set()
        for graph, lists in iterSamples(
            genInstance(genRange(5, 9), .5, .2), 300, 11,
        ):
            reduction = ruleDiamond(graph, lists)
            if reduction is not None:
                seen.add(RULE_DIAMOND)
                site = reduction.site
                self.assertIn(site, getDiamondSiteList(graph, site.x))
            reduction = ruleBull(graph, lists)
            if reduction is not None:
                seen.add(RULE_BULL)
                site = reduction.site
                if site.u > site.v:
                    site = BullSite(site.v, site.u, site.w, site.y, site.x)
                self.assertIn(site, getBullSiteList(graph, site.w))
        self.assertEqual(seen, {RULE_DIAMOND, RULE_BULL})

    def testBasicRulesPreserveColourings(self):
        """
        Every single-colour, diamond and bull step keeps the set of
        colourings respecting the lists.
        """
        step_count = 0
        for graph, lists in iterSamples(
            genInstance(genRange(3, 8), .5, .3), 400, 7,
        ):
            expected = countColourings(graph, lists)
            while True:
                for rule in (ruleSingleColour, ruleDiamond, ruleBull):
                    reduction = rule(graph, lists)
                    if reduction is not None:
                        break
                else:
                    break
                for _, before, after in reduction.changes:
                    self.assertNotEqual(before, after)
                    self.assertEqual(after & ~before, 0)
                lists = applyReduction(lists, reduction)
                self.assertEqual(countColourings(graph, lists), expected)
                step_count += 1
        self.assertGreater(step_count, 0)

    def testCycleRulesOnClassMembers(self):
        """
        On diameter-2 (C4, C8)-free and (C4, C9)-free graphs, a c6 or c7 step
        only drops colourings showing the forbidden pattern on its cycle, and
        keeps them all when no colouring shows it on any cycle of that length.
        """
        step_count = 0
        for rule, length, forbidden, seed in (
            (ruleC6, 6, 8, 3),
            (ruleC7, 7, 9, 4),
        ):
            rng = random.Random(seed)
            gen_graph = genSweepGraph(length, forbidden, max_extra=3)
            for _ in range(15):
                graph = gen_graph(rng)
                colour_list = rng.sample(FULL, 3)
                mask_dict = {
                    x: colourToMask(colour)
                    for x, colour in enumerate(colour_list)
                }
                if length == 7:
                    mask_dict[3] = mask_dict[1]
                lists = genRandomLists(rng, len(graph)).withMaskDict(mask_dict)
                reduction = rule(graph, lists)
                if reduction is None:
                    continue
                before = set(iterColourings(graph, lists))
                after = set(iterColourings(
                    graph, applyReduction(lists, reduction),
                ))
                self.assertLessEqual(after, before)
                for colouring in before - after:
                    self.assertTrue(
                        isClaimOnePattern(reduction.site, colouring),
                    )
                if not any(
                    isClaimOnePattern(cycle.vertices, colouring)
                    for cycle in getCachedCycleList(graph, length)
                    for colouring in before
                ):
                    self.assertEqual(after, before)
                step_count += 1
        self.assertGreater(step_count, 0)

class PropagateTests(unittest.TestCase):
    def testExamples(self):
        outcome, trace = propagate(getPath(2), ListAssignment.full(2))
        self.assertEqual(outcome.status, OUTCOME_UNKNOWN)
        self.assertEqual(outcome.lists, ListAssignment.full(2))
        self.assertEqual(len(trace), 0)
        self.assertIsNone(trace.getTerminal())
        outcome, trace = propagate(getPath(2), getLists((1, ), (1, )))
        self.assertEqual(outcome.status, OUTCOME_NO)
        self.assertEqual(trace.getTerminal(), (RULE_NO_EMPTY, 1))
        self.assertEqual(
            trace.format(),
            'single-colour site=0,1 1: {1} -> {}\nno-empty 1',
        )
        outcome, trace = propagate(
            getComplete(3), getLists((1, ), (1, 2), FULL),
        )
        self.assertEqual(outcome.status, OUTCOME_YES)
        self.assertEqual(outcome.colouring, {0: 1, 1: 2, 2: 3})
        self.assertEqual(trace.getTerminal(), (RULE_ALL_SMALL, 'yes'))
        self.assertEqual(trace.getRuleCount(), {RULE_SINGLE_COLOUR: 3})

    def testInitialEmptyList(self):
        outcome, trace = propagate(getPath(2), getLists((), FULL))
        self.assertEqual(outcome.status, OUTCOME_NO)
        self.assertEqual(trace.getTerminal(), (RULE_NO_EMPTY, 0))
        self.assertEqual(len(trace), 0)

    def testNoRules(self):
        outcome, trace = propagate(getPath(2), getLists((1, ), (1, )), NO_RULES)
        self.assertEqual(outcome.status, OUTCOME_NO)
        self.assertEqual(trace.getTerminal(), (RULE_ALL_SMALL, 'no'))

    def testC6RuleDecides(self):
        lists = getLists((1, ), (2, ), (3, ), FULL, FULL, FULL)
        outcome, _ = propagate(getCycle(6), lists, BASIC_RULES)
        self.assertEqual(outcome.status, OUTCOME_UNKNOWN)
        self.assertEqual(outcome.lists.getMask(4), 0b111)
        outcome, trace = propagate(getCycle(6), lists, C6_RULES)
        self.assertEqual(outcome.status, OUTCOME_YES)
        self.assertEqual(
            outcome.colouring, {0: 1, 1: 2, 2: 3, 3: 1, 4: 2, 5: 3},
        )
        self.assertEqual(trace.getRuleCount()[RULE_C6], 1)

    def testOverflow(self):
        self.assertRaises(
            list3col.ColouringErrorOverflow,
            propagate, getCycle(6), ListAssignment.full(6), C6_RULES,
            cycle_limit=0,
        )

    def testListCount(self):
        self.assertRaises(
            list3col.ColouringErrorInput,
            propagate, getPath(3), ListAssignment.full(2),
        )

    def testRandomInstances(self):
        for graph, lists in iterSamples(
            genInstance(genRange(1, 8), .45, .5), 400, 8,
        ):
            outcome, trace = propagate(graph, lists)
            self.assertLessEqual(len(trace), 3 * len(graph))
            self.assertEqual(trace.replay(lists), outcome.lists)
            self.assertTrue(outcome.lists.isSubsetOf(lists))
            expected = countColourings(graph, lists)
            if outcome.status == OUTCOME_YES:
                self.assertTrue(respects(outcome.colouring, graph, lists))
            elif outcome.status == OUTCOME_NO:
                self.assertEqual(expected, 0)
            else:
                self.assertEqual(countColourings(graph, outcome.lists), expected)
                self.assertTrue(any(
                    outcome.lists.isFull(x) for x in graph
                ))
                for rule in (ruleSingleColour, ruleDiamond, ruleBull):
                    self.assertIsNone(rule(graph, outcome.lists))
            self.assertEqual(
                propagate(graph, lists)[1].getStepList(), trace.getStepList(),
            )

    def testReplayMismatch(self):
        _, trace = propagate(getPath(2), getLists((1, ), (1, 2)))
        self.assertRaises(
            list3col.ColouringErrorInput,
            trace.replay, getLists((1, ), (3, )),
        )

if __name__ == '__main__':
    unittest.main()
