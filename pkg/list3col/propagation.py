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
List-reduction rules and the propagation fixpoint.

Rules, by priority:
- no-empty: some list is empty, answer no.
- single-colour: u has list {i}, remove i from the lists of u's neighbours.
- diamond: x and y are the non-adjacent pair of a diamond and have distinct
  lists of size 2, both become their intersection.
- bull: the leaves u, v of an induced bull both have list {i}, the apex w
  list becomes L(w) & {i}.
- c6: on an induced 6-cycle x1..x6 where x1, x2, x3 have distinct singleton
  lists, x5 list becomes L(x2) & L(x5).
- c7: on an induced 7-cycle x1..x7 where x1, x2, x3 have distinct singleton
  lists and L(x4) = L(x2), the colour of x1 is removed from L(x6).
- all-small: every list has at most 2 colours, answer with the 2-list solver.

Rules c6 and c7 are only sound on graphs where no colouring gives the same
colour to two vertices at distance 2 on such a cycle (resp. exactly twice on
a 7-cycle); only the cycle-class drivers enable them.
"""
import collections
import heapq
import logging
from . import _common
from ._common import (
    raiseColouringError, CYCLE_LIMIT, FULL_MASK, EMPTY_MASK, ERROR_INPUT,
    ERROR_CONFIGURATION, OUTCOME_YES, OUTCOME_NO, OUTCOME_UNKNOWN,
    RULE_NO_EMPTY, RULE_ALL_SMALL, RULE_SINGLE_COLOUR, RULE_DIAMOND,
    RULE_BULL, RULE_C6, RULE_C7,
)
from .lists import ListAssignment, getMaskSize, formatMask, checkListCount
from .patterns import (
    getCachedCycleList, getCachedCycleIndex, getDiamondPartnerSet,
    iterBullLeafPairs, iterOrientations, DiamondSite, BullSite,
)
from .twosat import solve2List

__all__ = [
    'RuleSet', 'BASIC_RULES', 'C6_RULES', 'C7_RULES', 'NO_RULES',
    'parseRuleSet', 'formatRuleSet', 'Reduction', 'TraceStep', 'Trace',
    'PropagationOutcome', 'ruleNoEmpty', 'ruleAllSmall', 'ruleSingleColour',
    'ruleDiamond', 'ruleBull', 'ruleC6', 'ruleC7', 'applyReduction',
    'propagate',
]

logger = logging.getLogger(__name__)

RuleSet = collections.namedtuple(
    'RuleSet',
    ['single_colour', 'diamond', 'bull', 'c6', 'c7'],
)
RuleSet.__doc__ = """
Enabled list-reducing rules. no-empty and all-small are always active.
"""
NO_RULES = RuleSet(False, False, False, False, False)
BASIC_RULES = RuleSet(True, True, True, False, False)
C6_RULES = BASIC_RULES._replace(c6=True)
C7_RULES = BASIC_RULES._replace(c7=True)

_RULE_FIELD_DICT = {
    'single-colour': 'single_colour',
    'diamond': 'diamond',
    'bull': 'bull',
    'c6': 'c6',
    'c7': 'c7',
}

def parseRuleSet(text):
    """
    Parse a comma-separated list of rule tags ("single-colour", "diamond",
    "bull", "c6", "c7"). "basic" stands for the first three, "none" for no
    reducing rule.
    """
    result = NO_RULES
    for tag in text.split(','):
        tag = tag.strip().lower()
        if not tag or tag == 'none':
            continue
        if tag == 'basic':
            result = result._replace(
                single_colour=True, diamond=True, bull=True,
            )
            continue
        try:
            field = _RULE_FIELD_DICT[tag]
        except KeyError:
            raiseColouringError(
                ERROR_CONFIGURATION,
                f'unknown rule {tag!r}, expected one of basic, none, ' +
                ', '.join(_RULE_FIELD_DICT),
            )
        result = result._replace(**{field: True})
    return result

def formatRuleSet(rules):
    return ','.join(
        tag for tag, field in _RULE_FIELD_DICT.items()
        if getattr(rules, field)
    ) or 'none'

Reduction = collections.namedtuple('Reduction', ['rule', 'site', 'changes'])
Reduction.__doc__ = """
One application of a list-reducing rule.
rule (int)
    RULE_* constant.
site (tuple)
    The vertices the rule matched, in the rule's own order.
changes (tuple of (vertex, before mask, after mask))
"""

TraceStep = collections.namedtuple(
    'TraceStep',
    ['rule', 'site', 'vertex', 'before', 'after'],
)

PropagationOutcome = collections.namedtuple(
    'PropagationOutcome',
    ['status', 'colouring', 'lists'],
)
PropagationOutcome.__doc__ = """
status (int)
    OUTCOME_YES, OUTCOME_NO or OUTCOME_UNKNOWN.
colouring (dict, None)
    Total colouring respecting the input lists, present iff status is yes.
lists (ListAssignment)
    Assignment when propagation stopped.
"""

class Trace:
    """
    Ordered log of list changes made by propagate, one step per changed
    vertex, plus the terminal rule (no-empty or all-small) if one fired.
    """
    def __init__(self):
        self.__step_list = []
        self.__terminal = None

    def __len__(self):
        return len(self.__step_list)

    def __iter__(self):
        return iter(self.__step_list)

    def addReduction(self, reduction):
        append = self.__step_list.append
        for vertex, before, after in reduction.changes:
            append(TraceStep(
                reduction.rule, reduction.site, vertex, before, after,
            ))

    def setTerminal(self, rule, detail):
        self.__terminal = (rule, detail)

    def getTerminal(self):
        """
        (rule, detail) or None when propagation ended with unknown.
        """
        return self.__terminal

    def getStepList(self):
        return list(self.__step_list)

    def getRuleCount(self):
        """
        Map rule to the number of list changes it made.
        """
        return collections.Counter(x.rule for x in self.__step_list)

    def replay(self, lists):
        """
        Apply every recorded change to lists.
        Raises ColouringErrorInput if some step does not start from the list
        it recorded.
        """
        mask_list = list(lists.getMaskTuple())
        for step in self.__step_list:
            if mask_list[step.vertex] != step.before:
                raiseColouringError(
                    ERROR_INPUT,
                    f'trace step on vertex {step.vertex} expects '
                    f'{formatMask(step.before)}, found '
                    f'{formatMask(mask_list[step.vertex])}',
                )
            mask_list[step.vertex] = step.after
        return ListAssignment(mask_list)

    def format(self):
        """
        One line per step: rule tag, site, vertex, lists before and after.
        """
        getTag = _common.rule.getTag
        line_list = [
            f'{getTag(step.rule)} site={",".join(str(x) for x in step.site)} '
            f'{step.vertex}: {formatMask(step.before)} -> '
            f'{formatMask(step.after)}'
            for step in self.__step_list
        ]
        if self.__terminal is not None:
            terminal_rule, detail = self.__terminal
            line_list.append(f'{getTag(terminal_rule)} {detail}')
        return '\n'.join(line_list)

def _checkSingleColour(graph, mask_list, u):
    mask_u = mask_list[u]
    if getMaskSize(mask_u) != 1:
        return None
    for v in sorted(graph.getNeighbourSet(u)):
        before = mask_list[v]
        if before & mask_u:
            return Reduction(
                RULE_SINGLE_COLOUR, (u, v), ((v, before, before & ~mask_u), ),
            )
    return None

def _checkDiamond(graph, mask_list, x):
    mask_x = mask_list[x]
    if getMaskSize(mask_x) != 2:
        return None
    for y in sorted(getDiamondPartnerSet(graph, x)):
        mask_y = mask_list[y]
        if getMaskSize(mask_y) != 2 or mask_y == mask_x:
            continue
        common = sorted(graph.getNeighbourSet(x) & graph.getNeighbourSet(y))
        for index, u in enumerate(common):
            v = next(
                (z for z in common[index + 1:] if graph.hasEdge(u, z)),
                None,
            )
            if v is not None:
                break
        after = mask_x & mask_y
        return Reduction(
            RULE_DIAMOND,
            DiamondSite(u, v, x, y),
            tuple(sorted(((x, mask_x, after), (y, mask_y, after)))),
        )
    return None

def _checkBull(graph, mask_list, w):
    mask_w = mask_list[w]
    for x, y, u, v in iterBullLeafPairs(graph, w):
        mask_u = mask_list[u]
        if getMaskSize(mask_u) != 1 or mask_list[v] != mask_u or not (
            mask_w & ~mask_u
        ):
            continue
        return Reduction(
            RULE_BULL,
            BullSite(u, v, w, x, y),
            ((w, mask_w, mask_w & mask_u), ),
        )
    return None

def _checkC6(mask_list, cycle):
    for x1, x2, x3, _, x5, _ in iterOrientations(cycle):
        mask_1 = mask_list[x1]
        mask_2 = mask_list[x2]
        mask_3 = mask_list[x3]
        if getMaskSize(mask_1) != 1 or getMaskSize(mask_2) != 1 or (
            getMaskSize(mask_3) != 1 or mask_1 | mask_2 | mask_3 != FULL_MASK
        ):
            continue
        before = mask_list[x5]
        after = mask_2 & before
        if after != before:
            return Reduction(
                RULE_C6, tuple(cycle), ((x5, before, after), ),
            )
    return None

def _checkC7(mask_list, cycle):
    for x1, x2, x3, x4, _, x6, _ in iterOrientations(cycle):
        mask_1 = mask_list[x1]
        mask_2 = mask_list[x2]
        mask_3 = mask_list[x3]
        if getMaskSize(mask_1) != 1 or getMaskSize(mask_2) != 1 or (
            getMaskSize(mask_3) != 1 or mask_1 | mask_2 | mask_3 != FULL_MASK
        ) or mask_list[x4] != mask_2:
            continue
        before = mask_list[x6]
        if before & mask_1:
            return Reduction(
                RULE_C7, tuple(cycle), ((x6, before, before & ~mask_1), ),
            )
    return None

def ruleNoEmpty(lists):
    """
    Return the first vertex with an empty list, or None.
    """
    for vertex, mask in enumerate(lists.getMaskTuple()):
        if mask == EMPTY_MASK:
            return vertex
    return None

def ruleAllSmall(graph, lists):
    """
    If every list has at most 2 colours, decide with the 2-list solver and
    return a yes or no PropagationOutcome. Return None otherwise.
    Empty lists must have been ruled out (ruleNoEmpty).
    """
    checkListCount(graph, lists)
    if any(getMaskSize(x) > 2 for x in lists.getMaskTuple()):
        return None
    colouring = solve2List(graph, lists)
    if colouring is None:
        return PropagationOutcome(OUTCOME_NO, None, lists)
    return PropagationOutcome(OUTCOME_YES, colouring, lists)

def _findFirst(check, anchor_iterable):
    for anchor in anchor_iterable:
        reduction = check(anchor)
        if reduction is not None:
            return reduction
    return None

def ruleSingleColour(graph, lists):
    """
    First applicable single-colour reduction (anchors ascending), or None.
    """
    mask_list = lists.getMaskTuple()
    return _findFirst(
        lambda u: _checkSingleColour(graph, mask_list, u), graph,
    )

def ruleDiamond(graph, lists):
    """
    First applicable diamond reduction, or None. The site is one of
    getDiamondSiteList(graph, x) for its x.
    """
    mask_list = lists.getMaskTuple()
    return _findFirst(lambda x: _checkDiamond(graph, mask_list, x), graph)

def ruleBull(graph, lists):
    """
    First applicable bull reduction, or None. The site is one of
    getBullSiteList(graph, w) for its apex w, up to the leaf order.
    """
    mask_list = lists.getMaskTuple()
    return _findFirst(lambda w: _checkBull(graph, mask_list, w), graph)

def ruleC6(graph, lists, limit=CYCLE_LIMIT):
    """
    First applicable c6 reduction over induced 6-cycles in enumeration
    order, or None.
    """
    mask_list = lists.getMaskTuple()
    return _findFirst(
        lambda cycle: _checkC6(mask_list, cycle),
        getCachedCycleList(graph, 6, limit),
    )

def ruleC7(graph, lists, limit=CYCLE_LIMIT):
    mask_list = lists.getMaskTuple()
    return _findFirst(
        lambda cycle: _checkC7(mask_list, cycle),
        getCachedCycleList(graph, 7, limit),
    )

def applyReduction(lists, reduction):
    return lists.withMaskDict({
        vertex: after
        for vertex, _, after in reduction.changes
    })

class _WorkList:
    """
    Set of pending anchors, popped smallest first.
    """
    def __init__(self, iterable=()):
        self.__heap = heap = sorted(set(iterable))
        self.__pending = set(heap)

    def __bool__(self):
        return bool(self.__heap)

    def push(self, item):
        if item not in self.__pending:
            self.__pending.add(item)
            heapq.heappush(self.__heap, item)

    def pop(self):
        item = heapq.heappop(self.__heap)
        self.__pending.remove(item)
        return item

def propagate(graph, lists, rules=BASIC_RULES, cycle_limit=CYCLE_LIMIT):
    """
    Apply the enabled rules exhaustively.

    When several rules apply, the highest priority one fires first
    (no-empty, single-colour, diamond, bull, c6, c7, then all-small at the
    fixpoint). Each application strictly shrinks at least one list, so at
    most 3n of them happen.

    Returns (PropagationOutcome, Trace).
    Raises ColouringErrorOverflow if c6 or c7 is enabled and the graph has
    more than cycle_limit induced cycles of that length.
    """
    checkListCount(graph, lists)
    trace = Trace()
    empty_vertex = ruleNoEmpty(lists)
    if empty_vertex is not None:
        trace.setTerminal(RULE_NO_EMPTY, empty_vertex)
        return PropagationOutcome(OUTCOME_NO, None, lists), trace
    mask_list = list(lists.getMaskTuple())
    stage_list = []
    on_change_list = []
    if rules.single_colour:
        single_pending = _WorkList(
            x for x in graph if getMaskSize(mask_list[x]) == 1
        )
        stage_list.append((
            single_pending,
            lambda u: _checkSingleColour(graph, mask_list, u),
        ))
        def onSingleColour(vertex, size):
            if size == 1:
                single_pending.push(vertex)
        on_change_list.append(onSingleColour)
    if rules.diamond:
        diamond_pending = _WorkList(
            x for x in graph if getMaskSize(mask_list[x]) == 2
        )
        stage_list.append((
            diamond_pending,
            lambda x: _checkDiamond(graph, mask_list, x),
        ))
        def onDiamond(vertex, size):
            if size == 2:
                diamond_pending.push(vertex)
        on_change_list.append(onDiamond)
    if rules.bull:
        getSecondNeighbourSet = graph.getSecondNeighbourSet
        bull_pending = _WorkList(
            w
            for x in graph if getMaskSize(mask_list[x]) == 1
            for w in getSecondNeighbourSet(x)
        )
        stage_list.append((
            bull_pending,
            lambda w: _checkBull(graph, mask_list, w),
        ))
        def onBull(vertex, size):
            if size == 1:
                for apex in getSecondNeighbourSet(vertex):
                    bull_pending.push(apex)
        on_change_list.append(onBull)
    for enabled, length, check in (
        (rules.c6, 6, _checkC6),
        (rules.c7, 7, _checkC7),
    ):
        if not enabled:
            continue
        cycle_list = getCachedCycleList(graph, length, cycle_limit)
        cycle_index = getCachedCycleIndex(graph, length, cycle_limit)
        cycle_pending = _WorkList(range(len(cycle_list)))
        stage_list.append((
            cycle_pending,
            # pylint: disable=cell-var-from-loop
            lambda index, check=check, cycle_list=cycle_list: check(
                mask_list, cycle_list[index],
            ),
            # pylint: enable=cell-var-from-loop
        ))
        def onCycle(
            vertex, size, cycle_pending=cycle_pending, cycle_index=cycle_index,
        ):
            # pylint: disable=unused-argument
            for index in cycle_index.get(vertex, ()):
                cycle_pending.push(index)
        on_change_list.append(onCycle)
    step_count = 0
    while True:
        for pending, check in stage_list:
            if pending:
                break
        else:
            break
        anchor = pending.pop()
        reduction = check(anchor)
        if reduction is None:
            continue
        step_count += 1
        # Still applicable until shown otherwise.
        pending.push(anchor)
        trace.addReduction(reduction)
        for vertex, _, after in reduction.changes:
            mask_list[vertex] = after
        for vertex, _, after in reduction.changes:
            if after == EMPTY_MASK:
                trace.setTerminal(RULE_NO_EMPTY, vertex)
                logger.debug(
                    'propagation: no after %i reductions, %s emptied',
                    step_count, vertex,
                )
                return PropagationOutcome(
                    OUTCOME_NO, None, ListAssignment(mask_list),
                ), trace
            size = getMaskSize(after)
            for onChange in on_change_list:
                onChange(vertex, size)
    final_lists = ListAssignment(mask_list)
    outcome = ruleAllSmall(graph, final_lists)
    if outcome is None:
        outcome = PropagationOutcome(OUTCOME_UNKNOWN, None, final_lists)
    else:
        trace.setTerminal(
            RULE_ALL_SMALL,
            'yes' if outcome.status == OUTCOME_YES else 'no',
        )
    logger.debug(
        'propagation: %s after %i reductions',
        _common.outcome.getTag(outcome.status), step_count,
    )
    return outcome, trace
