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
Command line interface.

Exit status: 0 for yes (or undecided propagation, or a passed gadget check),
1 for no (or a failed gadget check), 2 for errors.
"""
import argparse
import logging
import sys
from . import _common
from ._common import (
    ColouringError, EXACT_NODE_BUDGET, GENERATOR_RETRY_BUDGET,
    ORACLE_MAX_VERTICES, OUTCOME_YES, OUTCOME_NO, OUTCOME_UNKNOWN,
    POLICY_ALL, POLICY_CYCLES,
)
from .hardness import (
    parseFormula, buildGadget, subdivideGadget, verifyGadget,
    checkEquivalence,
)
from .instance import (
    readInstance, readDimacsGraph, formatInstance, formatColouring,
    formatRoleMap, genClassInstance,
)
from .lists import ListAssignment
from .oracle import oracleListColour
from .propagation import parseRuleSet, formatRuleSet, propagate
from .solver import CLASS_NAME_LIST, classify, dispatchSolve

logger = logging.getLogger(__name__)

EXIT_YES = 0
EXIT_NO = 1
EXIT_ERROR = 2

_POLICY_DICT = {
    'cycles': POLICY_CYCLES,
    'all': POLICY_ALL,
}

def _readInput(args):
    if args.dimacs:
        graph = readDimacsGraph(args.path)
        return graph, ListAssignment.full(len(graph))
    return readInstance(args.path)

def _readFormula(path):
    with open(path, encoding='ascii') as formula_file:
        return parseFormula(formula_file.read())

def _getSubdivision(args, default_t=None):
    t = default_t if args.t is None else args.t
    if args.p is not None:
        return args.p, t
    return (0 if t is None else t), t

def _write(text):
    sys.stdout.write(text)
    if text and not text.endswith('\n'):
        sys.stdout.write('\n')

def _runSolve(args):
    graph, lists = _readInput(args)
    report = dispatchSolve(
        graph, lists, jobs=args.jobs, budget=args.budget,
        policy=_POLICY_DICT[args.policy],
    )
    _write(report.format())
    if report.getDecision() == OUTCOME_YES:
        _write(formatColouring(report.getWitness()))
        return EXIT_YES
    return EXIT_NO

def _runClassify(args):
    graph, _ = _readInput(args)
    _write(classify(graph).format())
    return EXIT_YES

def _runPropagate(args):
    graph, lists = _readInput(args)
    rules = parseRuleSet(args.rules)
    outcome, trace = propagate(graph, lists, rules)
    _write(
        f'outcome={_common.outcome.getTag(outcome.status)}\n'
        f'rules={formatRuleSet(rules)}\n'
        f'reductions={len(trace)}\n'
    )
    if outcome.status == OUTCOME_UNKNOWN:
        _write(f'lists={outcome.lists.format()}')
    if args.trace:
        _write(trace.format())
    if outcome.status == OUTCOME_YES:
        _write(formatColouring(outcome.colouring))
    return EXIT_NO if outcome.status == OUTCOME_NO else EXIT_YES

def _runOracle(args):
    graph, lists = _readInput(args)
    colouring = oracleListColour(graph, lists)
    if colouring is None:
        _write('decision=no')
        return EXIT_NO
    _write('decision=yes')
    _write(formatColouring(colouring))
    return EXIT_YES

def _runGadget(args):
    formula = _readFormula(args.path)
    p, _ = _getSubdivision(args)
    gadget = subdivideGadget(buildGadget(formula), p)
    for variable in formula.getOverusedVariableList():
        logger.warning('variable %i appears in more than 3 clauses', variable)
    _write(formatInstance(gadget.graph))
    if args.roles is not None:
        with open(args.roles, 'w', encoding='ascii') as role_file:
            role_file.write(formatRoleMap(gadget))
    return EXIT_YES

def _runCheckGadget(args):
    formula = _readFormula(args.path)
    p, t = _getSubdivision(args, default_t=6)
    gadget = subdivideGadget(buildGadget(formula), p)
    verification = verifyGadget(gadget, t)
    line_list = [
        f'vertices={len(gadget.graph)}',
        f'edges={gadget.graph.getEdgeCount()}',
        f'subdivision={p}',
        f'diameter={verification.diameter}',
    ]
    line_list.extend(
        f'C{length}={count}'
        for length, count in sorted(verification.census.items())
    )
    line_list.append(f'c5_without_z={len(verification.c5_without_z)}')
    passed = verification.passed
    if len(gadget.graph) <= ORACLE_MAX_VERTICES:
        equivalent = checkEquivalence(formula, gadget)
        line_list.append(f'equivalent={"yes" if equivalent else "no"}')
        passed = passed and equivalent
    else:
        line_list.append('equivalent=skipped')
    overused = formula.getOverusedVariableList()
    if overused:
        line_list.append(
            'overused=' + ','.join(str(x) for x in overused),
        )
    line_list.extend(f'note={x}' for x in verification.note_list)
    line_list.append(f'passed={"yes" if passed else "no"}')
    _write('\n'.join(line_list))
    return EXIT_YES if passed else EXIT_NO

def _runGen(args):
    graph, lists = genClassInstance(
        args.class_name, args.n, args.seed, retry_budget=args.retry_budget,
    )
    _write(formatInstance(graph, lists))
    return EXIT_YES

def getParser():
    parser = argparse.ArgumentParser(
        prog='list3col',
        description='List 3-Colouring of diameter-2 graphs with forbidden '
        'induced cycles.',
    )
    parser.add_argument(
        '-v', '--verbose', action='count', default=0,
        help='Log progress on standard error, twice for details.',
    )
    subparsers = parser.add_subparsers(dest='command', required=True)
    def addInput(subparser):
        subparser.add_argument('path', help='Instance file.')
        subparser.add_argument(
            '--dimacs', action='store_true',
            help='Read a DIMACS edge file, every list being {1,2,3}.',
        )
    solve = subparsers.add_parser('solve', help='Decide an instance.')
    addInput(solve)
    solve.add_argument(
        '--jobs', type=int, default=1,
        help='Worker processes for precolouring branches.',
    )
    solve.add_argument(
        '--budget', type=int, default=EXACT_NODE_BUDGET,
        help='Exact search node budget.',
    )
    solve.add_argument(
        '--policy', choices=sorted(_POLICY_DICT), default='cycles',
        help='Vertex sets swept for (C4, C8)- and (C4, C9)-free graphs.',
    )
    solve.set_defaults(run=_runSolve)
    classify_parser = subparsers.add_parser(
        'classify', help='Print class membership facts.',
    )
    addInput(classify_parser)
    classify_parser.set_defaults(run=_runClassify)
    propagate_parser = subparsers.add_parser(
        'propagate', help='Run one propagation.',
    )
    addInput(propagate_parser)
    propagate_parser.add_argument(
        '--rules', default='basic',
        help='Comma-separated rules among single-colour, diamond, bull, c6, '
        'c7, or basic, none.',
    )
    propagate_parser.add_argument(
        '--trace', action='store_true', help='Print every list change.',
    )
    propagate_parser.set_defaults(run=_runPropagate)
    oracle = subparsers.add_parser('oracle', help='Brute-force an instance.')
    addInput(oracle)
    oracle.set_defaults(run=_runOracle)
    for name, run, help_text in (
        ('gadget', _runGadget, 'Print the gadget of a NAE-3SAT formula.'),
        ('check-gadget', _runCheckGadget, 'Verify the gadget of a formula.'),
    ):
        gadget = subparsers.add_parser(name, help=help_text)
        gadget.add_argument('path', help='DIMACS-style 3-literal clauses.')
        gadget.add_argument(
            '-p', type=int, help='Subdivisions per occurrence edge '
            '(default: t, or 0 without t).',
        )
        gadget.add_argument('-t', type=int, help='Even cycle length bound.')
        if name == 'gadget':
            gadget.add_argument(
                '--roles', help='Also write vertex roles to this file.',
            )
        gadget.set_defaults(run=run)
    gen = subparsers.add_parser('gen', help='Generate a class instance.')
    gen.add_argument(
        '--class', dest='class_name', required=True, choices=CLASS_NAME_LIST,
    )
    gen.add_argument('--n', type=int, required=True)
    gen.add_argument('--seed', type=int, required=True)
    gen.add_argument(
        '--retry-budget', type=int, default=GENERATOR_RETRY_BUDGET,
    )
    gen.set_defaults(run=_runGen)
    return parser

def main(argv=None):
    """
    Run the command line, returning the exit status.
    """
    try:
        args = getParser().parse_args(argv)
    except SystemExit as exc:
        return exc.code
    logging.basicConfig(
        level={
            0: logging.WARNING,
            1: logging.INFO,
        }.get(args.verbose, logging.DEBUG),
        format='%(levelname)s %(name)s: %(message)s',
        stream=sys.stderr,
    )
    try:
        return args.run(args)
    except ColouringError as exc:
        print(f'list3col: error: {exc}', file=sys.stderr)
    except OSError as exc:
        print(f'list3col: error: {exc}', file=sys.stderr)
    return EXIT_ERROR
