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
Not-all-equal 3-SAT formulas and the graph they reduce to.

Gadget layout, for n variables and m clauses:
- vertex 0 is z,
- variable i (1-based) has literal vertices 2i - 1 (positive) and 2i
  (negative), adjacent to each other and to z,
- literal t (0-based) of clause j (0-based) has clause vertex
  1 + 2n + 3j + t, the three of a clause forming a triangle,
- each clause vertex is adjacent to the vertex of its literal.
Subdividing replaces each of these 3m occurrence edges by a path through p
new vertices, every one of them adjacent to z.

The formula is not-all-equal satisfiable iff the gadget is 3-colourable.
"""
import collections
import itertools
import logging
import re
from ._common import (
    raiseColouringError, checkLimit, NAE_MAX_VARIABLES, ORACLE_MAX_VERTICES,
    CYCLE_LIMIT, ERROR_PARSE, ERROR_CONTRACT, ERROR_CONFIGURATION,
    ERROR_BUDGET,
)
from .graph import buildGraph
from .lists import ListAssignment
from .oracle import oracleListColour
from .patterns import iterTriangles, enumerateInducedCycles

__all__ = [
    'NaeFormula', 'GadgetGraph', 'GadgetVerification', 'Z_VERTEX',
    'MAX_OCCURRENCE', 'parseFormula', 'naeSatisfiable', 'buildGadget',
    'subdivideGadget', 'verifyGadget', 'checkEquivalence', 'formatRole',
]

logger = logging.getLogger(__name__)

Z_VERTEX = 0
# Occurrence bound of the NP-complete variant of the problem.
MAX_OCCURRENCE = 3

class NaeFormula(collections.namedtuple(
    'NaeFormula',
    ['variable_count', 'clause_list'],
)):
    """
    variable_count (int)
    clause_list (tuple of 3-tuples of int)
        DIMACS literals: i for variable i, -i for its negation. Literal order
        within a clause is kept as given.
    """
    __slots__ = ()

    def getOccurrenceDict(self):
        """
        Map each variable to the number of clauses it appears in.
        """
        result = collections.Counter()
        for clause in self.clause_list:
            result.update({abs(x) for x in clause})
        return {x: result[x] for x in range(1, self.variable_count + 1)}

    def getOverusedVariableList(self, bound=MAX_OCCURRENCE):
        """
        Variables appearing in more than bound clauses.
        """
        return [
            variable
            for variable, count in self.getOccurrenceDict().items()
            if count > bound
        ]

    def isSatisfiedBy(self, assignment):
        """
        assignment (dict)
            variable to bool.
        True if every clause has a true and a false literal.
        """
        for clause in self.clause_list:
            value_set = {assignment[abs(x)] == (x > 0) for x in clause}
            if len(value_set) != 2:
                return False
        return True

def parseFormula(text):
    """
    Parse DIMACS-style clause lines: three non-zero signed integers followed
    by 0, one clause per line. Lines starting with "c" are comments, an
    optional "p cnf <variables> <clauses>" header fixes the variable count.

    Raises ColouringErrorParse, with the line number as "line" detail.
    """
    declared = None
    clause_list = []
    highest = 0
    for line_number, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith('c') or line.startswith('%'):
            continue
        if line.startswith('p'):
            match = re.fullmatch(r'p\s+cnf\s+(\d+)\s+(\d+)', line)
            if match is None:
                raiseColouringError(
                    ERROR_PARSE,
                    f'line {line_number}: malformed header {line!r}',
                    line=line_number,
                )
            declared = int(match.group(1))
            continue
        try:
            literal_list = [int(x) for x in line.split()]
        except ValueError:
            raiseColouringError(
                ERROR_PARSE,
                f'line {line_number}: not a clause: {line!r}',
                line=line_number,
            )
        if not literal_list or literal_list[-1] != 0:
            raiseColouringError(
                ERROR_PARSE,
                f'line {line_number}: clause must end with 0',
                line=line_number,
            )
        literal_list.pop()
        if len(literal_list) != 3 or 0 in literal_list:
            raiseColouringError(
                ERROR_PARSE,
                f'line {line_number}: clause must have exactly 3 non-zero '
                f'literals, got {len(literal_list)}',
                line=line_number,
            )
        highest = max(highest, *(abs(x) for x in literal_list))
        if declared is not None and highest > declared:
            raiseColouringError(
                ERROR_PARSE,
                f'line {line_number}: variable {highest} above the declared '
                f'{declared}',
                line=line_number,
            )
        clause_list.append(tuple(literal_list))
    return NaeFormula(
        highest if declared is None else declared,
        tuple(clause_list),
    )

def naeSatisfiable(formula, limit=NAE_MAX_VARIABLES):
    """
    Return a not-all-equal satisfying assignment (dict variable to bool),
    or None. Brute force, raises ColouringErrorBudget above limit variables.
    """
    checkLimit(formula.variable_count, limit, 'variable count', ERROR_BUDGET)
    variable_list = range(1, formula.variable_count + 1)
    for value_tuple in itertools.product(
        (True, False), repeat=formula.variable_count,
    ):
        assignment = dict(zip(variable_list, value_tuple))
        if formula.isSatisfiedBy(assignment):
            return assignment
    return None

GadgetGraph = collections.namedtuple(
    'GadgetGraph',
    ['graph', 'role_list', 'occurrence_path_list', 'subdivision'],
)
GadgetGraph.__doc__ = """
graph (Graph)
role_list (list of tuple)
    Role of each vertex: ('z', ), ('literal', variable, positive),
    ('clause', clause index, literal index) or
    ('subdivision', occurrence index, position), position counting from the
    literal end starting at 1.
occurrence_path_list (list of tuple)
    For each clause literal in clause order, the path from its literal
    vertex to its clause vertex.
subdivision (int)
    Number of vertices inserted in each occurrence edge.
"""

def formatRole(role):
    kind = role[0]
    if kind == 'literal':
        return f'literal {role[1]} {"+" if role[2] else "-"}'
    return ' '.join(str(x) for x in role)

def getLiteralVertex(variable, positive):
    return 2 * variable - (1 if positive else 0)

def buildGadget(formula):
    """
    Build the unsubdivided gadget of formula: 1 + 2n + 3m vertices and
    3n + 6m edges.
    """
    variable_count = formula.variable_count
    role_list = [('z', )]
    edge_list = []
    for variable in range(1, variable_count + 1):
        positive = getLiteralVertex(variable, True)
        negative = getLiteralVertex(variable, False)
        role_list.append(('literal', variable, True))
        role_list.append(('literal', variable, False))
        edge_list.extend((
            (positive, negative),
            (Z_VERTEX, positive),
            (Z_VERTEX, negative),
        ))
    occurrence_path_list = []
    for clause_index, clause in enumerate(formula.clause_list):
        base = 1 + 2 * variable_count + 3 * clause_index
        for index in range(3):
            role_list.append(('clause', clause_index, index))
        edge_list.extend((
            (base, base + 1),
            (base + 1, base + 2),
            (base, base + 2),
        ))
        for index, literal in enumerate(clause):
            if not 0 < abs(literal) <= variable_count:
                raiseColouringError(
                    ERROR_CONTRACT,
                    f'clause {clause_index} uses variable {abs(literal)}, '
                    f'formula has {variable_count}',
                )
            path = (getLiteralVertex(abs(literal), literal > 0), base + index)
            occurrence_path_list.append(path)
            edge_list.append(path)
    return GadgetGraph(
        buildGraph(len(role_list), edge_list),
        role_list,
        occurrence_path_list,
        0,
    )

def subdivideGadget(gadget, p):
    """
    Insert p vertices in every occurrence edge of an unsubdivided gadget,
    each adjacent to z. Adds 3m * p vertices.
    """
    if gadget.subdivision:
        raiseColouringError(
            ERROR_CONTRACT, 'gadget is already subdivided',
        )
    if p < 0:
        raiseColouringError(
            ERROR_CONFIGURATION, f'negative subdivision count {p}',
        )
    graph = gadget.graph
    occurrence_set = {
        tuple(sorted(x)) for x in gadget.occurrence_path_list
    }
    edge_list = [
        x for x in graph.iterEdges()
        if p == 0 or x not in occurrence_set
    ]
    role_list = list(gadget.role_list)
    occurrence_path_list = []
    for occurrence_index, (literal_vertex, clause_vertex) in enumerate(
        gadget.occurrence_path_list,
    ):
        path = [literal_vertex]
        for position in range(1, p + 1):
            vertex = len(role_list)
            role_list.append(('subdivision', occurrence_index, position))
            edge_list.append((Z_VERTEX, vertex))
            path.append(vertex)
        path.append(clause_vertex)
        if p:
            edge_list.extend(zip(path, path[1:]))
        occurrence_path_list.append(tuple(path))
    return GadgetGraph(
        buildGraph(len(role_list), edge_list),
        role_list,
        occurrence_path_list,
        p,
    )

GadgetVerification = collections.namedtuple(
    'GadgetVerification',
    [
        'diameter', 'even_cycle_dict', 'census', 'c5_without_z', 'passed',
        'note_list',
    ],
)
GadgetVerification.__doc__ = """
diameter (int, float)
even_cycle_dict (dict)
    k in 4, 6, ..., t to the number of induced Ck.
census (dict)
    k in 3..t to the number of induced Ck (triangles for 3).
c5_without_z (list of tuple)
    Induced C5 avoiding z.
passed (bool)
    Diameter at most 4, and only triangles and induced C5 up to length t.
"""

def verifyGadget(gadget, t, limit=CYCLE_LIMIT):
    """
    Check the claimed structure of a gadget: diameter at most 4, and no
    induced cycle of length at most t besides triangles and C5.
    Induced C5 avoiding z do not fail the check, they are reported in
    c5_without_z and logged.

    t (int)
        Even, at least 6.
    """
    if t < 6 or t % 2:
        raiseColouringError(
            ERROR_CONFIGURATION, f't must be even and at least 6, got {t}',
        )
    graph = gadget.graph
    note_list = []
    if gadget.subdivision < t:
        note_list.append(
            f'subdivision {gadget.subdivision} below t={t}, longer induced '
            'cycles may appear',
        )
    if gadget.subdivision % 2:
        note_list.append(
            'odd subdivision swaps the colours reaching clause vertices, '
            'not-all-equal is unaffected',
        )
    census = {3: sum(1 for _ in iterTriangles(graph))}
    c5_without_z = []
    for length in range(4, t + 1):
        cycle_list = enumerateInducedCycles(graph, length, limit=limit)
        census[length] = len(cycle_list)
        if length == 5:
            c5_without_z = [
                x.vertices for x in cycle_list
                if Z_VERTEX not in x.vertices
            ]
    for cycle in c5_without_z:
        logger.warning('induced C5 avoiding z: %r', cycle)
    diameter = graph.getDiameter()
    even_cycle_dict = {k: census[k] for k in range(4, t + 1, 2)}
    passed = diameter <= 4 and all(
        count == 0
        for length, count in census.items()
        if length not in (3, 5)
    )
    return GadgetVerification(
        diameter, even_cycle_dict, census, c5_without_z, passed, note_list,
    )

def checkEquivalence(
    formula, gadget, limit=ORACLE_MAX_VERTICES, nae_limit=NAE_MAX_VARIABLES,
):
    """
    True if formula is not-all-equal satisfiable exactly when the gadget is
    3-colourable, both decided by brute force.
    """
    satisfiable = naeSatisfiable(formula, limit=nae_limit) is not None
    colourable = oracleListColour(
        gadget.graph,
        ListAssignment.full(len(gadget.graph)),
        limit=limit,
    ) is not None
    logger.debug(
        'satisfiable=%s colourable=%s', satisfiable, colourable,
    )
    return satisfiable == colourable
