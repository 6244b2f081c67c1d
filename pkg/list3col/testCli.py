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

import contextlib
import io
import os
import shutil
import tempfile
import unittest
from list3col import parseInstance, isClassMember, writeInstance
from .cli import main, EXIT_YES, EXIT_NO, EXIT_ERROR
from ._testsupport import getComplete, getPetersen

TWO_CLAUSES = '1 2 3 0\n3 -3 4 0\n'

class CliTests(unittest.TestCase):
    def setUp(self):
        self.directory = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.directory)

    def _write(self, name, text):
        path = os.path.join(self.directory, name)
        with open(path, 'w', encoding='ascii') as output:
            output.write(text)
        return path

    def _run(self, *argv):
        stdout = io.StringIO()
        stderr = io.StringIO()
        with contextlib.redirect_stdout(stdout), \
                contextlib.redirect_stderr(stderr):
            status = main(list(argv))
        return status, stdout.getvalue(), stderr.getvalue()

    def testSolve(self):
        path = self._write('triangle.txt', '3 3\n0 1\n1 2\n0 2\n0: 1\n')
        status, output, _ = self._run('solve', path)
        self.assertEqual(status, EXIT_YES)
        line_list = output.splitlines()
        self.assertEqual(line_list[:3], [
            'decision=yes', 'route=theorem-4', 'path=theorem-4',
        ])
        self.assertEqual(line_list[-3:], ['0 1', '1 2', '2 3'])
        path = os.path.join(self.directory, 'k4.txt')
        writeInstance(path, getComplete(4))
        status, output, _ = self._run('solve', '--jobs', '1', path)
        self.assertEqual(status, EXIT_NO)
        self.assertEqual(output.splitlines()[0], 'decision=no')

    def testSolveDimacs(self):
        path = self._write(
            'petersen.col',
            'p edge 10 15\n' + ''.join(
                f'e {u + 1} {v + 1}\n'
                for u, v in getPetersen().iterEdges()
            ),
        )
        status, output, _ = self._run(
            'solve', '--dimacs', '--policy', 'all', path,
        )
        self.assertEqual(status, EXIT_YES)
        self.assertIn('route=theorem-6', output.splitlines())
        status, output, _ = self._run('classify', '--dimacs', path)
        self.assertEqual(status, EXIT_YES)
        self.assertEqual(output.splitlines(), [
            'diameter=2, C3-free, C4-free, C7-free, C8-free, C9-free, '
            'K4=absent',
            'bipartite=no',
        ])

    def testPropagate(self):
        path = self._write('edge.txt', '2 1\n0 1\n0: 1\n1: 1\n')
        status, output, _ = self._run('propagate', '--trace', path)
        self.assertEqual(status, EXIT_NO)
        self.assertEqual(
            output,
            'outcome=no\n'
            'rules=single-colour,diamond,bull\n'
            'reductions=1\n'
            'single-colour site=0,1 1: {1} -> {}\n'
            'no-empty 1\n',
        )
        path = self._write('triangle.txt', '3 3\n0 1\n1 2\n0 2\n')
        status, output, _ = self._run('propagate', '--rules', 'none', path)
        self.assertEqual(status, EXIT_YES)
        self.assertEqual(
            output,
            'outcome=unknown\nrules=none\nreductions=0\n'
            'lists={1,2,3} {1,2,3} {1,2,3}\n',
        )

    def testOracle(self):
        path = os.path.join(self.directory, 'k4.txt')
        writeInstance(path, getComplete(4))
        self.assertEqual(
            self._run('oracle', path)[:2], (EXIT_NO, 'decision=no\n'),
        )
        path = self._write('edge.txt', '2 1\n0 1\n1: 2\n')
        self.assertEqual(
            self._run('oracle', path)[:2],
            (EXIT_YES, 'decision=yes\n0 1\n1 2\n'),
        )

    def testGadget(self):
        path = self._write('single.cnf', '1 2 3 0\n')
        role_path = os.path.join(self.directory, 'roles.txt')
        status, output, _ = self._run(
            'gadget', '-p', '2', '--roles', role_path, path,
        )
        self.assertEqual(status, EXIT_YES)
        graph, _ = parseInstance(output)
        self.assertEqual(len(graph), 16)
        self.assertEqual(graph.getEdgeCount(), 27)
        with open(role_path, encoding='ascii') as role_file:
            role_list = role_file.read().splitlines()
        self.assertEqual(len(role_list), 16)
        self.assertEqual(role_list[0], '0 z')
        self.assertEqual(role_list[10], '10 subdivision 0 1')

    def testCheckGadget(self):
        path = self._write('single.cnf', '1 2 3 0\n')
        status, output, _ = self._run('check-gadget', '-t', '6', path)
        self.assertEqual(status, EXIT_YES)
        line_list = output.splitlines()
        self.assertEqual(line_list[:3], [
            'vertices=28', 'edges=51', 'subdivision=6',
        ])
        self.assertIn('C4=0', line_list)
        self.assertIn('equivalent=yes', line_list)
        self.assertEqual(line_list[-1], 'passed=yes')
        path = self._write('two.cnf', TWO_CLAUSES)
        status, output, _ = self._run('check-gadget', '-p', '0', path)
        self.assertEqual(status, EXIT_NO)
        line_list = output.splitlines()
        self.assertIn('equivalent=yes', line_list)
        self.assertEqual(line_list[-1], 'passed=no')

    def testGen(self):
        status, output, _ = self._run(
            'gen', '--class', 'c4c7', '--n', '8', '--seed', '1',
        )
        self.assertEqual(status, EXIT_YES)
        graph, lists = parseInstance(output)
        self.assertEqual(len(lists), 8)
        self.assertTrue(isClassMember(graph, 'c4c7'))
        self.assertEqual(
            self._run('gen', '--class', 'c4c7', '--n', '8', '--seed', '1')[1],
            output,
        )

    def testErrors(self):
        missing = os.path.join(self.directory, 'missing.txt')
        status, _, error = self._run('solve', missing)
        self.assertEqual(status, EXIT_ERROR)
        self.assertTrue(error.startswith('list3col: error: '))
        path = self._write('bad.txt', '2 1\n0 5\n')
        status, _, error = self._run('solve', path)
        self.assertEqual(status, EXIT_ERROR)
        self.assertIn('ERROR_PARSE', error)
        path = self._write('triangle.txt', '3 3\n0 1\n1 2\n0 2\n')
        status, _, error = self._run('propagate', '--rules', 'c8', path)
        self.assertEqual(status, EXIT_ERROR)
        self.assertIn('unknown rule', error)
        self.assertEqual(self._run('colour', path)[0], EXIT_ERROR)
        status, _, error = self._run(
            'gen', '--class', 'c5free', '--n', '100', '--seed', '1',
        )
        self.assertEqual(status, EXIT_ERROR)
        self.assertIn('ERROR_CONFIGURATION', error)
        path = self._write('big.txt', '70 0\n')
        status, _, error = self._run('oracle', path)
        self.assertEqual(status, EXIT_ERROR)
        self.assertIn('ERROR_BUDGET', error)
        self.assertEqual(self._run('-v', 'classify', path)[0], EXIT_YES)

if __name__ == '__main__':
    unittest.main()
