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

from setuptools import setup
from setuptools import Command
import os
import sys

if os.getenv('I_KNOW_HOW_TO_RELEASE_LIST3COL') != '1' and any(
    x in sys.argv for x in ('sdist', 'upload')
):
    print('Use setup.sh to build')
    sys.exit(1)

class upload(Command):
    """
    Declaw "setup.py upload".
    """
    user_options = []

    def initialize_options(self):
        pass

    def finalize_options(self):
        pass

    def run(self):
        print('Releases are built by setup.sh and checked with twine.')
        print('Hint:')
        print('  twine upload dist/<release file>')
        sys.exit(1)

setup(
    cmdclass={'upload': upload},
    setup_requires=(
        ['wheel']
        if 'bdist_wheel' in sys.argv else
        []
    ),
)
