# Copyright (C) 2026  The altperm-tools authors
#
# This copyrighted material is made available to anyone wishing to use,
# modify, copy, or redistribute it subject to the terms and conditions of
# the GNU General Public License v.2, or (at your option) any later version.
# This program is distributed in the hope that it will be useful, but WITHOUT
# ANY WARRANTY expressed or implied, including the implied warranties of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the GNU General
# Public License for more details.  You should have received a copy of the
# GNU General Public License along with this program; if not, write to the
# Free Software Foundation, Inc., 51 Franklin Street, Fifth Floor, Boston, MA
# 02110-1301, USA.
#

from __future__ import absolute_import
from __future__ import unicode_literals

import cf
import tests.support

from altpermcore.exceptions import DomainError, StabilityError, UnsupportedError
from tests.support import StringIO, mock


class CFCommandTest(tests.support.TestCase):

    def setUp(self):
        self.cli = tests.support.CliStub(tests.support.BaseStub(order=8))
        self.cmd = cf.CFCommand(self.cli)

    def run_command(self, args):
        with mock.patch('sys.stdout', new_callable=StringIO) as stdout:
            tests.support.command_run(self.cmd, args)
            return stdout.getvalue()

    def test_length(self):
        out = self.run_command(['--shape', 'st2'])
        self.assertEqual(out.split(), ['n,y,coefficient', '3,0,1', '5,0,2', '7,0,5'])

    def test_marking(self):
        out = self.run_command(['--assign', 'mark:2', '--ymax', '4'])
        self.assertEqual(out.split()[:4], ['n,y,coefficient', '3,1,1', '5,2,1', '5,4,1'])

    def test_shallow(self):
        with self.assertRaises(StabilityError):
            self.run_command(['--depth', '1'])

    def test_bad_options(self):
        with self.assertRaises(DomainError):
            tests.support.command_configure(self.cmd, ['--depth', '0'])
        with self.assertRaises(UnsupportedError):
            tests.support.command_configure(self.cmd, ['--assign', 'mark:1'])
