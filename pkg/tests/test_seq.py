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

import json
import seq
import tests.support

from altpermcore.exceptions import DomainError, FormulaAnomaly, KeyFormatError
from tests.support import StringIO, mock


class SeqCommandTest(tests.support.TestCase):

    def setUp(self):
        self.cli = tests.support.CliStub(tests.support.BaseStub())
        self.cmd = seq.SeqCommand(self.cli)

    def test_plugin_registers_command(self):
        seq.Seq(self.cli.base, self.cli)
        self.assertIs(self.cli.cli_commands['seq'], seq.SeqCommand)
        seq.Seq(self.cli.base, None)

    def test_csv(self):
        with mock.patch('sys.stdout', new_callable=StringIO) as stdout:
            tests.support.command_run(self.cmd, ['--key', 'F1:A', '--n-max', '6'])
            self.assertEqual(stdout.getvalue().split(),
                             ['n,count', '0,1', '1,1', '2,1', '3,1', '4,2', '5,2', '6,5'])

    def test_json(self):
        with mock.patch('sys.stdout', new_callable=StringIO) as stdout:
            tests.support.command_run(self.cmd, ['--key', 'F2:UD:k=3', '--n-max', '5', '--json'])
            data = json.loads(stdout.getvalue())
        self.assertEqual(data['key'], 'F2:UD:k=3')
        self.assertEqual(data['provenance'], 'display')
        self.assertEqual(data['values']['5'], '1')

    def test_remark(self):
        with mock.patch('sys.stdout', new_callable=StringIO) as stdout:
            tests.support.command_run(self.cmd, ['--key', 'F7:UD:remark', '--n-max', '5'])
            self.assertEqual(stdout.getvalue().split()[-1], '5,4')

    def test_bad_keys(self):
        with self.assertRaises(KeyFormatError):
            tests.support.command_configure(self.cmd, ['--key', 'F2:UD:k=three'])
        with self.assertRaises(DomainError):
            tests.support.command_configure(self.cmd, ['--key', 'F2:UD:k=1'])

    def test_negative_remark(self):
        with self.assertRaises(FormulaAnomaly) as context:
            tests.support.command_run(self.cmd, ['--key', 'F7:DU:remark', '--n-max', '3'])
        self.assertIn('x^1', context.exception.value)
