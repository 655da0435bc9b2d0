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
import suite
import tests.support

from altpermcore.exceptions import ConfigError, Error
from tests.support import StringIO, mock

MATRIX = """
[main]
n_max = 6

[F1]
classes = UD UU

[remarks]
keys = F7:DU:remark
n_max = 3
"""


class SuiteCommandTest(tests.support.TempDirTestCase):

    def setUp(self):
        super(SuiteCommandTest, self).setUp()
        self.matrix = self.path('suite.conf')
        with open(self.matrix, 'w') as f:
            f.write(MATRIX)
        self.suspects = self.path('suspects.list')
        with open(self.suspects, 'w') as f:
            f.write('# known\nF7:DU:*\n')
        self.ledger = self.path('ledger.jsonl')

    def command(self, **values):
        return suite.SuiteCommand(tests.support.CliStub(tests.support.BaseStub(**values)))

    def test_run(self):
        cmd = self.command(suspects=self.suspects)
        with mock.patch('sys.stdout', new_callable=StringIO) as stdout:
            tests.support.command_run(cmd, ['--config', self.matrix, '--ledger', self.ledger])
            lines = stdout.getvalue().splitlines()
        self.assertEqual(lines[0].split(), ['match', '2'])
        self.assertEqual(lines[3].split(), ['known-suspect', '1'])
        with open(self.ledger) as f:
            keys = [json.loads(line)['key'] for line in f]
        self.assertEqual(keys, ['F1:UD', 'F1:UU', 'F7:DU:remark'])

    def test_suite_from_configuration(self):
        cmd = self.command(suspects=self.suspects, suite=self.matrix)
        with mock.patch('sys.stdout', new_callable=StringIO):
            tests.support.command_run(cmd, ['--ledger', self.ledger])
        with open(self.ledger) as f:
            self.assertEqual(len(f.readlines()), 3)

    def test_unexpected_mismatch_fails(self):
        cmd = self.command()
        with mock.patch('sys.stdout', new_callable=StringIO) as stdout:
            with self.assertRaises(Error) as context:
                tests.support.command_run(cmd, ['--config', self.matrix, '--ledger', self.ledger])
            self.assertIn('F7:DU:remark mismatch', stdout.getvalue())
        self.assertEqual(context.exception.value, 'Suite ended with 1 unexpected mismatch.')

    def test_missing_matrix(self):
        with self.assertRaises(ConfigError):
            tests.support.command_configure(self.command(), ['--config', self.path('absent.conf')])
