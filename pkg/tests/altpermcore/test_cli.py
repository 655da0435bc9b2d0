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

import altpermcore.cli
import os
import seq
import tests.support

from altpermcore.config import Config
from tests.support import StringIO, mock

PLUGINS = os.path.join(os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__)))),
                       'plugins')
COMMANDS = ('cf', 'oracle', 'seq', 'stats', 'suite', 'verify')


class CliTest(tests.support.TempDirTestCase):

    def test_load_plugins(self):
        cli = altpermcore.cli.Cli(altpermcore.cli.Base(Config(cache_dir='')))
        cli.load_plugins(PLUGINS)
        self.assertTrue(set(COMMANDS) <= set(cli.cli_commands))

    def test_broken_plugin_is_skipped(self):
        with open(self.path('broken.py'), 'w') as f:
            f.write('import no_such_module\n')
        cli = altpermcore.cli.Cli(altpermcore.cli.Base(Config(cache_dir='')))
        with mock.patch('altpermcore.cli.logger') as logger:
            cli.load_plugins(self.tmpdir)
            self.assertTrue(logger.warning.called)

    def test_command_parser_has_global_options(self):
        parser = altpermcore.cli.command_parser(seq.SeqCommand)
        opts = parser.parse_args(['--key', 'F1:UD', '--order', '12', '--threads', '2'])
        self.assertEqual((opts.key, opts.order, opts.threads), ('F1:UD', 12, 2))
        self.assertEqual(parser.prog, 'altperm seq')


class MainTest(tests.support.TestCase):

    def run_main(self, args):
        with mock.patch('sys.stdout', new_callable=StringIO) as stdout, \
                mock.patch('sys.stderr', new_callable=StringIO) as stderr:
            code = altpermcore.cli.main(args, pluginpath=PLUGINS)
        return code, stdout.getvalue(), stderr.getvalue()

    def test_oracle(self):
        code, out, _err = self.run_main(['--cache-dir', '', 'oracle', '--n', '4', '--avoid', '1-3-2'])
        self.assertEqual(code, 0)
        self.assertEqual(out, 'n,count\n4,2\n')

    def test_global_options_after_command(self):
        code, out, _err = self.run_main(['seq', '--key', 'F1:UD', '--n-max', '5', '--order', '8',
                                         '--cache-dir', ''])
        self.assertEqual(code, 0)
        self.assertEqual(out.splitlines()[-1], '5,2')

    def test_error_exit(self):
        code, out, err = self.run_main(['--cache-dir', '', '--n-cap', '6', 'oracle', '--n', '9'])
        self.assertEqual(code, 1)
        self.assertEqual(err.strip().splitlines()[-1], 'Error: Length 9 exceeds the permutation length cap of 6')

    def test_no_command(self):
        code, _out, err = self.run_main(['--cache-dir', ''])
        self.assertEqual(code, 1)
        self.assertIn('Error: No command given', err)
