# suite.py
# Run the declared verification matrix and write the discrepancy ledger.
#
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
from __future__ import print_function
from __future__ import unicode_literals
from altpermcore import _, P_, logger
from altpermcore import harness
from altpermcore.config import read_config
from altpermcore.exceptions import Error

import altpermcore.cli


class Suite(altpermcore.cli.Plugin):

    name = 'suite'

    def __init__(self, base, cli):
        super(Suite, self).__init__(base, cli)
        if cli is None:
            return
        cli.register_command(SuiteCommand)


class SuiteCommand(altpermcore.cli.Command):
    aliases = ('suite',)
    summary = _('Verify every key of a suite file and write the ledger')

    @staticmethod
    def set_argparser(parser):
        parser.add_argument('--config', dest='suite',
                            help=_('suite matrix file (default from the main configuration)'))
        parser.add_argument('--ledger', default='ledger.jsonl',
                            help=_('JSON lines ledger written after the run'))

    def configure(self):
        path = self.opts.suite or self.base.conf.suite
        self.matrix = read_config(path, required=True)
        self.suspects = harness.read_suspects(self.base.conf.suspects)
        logger.debug(_('Suite %s with %d suspect patterns'), path, len(self.suspects))

    def run(self):
        summary = harness.run_suite(self.matrix, self.base.oracle, self.opts.ledger,
                                    self.suspects, self.base.conf.order)
        for line in summary.lines():
            print(line)
        if not summary.ok:
            count = len(summary.unexpected)
            raise Error(P_('Suite ended with %d unexpected mismatch.',
                           'Suite ended with %d unexpected mismatches.', count) % count)
