# verify.py
# Check one catalog key or statistics cell against exhaustive counts.
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
from altpermcore import _
from altpermcore import harness
from altpermcore.exceptions import Error
from altpermcore.perm import check_cap

import altpermcore.cli


class Verify(altpermcore.cli.Plugin):

    name = 'verify'

    def __init__(self, base, cli):
        super(Verify, self).__init__(base, cli)
        if cli is None:
            return
        cli.register_command(VerifyCommand)


class VerifyCommand(altpermcore.cli.Command):
    aliases = ('verify',)
    summary = _('Compare a formula with brute-force counts')

    @staticmethod
    def set_argparser(parser):
        parser.add_argument('--key', required=True,
                            help=_('family key, S:<family>:<class>:<assignment>, R:<class> or P:<class>'))
        parser.add_argument('--n-max', dest='n_max', type=int, default=9,
                            help=_('largest length compared'))
        parser.add_argument('--json', action='store_true', help=_('print the ledger row'))

    def configure(self):
        check_cap(self.opts.n_max, self.base.conf.n_cap)
        self.suspects = harness.read_suspects(self.base.conf.suspects)

    def run(self):
        report = harness.verify(self.opts.key, self.opts.n_max, self.base.oracle,
                                self.base.conf.order, self.suspects)
        if self.opts.json:
            altpermcore.cli.print_json(report.to_json())
        else:
            print(report)
        if report.flag == harness.UNEXPECTED:
            raise Error(_('Formula disagrees with counting.'))
