# oracle.py
# Raw brute-force counts and statistic distributions.
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
from __future__ import unicode_literals
from altpermcore import _
from altpermcore.oracle import CountQuery
from altpermcore.pattern import ConstraintSpec
from altpermcore.perm import CLASSES

import altpermcore.cli


class OracleCounts(altpermcore.cli.Plugin):

    name = 'oracle'

    def __init__(self, base, cli):
        super(OracleCounts, self).__init__(base, cli)
        if cli is None:
            return
        cli.register_command(OracleCommand)


class OracleCommand(altpermcore.cli.Command):
    aliases = ('oracle',)
    summary = _('Count constrained alternating permutations by enumeration')

    @staticmethod
    def set_argparser(parser):
        parser.add_argument('--n', type=int, required=True, help=_('permutation length'))
        parser.add_argument('--class', dest='label', choices=CLASSES, default='A',
                            help=_('alternation class'))
        parser.add_argument('--avoid', action='append', default=[], metavar='PATTERN',
                            help=_('pattern to avoid, may be repeated'))
        parser.add_argument('--exactly', action='append', default=[], metavar='PATTERN:R',
                            help=_('pattern contained exactly R times, may be repeated'))
        parser.add_argument('--stat', help=_('rlmax, inc or occ:<pattern>'))
        parser.add_argument('--json', action='store_true', help=_('print JSON'))

    def configure(self):
        constraints = [ConstraintSpec.avoid(p) for p in self.opts.avoid]
        constraints.extend(ConstraintSpec.parse('exactly:' + e) for e in self.opts.exactly)
        self.query = CountQuery(self.opts.n, self.opts.label, constraints, self.opts.stat)

    def run(self):
        if self.query.statistic is None:
            count = self.base.oracle.count_exact(self.query)
            if self.opts.json:
                altpermcore.cli.print_json({'query': self.query.canonical(), 'count': count})
            else:
                altpermcore.cli.print_csv(('n', 'count'), [(self.query.n, count)])
            return
        table = self.base.oracle.distribution(self.query)
        if self.opts.json:
            altpermcore.cli.print_json(table.to_json())
        else:
            altpermcore.cli.print_csv(('n', 'stat_value', 'count'), table.rows())
