# stats.py
# Bivariate (length, statistic) tables of 132-avoiding alternating
# permutations.
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
from altpermcore import stats
from altpermcore.exceptions import UnsupportedError
from altpermcore.perm import CLASSES, UP_DOWN

import altpermcore.cli

CLOSED_FORM_NEEDS_RLMAX = _('--closed-form is only available with --assign rlmax')
SLICE_NEEDS_UP_DOWN_RLMAX = _('--slice is only available with --class UD --assign rlmax')


class Stats(altpermcore.cli.Plugin):

    name = 'stats'

    def __init__(self, base, cli):
        super(Stats, self).__init__(base, cli)
        if cli is None:
            return
        cli.register_command(StatsCommand)


class StatsCommand(altpermcore.cli.Command):
    aliases = ('stats',)
    summary = _('Print the coefficient table of a statistics generating function')

    @staticmethod
    def set_argparser(parser):
        parser.add_argument('--family', choices=stats.STAT_FAMILIES, default=stats.CLASSICAL,
                            help=_('which occurrences the variables mark'))
        parser.add_argument('--class', dest='label', choices=CLASSES, default='UD',
                            help=_('alternation class'))
        parser.add_argument('--assign', default='length',
                            help=_('length, mark:<k>, rlmax or inc'))
        parser.add_argument('--n-max', dest='n_max', type=int, default=10,
                            help=_('largest length printed'))
        parser.add_argument('--ymax', type=int, help=_('largest statistic value kept'))
        parser.add_argument('--printed', action='store_true',
                            help=_('use the continued fraction or closed form as printed'))
        parser.add_argument('--closed-form', dest='closed_form', action='store_true',
                            help=_('use the rlmax closed form instead of the continued fraction'))
        parser.add_argument('--slice', type=int, metavar='K',
                            help=_('only members with exactly K right-to-left maxima'))
        parser.add_argument('--json', action='store_true', help=_('print JSON'))

    def configure(self):
        self.assignment = stats.Assignment.parse(self.opts.assign)
        if self.opts.closed_form and self.assignment.name != stats.RLMAX:
            raise UnsupportedError(CLOSED_FORM_NEEDS_RLMAX)
        if self.opts.slice is not None and \
                (self.assignment.name != stats.RLMAX or self.opts.label != UP_DOWN):
            raise UnsupportedError(SLICE_NEEDS_UP_DOWN_RLMAX)
        stats.check_supported(self.opts.family, self.opts.label, self.assignment)

    def run(self):
        order = self.opts.n_max
        ymax = self.opts.ymax
        if self.opts.slice is not None:
            k = self.opts.slice
            series = stats.rlmax_slice(k, order, self.opts.printed)
            rows = [(n, k, c) for n, c in series.terms()]
        else:
            if self.opts.closed_form:
                series = stats.rlmax_gf(self.opts.label, order, ymax, self.opts.printed)
            else:
                series = stats.stat_gf(self.opts.family, self.opts.label, self.assignment,
                                       order, ymax, self.opts.printed)
            rows = stats.distribution_rows(series, self.opts.n_max)
        if self.opts.json:
            altpermcore.cli.print_json({
                'family': self.opts.family,
                'class': self.opts.label,
                'assignment': str(self.assignment),
                'rows': [[n, m, str(c)] for n, m, c in rows],
            })
        else:
            altpermcore.cli.print_csv(('n', 'stat_value', 'count'), rows)
