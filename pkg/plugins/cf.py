# cf.py
# Expand a continued fraction under a named assignment.
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
from altpermcore.cheb import SHAPES, CFSpec, cf_eval, default_depth
from altpermcore.stats import Assignment

import altpermcore.cli


class ContinuedFraction(altpermcore.cli.Plugin):

    name = 'cf'

    def __init__(self, base, cli):
        super(ContinuedFraction, self).__init__(base, cli)
        if cli is None:
            return
        cli.register_command(CFCommand)


class CFCommand(altpermcore.cli.Command):
    aliases = ('cf',)
    summary = _('Expand a truncated continued fraction')

    @staticmethod
    def set_argparser(parser):
        parser.add_argument('--shape', choices=SHAPES, default=SHAPES[0],
                            help=_('level rule of the continued fraction'))
        parser.add_argument('--assign', default='length',
                            help=_('length, mark:<k>, rlmax or inc'))
        parser.add_argument('--depth', type=int, help=_('number of levels, default order/2 + 2'))
        parser.add_argument('--ymax', type=int, help=_('largest y exponent kept'))

    def configure(self):
        order = self.base.conf.order
        depth = default_depth(order) if self.opts.depth is None else self.opts.depth
        self.spec = CFSpec(self.opts.shape, Assignment.parse(self.opts.assign).rule, depth)

    def run(self):
        value = cf_eval(self.spec, self.base.conf.order, self.opts.ymax)
        altpermcore.cli.print_csv(('n', 'y', 'coefficient'), value.table())
