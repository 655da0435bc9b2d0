# seq.py
# Print the counting sequence of a catalog key.
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
from altpermcore import formulas

import altpermcore.cli


class Seq(altpermcore.cli.Plugin):

    name = 'seq'

    def __init__(self, base, cli):
        super(Seq, self).__init__(base, cli)
        if cli is None:
            return
        cli.register_command(SeqCommand)


class SeqCommand(altpermcore.cli.Command):
    aliases = ('seq',)
    summary = _('Print the coefficients of a catalog generating function')

    @staticmethod
    def set_argparser(parser):
        parser.add_argument('--key', required=True,
                            help=_('family key such as F2:UD:k=4 or F6:A:tau=231:r=2'))
        parser.add_argument('--n-max', dest='n_max', type=int, default=10,
                            help=_('last coefficient printed'))
        output = parser.add_mutually_exclusive_group()
        output.add_argument('--json', dest='output', action='store_const', const='json',
                            help=_('print JSON'))
        output.add_argument('--csv', dest='output', action='store_const', const='csv',
                            help=_('print CSV (default)'))

    def configure(self):
        self.key = formulas.check_domain(self.opts.key)

    def run(self):
        table = formulas.coefficients(self.key, self.opts.n_max, self.base.conf.order)
        if self.opts.output == 'json':
            altpermcore.cli.print_json(table.to_json())
        else:
            altpermcore.cli.print_csv(('n', 'count'), table.rows())
