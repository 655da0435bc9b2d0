# stats.py
# Multistatistic generating functions of 132-avoiding alternating
# permutations under named specializations of the infinite variable set.
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

"""
Three weightings are supported.  The classical one gives a permutation the
weight prod_j x_j^(number of 1-2-...-j occurrences); the two vincular ones
use 12-3-...-j and 21-3-...-j for j >= 2 and keep x_1 for the length.

An assignment specializes the variables to monomials in x and y:

    length    x_1 = x, x_j = 1
    mark:k    x_1 = x, x_k = y
    rlmax     x_1 = xy, x_j = 1/y (j even), x_j = y (j odd)
    inc       x_1 = xy, x_j = y
"""

from __future__ import absolute_import
from __future__ import unicode_literals
from altpermcore import _, logger
from altpermcore.cheb import (CFSpec, SHAPE_CLASSICAL, SHAPE_CLASSICAL_PRINTED,
                              SHAPE_VINCULAR, default_depth)
from altpermcore.exceptions import StabilityError, UnsupportedError
from altpermcore.formulas import binomial
from altpermcore.pattern import chain, increasing, occurrences, parse_pattern
from altpermcore.perm import ALTERNATING, CLASSES, DOWN_DOWN, DOWN_UP, UP_DOWN, UP_UP
from altpermcore.series import DEFAULT_ORDER, BiSeries, LaurentSeries, Monomial, ONE, series_pow

import collections

from fractions import Fraction

CLASSICAL = 'classical'
VINCULAR12 = 'v12'
VINCULAR21 = 'v21'
STAT_FAMILIES = (CLASSICAL, VINCULAR12, VINCULAR21)

LENGTH = 'length'
MARK = 'mark'
RLMAX = 'rlmax'
INC = 'inc'
OCC = 'occ'

UNKNOWN_ASSIGNMENT = _('Unknown assignment "%s", expected length, mark:<k>, rlmax or inc')
UNKNOWN_STATISTIC = _('Unknown statistic "%s", expected rlmax, inc or occ:<pattern>')
UNKNOWN_FAMILY = _('Unknown statistic family "%s", expected one of: %s')
UNSUPPORTED = _('No generating function for family %s, class %s under assignment %s')
UNSTABLE = _('Statistics for %s did not settle at depth %d up to x^%d')

X = Monomial(1, 1, 0)
Y = Monomial(1, 0, 1)
XY = Monomial(1, 1, 1)
Y_INVERSE = Monomial(1, 0, -1)


class Statistic(collections.namedtuple('Statistic', 'kind pattern')):
    """rlmax, inc, or occurrences of a generalized pattern."""

    __slots__ = ()

    @classmethod
    def parse(cls, text):
        text = text.strip()
        if text in (RLMAX, INC):
            return cls(text, None)
        kind, sep, pattern = text.partition(':')
        if kind == OCC and sep:
            return cls(OCC, parse_pattern(pattern))
        raise UnsupportedError(UNKNOWN_STATISTIC % text)

    def __str__(self):
        if self.kind == OCC:
            return 'occ:%s' % self.pattern
        return self.kind

    def __reduce__(self):
        return (Statistic.parse, (str(self),))


def rlmax(p):
    count = 0
    best = 0
    for v in reversed(p):
        if v > best:
            best = v
            count += 1
    return count


def inc(p):
    """Number of non-empty increasing subsequences."""
    ending = []
    for i, v in enumerate(p):
        ending.append(1 + sum(ending[j] for j in range(i) if p[j] < v))
    return sum(ending)


def perm_stat(p, stat):
    if isinstance(stat, str):
        stat = Statistic.parse(stat)
    if stat.kind == RLMAX:
        return rlmax(p)
    if stat.kind == INC:
        return inc(p)
    return occurrences(p, stat.pattern)


class Assignment(object):

    def __init__(self, name, k=None):
        self.name = name
        self.k = k

    @classmethod
    def parse(cls, text):
        text = text.strip()
        if text in (LENGTH, RLMAX, INC):
            return cls(text)
        name, sep, k = text.partition(':')
        if name == MARK and sep:
            try:
                k = int(k)
            except ValueError:
                raise UnsupportedError(UNKNOWN_ASSIGNMENT % text)
            if k >= 2:
                return cls(MARK, k)
        raise UnsupportedError(UNKNOWN_ASSIGNMENT % text)

    def rule(self, j):
        if j == 1:
            return XY if self.name in (RLMAX, INC) else X
        if self.name == MARK:
            return Y if j == self.k else ONE
        if self.name == RLMAX:
            return Y_INVERSE if j % 2 == 0 else Y
        if self.name == INC:
            return Y
        return ONE

    def y_window(self, order):
        """Largest y-exponent a member of length <= order can carry."""
        if self.name == MARK:
            # one spare for the x_2 division of the 21 family
            return binomial(order, self.k) + 1
        if self.name == INC:
            return 2 ** order - 1
        return order

    def statistic(self, family):
        """The per-permutation statistic the y-exponent records, or None for length."""
        if self.name == LENGTH:
            return None
        if self.name == MARK:
            if family == CLASSICAL:
                return Statistic(OCC, increasing(self.k))
            head = '12' if family == VINCULAR12 else '21'
            return Statistic(OCC, chain(head, self.k) if self.k > 2 else parse_pattern(head))
        return Statistic(self.name, None)

    def __str__(self):
        if self.name == MARK:
            return 'mark:%d' % self.k
        return self.name

    def __eq__(self, other):
        if not isinstance(other, Assignment):
            return NotImplemented
        return (self.name, self.k) == (other.name, other.k)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.name, self.k))


SUPPORTED = {
    CLASSICAL: (CLASSES, (LENGTH, MARK, RLMAX, INC)),
    VINCULAR12: ((UP_DOWN, UP_UP, ALTERNATING), (LENGTH, MARK)),
    VINCULAR21: ((UP_DOWN, UP_UP, ALTERNATING), (LENGTH, MARK)),
}


def check_supported(family, label, assignment):
    if family not in SUPPORTED:
        raise UnsupportedError(UNKNOWN_FAMILY % (family, ', '.join(STAT_FAMILIES)))
    classes, names = SUPPORTED[family]
    if label not in classes or assignment.name not in names:
        raise UnsupportedError(UNSUPPORTED % (family, label, assignment))


def _classical_cells(spec, order, ymax):
    levels = spec.levels(order, ymax)
    b0, c0 = spec.level(0)[1:]
    x1 = spec.rule(1)
    w = (levels[1] + c0) * b0
    uu = w / (1 - w)
    dd = [BiSeries.zero(order, ymax)]
    for d in reversed(range(spec.depth)):
        a, b, c = spec.level(d)
        factor = a.to_bi(order, ymax) / (1 - (levels[d + 1] + c) * b)
        dd.append(factor * (1 + dd[-1]))
    dd.reverse()
    return {
        UP_DOWN: levels[0],
        UP_UP: uu,
        DOWN_DOWN: dd[0],
        DOWN_UP: uu * x1 + dd[1] * (1 + uu) * x1,
        ALTERNATING: levels[0] + uu + x1 + 1,
    }


def _vincular_cells(spec, order, ymax):
    levels = spec.levels(order, ymax)
    b0, c0 = spec.level(0)[1:]
    x1 = spec.rule(1)
    w = (levels[1] + c0) * b0
    uu = w / (1 - w)
    return {
        UP_DOWN: levels[0],
        UP_UP: uu,
        ALTERNATING: uu * x1 + uu + x1 + 1,
    }


def _cells(family, assignment, order, ymax, printed, depth):
    if family == CLASSICAL:
        shape = SHAPE_CLASSICAL_PRINTED if printed else SHAPE_CLASSICAL
        spec = CFSpec(shape, assignment.rule, depth)
        return _classical_cells(spec, order, ymax)
    spec = CFSpec(SHAPE_VINCULAR, assignment.rule, depth)
    cells = _vincular_cells(spec, order, ymax)
    if family == VINCULAR21:
        x2 = assignment.rule(2)
        uu = cells[UP_UP] / x2
        cells = {
            UP_DOWN: cells[UP_DOWN],
            UP_UP: uu,
            ALTERNATING: cells[UP_DOWN] + uu + assignment.rule(1) + 1,
        }
    return cells


def stat_cells(family, assignment, order=DEFAULT_ORDER, ymax=None, printed=False, depth=None):
    """Every class series of one (family, assignment) pair, checked one level deeper.

    Without `ymax` the y-window is wide enough to hold every term.
    """
    depth = default_depth(order) if depth is None else depth
    ymax = assignment.y_window(order) if ymax is None else ymax
    cells = _cells(family, assignment, order, ymax, printed, depth)
    check = _cells(family, assignment, order, ymax, printed, depth + 1)
    for label in cells:
        if cells[label] != check[label]:
            raise StabilityError(UNSTABLE % (family, depth, order))
    logger.debug(_('Statistics %s under %s settled at depth %d'), family, assignment, depth)
    return cells


def stat_gf(family, label, assignment, order=DEFAULT_ORDER, ymax=None, printed=False, depth=None):
    if isinstance(assignment, str):
        assignment = Assignment.parse(assignment)
    check_supported(family, label, assignment)
    return stat_cells(family, assignment, order, ymax, printed, depth)[label]


def catalan_squared(order):
    """C(x^2) as a LaurentSeries."""
    s = series_pow(LaurentSeries((1, 0, -4), 0, order + 2), Fraction(1, 2))
    return ((1 - s).shift(-2) / 2).truncate(order)


def c_hat(order):
    """x C(x^2) - x, the up-down 132-avoiders by length."""
    return (catalan_squared(order) - 1).shift(1).truncate(order)


def _lift(series, order, ymax):
    return BiSeries.from_series(series.truncate(order), ymax, order)


def _rlmax_corrected(label, order, ymax):
    c = _lift(catalan_squared(order), order, ymax)
    den = 1 - c * Monomial(1, 2, 1)
    if label == UP_DOWN:
        return c * Monomial(1, 3, 2) / den
    if label == UP_UP:
        return c * Monomial(1, 2, 1) / den
    if label == DOWN_DOWN:
        return c * Monomial(1, 2, 2) / den
    return (c - 1 + c * Monomial(1, 2, 1)) * XY / den


def _rlmax_printed(label, order, ymax):
    hat = _lift(c_hat(order), order, ymax)
    root = _lift(series_pow(LaurentSeries((1, 0, -4), 0, order), Fraction(1, 2)), order, ymax)
    x2y2 = Monomial(1, 2, 2)
    if label == UP_DOWN:
        return (hat + XY) * x2y2 / (1 - hat * XY - x2y2)
    if label == UP_UP:
        w = hat * XY + x2y2
        return w / (1 - w)
    if label == DOWN_DOWN:
        return 2 / (root * (1 - hat * XY - x2y2)) * x2y2
    acc = BiSeries.zero(order, ymax)
    powers = [BiSeries.monomial(1, 0, 0, order, ymax)]
    for d in range(2, order + 1):
        while len(powers) < d:
            powers.append(powers[-1] * hat)
        inner = BiSeries.zero(order, ymax)
        for j in range((d - 1) // 2 + 1):
            inner = inner + powers[d - 1 - 2 * j] * binomial(d - 1 - j, j)
        acc = acc + inner * Monomial(1, d, d)
    return (1 - root) / (1 + root) * XY + 2 / root * acc


def rlmax_gf(label, order=DEFAULT_ORDER, ymax=None, printed=False):
    """Length and right-to-left maxima of 132-avoiders in one class.

    The default forms are derived from the block decomposition; `printed`
    selects the closed forms as stated.
    """
    if label not in (UP_DOWN, UP_UP, DOWN_DOWN, DOWN_UP):
        raise UnsupportedError(UNSUPPORTED % (CLASSICAL, label, RLMAX))
    if printed:
        return _rlmax_printed(label, order, ymax)
    return _rlmax_corrected(label, order, ymax)


def rlmax_slice(k, order=DEFAULT_ORDER, printed=False):
    """Up-down 132-avoiders with exactly k right-to-left maxima, by length."""
    if printed:
        hat = c_hat(order)
        acc = LaurentSeries.zero(order)
        power = LaurentSeries.one(order)
        for j in range(k - 1):
            acc = acc + power * binomial(Fraction(k - 2 + j, 2), Fraction(k - 2 - j, 2))
            power = power * hat
        return acc.shift(k).truncate(order)
    if k < 2:
        return LaurentSeries.zero(order)
    c = catalan_squared(order)
    return series_pow(c, k - 1).shift(2 * k - 1).truncate(order)


def distribution_rows(series, n_max):
    """(n, stat_value, count) rows of a bivariate series up to x^n_max."""
    return [(n, m, c) for n, m, c in series.truncate(min(n_max, series.order)).table()]
