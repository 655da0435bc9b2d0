# series.py
# Truncated Laurent series and bivariate (x, y) series over exact rationals.
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
Every value carries its truncation order N: coefficients of x^e with e > N
are unknown and are never read.  Arithmetic propagates the order the way a
hand computation would, so a result reports exactly how far it can be
trusted.
"""

from __future__ import absolute_import
from __future__ import unicode_literals
from altpermcore import _
from altpermcore.exceptions import SeriesError

import collections
import numbers

from fractions import Fraction

DEFAULT_ORDER = 24

DIVISION_BY_ZERO = _('Division by a series that vanishes up to x^%d')
BEYOND_ORDER = _('Coefficient of x^%d requested beyond truncation order %d')
LOST_PRECISION = _('Series is known up to x^%d only, x^%d was requested')
BAD_FRACTIONAL_BASE = _('Power %s needs a series of the form 1 + O(x)')
NOT_A_UNIT = _('Bivariate series is not invertible: its x^0 part is not a single y-monomial')
NEGATIVE_X = _('Bivariate series cannot hold negative powers of x')


def _fraction(value):
    if isinstance(value, Fraction):
        return value
    return Fraction(value)


def _is_scalar(value):
    return isinstance(value, (numbers.Rational, Fraction))


class LaurentSeries(object):
    """x^min_exp * (c_0 + c_1 x + ...) + O(x^(order + 1))."""

    __slots__ = ('min_exp', 'coeffs', 'order')

    def __init__(self, coeffs=(), min_exp=0, order=DEFAULT_ORDER):
        coeffs = [_fraction(c) for c in coeffs]
        keep = order - min_exp + 1
        if keep < len(coeffs):
            coeffs = coeffs[:max(keep, 0)]
        lead = 0
        while lead < len(coeffs) and not coeffs[lead]:
            lead += 1
        coeffs = coeffs[lead:]
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        self.min_exp = min_exp + lead if coeffs else order + 1
        self.coeffs = tuple(coeffs)
        self.order = order

    @classmethod
    def zero(cls, order=DEFAULT_ORDER):
        return cls((), 0, order)

    @classmethod
    def one(cls, order=DEFAULT_ORDER):
        return cls((1,), 0, order)

    @classmethod
    def monomial(cls, exp, coeff=1, order=DEFAULT_ORDER):
        return cls((coeff,), exp, order)

    @classmethod
    def from_json(cls, data):
        return cls([Fraction(c) for c in data['coeffs']], int(data['min_exp']),
                   int(data['order']))

    def to_json(self):
        return {'min_exp': self.min_exp, 'order': self.order,
                'coeffs': [str(c) for c in self.coeffs]}

    def is_zero(self):
        return not self.coeffs

    def terms(self):
        """Yield (exponent, coefficient) for the non-zero known terms."""
        for i, c in enumerate(self.coeffs):
            if c:
                yield self.min_exp + i, c

    def coeff(self, e):
        if e > self.order:
            raise SeriesError(BEYOND_ORDER % (e, self.order))
        i = e - self.min_exp
        if i < 0 or i >= len(self.coeffs):
            return Fraction(0)
        return self.coeffs[i]

    def coefficients(self, lo, hi):
        return [self.coeff(e) for e in range(lo, hi + 1)]

    def truncate(self, order):
        if order > self.order:
            raise SeriesError(LOST_PRECISION % (self.order, order))
        return LaurentSeries(self.coeffs, self.min_exp, order)

    def shift(self, k):
        """Exact multiplication by x^k."""
        if self.is_zero():
            return LaurentSeries.zero(self.order + k)
        return LaurentSeries(self.coeffs, self.min_exp + k, self.order + k)

    def substitute(self, power):
        """x -> x^power for a positive integer power."""
        if power < 1:
            raise ValueError(power)
        order = (self.order + 1) * power - 1
        if self.is_zero():
            return LaurentSeries.zero(order)
        dense = [Fraction(0)] * ((len(self.coeffs) - 1) * power + 1)
        for i, c in enumerate(self.coeffs):
            dense[i * power] = c
        return LaurentSeries(dense, self.min_exp * power, order)

    def _dense(self, lo, hi):
        out = [Fraction(0)] * (hi - lo + 1)
        for i, c in enumerate(self.coeffs):
            e = self.min_exp + i
            if lo <= e <= hi:
                out[e - lo] = c
        return out

    def _coerce(self, other):
        if isinstance(other, LaurentSeries):
            return other
        if _is_scalar(other):
            return LaurentSeries((other,), 0, self.order)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        order = min(self.order, other.order)
        lo = min(self.min_exp, other.min_exp)
        if lo > order:
            return LaurentSeries.zero(order)
        dense = self._dense(lo, order)
        for i, c in enumerate(other._dense(lo, order)):
            dense[i] += c
        return LaurentSeries(dense, lo, order)

    __radd__ = __add__

    def __neg__(self):
        return LaurentSeries([-c for c in self.coeffs], self.min_exp, self.order)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if _is_scalar(other):
            factor = _fraction(other)
            return LaurentSeries([c * factor for c in self.coeffs], self.min_exp, self.order)
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        order = min(self.order + other.min_exp, other.order + self.min_exp)
        lo = self.min_exp + other.min_exp
        if self.is_zero() or other.is_zero() or lo > order:
            return LaurentSeries.zero(order)
        width = order - lo + 1
        out = [Fraction(0)] * width
        b = other.coeffs
        for i, ca in enumerate(self.coeffs):
            if i >= width:
                break
            if not ca:
                continue
            for j in range(min(len(b), width - i)):
                if b[j]:
                    out[i + j] += ca * b[j]
        return LaurentSeries(out, lo, order)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise SeriesError(DIVISION_BY_ZERO % self.order)
        m = self.min_exp
        rel = self.order - m
        a = self._dense(m, self.order)
        head = 1 / a[0]
        inv = [head]
        for n in range(1, rel + 1):
            acc = Fraction(0)
            for k in range(1, n + 1):
                if a[k]:
                    acc += a[k] * inv[n - k]
            inv.append(-acc * head)
        return LaurentSeries(inv, -m, rel - m)

    def __truediv__(self, other):
        if _is_scalar(other):
            if not other:
                raise SeriesError(DIVISION_BY_ZERO % self.order)
            return self * (1 / _fraction(other))
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        if not _is_scalar(other):
            return NotImplemented
        return self.inverse() * other

    __div__ = __truediv__
    __rdiv__ = __rtruediv__

    def __pow__(self, p):
        return series_pow(self, p)

    def __eq__(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return (self.order, self.min_exp, self.coeffs) == (other.order, other.min_exp, other.coeffs)

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self.order, self.min_exp, self.coeffs))

    def __str__(self):
        parts = []
        for e, c in self.terms():
            if e == 0:
                parts.append(str(c))
            elif c == 1:
                parts.append('x^%d' % e)
            else:
                parts.append('%s*x^%d' % (c, e))
        parts.append('O(x^%d)' % (self.order + 1))
        return ' + '.join(parts)

    def __repr__(self):
        return 'LaurentSeries(%s)' % self


def series_arith(kind, a, b):
    if kind == 'add':
        return a + b
    if kind == 'sub':
        return a - b
    if kind == 'mul':
        return a * b
    if kind == 'div':
        return a / b
    raise ValueError(kind)


def _power(base, exponent):
    result = LaurentSeries.one(base.order - base.min_exp)
    while exponent:
        if exponent & 1:
            result = result * base
        exponent >>= 1
        if exponent:
            base = base * base
    return result


def series_pow(a, p):
    """a^p for integer p, or for a half-integer (any rational) p when a = 1 + O(x).

    The fractional case uses the power recurrence
    f_n = 1/n * sum_{k=1..n} ((p + 1) k - n) a_k f_{n-k}.
    """
    p = _fraction(p)
    if p.denominator == 1:
        e = p.numerator
        if e == 0:
            rel = a.order if a.is_zero() else a.order - a.min_exp
            return LaurentSeries.one(rel)
        return _power(a if e > 0 else a.inverse(), abs(e))
    if a.is_zero() or a.min_exp != 0 or a.coeffs[0] != 1:
        raise SeriesError(BAD_FRACTIONAL_BASE % p)
    coeffs = a._dense(0, a.order)
    out = [Fraction(1)]
    for n in range(1, a.order + 1):
        acc = Fraction(0)
        for k in range(1, n + 1):
            if coeffs[k]:
                acc += ((p + 1) * k - n) * coeffs[k] * out[n - k]
        out.append(acc / n)
    return LaurentSeries(out, 0, a.order)


def series_coeff(a, e):
    return a.coeff(e)


class Monomial(collections.namedtuple('Monomial', 'coeff x y')):
    """coeff * x^x * y^y, the image of one variable under an assignment."""

    __slots__ = ()

    def __new__(cls, coeff=1, x=0, y=0):
        return super(Monomial, cls).__new__(cls, _fraction(coeff), x, y)

    def __mul__(self, other):
        return Monomial(self.coeff * other.coeff, self.x + other.x, self.y + other.y)

    def __pow__(self, e):
        return Monomial(self.coeff ** e, self.x * e, self.y * e)

    def is_one(self):
        return self == ONE

    def to_bi(self, order, ymax):
        return BiSeries.monomial(self.coeff, self.x, self.y, order, ymax)


ONE = Monomial()


class BiSeries(object):
    """Series in x (exponents 0..order) whose coefficients are Laurent polynomials in y.

    y-exponents outside [-ymax, ymax] are discarded.  Dropping the top of the
    window is exact as long as every operand has non-negative y-exponents,
    which holds for every assignment the stats module supports.
    """

    __slots__ = ('rows', 'order', 'ymax')

    def __init__(self, rows=(), order=DEFAULT_ORDER, ymax=None):
        self.order = order
        self.ymax = order if ymax is None else ymax
        clean = []
        for n in range(order + 1):
            row = rows[n] if n < len(rows) else {}
            clean.append(dict((m, _fraction(c)) for m, c in row.items()
                              if c and -self.ymax <= m <= self.ymax))
        self.rows = tuple(clean)

    @classmethod
    def zero(cls, order=DEFAULT_ORDER, ymax=None):
        return cls((), order, ymax)

    @classmethod
    def monomial(cls, coeff, dx, dy, order=DEFAULT_ORDER, ymax=None):
        if dx < 0:
            raise SeriesError(NEGATIVE_X)
        rows = [{} for _n in range(order + 1)]
        if dx <= order:
            rows[dx] = {dy: coeff}
        return cls(rows, order, ymax)

    @classmethod
    def from_series(cls, series, ymax=None, order=None):
        """Lift a LaurentSeries in x (y-free) into a BiSeries."""
        order = series.order if order is None else order
        series = series.truncate(order)
        rows = [{} for _n in range(order + 1)]
        for e, c in series.terms():
            if e < 0:
                raise SeriesError(NEGATIVE_X)
            rows[e] = {0: c}
        return cls(rows, order, ymax)

    def is_zero(self):
        return not any(self.rows)

    def coeff(self, n, m):
        if n > self.order:
            raise SeriesError(BEYOND_ORDER % (n, self.order))
        return self.rows[n].get(m, Fraction(0))

    def row(self, n):
        if n > self.order:
            raise SeriesError(BEYOND_ORDER % (n, self.order))
        return dict(self.rows[n])

    def table(self):
        """Sorted (n, m, coefficient) triples of the non-zero terms."""
        return [(n, m, row[m]) for n, row in enumerate(self.rows) for m in sorted(row)]

    def marginal(self):
        """Set y = 1."""
        return LaurentSeries([sum(row.values()) for row in self.rows], 0, self.order)

    def truncate(self, order):
        if order > self.order:
            raise SeriesError(LOST_PRECISION % (self.order, order))
        return BiSeries(self.rows[:order + 1], order, self.ymax)

    def mul_monomial(self, coeff, dx, dy):
        """Exact multiplication by coeff * x^dx * y^dy.

        A negative dy narrows the trusted y-window by the same amount.
        """
        coeff = _fraction(coeff)
        ymax = self.ymax + min(dy, 0)
        order = self.order + min(dx, 0)
        for n in range(min(-dx, len(self.rows))):
            if self.rows[n]:
                raise SeriesError(NEGATIVE_X)
        rows = [{} for _n in range(order + 1)]
        for n, row in enumerate(self.rows):
            if 0 <= n + dx <= order:
                rows[n + dx] = dict((m + dy, c * coeff) for m, c in row.items())
        return BiSeries(rows, order, ymax)

    def _coerce(self, other):
        if isinstance(other, BiSeries):
            return other
        if isinstance(other, Monomial):
            return other.to_bi(self.order, self.ymax)
        if _is_scalar(other):
            return BiSeries.monomial(other, 0, 0, self.order, self.ymax)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        order = min(self.order, other.order)
        rows = []
        for n in range(order + 1):
            row = dict(self.rows[n])
            for m, c in other.rows[n].items():
                row[m] = row.get(m, 0) + c
            rows.append(row)
        return BiSeries(rows, order, min(self.ymax, other.ymax))

    __radd__ = __add__

    def __neg__(self):
        return BiSeries([dict((m, -c) for m, c in row.items()) for row in self.rows],
                        self.order, self.ymax)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if _is_scalar(other):
            factor = _fraction(other)
            return BiSeries([dict((m, c * factor) for m, c in row.items()) for row in self.rows],
                            self.order, self.ymax)
        if isinstance(other, Monomial):
            return self.mul_monomial(other.coeff, other.x, other.y)
        if not isinstance(other, BiSeries):
            return NotImplemented
        order = min(self.order, other.order)
        ymax = min(self.ymax, other.ymax)
        rows = [{} for _n in range(order + 1)]
        for i in range(order + 1):
            ri = self.rows[i]
            if not ri:
                continue
            for j in range(order + 1 - i):
                rj = other.rows[j]
                if not rj:
                    continue
                acc = rows[i + j]
                for ma, ca in ri.items():
                    for mb, cb in rj.items():
                        m = ma + mb
                        if -ymax <= m <= ymax:
                            acc[m] = acc.get(m, 0) + ca * cb
        return BiSeries(rows, order, ymax)

    __rmul__ = __mul__

    def inverse(self):
        head = self.rows[0]
        if len(head) != 1:
            raise SeriesError(NOT_A_UNIT)
        (b, c0), = head.items()
        scale = 1 / c0
        inv = [{-b: scale}]
        for n in range(1, self.order + 1):
            acc = {}
            for k in range(1, n + 1):
                rk = self.rows[k]
                if not rk:
                    continue
                for ma, ca in rk.items():
                    for mb, cb in inv[n - k].items():
                        m = ma + mb
                        acc[m] = acc.get(m, 0) + ca * cb
            inv.append(dict((m - b, -c * scale) for m, c in acc.items()
                            if c and -self.ymax <= m - b <= self.ymax))
        return BiSeries(inv, self.order, self.ymax)

    def __truediv__(self, other):
        if _is_scalar(other):
            if not other:
                raise SeriesError(DIVISION_BY_ZERO % self.order)
            return self * (1 / _fraction(other))
        if isinstance(other, Monomial):
            return self.mul_monomial(1 / other.coeff, -other.x, -other.y)
        if not isinstance(other, BiSeries):
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    __div__ = __truediv__
    __rdiv__ = __rtruediv__

    def __eq__(self, other):
        if not isinstance(other, BiSeries):
            return NotImplemented
        return (self.order, self.ymax, self.rows) == (other.order, other.ymax, other.rows)

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    __hash__ = None

    def __repr__(self):
        return 'BiSeries(order=%d, ymax=%d, terms=%d)' % (self.order, self.ymax, len(self.table()))
