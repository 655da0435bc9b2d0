# cheb.py
# Chebyshev polynomials of the second kind, their x-reversed companions,
# the R_k kernel and a truncated continued-fraction evaluator.
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
from altpermcore import _, logger
from altpermcore.exceptions import DomainError, StabilityError
from altpermcore.series import BiSeries, LaurentSeries, Monomial, ONE

import math

from fractions import Fraction

NEGATIVE_INDEX = _('Chebyshev index must be at least -1, got %d')
UNKNOWN_SHAPE = _('Unknown continued fraction shape "%s"')
BAD_DEPTH = _('Continued fraction depth must be positive, got %d')
NOT_CONVERGENT = _('Level %d numerator %s carries no power of x')
UNSTABLE = _('Continued fraction not stable at depth %d up to x^%d; try a larger depth')

SHAPE_CLASSICAL = 'st1'
SHAPE_CLASSICAL_PRINTED = 'st1-printed'
SHAPE_VINCULAR = 'st2'
SHAPES = (SHAPE_CLASSICAL, SHAPE_CLASSICAL_PRINTED, SHAPE_VINCULAR)


def memoize(func):
    sentinel = object()
    cache = {}

    def wrapper(param):
        val = cache.get(param, sentinel)
        if val is not sentinel:
            return val
        val = func(param)
        cache[param] = val
        return val
    wrapper.__name__ = func.__name__
    wrapper.__doc__ = func.__doc__
    return wrapper


class Polynomial(object):
    """Dense polynomial with exact coefficients, lowest degree first."""

    __slots__ = ('coeffs',)

    def __init__(self, coeffs=()):
        coeffs = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        self.coeffs = tuple(coeffs)

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial((other,))
        size = max(len(self.coeffs), len(other.coeffs))
        out = [Fraction(0)] * size
        for i, c in enumerate(self.coeffs):
            out[i] += c
        for i, c in enumerate(other.coeffs):
            out[i] += c
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial([-c for c in self.coeffs])

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial((other,))
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return Polynomial([c * other for c in self.coeffs])
        if self.is_zero() or other.is_zero():
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def shift(self, k):
        """Multiply by t^k, k >= 0."""
        if self.is_zero():
            return self
        return Polynomial([0] * k + list(self.coeffs))

    def __call__(self, value):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def to_series(self, order, min_exp=0):
        """The polynomial as a LaurentSeries, optionally pre-multiplied by x^min_exp."""
        return LaurentSeries(self.coeffs, min_exp, order)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        if self.is_zero():
            return 'Polynomial(0)'
        terms = ['%s*t^%d' % (c, i) for i, c in enumerate(self.coeffs) if c]
        return 'Polynomial(%s)' % ' + '.join(terms)


TWO_T = Polynomial((0, 2))


@memoize
def chebyshev_u(r):
    """U_r(t): U_{-1} = 0, U_0 = 1, U_r = 2t U_{r-1} - U_{r-2}."""
    if r < -1:
        raise DomainError(NEGATIVE_INDEX % r)
    if r == -1:
        return Polynomial()
    if r == 0:
        return Polynomial((1,))
    return TWO_T * chebyshev_u(r - 1) - chebyshev_u(r - 2)


@memoize
def reversed_u(m):
    """p_m(x) = x^m U_m(1/(2x)): p_{-1} = 0, p_0 = p_1 = 1, p_m = p_{m-1} - x^2 p_{m-2}."""
    if m < -1:
        raise DomainError(NEGATIVE_INDEX % m)
    if m == -1:
        return Polynomial()
    if m in (0, 1):
        return Polynomial((1,))
    return reversed_u(m - 1) - reversed_u(m - 2).shift(2)


def u_series(m, order):
    """U_m(1/(2x)) as the finite Laurent object x^-m p_m(x)."""
    return reversed_u(m).to_series(order, -m)


def r_series(k, order):
    value = LaurentSeries.zero(order)
    for _step in range(k):
        value = 1 / (1 - value.shift(1))
    return value.truncate(order)


def default_depth(order):
    return int(math.ceil(order / 2.0)) + 2


def level_product(rule, d, first):
    """prod_{j >= first} rule(j)^binom(d, j - first); finitely many factors."""
    acc = ONE
    for i in range(d + 1):
        image = rule(first + i)
        if not image.is_one():
            acc = acc * image ** math.comb(d, i)
    return acc


class CFSpec(object):
    """A continued fraction V_d = a_d (c_d + V_{d+1}) / (1 - b_d (c_d + V_{d+1})).

    `rule` maps a variable index j >= 1 to the Monomial substituted for x_j.
    """

    def __init__(self, shape, rule, depth):
        if shape not in SHAPES:
            raise DomainError(UNKNOWN_SHAPE % shape)
        if depth < 1:
            raise DomainError(BAD_DEPTH % depth)
        self.shape = shape
        self.rule = rule
        self.depth = depth

    def deeper(self):
        return CFSpec(self.shape, self.rule, self.depth + 1)

    def level(self, d):
        if self.shape == SHAPE_VINCULAR:
            x1 = self.rule(1)
            s = level_product(self.rule, d, 2)
            return x1 * x1 * s, x1 * s, x1
        p = level_product(self.rule, d, 1)
        if self.shape == SHAPE_CLASSICAL:
            return p * p, p, level_product(self.rule, d + 1, 1)
        return p * p, p, p

    def levels(self, order, ymax=None):
        """[V_0, ..., V_depth] with the tail V_depth = 0."""
        values = [BiSeries.zero(order, ymax)]
        for d in reversed(range(self.depth)):
            a, b, c = self.level(d)
            if a.x <= 0:
                raise StabilityError(NOT_CONVERGENT % (d, a))
            t = values[-1] + c
            values.append((t * a) / (1 - t * b))
        values.reverse()
        return values


def cf_eval_levels(spec, order, ymax=None):
    levels = spec.levels(order, ymax)
    check = spec.deeper().levels(order, ymax)
    if levels[0] != check[0]:
        raise StabilityError(UNSTABLE % (spec.depth, order))
    logger.debug(_('Continued fraction %s stable at depth %d'), spec.shape, spec.depth)
    return levels


def cf_eval(spec, order, ymax=None):
    return cf_eval_levels(spec, order, ymax)[0]
