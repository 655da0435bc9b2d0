# formulas.py
# Catalog of closed-form generating functions for 132-restricted
# alternating permutations, keyed by family, class, k, r and variant.
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
Families
--------

F1   avoid 1-3-2
F2   avoid 1-3-2 and 1-2-...-k
F3   avoid 1-3-2 and 2-3-...-k-1 (no tau), or tau-3-...-k
F4   avoid 1-3-2, contain 1-2-...-k exactly once
F5   avoid 1-3-2, contain tau-3-...-k exactly once
F6   avoid 1-3-2, contain a dashless three-letter tau exactly r times
F7   contain 1-3-2 exactly once
F8   contain 1-3-2 exactly once, avoid a second pattern
F9   contain 1-3-2 exactly once and 1-2-...-k exactly once
F10  contain 1-3-2 exactly r times, r <= 3

Each display is transcribed as printed, with U_m(1/(2x)) taken as the
finite Laurent object x^-m p_m(x).  Displays are never corrected here; a
display that disagrees with counting shows up in the verification ledger.
"""

from __future__ import absolute_import
from __future__ import unicode_literals
from altpermcore import _, logger
from altpermcore.cheb import r_series, u_series
from altpermcore.exceptions import DomainError, FormulaAnomaly, KeyFormatError, SeriesError
from altpermcore.perm import ALTERNATING, CLASSES, DOWN_DOWN, DOWN_UP, UP_DOWN, UP_UP
from altpermcore.series import DEFAULT_ORDER, LaurentSeries, series_pow

import collections
import math

from fractions import Fraction

FAMILIES = ('F1', 'F2', 'F3', 'F4', 'F5', 'F6', 'F7', 'F8', 'F9', 'F10')
ALL = (UP_DOWN, UP_UP, DOWN_UP, DOWN_DOWN, ALTERNATING)
THREE = (UP_DOWN, UP_UP, ALTERNATING)
TWO_LETTER = ('12', '21', '1-2', '2-1')
DASHLESS = ('123', '213', '231', '312', '321')

BAD_KEY = _('Cannot parse family key "%s"')
UNKNOWN_FAMILY = _('Unknown family "%s" in key "%s"')
OUT_OF_DOMAIN = _('Key %s is outside the stated range: %s')
NO_SERIES = _('Key %s names a remark, which has no generating function')
NOT_A_COUNT = _('%s: coefficient of x^%d is %s, not a non-negative integer')
NEGATIVE_POWER = _('%s: a negative power of x survives (coefficient %s of x^%d)')
PRECISION = _('%s: could not reach order %d')


def catalan(n):
    return math.comb(2 * n, n) // (n + 1)


def fibonacci(n):
    """F_0 = 0, F_1 = 1, extended to negative n by F_n = F_{n+2} - F_{n+1}."""
    if n < 0:
        return fibonacci(-n) if n % 2 else -fibonacci(-n)
    a, b = 0, 1
    for _i in range(n):
        a, b = b, a + b
    return a


def lucas(n):
    """L_0 = 2, L_1 = 1."""
    return fibonacci(n - 1) + fibonacci(n + 1)


def binomial(a, b):
    """binom(a, b), taken as 0 when b is negative, non-integral, or exceeds a."""
    a = Fraction(a)
    b = Fraction(b)
    if b.denominator != 1 or b < 0:
        return 0
    if a.denominator == 1:
        if a < b:
            return 0
        return math.comb(int(a), int(b))
    acc = Fraction(1)
    for i in range(int(b)):
        acc = acc * (a - i) / (i + 1)
    return acc


NUMBERS = {
    'catalan': catalan,
    'fibonacci': fibonacci,
    'lucas': lucas,
    'binomial': binomial,
}


def number(kind, *args):
    return NUMBERS[kind](*args)


class FamilyKey(collections.namedtuple('FamilyKey', 'family label k r variant remark')):
    """Canonical form: family:class[:tau=..][:k=..][:r=..][:remark]."""

    __slots__ = ()

    def __new__(cls, family, label, k=None, r=None, variant=None, remark=False):
        return super(FamilyKey, cls).__new__(cls, family, label, k, r, variant, remark)

    @classmethod
    def parse(cls, text):
        parts = text.strip().split(':')
        if len(parts) < 2:
            raise KeyFormatError(BAD_KEY % text)
        family, label = parts[0], parts[1]
        if family not in FAMILIES:
            raise KeyFormatError(UNKNOWN_FAMILY % (family, text))
        if label not in CLASSES:
            raise KeyFormatError(BAD_KEY % text)
        fields = {}
        for part in parts[2:]:
            if part == 'remark':
                fields['remark'] = True
                continue
            name, sep, value = part.partition('=')
            if not sep or name not in ('k', 'r', 'tau') or name in fields:
                raise KeyFormatError(BAD_KEY % text)
            if name == 'tau':
                fields['variant'] = value
                continue
            try:
                fields[name] = int(value)
            except ValueError:
                raise KeyFormatError(BAD_KEY % text)
        return cls(family, label, **fields)

    def __str__(self):
        parts = [self.family, self.label]
        if self.variant is not None:
            parts.append('tau=%s' % self.variant)
        if self.k is not None:
            parts.append('k=%d' % self.k)
        if self.r is not None:
            parts.append('r=%d' % self.r)
        if self.remark:
            parts.append('remark')
        return ':'.join(parts)

    def base(self):
        """The generating-function key a remark is attached to."""
        return self._replace(remark=False)


def as_key(key):
    if isinstance(key, FamilyKey):
        return key
    return FamilyKey.parse(key)


class Domain(object):

    def __init__(self, classes, k_min=None, r_min=None, r_max=None, class_k_min=None):
        self.classes = classes
        self.k_min = k_min
        self.r_min = r_min
        self.r_max = r_max
        self.class_k_min = class_k_min or {}

    def describe(self):
        parts = ['class in %s' % ','.join(self.classes)]
        if self.k_min is not None:
            parts.append('k >= %d' % self.k_min)
            for label, k_min in sorted(self.class_k_min.items()):
                parts.append('k >= %d for %s' % (k_min, label))
        else:
            parts.append('no k')
        if self.r_min is not None:
            parts.append('r >= %d' % self.r_min)
            if self.r_max is not None:
                parts.append('r <= %d' % self.r_max)
        else:
            parts.append('no r')
        return ', '.join(parts)

    def contains(self, key):
        if key.label not in self.classes:
            return False
        if (self.k_min is None) != (key.k is None):
            return False
        if key.k is not None and key.k < self.class_k_min.get(key.label, self.k_min):
            return False
        if (self.r_min is None) != (key.r is None):
            return False
        if key.r is not None:
            if key.r < self.r_min or (self.r_max is not None and key.r > self.r_max):
                return False
        return True


DOMAINS = {
    ('F1', None): Domain(ALL),
    ('F2', None): Domain(ALL, k_min=2),
    ('F3', None): Domain(ALL, k_min=3),
    ('F4', None): Domain(ALL, k_min=2, class_k_min={ALTERNATING: 3}),
    ('F6', '231'): Domain(THREE, r_min=1),
    ('F7', None): Domain(ALL),
    ('F8', None): Domain(ALL, k_min=3),
    ('F8', '12'): Domain(ALL, k_min=3),
    ('F8', '21'): Domain((ALTERNATING,), k_min=3),
    ('F8', '2-1'): Domain((UP_DOWN, UP_UP), k_min=3),
    ('F9', None): Domain((UP_DOWN, UP_UP), k_min=2, class_k_min={UP_UP: 3}),
    ('F10', None): Domain(THREE, r_min=0, r_max=3),
}
for _tau in TWO_LETTER:
    DOMAINS[('F3', _tau)] = Domain(ALL, k_min=2)
    DOMAINS[('F5', _tau)] = Domain(ALL, k_min=3)
for _tau in (t for t in DASHLESS if t != '231'):
    DOMAINS[('F6', _tau)] = Domain(THREE, r_min=0)


Remark = collections.namedtuple('Remark', 'n_min value')


def _f2_k5_remark(n):
    return fibonacci((n + 2) // 2)


def _f3_k6_remark(n):
    m = n // 2
    if n % 2:
        return fibonacci(2 * m - 1)
    return Fraction(7, 10) * m * lucas(2 * m) - Fraction(1, 10) * (15 * m - 4) * fibonacci(2 * m)


def _f4_k5_remark(n):
    m = n // 2
    return sum(fibonacci(2 * j) * fibonacci(2 * m - 4 - 2 * j) for j in range(1, m - 2))


def _f7_ud_remark(n):
    return binomial(n - 1, Fraction(n - 3, 2))


def _f7_uu_remark(n):
    return 2 * binomial(n - 1, Fraction(n - 4, 2))


def _f7_du_remark(n):
    return Fraction(3, 2) * binomial(n + 3, Fraction(n + 3, 2)) - 5 * binomial(n + 1, Fraction(n + 1, 2))


def _f7_a_remark(n):
    return binomial(n - 1, Fraction(n - 3, 2)) + binomial(n - 1, Fraction(n - 4, 2))


REMARKS = {
    FamilyKey('F1', ALTERNATING): Remark(0, lambda n: catalan(n // 2)),
    FamilyKey('F2', ALTERNATING, k=5): Remark(0, _f2_k5_remark),
    FamilyKey('F3', ALTERNATING, k=6): Remark(2, _f3_k6_remark),
    FamilyKey('F4', ALTERNATING, k=5): Remark(6, _f4_k5_remark),
    FamilyKey('F7', UP_DOWN): Remark(0, _f7_ud_remark),
    FamilyKey('F7', UP_UP): Remark(0, _f7_uu_remark),
    FamilyKey('F7', DOWN_DOWN): Remark(0, _f7_uu_remark),
    FamilyKey('F7', DOWN_UP): Remark(0, _f7_du_remark),
    FamilyKey('F7', ALTERNATING): Remark(0, _f7_a_remark),
}


def check_domain(key):
    key = as_key(key)
    if key.remark:
        if key.base() not in REMARKS:
            raise DomainError(OUT_OF_DOMAIN % (key, _('no remark is stated for this key')))
        return key
    domain = DOMAINS.get((key.family, key.variant))
    if domain is None:
        variants = sorted(str(v) for f, v in DOMAINS if f == key.family)
        raise DomainError(OUT_OF_DOMAIN % (key, 'tau in %s' % ', '.join(variants)))
    if not domain.contains(key):
        raise DomainError(OUT_OF_DOMAIN % (key, domain.describe()))
    return key


class _Kit(object):
    """Shorthands for building displays at one working order."""

    def __init__(self, order):
        self.order = order
        self._roots = {}

    def U(self, m):
        return u_series(m, self.order)

    def x(self, e=1):
        return LaurentSeries.monomial(e, 1, self.order)

    def poly(self, coeffs):
        return LaurentSeries(coeffs, 0, self.order)

    def zero(self):
        return LaurentSeries.zero(self.order)

    def root(self, p):
        """(1 - 4x^2)^p"""
        p = Fraction(p)
        if p not in self._roots:
            self._roots[p] = series_pow(self.poly((1, 0, -4)), p)
        return self._roots[p]

    def total(self, terms):
        acc = self.zero()
        for term in terms:
            acc = acc + term
        return acc


def _avoid_only(kit, label):
    s = kit.root(Fraction(1, 2))
    x = kit.x()
    if label == UP_DOWN:
        return (1 - 2 * kit.x(2) - s).shift(-1) / 2
    if label in (UP_UP, DOWN_DOWN):
        return (1 - s) / (1 + s)
    if label == DOWN_UP:
        c = (1 - s).shift(-2) / 2
        return x * c * c - x
    return 1 + x + _avoid_only(kit, UP_DOWN) + _avoid_only(kit, UP_UP)


def _avoid_increasing(kit, label, k):
    U, x = kit.U, kit.x()
    if label == UP_DOWN:
        return x * U(k - 3) / U(k - 1)
    if label == DOWN_DOWN:
        return (kit.x(k - 1) + U(k - 3)) / U(k - 1)
    if label == UP_UP:
        return U(k - 3) / U(k - 1)
    if label == DOWN_UP:
        return (kit.x(k - 1) + U(k - 3)) / (x * U(k - 1)) - x
    return (1 + x) * U(k - 2) / (x * U(k - 1))


def _avoid_rotated(kit, label, k):
    U, x = kit.U, kit.x()
    if label == UP_DOWN:
        return x * U(k - 4) / U(k - 2)
    if label == DOWN_DOWN:
        return (kit.x(k - 2) + U(k - 4)) / U(k - 2)
    if label == UP_UP:
        return U(k - 3) * U(k - 3) / (U(k - 2) * U(k - 2))
    if label == DOWN_UP:
        inner = kit.x(k - 3) * (U(k - 3) + x * U(k - 2)) + 2 * U(k - 3) * U(k - 3) + U(k - 4) * U(k - 4) - 2
        return x / (U(k - 2) * U(k - 2)) * inner
    return ((1 + x) * U(k - 3) * U(k - 3) - x) / (U(k - 2) * U(k - 2))


def _once_increasing_sum(kit, k):
    U = kit.U
    return kit.total(kit.x(k - 1 - m) * (kit.x(m + 1) + U(m - 1)) / (U(m) * U(m + 1))
                     for m in range(k - 1))


def _once_increasing(kit, label, k):
    U, x = kit.U, kit.x()
    square = U(k - 1) * U(k - 1)
    if label == UP_DOWN:
        return x / square
    if label == UP_UP:
        return 1 / square
    if label == DOWN_DOWN:
        return _once_increasing_sum(kit, k) / U(k - 1)
    if label == DOWN_UP:
        return _once_increasing_sum(kit, k) / (x * U(k - 1))
    return (1 + x) / square


def _once_chain_sum(kit, k):
    U = kit.U
    return kit.total(kit.x(k - 2 - j) * (kit.x(j + 1) + U(j - 1)) / (U(j) * U(j + 1))
                     for j in range(k - 1))


def _once_chain_dd(kit, tau, k):
    U, x = kit.U, kit.x()
    if tau == '1-2':
        return x / U(k - 1) * _once_chain_sum(kit, k)
    if tau == '12':
        return x / U(k - 1) * (kit.x(k) + _once_chain_sum(kit, k))
    if tau == '2-1':
        return kit.x(k - 1) / U(k - 1)
    return 1 / (U(k - 1) * U(k - 1))


def _once_chain(kit, label, k, tau):
    U, x = kit.U, kit.x()
    if label in (DOWN_DOWN, DOWN_UP):
        dd = _once_chain_dd(kit, tau, k)
        return dd if label == DOWN_DOWN else dd.shift(-1)
    if tau == '2-1':
        return kit.zero()
    if label == UP_DOWN:
        return x / (U(k - 1) * U(k - 1))
    if label == UP_UP:
        return 1 / (U(k - 1) * U(k - 1))
    return (1 + x) * U(k - 2) / (x * U(k - 1))


def _dashless(kit, label, tau, r):
    if tau in ('123', '321'):
        return kit.zero()
    if tau == '231':
        c = catalan(r)
        terms = {UP_DOWN: (2 * r + 1,), UP_UP: (2 * r + 2,), ALTERNATING: (2 * r + 1, 2 * r + 2)}
        return kit.total(c * kit.x(e) for e in terms[label])
    shifts = {UP_DOWN: (1,), UP_UP: (0,), ALTERNATING: (0, 1)}[label]
    acc = kit.zero()
    n = r + 1
    while 2 * n <= kit.order:
        weight = Fraction(r + 1, n * (n - r)) * math.comb(n, r + 1) ** 2
        for shift in shifts:
            acc = acc + weight * kit.x(2 * n + shift)
        n += 1
    return acc


def _once132(kit, label):
    s = kit.root(Fraction(1, 2))
    if label == UP_DOWN:
        return kit.x() * (1 - s) / (1 - 4 * kit.x(2) + s)
    if label in (UP_UP, DOWN_DOWN):
        return (kit.poly((-1, 0, 1)) + kit.poly((1, 0, -3)) / s).shift(-2)
    if label == DOWN_UP:
        return (kit.poly((-3, 0, 4, 0, 2)) + kit.poly((3, 0, -10)) / s).shift(-3) / 2
    return _once132(kit, UP_DOWN) + _once132(kit, UP_UP)


def _pair_sum(kit, top):
    """sum_{j=0..top} U_j U_{j+1}"""
    U = kit.U
    return kit.total(U(j) * U(j + 1) for j in range(top + 1))


def _once132_increasing_dd(kit, k):
    """DD^1 of 1-2-...-k; DD^1 of 1-2 is empty."""
    if k < 3:
        return kit.zero()
    U, x = kit.U, kit.x()
    terms = []
    for i in range(k - 1):
        head = (kit.x(k - 1 - i) + U(k - 3 - i)) / (U(k - 1 - i) * U(k - 2 - i))
        terms.append(kit.x(i) * (head * _pair_sum(kit, k - 2 - i) - x * U(k - 2 - i)))
    return kit.total(terms) / U(k - 1)


def _once132_avoid(kit, label, k, tau):
    U, x = kit.U, kit.x()
    square = U(k - 1) * U(k - 1)
    if tau == '2-1':
        if label == UP_DOWN:
            return (_pair_sum(kit, k - 3) - x) / square
        return (x * U(k - 4) * U(k - 2) + _pair_sum(kit, k - 4)) / (x * square)
    if label == UP_DOWN:
        return _pair_sum(kit, k - 3) / square
    if label == UP_UP:
        return (x * U(k - 3) * U(k - 3) + _pair_sum(kit, k - 4)) / (x * square)
    if label == DOWN_DOWN:
        return _once132_increasing_dd(kit, k)
    if label == DOWN_UP:
        uu = _once132_avoid(kit, UP_UP, k, None)
        return ((kit.x(k - 1) + U(k - 3)) / U(k - 2) * uu
                + U(k - 2) / U(k - 1) * _once132_increasing_dd(kit, k - 1)
                + x * U(k - 3) * (kit.x(k - 2) + U(k - 4)) / (U(k - 2) * U(k - 1)))
    return (x * U(k - 3) * (U(k - 3) + U(k - 4)) + (1 + x) * _pair_sum(kit, k - 4)) / (x * square)


def _once132_once_increasing_ud(kit, k):
    U, x = kit.U, kit.x()
    terms = []
    for j in range(k - 2):
        inner = U(j + 1) * (U(j + 1) + x * U(j)) + 2 * x * _pair_sum(kit, j - 1)
        terms.append(inner / (U(j + 1) * U(j + 2)))
    return kit.total(terms) / (U(k - 1) * U(k - 1))


def _once132_once_increasing(kit, label, k):
    if label == UP_DOWN:
        return _once132_once_increasing_ud(kit, k)
    x = kit.x()
    x3 = kit.x(3)
    ud1_1_prev = _once132_once_increasing_ud(kit, k - 1)
    uu = _avoid_increasing(kit, UP_UP, k)
    uu_prev = _avoid_increasing(kit, UP_UP, k - 1)
    ud_prev = _avoid_increasing(kit, UP_DOWN, k - 1)
    ud1 = _once132_avoid(kit, UP_DOWN, k, None)
    uu1 = _once132_avoid(kit, UP_UP, k, None)
    uu_1 = _once_increasing(kit, UP_UP, k)
    uu_1_prev = _once_increasing(kit, UP_UP, k - 1)
    ud_1_prev = _once_increasing(kit, UP_DOWN, k - 1)
    rest = (x * ud1_1_prev * (1 + uu)
            + x * ud1 * uu_1
            + x * ud_1_prev * uu1
            + x3 * uu_1_prev * (x + ud_prev) * (1 + uu)
            + x3 * (1 + uu_prev) * ud_1_prev * (1 + uu)
            + x3 * (1 + uu_prev) * (x + ud_prev) * uu_1)
    return rest / (1 - x * (x + ud_prev))


# (class, r) -> (P, Q, denominator, x-power, exponent of 1 - 4x^2) for
# (P + Q * (1 - 4x^2)^p) / (denominator * x^power)
_EXACTLY_132 = {
    (UP_DOWN, 0): ((1, 0, -2), (-1,), 2, 1, Fraction(1, 2)),
    (UP_DOWN, 1): ((-1,), (1, 0, -2), 2, 1, Fraction(-1, 2)),
    (UP_DOWN, 2): ((1,), (-1, 0, 6, 0, -6), 2, 1, Fraction(-3, 2)),
    (UP_DOWN, 3): ((-2, 0, 2), (2, 0, -22, 0, 80, 0, -98, 0, 16), 1, 1, Fraction(-5, 2)),
    (UP_UP, 0): ((1, 0, -2), (-1,), 2, 2, Fraction(1, 2)),
    (UP_UP, 1): ((-1, 0, 1), (1, 0, -3), 1, 2, Fraction(-1, 2)),
    (UP_UP, 2): ((4, 0, -5), (-4, 0, 29, 0, -54, 0, 16), 2, 2, Fraction(-3, 2)),
    (UP_UP, 3): ((13, 0, -11, 0, 2), (13, 0, -152, 0, 612, 0, -940, 0, 384), 2, 2, Fraction(-5, 2)),
    (ALTERNATING, 0): ((1, 1, -2, -2), (-1, -1), 2, 2, Fraction(1, 2)),
    (ALTERNATING, 1): ((-2, -1, 2), (2, 1, -6, -2), 2, 2, Fraction(-1, 2)),
    (ALTERNATING, 2): ((4, 1, -5), (-4, -1, 29, 6, -54, -6, 16), 2, 2, Fraction(-3, 2)),
    (ALTERNATING, 3): ((13, -4, -11, 4, 2),
                       (13, 4, -152, -44, 612, 160, -940, -196, 384, 32), 2, 2, Fraction(-5, 2)),
}


def _exactly132(kit, label, r):
    p, q, denominator, power, exponent = _EXACTLY_132[(label, r)]
    value = kit.poly(p) + kit.poly(q) * kit.root(exponent)
    return value.shift(-power) / denominator


def _build(kit, key):
    family, label, k, r, tau = key.family, key.label, key.k, key.r, key.variant
    if family == 'F1':
        return _avoid_only(kit, label)
    if family == 'F2':
        return _avoid_increasing(kit, label, k)
    if family == 'F3':
        if tau is None:
            return _avoid_rotated(kit, label, k)
        return _avoid_increasing(kit, label, k)
    if family == 'F4':
        return _once_increasing(kit, label, k)
    if family == 'F5':
        return _once_chain(kit, label, k, tau)
    if family == 'F6':
        return _dashless(kit, label, tau, r)
    if family == 'F7':
        return _once132(kit, label)
    if family == 'F8':
        return _once132_avoid(kit, label, k, None if tau == '12' else tau)
    if family == 'F9':
        return _once132_once_increasing(kit, label, k)
    return _exactly132(kit, label, r)


def gf(key, order=DEFAULT_ORDER):
    """Truncated series of the display named by `key`."""
    key = check_domain(key)
    if key.remark:
        raise DomainError(NO_SERIES % (key,))
    pad = 8
    for _attempt in range(4):
        value = _build(_Kit(order + pad), key)
        if value.order >= order:
            break
        pad += order - value.order + 8
    else:
        raise SeriesError(PRECISION % (key, order))
    value = value.truncate(order)
    if value.min_exp < 0:
        raise FormulaAnomaly(NEGATIVE_POWER % (key, value.coeff(value.min_exp), value.min_exp),
                             key=key, n=value.min_exp, coefficient=value.coeff(value.min_exp))
    logger.debug(_('Evaluated %s to order %d'), key, order)
    return value


def f2_kernel(k, order=DEFAULT_ORDER):
    """(1 + x) R_{k-1}(x^2), the second route to the F2 A-series."""
    kernel = r_series(k - 1, order).substitute(2).truncate(order)
    return (1 + LaurentSeries.monomial(1, 1, order)) * kernel


def remark_value(key, n):
    key = check_domain(key)
    remark = REMARKS[key.base()]
    if n < remark.n_min:
        raise DomainError(OUT_OF_DOMAIN % (key, 'n >= %d' % remark.n_min))
    return Fraction(remark.value(n))


def remark_n_min(key):
    return REMARKS[as_key(key).base()].n_min


def exact_values(key, n_max, order=None):
    """n -> exact rational prediction for every n the key speaks about, up to n_max."""
    key = check_domain(key)
    if key.remark:
        return collections.OrderedDict((n, remark_value(key, n))
                                       for n in range(remark_n_min(key), n_max + 1))
    series = gf(key, max(n_max, order or 0))
    return collections.OrderedDict((n, series.coeff(n)) for n in range(n_max + 1))


class SequenceTable(object):
    """Counting sequence extracted from a key, with its provenance."""

    def __init__(self, key, values, provenance):
        self.key = key
        self.values = values
        self.provenance = provenance

    def __getitem__(self, n):
        return self.values[n]

    def rows(self):
        return list(self.values.items())

    def to_json(self):
        return {'key': str(self.key), 'provenance': self.provenance,
                'values': dict((str(n), str(v)) for n, v in self.values.items())}


def coefficients(key, n_max, order=None):
    key = check_domain(key)
    values = collections.OrderedDict()
    for n, value in exact_values(key, n_max, order).items():
        if value.denominator != 1 or value < 0:
            raise FormulaAnomaly(NOT_A_COUNT % (key, n, value), key=key, n=n, coefficient=value)
        values[n] = int(value)
    provenance = 'remark' if key.remark else 'display'
    return SequenceTable(key, values, provenance)
