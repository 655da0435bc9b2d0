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

import tests.support

from altpermcore import formulas
from altpermcore.exceptions import DomainError, FormulaAnomaly, KeyFormatError
from altpermcore.formulas import FamilyKey, binomial, catalan, fibonacci, gf, lucas
from fractions import Fraction
from hypothesis import given, strategies as st


class NumbersTest(tests.support.TestCase):

    def test_catalan(self):
        self.assertEqual([catalan(n) for n in range(6)], [1, 1, 2, 5, 14, 42])

    def test_fibonacci(self):
        self.assertEqual([fibonacci(n) for n in range(7)], [0, 1, 1, 2, 3, 5, 8])
        self.assertEqual([fibonacci(n) for n in (-1, -2, -3, -4)], [1, -1, 2, -3])

    def test_lucas(self):
        self.assertEqual([lucas(n) for n in range(5)], [2, 1, 3, 4, 7])

    def test_binomial(self):
        self.assertEqual(binomial(4, 2), 6)
        self.assertEqual(binomial(4, Fraction(3, 2)), 0)
        self.assertEqual(binomial(2, 3), 0)
        self.assertEqual(binomial(3, -1), 0)
        self.assertEqual(binomial(Fraction(1, 2), 2), Fraction(-1, 8))

    def test_named(self):
        self.assertEqual(formulas.number('catalan', 3), 5)
        self.assertEqual(formulas.number('binomial', 5, 2), 10)

    @given(st.integers(-20, 20))
    def test_fibonacci_recurrence(self, n):
        self.assertEqual(fibonacci(n + 2), fibonacci(n + 1) + fibonacci(n))


class FamilyKeyTest(tests.support.TestCase):

    def test_parse(self):
        key = FamilyKey.parse('F5:DD:tau=1-2:k=4')
        self.assertEqual(key, FamilyKey('F5', 'DD', k=4, variant='1-2'))
        self.assertEqual(str(key), 'F5:DD:tau=1-2:k=4')
        self.assertEqual(str(FamilyKey.parse('F10:UU:r=2')), 'F10:UU:r=2')

    def test_canonical_order(self):
        self.assertEqual(str(FamilyKey.parse('F6:A:r=1:tau=231')), 'F6:A:tau=231:r=1')

    def test_remark(self):
        key = FamilyKey.parse('F7:DU:remark')
        self.assertTrue(key.remark)
        self.assertEqual(key.base(), FamilyKey('F7', 'DU'))

    def test_bad_keys(self):
        for text in ('F2', 'F11:UD', 'F2:XX:k=3', 'F2:UD:k=x', 'F2:UD:q=1', 'F2:UD:k=3:k=4'):
            with self.assertRaises(KeyFormatError):
                FamilyKey.parse(text)


class DomainTest(tests.support.TestCase):

    def test_accepted(self):
        for text in ('F1:DU', 'F2:UD:k=2', 'F3:UD:tau=12:k=2', 'F4:UD:k=2', 'F6:UD:tau=231:r=1',
                     'F8:A:tau=21:k=3', 'F9:UU:k=3', 'F10:A:r=3', 'F7:DD:remark'):
            formulas.check_domain(text)

    def test_rejected(self):
        for text in ('F1:UD:k=3', 'F2:UD:k=1', 'F3:UD:k=2', 'F4:A:k=2', 'F6:DU:tau=123:r=0',
                     'F6:UD:tau=231:r=0', 'F8:UD:tau=21:k=3', 'F9:UU:k=2', 'F10:UD:r=4',
                     'F2:UD:k=3:remark', 'F5:UD:tau=132:k=4'):
            with self.assertRaises(DomainError):
                formulas.check_domain(text)


class GeneratingFunctionTest(tests.support.TestCase):

    def test_avoiders(self):
        self.assertCoefficients(gf('F1:A', 10), [1, 1, 1, 1, 2, 2, 5, 5, 14, 14, 42])
        self.assertCoefficients(gf('F1:UD', 7), [0, 0, 0, 1, 0, 2, 0, 5])
        self.assertCoefficients(gf('F1:DU', 5), [0, 0, 0, 2, 0, 5])
        self.assertEqual(gf('F1:UU', 8).coeff(6), 5)
        self.assertEqual(gf('F1:DD', 8), gf('F1:UU', 8))

    def test_avoid_increasing(self):
        self.assertCoefficients(gf('F2:UD:k=3', 7), [0, 0, 0, 1, 0, 1, 0, 1])
        self.assertCoefficients(gf('F2:DD:k=2', 6), [0, 0, 1, 0, 0, 0, 0])
        self.assertTrue(gf('F2:UD:k=2', 6).is_zero())

    def test_kernel_route(self):
        for k in range(2, 9):
            self.assertEqual(gf(FamilyKey('F2', 'A', k=k), 24), formulas.f2_kernel(k, 24))

    def test_chain_avoidance_matches_increasing(self):
        for label in ('UD', 'UU', 'A'):
            self.assertEqual(gf(FamilyKey('F3', label, k=4, variant='1-2'), 10),
                             gf(FamilyKey('F2', label, k=4), 10))

    def test_once_chain_down_up_is_shifted(self):
        dd = gf('F5:DD:tau=1-2:k=4', 11)
        self.assertEqual(gf('F5:DU:tau=1-2:k=4', 10), dd.shift(-1))

    def test_dashless(self):
        self.assertCoefficients(gf('F6:UD:tau=231:r=1', 6), [0, 0, 0, 1, 0, 0, 0])
        self.assertTrue(gf('F6:A:tau=123:r=2', 8).is_zero())

    def test_once_132(self):
        self.assertCoefficients(gf('F7:UD', 5), [0, 0, 0, 1, 0, 4])

    def test_exactly_132_none(self):
        self.assertEqual(gf('F10:UD:r=0', 9), gf('F1:UD', 9))
        self.assertEqual(gf('F10:UD:r=0', 9).coeff(7), 5)

    def test_remark_has_no_series(self):
        with self.assertRaises(DomainError):
            gf('F7:UD:remark', 5)


class ValuesTest(tests.support.TestCase):

    def test_catalan_remark_agrees(self):
        self.assertEqual(formulas.exact_values('F1:A:remark', 10), formulas.exact_values('F1:A', 10))

    def test_once_132_remark(self):
        values = formulas.exact_values('F7:UD:remark', 7)
        self.assertEqual(values[3], 1)
        self.assertEqual(values[5], 4)
        self.assertEqual(values[7], 15)

    def test_remark_range(self):
        self.assertEqual(formulas.remark_n_min('F4:A:k=5:remark'), 6)
        with self.assertRaises(DomainError):
            formulas.remark_value('F3:A:k=6:remark', 1)
        self.assertEqual(list(formulas.exact_values('F3:A:k=6:remark', 4)), [2, 3, 4])

    def test_coefficients(self):
        table = formulas.coefficients('F1:A', 6)
        self.assertEqual(table.rows(), [(0, 1), (1, 1), (2, 1), (3, 1), (4, 2), (5, 2), (6, 5)])
        self.assertEqual(table.provenance, 'display')
        self.assertEqual(table.to_json()['values']['6'], '5')
        self.assertEqual(formulas.coefficients('F1:A:remark', 2).provenance, 'remark')

    def test_negative_count_is_an_anomaly(self):
        with self.assertRaises(FormulaAnomaly) as context:
            formulas.coefficients('F7:DU:remark', 4)
        self.assertEqual(context.exception.n, 1)
        self.assertEqual(context.exception.coefficient, -1)
