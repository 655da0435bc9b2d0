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

import pickle
import tests.support

from altpermcore.exceptions import PatternError
from altpermcore.pattern import (ConstraintSpec, chain, contains, increasing, occurrences,
                                 occurrences_ending_at, parse_pattern, rotated, satisfies)
from altpermcore.perm import Permutation
from hypothesis import given, strategies as st

PATTERNS = ['1-3-2', '12', '23-1', '1-2-3', '2-1', '213', '12-3']


class PatternTest(tests.support.TestCase):

    def test_parse(self):
        t = parse_pattern('23-1')
        self.assertEqual(t.blocks, ((2, 3), (1,)))
        self.assertEqual(t.k, 3)
        self.assertEqual(str(t), '23-1')
        self.assertFalse(t.is_classical())
        self.assertTrue(parse_pattern('1-3-2').is_classical())

    def test_parse_errors(self):
        for text in ('1--2', '1a', '1-1', '13', ''):
            with self.assertRaises(PatternError):
                parse_pattern(text)

    def test_families(self):
        self.assertEqual(increasing(3), parse_pattern('1-2-3'))
        self.assertEqual(rotated(4), parse_pattern('2-3-4-1'))
        self.assertEqual(chain('12', 4), parse_pattern('12-3-4'))
        self.assertEqual(chain('2-1', 3), parse_pattern('2-1-3'))

    def test_occurrences(self):
        p = Permutation.parse('1324')
        self.assertEqual(occurrences(p, parse_pattern('1-2')), 5)
        self.assertEqual(occurrences(p, parse_pattern('12')), 2)
        self.assertEqual(occurrences(Permutation.parse('2341'), parse_pattern('23-1')), 2)

    def test_contains(self):
        t = parse_pattern('1-3-2')
        self.assertFalse(contains(Permutation.parse('231'), t))
        self.assertTrue(contains(Permutation.parse('14253'), t))

    def test_pickles(self):
        t = parse_pattern('12-3')
        self.assertEqual(pickle.loads(pickle.dumps(t)), t)

    @given(st.permutations(range(1, 7)), st.sampled_from(PATTERNS))
    def test_incremental_counts_add_up(self, entries, text):
        t = parse_pattern(text)
        total = sum(occurrences_ending_at(entries[:i], t) for i in range(1, len(entries) + 1))
        self.assertEqual(total, occurrences(Permutation(entries), t))


class ConstraintSpecTest(tests.support.TestCase):

    def test_parse(self):
        c = ConstraintSpec.parse('exactly:1-3-2:2')
        self.assertEqual(c.count, 2)
        self.assertEqual(c.bound, 2)
        self.assertEqual(str(c), 'exactly:1-3-2:2')
        c = ConstraintSpec.parse('avoid:12')
        self.assertIsNone(c.count)
        self.assertEqual(c.bound, 0)
        self.assertEqual(str(c), 'avoid:12')

    def test_parse_errors(self):
        for text in ('forbid:12', 'exactly:12', 'exactly:12:-1', 'exactly:12:x'):
            with self.assertRaises(PatternError):
                ConstraintSpec.parse(text)
        with self.assertRaises(PatternError):
            ConstraintSpec.exactly('12', -1)

    def test_satisfies(self):
        p = Permutation.parse('132')
        self.assertFalse(satisfies(p, ConstraintSpec.avoid('1-3-2')))
        self.assertTrue(satisfies(p, ConstraintSpec.exactly('1-3-2', 1)))
        self.assertTrue(satisfies(p, ConstraintSpec.exactly('12', 1)))
