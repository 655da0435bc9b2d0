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

import json
import os
import tests.support

from altpermcore.exceptions import CapError, Error
from altpermcore.oracle import CountQuery, DistributionTable, Oracle, cache_name
from altpermcore.pattern import ConstraintSpec
from tests.support import mock

AVOID_132 = 'avoid:1-3-2'
EULER = [1, 1, 1, 2, 5, 16, 61, 272, 1385, 7936, 50521]


class CountQueryTest(tests.support.TestCase):

    def test_canonical(self):
        query = CountQuery(5, 'UD', ['exactly:1-3-2:1', 'avoid:12'], 'rlmax')
        self.assertEqual(query.canonical(), 'n=5;class=UD;avoid:12;exactly:1-3-2:1;stat=rlmax')
        self.assertEqual(query.without_statistic().canonical(), 'n=5;class=UD;avoid:12;exactly:1-3-2:1')

    def test_canonical_with_statistic(self):
        query = CountQuery(5, 'UD', [AVOID_132], 'occ:1-2')
        self.assertEqual(query.canonical(), 'n=5;class=UD;avoid:1-3-2;stat=occ:1-2')
        name = cache_name(query)
        self.assertTrue(name.endswith('.json'))
        self.assertNotEqual(name, cache_name(query.without_statistic()))
        self.assertNotEqual(name, cache_name(CountQuery(5, 'UD', [AVOID_132], 'rlmax')))
        self.assertIn('stat=inc', str(CountQuery(4, 'A', (), 'inc')))

    def test_constraint_order_does_not_matter(self):
        a = CountQuery(4, 'A', ['avoid:12', AVOID_132])
        b = CountQuery(4, 'A', [ConstraintSpec.avoid('1-3-2'), 'avoid:12'])
        self.assertEqual(cache_name(a), cache_name(b))
        self.assertTrue(cache_name(a).endswith('.json'))

    def test_invalid(self):
        with self.assertRaises(Error):
            CountQuery(-1, 'A')
        with self.assertRaises(Error):
            CountQuery(3, 'XY')


class OracleTest(tests.support.TempDirTestCase):

    def setUp(self):
        super(OracleTest, self).setUp()
        self.oracle = Oracle()

    def test_euler_numbers(self):
        self.assertEqual([self.oracle.count_exact(CountQuery(n, 'A')) for n in range(11)], EULER)

    def test_avoiders(self):
        self.assertEqual(self.oracle.count_exact(CountQuery(6, 'A', [AVOID_132])), 5)
        self.assertEqual(self.oracle.count_exact(CountQuery(3, 'UD', [AVOID_132])), 1)
        self.assertEqual(self.oracle.count_exact(CountQuery(4, 'UD', [AVOID_132])), 0)

    def test_exact_occurrences(self):
        self.assertEqual(self.oracle.count_exact(CountQuery(5, 'UD', ['exactly:1-3-2:1'])), 4)
        self.assertEqual(self.oracle.count_exact(CountQuery(3, 'UD', ['exactly:1-3-2:0'])), 1)

    def test_distribution(self):
        table = self.oracle.distribution(CountQuery(3, 'UD', [AVOID_132], 'rlmax'))
        self.assertEqual(dict(table.counts), {2: 1})
        table = self.oracle.distribution(CountQuery(2, 'UU', [AVOID_132], 'rlmax'))
        self.assertEqual(table.rows(), [(2, 1, 1)])
        table = self.oracle.distribution(CountQuery(5, 'UD', [AVOID_132], 'occ:1-2'))
        self.assertEqual(table.to_json()['counts'], [[2, 1], [4, 1]])
        self.assertEqual(table.total(), 2)

    def test_distribution_without_statistic(self):
        table = self.oracle.distribution(CountQuery(4, 'A', [AVOID_132]))
        self.assertEqual(table, DistributionTable(table.query, {0: 2}))

    def test_cap(self):
        with self.assertRaises(CapError):
            Oracle(cap=6).count_exact(CountQuery(7, 'A'))

    def test_cache_round_trip(self):
        oracle = Oracle(self.path('cache'))
        query = CountQuery(6, 'A', [AVOID_132], 'rlmax')
        first = oracle.scan(query)
        path = self.path('cache', cache_name(query))
        with open(path) as f:
            data = json.load(f)
        self.assertEqual(data['query'], query.canonical())
        self.assertIn('engine_version', data)
        self.assertIn('timestamp', data)
        with mock.patch('altpermcore.oracle._scan') as scan:
            self.assertEqual(oracle.scan(query), first)
            scan.assert_not_called()

    def test_corrupt_cache_is_recomputed(self):
        oracle = Oracle(self.path('cache'))
        query = CountQuery(5, 'A')
        os.makedirs(self.path('cache'))
        with open(self.path('cache', cache_name(query)), 'w') as f:
            f.write('{not json')
        with mock.patch('altpermcore.oracle.logger') as logger:
            self.assertEqual(oracle.count_exact(query), 16)
            self.assertTrue(logger.warning.called)
        with open(self.path('cache', cache_name(query))) as f:
            self.assertEqual(json.load(f)['result'], [[None, 16]])

    def test_worker_processes_agree(self):
        query = CountQuery(7, 'UD', [AVOID_132], 'rlmax')
        self.assertEqual(Oracle(threads=2).scan(query), Oracle().scan(query))
