# oracle.py
# Exhaustive counting of constrained alternating permutations, with an
# on-disk cache of answered queries.
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
from altpermcore import _, logger, VERSION
from altpermcore.exceptions import Error
from altpermcore.pattern import ConstraintSpec, occurrences_ending_at, satisfies
from altpermcore.perm import DEFAULT_CAP, Permutation, alternating_walk, check_cap, check_class, members, shape_of
from altpermcore.stats import Statistic, perm_stat

import collections
import concurrent.futures
import datetime
import hashlib
import json
import os
import tempfile

CORRUPT_CACHE = _('Ignoring unreadable cache entry %s: %s')
CACHE_NOT_WRITABLE = _('Cannot write cache entry %s: %s')
NEGATIVE_LENGTH = _('Permutation length must be non-negative, got %d')


class CountQuery(collections.namedtuple('CountQuery', 'n label constraints statistic')):
    """Members of one class at length n meeting every constraint."""

    __slots__ = ()

    def __new__(cls, n, label, constraints=(), statistic=None):
        if n < 0:
            raise Error(NEGATIVE_LENGTH % n)
        check_class(label)
        constraints = tuple(c if isinstance(c, ConstraintSpec) else ConstraintSpec.parse(c)
                            for c in constraints)
        if isinstance(statistic, str):
            statistic = Statistic.parse(statistic)
        return super(CountQuery, cls).__new__(cls, n, label, constraints, statistic)

    def without_statistic(self):
        return self._replace(statistic=None)

    def canonical(self):
        parts = ['n=%d' % self.n, 'class=%s' % self.label]
        parts.extend(sorted(str(c) for c in self.constraints))
        if self.statistic is not None:
            parts.append('stat=%s' % (self.statistic,))
        return ';'.join(parts)

    def __str__(self):
        return self.canonical()


class DistributionTable(object):
    """statistic value -> number of members, for one query."""

    def __init__(self, query, counts):
        self.query = query
        self.counts = collections.OrderedDict(sorted(counts.items()))

    def total(self):
        return sum(self.counts.values())

    def rows(self):
        return [(self.query.n, value, count) for value, count in self.counts.items()]

    def to_json(self):
        return {'query': self.query.canonical(),
                'counts': [[value, count] for value, count in self.counts.items()]}

    def __eq__(self, other):
        if not isinstance(other, DistributionTable):
            return NotImplemented
        return (self.query, self.counts) == (other.query, other.counts)

    def __ne__(self, other):
        return not self == other


def _scan(query, first=None):
    """Counter of statistic values (None when there is no statistic)."""
    counts = collections.Counter()
    n = query.n
    if n <= 1:
        for p in members(n, query.label, cap=None):
            if all(satisfies(p, c) for c in query.constraints):
                value = None if query.statistic is None else perm_stat(p, query.statistic)
                counts[value] += 1
        return counts
    first_rise = shape_of(n, query.label)
    if first_rise is None:
        return counts
    patterns = [c.pattern for c in query.constraints]
    bounds = [c.bound for c in query.constraints]
    # tallies[i] holds the occurrence counts inside the first i entries
    tallies = [[0] * len(patterns) for _i in range(n + 1)]

    def accept(prefix):
        depth = len(prefix)
        before = tallies[depth - 1]
        now = tallies[depth]
        for i, t in enumerate(patterns):
            now[i] = before[i] + occurrences_ending_at(prefix, t)
            if now[i] > bounds[i]:
                return False
        return True

    for entries in alternating_walk(n, first_rise, accept if patterns else None, first):
        if tallies[n] != bounds:
            continue
        value = None if query.statistic is None else perm_stat(Permutation(entries), query.statistic)
        counts[value] += 1
    return counts


def _scan_chunk(args):
    query, first = args
    return _scan(query, first)


def cache_name(query):
    return hashlib.sha256(query.canonical().encode('utf-8')).hexdigest() + '.json'


class Oracle(object):
    """Brute-force counts; `cache_dir` None or empty disables the cache."""

    def __init__(self, cache_dir=None, threads=1, cap=DEFAULT_CAP):
        self.cache_dir = cache_dir or None
        self.threads = max(1, threads)
        self.cap = cap

    def _path(self, query):
        return os.path.join(self.cache_dir, cache_name(query))

    def _load(self, query):
        if self.cache_dir is None:
            return None
        path = self._path(query)
        if not os.path.exists(path):
            return None
        try:
            with open(path) as f:
                data = json.load(f)
            if data['query'] != query.canonical():
                raise ValueError(data['query'])
            result = collections.Counter()
            for value, count in data['result']:
                result[value] += int(count)
        except (IOError, OSError, ValueError, KeyError, TypeError) as e:
            logger.warning(CORRUPT_CACHE, path, e)
            return None
        logger.debug(_('Cache hit for %s'), query)
        return result

    def _store(self, query, result):
        if self.cache_dir is None:
            return
        data = {
            'query': query.canonical(),
            'result': sorted([value, count] for value, count in result.items()),
            'engine_version': VERSION,
            'timestamp': datetime.datetime.now(datetime.timezone.utc).isoformat(),
        }
        path = self._path(query)
        try:
            if not os.path.isdir(self.cache_dir):
                os.makedirs(self.cache_dir)
            (out, tmpfilename) = tempfile.mkstemp(dir=self.cache_dir, suffix='.tmp')
            with os.fdopen(out, 'w', -1) as out:
                json.dump(data, out, sort_keys=True)
            os.chmod(tmpfilename, 0o644)
            os.rename(tmpfilename, path)
        except (IOError, OSError) as e:
            logger.warning(CACHE_NOT_WRITABLE, path, e)

    def _compute(self, query):
        if self.threads == 1 or query.n <= 2:
            return _scan(query)
        total = collections.Counter()
        chunks = [(query, first) for first in range(1, query.n + 1)]
        with concurrent.futures.ProcessPoolExecutor(max_workers=self.threads) as pool:
            for part in pool.map(_scan_chunk, chunks):
                total.update(part)
        return total

    def scan(self, query):
        check_cap(query.n, self.cap)
        result = self._load(query)
        if result is None:
            logger.debug(_('Enumerating %s'), query)
            result = self._compute(query)
            self._store(query, result)
        return result

    def count_exact(self, query):
        return sum(self.scan(query.without_statistic()).values())

    def distribution(self, query):
        if query.statistic is None:
            return DistributionTable(query, {0: self.count_exact(query)})
        return DistributionTable(query, self.scan(query))
