# pattern.py
# Dash-notation generalized (vincular) patterns and their occurrences.
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
A pattern such as ``23-1`` is a sequence of blocks.  Letters inside a block
must occupy adjacent positions of the permutation; a dash lets any number of
positions pass between two blocks.
"""

from __future__ import absolute_import
from __future__ import unicode_literals
from altpermcore import _
from altpermcore.exceptions import PatternError

import collections

DIGITS = '123456789'

EMPTY_BLOCK = _('Empty block in pattern "%s"')
ILLEGAL_CHARACTER = _('Illegal character "%s" in pattern "%s"')
REPEATED_VALUE = _('Value %s repeated in pattern "%s"')
MISSING_VALUE = _('Value %d missing from pattern "%s"')
BAD_CONSTRAINT = _('Cannot parse constraint "%s"')
BAD_COUNT = _('Occurrence count must be a non-negative integer, got "%s"')


class GeneralizedPattern(object):

    __slots__ = ('blocks', 'flat', 'lengths', '_signature')

    def __init__(self, blocks):
        self.blocks = tuple(tuple(block) for block in blocks)
        self.flat = tuple(v for block in self.blocks for v in block)
        self.lengths = tuple(len(block) for block in self.blocks)
        self._signature = _signature(self.flat)

    @property
    def k(self):
        return len(self.flat)

    def is_classical(self):
        return all(length == 1 for length in self.lengths)

    def matches(self, values):
        return _signature(values) == self._signature

    def placements(self, n):
        """Start-index tuples of every position choice that honours adjacency."""
        return _placements(self.lengths, 0, n)

    def __str__(self):
        return '-'.join(''.join(str(v) for v in block) for block in self.blocks)

    def __repr__(self):
        return 'GeneralizedPattern(%s)' % self

    def __eq__(self, other):
        if not isinstance(other, GeneralizedPattern):
            return NotImplemented
        return self.blocks == other.blocks

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.blocks)

    def __reduce__(self):
        return (parse_pattern, (str(self),))


def _signature(values):
    return tuple(sorted(range(len(values)), key=values.__getitem__))


def _placements(lengths, lo, n):
    if not lengths:
        yield ()
        return
    head, rest = lengths[0], lengths[1:]
    room = sum(rest)
    for start in range(lo, n - head - room + 1):
        for tail in _placements(rest, start + head, n):
            yield (start,) + tail


def parse_pattern(text):
    text = text.strip()
    for ch in text:
        if ch != '-' and ch not in DIGITS:
            raise PatternError(ILLEGAL_CHARACTER % (ch, text))
    tokens = text.split('-')
    if any(not token for token in tokens):
        raise PatternError(EMPTY_BLOCK % text)
    seen = set()
    for ch in text.replace('-', ''):
        if ch in seen:
            raise PatternError(REPEATED_VALUE % (ch, text))
        seen.add(ch)
    for v in range(1, len(seen) + 1):
        if str(v) not in seen:
            raise PatternError(MISSING_VALUE % (v, text))
    return GeneralizedPattern([[int(ch) for ch in token] for token in tokens])


def _values_at(seq, pattern, starts):
    values = []
    for start, length in zip(starts, pattern.lengths):
        values.extend(seq[start:start + length])
    return values


def occurrences(p, t):
    return sum(1 for starts in t.placements(len(p)) if t.matches(_values_at(p, t, starts)))


def contains(p, t):
    return any(t.matches(_values_at(p, t, starts)) for starts in t.placements(len(p)))


def occurrences_ending_at(seq, t):
    """Occurrences in `seq` whose last letter is the last entry of `seq`.

    `seq` may hold any distinct values; this drives incremental counting
    while a permutation is being built left to right.
    """
    last = len(seq) - t.lengths[-1]
    if last < 0:
        return 0
    count = 0
    for starts in _placements(t.lengths[:-1], 0, last):
        if t.matches(_values_at(seq, t, starts + (last,))):
            count += 1
    return count


def increasing(k):
    """1-2-...-k"""
    return parse_pattern('-'.join(str(v) for v in range(1, k + 1)))


def rotated(k):
    """2-3-...-k-1"""
    return parse_pattern('-'.join([str(v) for v in range(2, k + 1)] + ['1']))


def chain(head, k):
    """head-3-4-...-k for a two-letter head such as 12, 2-1."""
    tail = [str(v) for v in range(3, k + 1)]
    return parse_pattern('-'.join([head] + tail))


class ConstraintSpec(collections.namedtuple('ConstraintSpec', 'pattern count')):
    """Avoidance when `count` is None, otherwise exactly `count` occurrences."""

    __slots__ = ()

    @classmethod
    def avoid(cls, pattern):
        if not isinstance(pattern, GeneralizedPattern):
            pattern = parse_pattern(pattern)
        return cls(pattern, None)

    @classmethod
    def exactly(cls, pattern, r):
        if not isinstance(pattern, GeneralizedPattern):
            pattern = parse_pattern(pattern)
        if r < 0:
            raise PatternError(BAD_COUNT % r)
        return cls(pattern, r)

    @classmethod
    def parse(cls, text):
        """'avoid:1-3-2' or 'exactly:1-3-2:1'."""
        parts = text.strip().split(':')
        if parts[0] == 'avoid' and len(parts) == 2:
            return cls.avoid(parts[1])
        if parts[0] == 'exactly' and len(parts) == 3:
            return cls.exactly(parts[1], parse_count(parts[2]))
        raise PatternError(BAD_CONSTRAINT % text)

    @property
    def bound(self):
        return 0 if self.count is None else self.count

    def __str__(self):
        if self.count is None:
            return 'avoid:%s' % self.pattern
        return 'exactly:%s:%d' % (self.pattern, self.count)


def parse_count(text):
    try:
        r = int(text)
    except ValueError:
        raise PatternError(BAD_COUNT % text)
    if r < 0:
        raise PatternError(BAD_COUNT % text)
    return r


def satisfies(p, c):
    if c.count is None:
        return not contains(p, c.pattern)
    return occurrences(p, c.pattern) == c.count
