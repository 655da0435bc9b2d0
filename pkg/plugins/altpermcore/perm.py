# perm.py
# Permutations of {1..n} and their alternation classes.
#
# Copyright (C) 2026  The altperm-tools authors
#
# This copyrighted material is made available to anyone wishing to use,
# modify, copy, or redistribute it subject to the terms and conditions of
# the GNU General Public License v.2, or (at your option) any later version.
# This program is distributed in the hope that it will be useful, but WITHOUT
# ANY WARRANTY expressed or implied, including the implied warranties of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the GNU General
# Public License for more details.
#

from __future__ import absolute_import
from __future__ import unicode_literals
from altpermcore import _
from altpermcore.exceptions import CapError, Error

import itertools

DEFAULT_CAP = 12

UP_DOWN = 'UD'
UP_UP = 'UU'
DOWN_UP = 'DU'
DOWN_DOWN = 'DD'
ALTERNATING = 'A'
UNCLASSIFIED = '-'

CLASSES = (UP_DOWN, UP_UP, DOWN_UP, DOWN_DOWN, ALTERNATING)
CAP_EXCEEDED = _('Length %d exceeds the permutation length cap of %d')
NOT_A_PERMUTATION = _('"%s" is not a permutation of 1..n')
UNKNOWN_CLASS = _('Unknown class "%s", expected one of: %s')


class Permutation(tuple):
    """An immutable permutation; entries are the one-line notation."""

    __slots__ = ()

    @classmethod
    def parse(cls, text):
        """Accept '14253' or '1,4,2,5,3'."""
        text = text.strip()
        try:
            if ',' in text:
                entries = [int(part) for part in text.split(',')]
            else:
                entries = [int(ch) for ch in text]
        except ValueError:
            raise Error(NOT_A_PERMUTATION % text)
        if sorted(entries) != list(range(1, len(entries) + 1)):
            raise Error(NOT_A_PERMUTATION % text)
        return cls(entries)

    def reverse(self):
        return Permutation(reversed(self))

    def __str__(self):
        if len(self) < 10:
            return ''.join(str(v) for v in self)
        return ','.join(str(v) for v in self)

    def __repr__(self):
        return 'Permutation(%s)' % self


def check_class(label):
    if label not in CLASSES:
        raise Error(UNKNOWN_CLASS % (label, ', '.join(CLASSES)))
    return label


def check_cap(n, cap=DEFAULT_CAP):
    if cap is not None and n > cap:
        raise CapError(CAP_EXCEEDED % (n, cap))


def permutations_of(n, cap=DEFAULT_CAP):
    check_cap(n, cap)
    return (Permutation(entries) for entries in itertools.permutations(range(1, n + 1)))


def classify(p):
    n = len(p)
    if n <= 1:
        return ALTERNATING
    rising = [p[i] < p[i + 1] for i in range(n - 1)]
    for i in range(1, n - 1):
        if rising[i] == rising[i - 1]:
            return UNCLASSIFIED
    if rising[0]:
        return UP_UP if rising[-1] else UP_DOWN
    return DOWN_UP if rising[-1] else DOWN_DOWN


def shape_of(n, label):
    """Whether members of `label` at length n start with a rise; None if the class is empty.

    An alternating sequence of length n >= 2 ends with the same comparison
    it starts with exactly when n is even.
    """
    if n <= 1:
        return None
    if label == ALTERNATING:
        return True
    first_rise = label in (UP_DOWN, UP_UP)
    same_ends = label in (UP_UP, DOWN_DOWN)
    if same_ends != (n % 2 == 0):
        return None
    return first_rise


def alternating_walk(n, first_rise, accept=None, first=None):
    """Yield, in lexicographic order, every alternating sequence of 1..n.

    `accept(prefix)` is called after each extension and may prune the
    branch by returning False.  `first` pins the leading entry.
    """
    used = [False] * (n + 1)
    prefix = []

    def extend(rise):
        if len(prefix) == n:
            yield tuple(prefix)
            return
        last = prefix[-1]
        candidates = range(last + 1, n + 1) if rise else range(1, last)
        for v in candidates:
            if used[v]:
                continue
            used[v] = True
            prefix.append(v)
            if accept is None or accept(prefix):
                for entries in extend(not rise):
                    yield entries
            prefix.pop()
            used[v] = False

    starts = range(1, n + 1) if first is None else (first,)
    for v in starts:
        used[v] = True
        prefix.append(v)
        if accept is None or accept(prefix):
            for entries in extend(first_rise):
                yield entries
        prefix.pop()
        used[v] = False


def members(n, label, cap=DEFAULT_CAP):
    check_cap(n, cap)
    check_class(label)
    if n <= 1:
        return [Permutation(range(1, n + 1))] if label == ALTERNATING else []
    first_rise = shape_of(n, label)
    if first_rise is None:
        return []
    return [Permutation(entries) for entries in alternating_walk(n, first_rise)]
