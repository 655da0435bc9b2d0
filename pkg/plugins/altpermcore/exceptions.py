# exceptions.py
# Error hierarchy shared by the altperm commands.
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


class Error(Exception):
    """Base error; `value` holds the user-facing message."""

    def __init__(self, value=None):
        super(Error, self).__init__()
        self.value = None if value is None else str(value)

    def __str__(self):
        return "{}".format(self.value)


class ConfigError(Error):
    pass


class CapError(Error):
    pass


class PatternError(Error):
    pass


class SeriesError(Error):
    pass


class StabilityError(Error):
    pass


class KeyFormatError(Error):
    pass


class DomainError(Error):
    pass


class UnsupportedError(Error):
    pass


class FormulaAnomaly(Error):
    """A formula produced something that cannot be a count.

    Carries the offending exponent `n` and the exact `value`.
    """

    def __init__(self, value=None, key=None, n=None, coefficient=None):
        super(FormulaAnomaly, self).__init__(value)
        self.key = key
        self.n = n
        self.coefficient = coefficient
