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

import altpermcore.cli
import os
import shutil
import tempfile
import unittest

from altpermcore.config import Config
from altpermcore.oracle import Oracle

from io import StringIO  # noqa: F401
from unittest import mock  # noqa: F401

ETC = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), 'etc', 'altperm')


def command_configure(cmd, args):
    parser = altpermcore.cli.command_parser(cmd.__class__)
    cmd.opts = parser.parse_args(args)
    return cmd.configure()


def command_run(cmd, args):
    command_configure(cmd, args)
    return cmd.run()


class BaseStub(object):
    """A `altpermcore.cli.Base` with a private cache and no suspect list."""

    def __init__(self, cache_dir='', **values):
        values.setdefault('suspects', '')
        self.conf = Config(cache_dir=cache_dir, **values)
        self._oracle = None

    @property
    def oracle(self):
        if self._oracle is None:
            self._oracle = Oracle(self.conf.cache_dir, self.conf.threads, self.conf.n_cap)
        return self._oracle


class CliStub(object):
    """A class mocking `altpermcore.cli.Cli`."""

    def __init__(self, base):
        self.base = base
        self.cli_commands = {}

    def register_command(self, command):
        """Register given *command*."""
        self.cli_commands.update({alias: command for alias in command.aliases})


class TestCase(unittest.TestCase):
    def assertEmpty(self, collection):
        return self.assertEqual(len(collection), 0)

    def assertCoefficients(self, series, expected, start=0):
        self.assertEqual(series.coefficients(start, start + len(expected) - 1), list(expected))


class TempDirTestCase(TestCase):
    def setUp(self):
        self.tmpdir = tempfile.mkdtemp(prefix='altperm-test-')

    def tearDown(self):
        shutil.rmtree(self.tmpdir)

    def path(self, *parts):
        return os.path.join(self.tmpdir, *parts)
