# cli.py
# Command line front end: commands, plugins and the main entry point.
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
from __future__ import print_function
from __future__ import unicode_literals
from altpermcore import _, logger, VERSION
from altpermcore.config import Config
from altpermcore.exceptions import Error
from altpermcore.oracle import Oracle

import argparse
import csv
import glob
import importlib.util
import json
import logging
import os
import sys

NO_COMMAND = _('No command given, available commands: %s')
PLUGIN_FAILED = _('Failed loading plugin "%s": %s')


class Base(object):
    """Shared state handed to every plugin and command."""

    def __init__(self, conf=None):
        self.conf = conf or Config()
        self._oracle = None

    @property
    def oracle(self):
        if self._oracle is None:
            self._oracle = Oracle(self.conf.cache_dir, self.conf.threads, self.conf.n_cap)
        return self._oracle


class Command(object):
    aliases = ()
    summary = ''

    def __init__(self, cli):
        self.cli = cli
        self.opts = None

    @property
    def base(self):
        return self.cli.base

    @staticmethod
    def set_argparser(parser):
        pass

    def configure(self):
        pass

    def run(self):
        pass


class Plugin(object):
    name = None

    def __init__(self, base, cli):
        self.base = base
        self.cli = cli


def add_global_options(parser, suppress=False):
    """Options accepted before and after the command name.

    Repeated on each command parser with suppressed defaults so a value
    given before the command is not reset by the command parser.
    """
    default = argparse.SUPPRESS if suppress else None
    parser.add_argument('--conf', default=default, help=_('configuration file'))
    parser.add_argument('--order', type=int, default=default, help=_('series truncation order'))
    parser.add_argument('--cache-dir', dest='cache_dir', default=default,
                        help=_('oracle cache directory, empty to disable'))
    parser.add_argument('--threads', type=int, default=default, help=_('oracle worker processes'))
    parser.add_argument('--n-cap', dest='n_cap', type=int, default=default,
                        help=_('largest permutation length enumerated'))
    parser.add_argument('-v', '--verbose', action='store_true',
                        default=argparse.SUPPRESS if suppress else False, help=_('debugging output'))


def command_parser(command_cls, prog='altperm'):
    """A stand-alone parser for one command, global options included."""
    parser = argparse.ArgumentParser(prog='%s %s' % (prog, command_cls.aliases[0]),
                                     description=command_cls.summary)
    add_global_options(parser)
    command_cls.set_argparser(parser)
    return parser


def print_csv(header, rows):
    writer = csv.writer(sys.stdout, lineterminator='\n')
    writer.writerow(header)
    for row in rows:
        writer.writerow([str(value) for value in row])


def print_json(data):
    print(json.dumps(data, indent=2, sort_keys=True))


class Cli(object):

    def __init__(self, base):
        self.base = base
        self.cli_commands = {}
        self.command = None

    def register_command(self, command_cls):
        for alias in command_cls.aliases:
            self.cli_commands[alias] = command_cls

    def load_plugins(self, pluginpath):
        for path in sorted(glob.glob(os.path.join(pluginpath, '*.py'))):
            name = os.path.splitext(os.path.basename(path))[0]
            try:
                spec = importlib.util.spec_from_file_location('altperm_plugin_' + name, path)
                module = importlib.util.module_from_spec(spec)
                spec.loader.exec_module(module)
            except Exception as e:
                logger.warning(PLUGIN_FAILED, name, e)
                continue
            logger.debug(_('Loaded plugin %s'), name)
        for plugin_cls in Plugin.__subclasses__():
            if plugin_cls.name is not None:
                plugin_cls(self.base, self)

    def build_parser(self):
        parser = argparse.ArgumentParser(prog='altperm', description=_(
            'Generating functions of 132-restricted alternating permutations'))
        add_global_options(parser)
        parser.add_argument('--version', action='version', version='%(prog)s ' + VERSION)
        subparsers = parser.add_subparsers(dest='command', metavar='command')
        seen = set()
        for alias in sorted(self.cli_commands):
            command_cls = self.cli_commands[alias]
            if command_cls in seen:
                continue
            seen.add(command_cls)
            sub = subparsers.add_parser(command_cls.aliases[0], aliases=list(command_cls.aliases[1:]),
                                        help=command_cls.summary)
            add_global_options(sub, suppress=True)
            command_cls.set_argparser(sub)
        return parser

    def configure(self, args):
        opts = self.build_parser().parse_args(args)
        if not opts.command:
            raise Error(NO_COMMAND % ', '.join(sorted(self.cli_commands)))
        logger.debug(_('Running command %s'), opts.command)
        self.command = self.cli_commands[opts.command](self)
        self.command.opts = opts
        self.command.configure()
        return self.command


def setup_logging(verbose):
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter('%(message)s'))
    root = logging.getLogger('altperm')
    root.addHandler(handler)
    root.setLevel(logging.DEBUG if verbose else logging.INFO)
    return handler


def main(args=None, pluginpath=None):
    args = sys.argv[1:] if args is None else args
    pre = argparse.ArgumentParser(add_help=False, allow_abbrev=False)
    add_global_options(pre)
    early, _rest = pre.parse_known_args(args)
    handler = setup_logging(early.verbose)
    try:
        conf = Config.load(early.conf, overrides={
            'order': early.order,
            'cache_dir': early.cache_dir,
            'threads': early.threads,
            'n_cap': early.n_cap,
        })
        cli = Cli(Base(conf))
        cli.load_plugins(pluginpath or conf.pluginpath)
        cli.configure(args).run()
    except Error as e:
        print(_('Error: %s') % e, file=sys.stderr)
        return 1
    finally:
        logging.getLogger('altperm').removeHandler(handler)
    return 0
