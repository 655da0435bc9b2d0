# config.py
# Settings shared by every altperm command.
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
Precedence, lowest first: built-in defaults, the [main] section of the
config file, ALTPERM_* environment variables, command line options.
"""

from __future__ import absolute_import
from __future__ import unicode_literals
from altpermcore import _, logger
from altpermcore.exceptions import ConfigError

import configparser
import os

DEFAULT_CONFIG = '/etc/altperm/altperm.conf'
DEFAULT_SUITE = '/etc/altperm/suite.conf'
CONFIG_ENV = 'ALTPERM_CONFIG'

DEFAULTS = {
    'order': '24',
    'n_cap': '12',
    'threads': '1',
    'cache_dir': '~/.cache/altperm',
    'suspects': '/etc/altperm/suspects.list',
    'suite': DEFAULT_SUITE,
    'pluginpath': os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))),
                               'altperm-plugins'),
}
INTEGERS = ('order', 'n_cap', 'threads')
PATHS = ('cache_dir', 'suspects', 'suite', 'pluginpath')
ENVIRONMENT = {
    'order': 'ALTPERM_ORDER',
    'n_cap': 'ALTPERM_N_CAP',
    'threads': 'ALTPERM_THREADS',
    'cache_dir': 'ALTPERM_CACHE_DIR',
    'suspects': 'ALTPERM_SUSPECTS',
}

NOT_READABLE = _('Unable to read configuration file %s')
BAD_SYNTAX = _('Syntax error in configuration file %s: %s')
BAD_INTEGER = _('Option %s must be a positive integer, got "%s"')


def _integer(name, value):
    try:
        number = int(value)
    except (TypeError, ValueError):
        raise ConfigError(BAD_INTEGER % (name, value))
    if number < 1:
        raise ConfigError(BAD_INTEGER % (name, value))
    return number


def read_config(path, required=False):
    """Parse an INI file; a missing optional file yields an empty parser."""
    parser = configparser.ConfigParser()
    try:
        found = parser.read(path)
    except configparser.Error as e:
        raise ConfigError(BAD_SYNTAX % (path, e))
    if required and not found:
        raise ConfigError(NOT_READABLE % path)
    return parser


class Config(object):

    def __init__(self, **values):
        merged = dict(DEFAULTS)
        merged.update((k, v) for k, v in values.items() if v is not None)
        for name in INTEGERS:
            setattr(self, name, _integer(name, merged[name]))
        for name in PATHS:
            value = merged[name]
            setattr(self, name, os.path.expanduser(value) if value else None)

    @classmethod
    def load(cls, path=None, environ=None, overrides=None):
        environ = os.environ if environ is None else environ
        explicit = path or environ.get(CONFIG_ENV)
        values = {}
        parser = read_config(explicit or DEFAULT_CONFIG, required=bool(explicit))
        if parser.has_section('main'):
            for name in DEFAULTS:
                if parser.has_option('main', name):
                    values[name] = parser.get('main', name)
        for name, variable in ENVIRONMENT.items():
            if variable in environ:
                values[name] = environ[variable]
        for name, value in (overrides or {}).items():
            if value is not None:
                values[name] = str(value)
        conf = cls(**values)
        logger.debug(_('Configuration: order=%d n_cap=%d threads=%d cache_dir=%s'),
                     conf.order, conf.n_cap, conf.threads, conf.cache_dir)
        return conf
