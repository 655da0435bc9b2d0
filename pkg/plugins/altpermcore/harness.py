# harness.py
# Formula-against-enumeration verification and the discrepancy ledger.
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
Four kinds of cell are verified:

    F<i>:...                  a catalog key, see altpermcore.formulas
    S:<family>:<class>:<assignment>[:printed]
                              a statistics generating function
    R:<class>[:printed]       an rlmax closed form
    P:<class>                 the sum over r <= 3 of the F10 counts against
                              the class total

A formula that disagrees with counting is never corrected; the report
records the first differing coefficient and the ledger keeps it.
"""

from __future__ import absolute_import
from __future__ import unicode_literals
from altpermcore import _, logger
from altpermcore import formulas, stats
from altpermcore.exceptions import DomainError, Error, FormulaAnomaly, KeyFormatError
from altpermcore.oracle import CountQuery
from altpermcore.pattern import ConstraintSpec, chain, increasing, parse_pattern, rotated
from altpermcore.perm import ALTERNATING, CLASSES, check_class

import collections
import datetime
import fnmatch
import json
import os
import tempfile
import time

from fractions import Fraction

MATCH = 'match'
MISMATCH = 'mismatch'
DOMAIN_SKIP = 'domain-skip'
KNOWN_SUSPECT = 'known-suspect'
UNEXPECTED = 'unexpected'

NOT_READABLE = _('Unable to read suspect list: %s')
NO_SUSPECTS = _('No suspect list at %s, every mismatch counts as unexpected')
BAD_CELL = _('Cannot parse statistics cell "%s"')
BAD_RANGE = _('Cannot parse range "%s" in suite section [%s]')
UNKNOWN_SECTION = _('Unknown suite section [%s]')
CERTIFIED = _('partition certified for n in %s')
NOT_CERTIFIED = _('no length certified')
KERNEL_DISAGREES = _('%s differs from its kernel route')

PATTERN_132 = parse_pattern('1-3-2')


def avoid_132():
    return ConstraintSpec.avoid(PATTERN_132)


def constraints_for(key):
    """The counting definition behind a catalog key."""
    key = formulas.as_key(key)
    family, k, r, tau = key.family, key.k, key.r, key.variant
    if family == 'F1':
        return [avoid_132()]
    if family == 'F2':
        return [avoid_132(), ConstraintSpec.avoid(increasing(k))]
    if family == 'F3':
        second = rotated(k) if tau is None else chain(tau, k)
        return [avoid_132(), ConstraintSpec.avoid(second)]
    if family == 'F4':
        return [avoid_132(), ConstraintSpec.exactly(increasing(k), 1)]
    if family == 'F5':
        return [avoid_132(), ConstraintSpec.exactly(chain(tau, k), 1)]
    if family == 'F6':
        return [avoid_132(), ConstraintSpec.exactly(tau, r)]
    once = ConstraintSpec.exactly(PATTERN_132, 1)
    if family == 'F7':
        return [once]
    if family == 'F8':
        second = increasing(k) if tau is None else chain(tau, k)
        return [once, ConstraintSpec.avoid(second)]
    if family == 'F9':
        return [once, ConstraintSpec.exactly(increasing(k), 1)]
    return [ConstraintSpec.exactly(PATTERN_132, r)]


StatsCell = collections.namedtuple('StatsCell', 'kind family label assignment printed')


def parse_cell(text):
    parts = text.strip().split(':')
    printed = parts[-1] == 'printed'
    if printed:
        parts = parts[:-1]
    try:
        if parts[0] == 'R' and len(parts) == 2:
            return StatsCell('R', stats.CLASSICAL, check_class(parts[1]), stats.Assignment(stats.RLMAX), printed)
        if parts[0] == 'S' and len(parts) >= 4:
            assignment = stats.Assignment.parse(':'.join(parts[3:]))
            return StatsCell('S', parts[1], check_class(parts[2]), assignment, printed)
    except Error:
        pass
    raise KeyFormatError(BAD_CELL % text)


def cell_name(cell):
    if cell.kind == 'R':
        parts = ['R', cell.label]
    else:
        parts = ['S', cell.family, cell.label, str(cell.assignment)]
    if cell.printed:
        parts.append('printed')
    return ':'.join(parts)


def is_cell(text):
    return text.startswith('S:') or text.startswith('R:')


def is_partition(text):
    return text.startswith('P:')


def read_suspects(path):
    """fnmatch patterns, one per line; '#' starts a comment line."""
    suspects = []
    if not path:
        return suspects
    if not os.path.exists(path):
        logger.warning(NO_SUSPECTS, path)
        return suspects
    try:
        with open(path) as f:
            for line in f.readlines():
                if line.startswith('#') or line.strip() == '':
                    continue
                suspects.append(line.strip())
    except IOError as e:
        raise Error(NOT_READABLE % e)
    return suspects


def is_suspect(name, suspects):
    return any(fnmatch.fnmatchcase(name, pattern) for pattern in suspects)


class VerificationReport(object):

    def __init__(self, key, n_range, status, first_mismatch=None, runtime=0.0,
                 suspect=False, note=None):
        self.key = key
        self.n_range = n_range
        self.status = status
        self.first_mismatch = first_mismatch
        self.runtime = runtime
        self.suspect = suspect
        self.note = note

    @property
    def flag(self):
        if self.status != MISMATCH:
            return None
        return KNOWN_SUSPECT if self.suspect else UNEXPECTED

    def to_json(self):
        mismatch = None
        if self.first_mismatch is not None:
            n, formula, oracle = self.first_mismatch
            mismatch = {'n': n, 'formula': str(formula), 'oracle': str(oracle)}
        return {
            'key': self.key,
            'n_range': list(self.n_range),
            'status': self.status,
            'first_mismatch': mismatch,
            'suspect': self.suspect,
            'flag': self.flag,
            'note': self.note,
            'timestamp': datetime.datetime.now(datetime.timezone.utc).isoformat(),
        }

    def __str__(self):
        text = '%s %s n=%d..%d' % (self.key, self.status, self.n_range[0], self.n_range[1])
        if self.first_mismatch is not None:
            n, formula, oracle = self.first_mismatch
            text += ' (n=%d: formula %s, oracle %s)' % (n, formula, oracle)
        if self.flag:
            text += ' [%s]' % self.flag
        return text


def _first_difference(expected, observed):
    for n in sorted(expected):
        if Fraction(expected[n]) != Fraction(observed.get(n, 0)):
            return n, expected[n], observed.get(n, 0)
    return None


def _verify_key(key, n_max, oracle, order):
    key = formulas.check_domain(key)
    constraints = constraints_for(key)
    try:
        predicted = formulas.exact_values(key, n_max, order)
    except FormulaAnomaly as e:
        return (e.n, e.coefficient, 0), e.value, (0, n_max)
    n_min = min(predicted) if predicted else 0
    if key.family == 'F2' and key.label == ALTERNATING and not key.remark:
        kernel = formulas.f2_kernel(key.k, max(n_max, order or 0))
        differs = _first_difference(predicted, dict((n, kernel.coeff(n)) for n in predicted))
        if differs is not None:
            return differs, KERNEL_DISAGREES % (key,), (n_min, n_max)
    counted = dict((n, oracle.count_exact(CountQuery(n, key.label, constraints)))
                   for n in predicted)
    return _first_difference(predicted, counted), None, (n_min, n_max)


def _stats_series(cell, order, ymax):
    if cell.kind == 'R':
        return stats.rlmax_gf(cell.label, order, ymax, cell.printed)
    return stats.stat_gf(cell.family, cell.label, cell.assignment, order, ymax, cell.printed)


def _verify_cell(cell, n_max, oracle, order):
    statistic = cell.assignment.statistic(cell.family)
    tables = {}
    for n in range(n_max + 1):
        query = CountQuery(n, cell.label, [avoid_132()], statistic)
        tables[n] = oracle.distribution(query).counts
    ymax = 2 + max([abs(value) for table in tables.values() for value in table
                    if value is not None] + [0])
    series = _stats_series(cell, max(order or 0, n_max), ymax)
    for n in range(n_max + 1):
        if statistic is None:
            expected = {0: series.marginal().coeff(n)}
            observed = {0: tables[n].get(0, 0)}
        else:
            expected = series.row(n)
            observed = tables[n]
        for value in sorted(set(expected) | set(observed)):
            if Fraction(expected.get(value, 0)) != Fraction(observed.get(value, 0)):
                return (n, '%s@y^%d' % (expected.get(value, 0), value),
                        '%s@y^%d' % (observed.get(value, 0), value))
    return None


def verify(key, n_max, oracle, order=None, suspects=()):
    """Compare a catalog key or a statistics cell with exhaustive counts for n <= n_max."""
    started = time.time()
    note = None
    if is_cell(str(key)):
        cell = parse_cell(str(key))
        name = cell_name(cell)
        n_range = (0, n_max)
        try:
            stats.check_supported(cell.family, cell.label, cell.assignment)
        except Error as e:
            return VerificationReport(name, n_range, DOMAIN_SKIP, note=e.value,
                                      suspect=is_suspect(name, suspects))
        mismatch = _verify_cell(cell, n_max, oracle, order)
    elif is_partition(str(key)):
        name = str(key).strip()
        n_range = (0, n_max)
        if name[2:] not in CLASSES:
            raise KeyFormatError(BAD_CELL % name)
        try:
            mismatch, note = _verify_partition(name[2:], n_max, oracle, order)
        except DomainError as e:
            return VerificationReport(name, n_range, DOMAIN_SKIP, note=e.value,
                                      suspect=is_suspect(name, suspects))
    else:
        key = formulas.as_key(key)
        name = str(key)
        try:
            mismatch, note, n_range = _verify_key(key, n_max, oracle, order)
        except DomainError as e:
            return VerificationReport(name, (0, n_max), DOMAIN_SKIP, note=e.value,
                                      suspect=is_suspect(name, suspects))
    status = MATCH if mismatch is None else MISMATCH
    report = VerificationReport(name, n_range, status, mismatch, time.time() - started,
                                is_suspect(name, suspects), note)
    logger.info('%s', report)
    logger.debug(_('%s took %.3fs'), name, report.runtime)
    return report


class PartitionRow(collections.namedtuple('PartitionRow', 'n certified predicted total')):

    __slots__ = ()

    @property
    def holds(self):
        return self.predicted == self.total


def partition_check(label, n_max, oracle, order=None):
    """PartitionRow per length: sum_r F10 counts against the class total.

    n is certified when no member of the class has more than three
    occurrences of 1-3-2.
    """
    series = [formulas.gf(formulas.FamilyKey('F10', label, r=r), max(n_max, order or 0))
              for r in range(4)]
    rows = []
    for n in range(n_max + 1):
        table = oracle.distribution(CountQuery(n, label, (), 'occ:1-3-2')).counts
        certified = max(table or [0]) <= 3
        predicted = sum(s.coeff(n) for s in series)
        rows.append(PartitionRow(n, certified, predicted, sum(table.values())))
    return rows


def _verify_partition(label, n_max, oracle, order):
    try:
        rows = partition_check(label, n_max, oracle, order)
    except FormulaAnomaly as e:
        return (e.n, e.coefficient, 0), e.value
    certified = [row.n for row in rows if row.certified]
    note = CERTIFIED % ','.join(str(n) for n in certified) if certified else NOT_CERTIFIED
    for row in rows:
        if row.certified and not row.holds:
            return (row.n, row.predicted, row.total), note
    return None, note


def _split(parser, section, option, default=''):
    if not parser.has_option(section, option):
        return default.split()
    return parser.get(section, option).replace(',', ' ').split()


def _numbers(parser, section, option):
    """'2-5' or '0 1 2' -> list of ints; [None] when the option is absent."""
    values = _split(parser, section, option)
    if not values:
        return [None]
    out = []
    for value in values:
        lo, sep, hi = value.partition('-')
        try:
            if sep:
                out.extend(range(int(lo), int(hi) + 1))
            else:
                out.append(int(value))
        except ValueError:
            raise Error(BAD_RANGE % (value, section))
    return out


def suite_matrix(parser):
    """Deterministic list of (cell or key string, n_max) pairs declared by a suite file."""
    default_n = parser.getint('main', 'n_max') if parser.has_option('main', 'n_max') else 9
    rows = []
    for section in parser.sections():
        if section == 'main':
            continue
        n_max = parser.getint(section, 'n_max') if parser.has_option(section, 'n_max') else default_n
        if section in formulas.FAMILIES:
            classes = _split(parser, section, 'classes', ' '.join(CLASSES))
            taus = [None if t == 'none' else t for t in _split(parser, section, 'tau', 'none')]
            for tau in taus:
                for label in classes:
                    for k in _numbers(parser, section, 'k'):
                        for r in _numbers(parser, section, 'r'):
                            key = formulas.FamilyKey(section, label, k=k, r=r, variant=tau)
                            if (section, tau) in formulas.DOMAINS and \
                                    formulas.DOMAINS[(section, tau)].contains(key):
                                rows.append((str(key), n_max))
                            else:
                                logger.debug(_('Suite skips %s outside its range'), key)
        elif section == 'remarks':
            rows.extend((key, n_max) for key in _split(parser, section, 'keys'))
        elif section == 'stats':
            for family in _split(parser, section, 'families'):
                for label in _split(parser, section, 'classes'):
                    for assignment in _split(parser, section, 'assignments'):
                        cell = 'S:%s:%s:%s' % (family, label, assignment)
                        try:
                            stats.check_supported(family, label, stats.Assignment.parse(assignment))
                        except Error:
                            continue
                        rows.append((cell, n_max))
                        if family == stats.CLASSICAL and parser.has_option(section, 'printed') \
                                and parser.getboolean(section, 'printed'):
                            rows.append((cell + ':printed', n_max))
        elif section == 'rlmax':
            for label in _split(parser, section, 'classes'):
                rows.append(('R:%s' % label, n_max))
                if parser.has_option(section, 'printed') and parser.getboolean(section, 'printed'):
                    rows.append(('R:%s:printed' % label, n_max))
        elif section == 'partition':
            rows.extend(('P:%s' % label, n_max) for label in _split(parser, section, 'classes'))
        else:
            raise Error(UNKNOWN_SECTION % section)
    return rows


class SuiteSummary(object):

    def __init__(self, reports):
        self.reports = reports
        self.counts = collections.Counter(r.status for r in reports)
        self.unexpected = [r for r in reports if r.flag == UNEXPECTED]
        self.known = [r for r in reports if r.flag == KNOWN_SUSPECT]

    @property
    def ok(self):
        return not self.unexpected

    def lines(self):
        out = ['%-12s %d' % (status, self.counts.get(status, 0))
               for status in (MATCH, MISMATCH, DOMAIN_SKIP)]
        out.append('%-12s %d' % (KNOWN_SUSPECT, len(self.known)))
        out.append('%-12s %d' % (UNEXPECTED, len(self.unexpected)))
        out.extend('  %s' % r for r in self.unexpected)
        return out


def write_ledger(path, reports):
    """JSON lines, one report each, written with write-temp-then-rename.

    Two runs of the same suite differ only in the timestamp fields.
    """
    dirname = os.path.dirname(os.path.abspath(path))
    if not os.path.isdir(dirname):
        os.makedirs(dirname)
    (out, tmpfilename) = tempfile.mkstemp(dir=dirname, suffix='.tmp')
    with os.fdopen(out, 'w', -1) as out:
        for report in reports:
            out.write(json.dumps(report.to_json(), sort_keys=True))
            out.write('\n')
    os.chmod(tmpfilename, 0o644)
    os.rename(tmpfilename, path)


def run_suite(parser, oracle, ledger=None, suspects=(), order=None):
    reports = []
    for name, n_max in suite_matrix(parser):
        reports.append(verify(name, n_max, oracle, order, suspects))
    if ledger:
        write_ledger(ledger, reports)
        logger.debug(_('Ledger written to %s'), ledger)
    return SuiteSummary(reports)
