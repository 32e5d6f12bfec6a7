# Experiment harness: runs the join over a grid of thresholds, selection
# strategies and verifiers and reports counters and timings.

# Copyright (c) 2026 segjoin developers.
# Licensed under the Apache License, Version 2.0.

import sys
import json
import time
import logging

import numpy
import scipy.stats

from segjoin.sjlib.core import DatasetError, ConfigError, threshold
from segjoin.sjlib.selection import (
    SelectionStrategy, enumerate_probes, selection_count, selection_bound)
from segjoin.sjlib.join import JoinConfig, Verifier, self_join
from segjoin.sjlib.dataset import (
    load_dataset, generate_dataset, dataset_stats)
from segjoin.sjlib import config
from segjoin.sjlib.log import configure_logging
from segjoin.tool.segjoin_cli import Parser, UsageError


log = logging.getLogger(__name__)


def probe_lengths(records, tau):
    '''Yields (content, l) for every probe string and every index length it
    would visit in a self join, restricted to lengths present in records.'''
    present = set(len(record.content) for record in records)
    for record in records:
        length = len(record.content)
        for l in range(max(length - tau, tau + 1), length + 1):
            if l in present:
                yield record.content, l


def selection_totals(records, tau, strategy):
    '''Total selected substrings over a dataset for one strategy: the actual
    count, the analytic bound and the time taken to generate them.'''
    pairs = list(probe_lengths(records, tau))
    total = sum(selection_count(strategy, len(s), l, tau) for s, l in pairs)
    bound = sum(selection_bound(strategy, len(s), l, tau) for s, l in pairs)
    started = time.perf_counter()
    for s, l in pairs:
        enumerate_probes(s, l, tau, strategy)
    return dict(
        selection_total = total, selection_bound = bound,
        time_select = time.perf_counter() - started)


def run_experiment(records, taus, strategies = None, verifiers = None):
    '''Runs a self join of records for every combination of threshold,
    strategy and verifier.  Returns one flat report dictionary per run.'''
    if strategies is None:
        strategies = SelectionStrategy.ladder()
    if verifiers is None:
        verifiers = Verifier.ladder()
    reports = []
    for tau in taus:
        tau = threshold(tau)
        for strategy in strategies:
            selection = selection_totals(records, tau, strategy)
            for verifier in verifiers:
                result = self_join(records, JoinConfig(tau, strategy, verifier))
                report = dict(
                    kind = 'join', strings = len(records), tau = tau,
                    selector = strategy.value, verifier = verifier.value,
                    pairs = len(result.pairs))
                report.update(selection)
                report.update(result.stats.as_dict())
                log.info('tau=%d %s/%s: %d candidates, %.3fs',
                    tau, strategy.value, verifier.value,
                    report['candidates_seen'], report['time_total'])
                reports.append(report)
    return reports


def ladder_violations(reports, key = 'candidates_seen'):
    '''Returns the runs where key increases going down the selection ladder
    with threshold and verifier fixed, as (tau, verifier, worse, better).'''
    rank = dict(
        (strategy.value, n)
        for n, strategy in enumerate(SelectionStrategy.ladder()))
    groups = {}
    for report in reports:
        if report.get('kind') == 'join':
            groups.setdefault(
                (report['tau'], report['verifier']), []).append(report)
    violations = []
    for (tau, verifier), group in sorted(groups.items()):
        group.sort(key = lambda report: rank[report['selector']])
        for looser, tighter in zip(group, group[1:]):
            if tighter[key] > looser[key]:
                violations.append(
                    (tau, verifier, tighter['selector'], looser['selector']))
    return violations


def scaling(sizes, tau, strategy = SelectionStrategy.MULTIMATCH,
        verifier = Verifier.EXTENSION_SHARE, **generator):
    '''Times self joins of generated datasets of the given sizes.  The growth
    factor per doubling of size comes from a least squares fit of log2 time
    against log2 size.'''
    join_config = JoinConfig(threshold(tau), strategy, verifier)
    times = []
    for size in sizes:
        records = generate_dataset(size, **generator)
        result = self_join(records, join_config)
        times.append(result.stats.time_total)
        log.info('Scaling: %d strings in %.3fs', size, times[-1])

    report = dict(
        kind = 'scaling', tau = join_config.tau, selector = strategy.value,
        verifier = verifier.value, sizes = list(sizes), times = times)
    if len(sizes) >= 2:
        fit = scipy.stats.linregress(
            numpy.log2(sizes), numpy.log2(numpy.maximum(times, 1e-9)))
        report.update(
            slope = float(fit.slope),
            growth_per_doubling = float(2 ** fit.slope),
            rvalue = float(fit.rvalue))
    return report


# ------------------------------------------------------------------------------
# Command line

def parse_range(text):
    lo, sep, hi = text.partition(':')
    try:
        lo = int(lo)
        hi = int(hi) if sep else lo
    except ValueError:
        raise UsageError('Invalid tau range %r' % text) from None
    if lo < 0 or hi < lo:
        raise UsageError('Invalid tau range %r' % text)
    return range(lo, hi + 1)


def parse_choices(text, enum, default):
    if text is None:
        return default
    try:
        return [enum(name.strip()) for name in text.split(',')]
    except ValueError as error:
        raise UsageError(str(error)) from None


def parse_sizes(text):
    try:
        sizes = [int(size) for size in text.split(',')]
    except ValueError:
        raise UsageError('Invalid size list %r' % text) from None
    if min(sizes) < 1:
        raise UsageError('Invalid size list %r' % text)
    return sizes


def generated(count, generator):
    try:
        return generate_dataset(count, **generator)
    except ValueError as error:
        raise UsageError(str(error)) from None


def make_parser():
    parser = Parser(usage = '''\
segjoin-bench [--input PATH | --gen COUNT] [options]

Runs self joins of a dataset, generated from the profile unless --input is
given, over a grid of thresholds, selectors and verifiers and
prints counters and timings for each.  Profiles available for -p: %s.''' %
        ', '.join(config.list_profiles()))
    parser.add_option('--input', help = 'Dataset file, one string per line')
    parser.add_option(
        '--gen', type = 'int', help = 'Use COUNT generated strings')
    parser.add_option('--seed', type = 'int', help = 'Generator seed')
    parser.add_option('--len-min', type = 'int', help = 'Generated min length')
    parser.add_option('--len-max', type = 'int', help = 'Generated max length')
    parser.add_option('--alphabet', type = 'int', help = 'Generated alphabet size')
    parser.add_option(
        '--tau-range', help = 'Thresholds to run, A:B inclusive')
    parser.add_option(
        '--selectors', help = 'Comma separated selectors, default all')
    parser.add_option(
        '--verifiers', help = 'Comma separated verifiers, default the ladder')
    parser.add_option(
        '--scaling', help = 'Also time generated datasets of sizes '
        'N1,N2,..., or of the profile BENCH_SCALING sizes if "profile"')
    parser.add_option(
        '--describe', default = False, action = 'store_true',
        help = 'Print dataset summary')
    parser.add_option(
        '--report', help = 'Write reports as JSON lines to file')
    parser.add_option(
        '-p', '--profile', default = 'BENCH', help = 'Profile of settings')
    parser.add_option(
        '-f', dest = 'full_path', default = False, action = 'store_true',
        help = 'Profile is full path to profile file')
    parser.add_option(
        '--graylog', help = 'Also send log records to HOST[:PORT]')
    parser.add_option('--log-level', help = 'Log level')
    return parser


def print_reports(reports, output):
    output.write('%4s %-11s %-16s %10s %12s %14s %8s %9s\n' % (
        'tau', 'selector', 'verifier', 'selected', 'candidates',
        'cells', 'pairs', 'seconds'))
    for report in reports:
        if report['kind'] != 'join':
            continue
        output.write('%4d %-11s %-16s %10d %12d %14d %8d %9.3f\n' % (
            report['tau'], report['selector'], report['verifier'],
            report['selection_total'], report['candidates_seen'],
            report['dp_cells_computed'], report['pairs'],
            report['time_total']))


def print_scaling(report, output):
    for size, seconds in zip(report['sizes'], report['times']):
        output.write('%8d strings %9.3fs\n' % (size, seconds))
    if 'growth_per_doubling' in report:
        output.write('growth per doubling %.2f\n' %
            report['growth_per_doubling'])


def write_reports(reports, path):
    try:
        with open(path, 'w') as output:
            for report in reports:
                output.write(json.dumps(report, sort_keys = True) + '\n')
    except OSError as error:
        raise DatasetError('Unable to write %s: %s' % (path, error)) from error


def run_bench(args, stdout = None, stderr = None):
    if stdout is None:
        stdout = sys.stdout
    if stderr is None:
        stderr = sys.stderr
    parser = make_parser()
    try:
        options, arglist = parser.parse_args(args)
        if arglist:
            raise UsageError('Unexpected arguments: %s' % ' '.join(arglist))
        settings = config.load_profile(
            options.profile, options.full_path,
            GEN_COUNT = options.gen, GEN_SEED = options.seed,
            GEN_LEN_MIN = options.len_min, GEN_LEN_MAX = options.len_max,
            GEN_ALPHABET = options.alphabet, GRAYLOG = options.graylog,
            LOG_LEVEL = options.log_level)
        configure_logging(settings['LOG_LEVEL'], settings['GRAYLOG'])

        generator = dict(
            len_min = settings['GEN_LEN_MIN'], len_max = settings['GEN_LEN_MAX'],
            alphabet = settings['GEN_ALPHABET'], seed = settings['GEN_SEED'])
        if options.input:
            records = load_dataset(options.input)
        else:
            records = generated(settings['GEN_COUNT'], generator)

        if options.tau_range:
            taus = parse_range(options.tau_range)
        else:
            lo, hi = settings.get(
                'BENCH_TAU_RANGE', (settings['TAU'], settings['TAU']))
            taus = range(lo, hi + 1)
        strategies = parse_choices(
            options.selectors, SelectionStrategy,
            [SelectionStrategy(name) for name in settings.get(
                'BENCH_SELECTORS', [s.value for s in SelectionStrategy.ladder()])])
        verifiers = parse_choices(
            options.verifiers, Verifier,
            [Verifier(name) for name in settings.get(
                'BENCH_VERIFIERS', [v.value for v in Verifier.ladder()])])

        if options.describe:
            for key, value in sorted(dataset_stats(records).items()):
                stdout.write('%-12s %s\n' % (key, value))

        reports = run_experiment(records, taus, strategies, verifiers)
        print_reports(reports, stdout)
        for violation in ladder_violations(reports):
            log.warning('tau=%d %s: %s sees more candidates than %s',
                *violation)

        if options.scaling:
            if options.scaling == 'profile':
                sizes = settings.get('BENCH_SCALING', [])
            else:
                sizes = parse_sizes(options.scaling)
            try:
                report = scaling(sizes, taus[0], **generator)
            except ValueError as error:
                raise UsageError(str(error)) from None
            print_scaling(report, stdout)
            reports.append(report)

        if options.report:
            write_reports(reports, options.report)
    except UsageError as error:
        parser.print_usage(stderr)
        stderr.write('segjoin-bench: error: %s\n' % error)
        return 1
    except (DatasetError, ConfigError) as error:
        stderr.write('segjoin-bench: %s\n' % error)
        return 2
    return 0


def main():
    sys.exit(run_bench(sys.argv[1:]))
