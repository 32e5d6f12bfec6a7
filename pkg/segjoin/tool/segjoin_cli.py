# Command line front end for string similarity joins.

# Copyright (c) 2026 segjoin developers.
# Licensed under the Apache License, Version 2.0.

import sys
import logging
import optparse

from segjoin.sjlib.core import (
    SegjoinError, DatasetError, ConfigError, OracleMismatch, threshold)
from segjoin.sjlib.selection import SelectionStrategy
from segjoin.sjlib.join import (
    JoinConfig, JoinMode, Verifier, similarity_join)
from segjoin.sjlib.dataset import (
    load_dataset, save_dataset, write_pairs, write_stats, generate_dataset,
    brute_force_join, brute_force_rs_join)
from segjoin.sjlib import config
from segjoin.sjlib.log import configure_logging


log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_IO = 2
EXIT_ORACLE = 3

SELECTORS = [strategy.value for strategy in SelectionStrategy]
VERIFIERS = [verifier.value for verifier in Verifier]


class UsageError(SegjoinError):
    pass


class Parser(optparse.OptionParser):
    # Usage errors are reported by run_cli with their own exit status.
    def error(self, message):
        raise UsageError(message)


def make_parser():
    parser = Parser(usage = '''\
segjoin --mode self (--input PATH | --gen COUNT) [options]
       segjoin --mode rs --left PATH --right PATH [options]

Finds all pairs of lines within edit distance tau of each other.  Pairs are
written as id_a<TAB>id_b<TAB>distance with ids counting input lines from 0.
Profiles available for -p: %s.''' % ', '.join(config.list_profiles()))
    parser.add_option(
        '--mode', default = 'self', type = 'choice', choices = ['self', 'rs'],
        help = 'Self join of one input, or join of --left with --right')
    parser.add_option('--input', help = 'Input file for a self join')
    parser.add_option('--left', help = 'Left input file for an rs join')
    parser.add_option('--right', help = 'Right input file for an rs join')
    parser.add_option(
        '--tau', type = 'int', help = 'Edit distance threshold')
    parser.add_option(
        '--selector', type = 'choice', choices = SELECTORS,
        help = 'Substring selection, one of %s' % ', '.join(SELECTORS))
    parser.add_option(
        '--verifier', type = 'choice', choices = VERIFIERS,
        help = 'Candidate verification, one of %s' % ', '.join(VERIFIERS))
    parser.add_option(
        '-o', '--output', help = 'Write pairs to file instead of stdout')
    parser.add_option('--stats', help = 'Write join statistics as JSON')
    parser.add_option(
        '--oracle-check', default = False, action = 'store_true',
        help = 'Compare the result against a brute force join')
    parser.add_option(
        '--threads', type = 'int',
        help = 'Number of probe workers (rs mode only)')
    parser.add_option(
        '--index-side', default = 'larger', type = 'choice',
        choices = ['larger', 'left', 'right'],
        help = 'Which input of an rs join is indexed, default the larger')

    parser.add_option(
        '--gen', type = 'int', help = 'Join COUNT generated strings')
    parser.add_option('--seed', type = 'int', help = 'Generator seed')
    parser.add_option('--len-min', type = 'int', help = 'Generated min length')
    parser.add_option('--len-max', type = 'int', help = 'Generated max length')
    parser.add_option('--alphabet', type = 'int', help = 'Generated alphabet size')
    parser.add_option(
        '--dump', help = 'Write the generated strings to file and exit')

    parser.add_option(
        '-p', '--profile', default = config.DEFAULT_PROFILE,
        help = 'Profile of default settings')
    parser.add_option(
        '-f', dest = 'full_path', default = False, action = 'store_true',
        help = 'Profile is full path to profile file')
    parser.add_option(
        '--graylog', help = 'Also send log records to HOST[:PORT]')
    parser.add_option(
        '--log-level', help = 'Log level, default WARNING')
    return parser


def make_config(settings, mode):
    try:
        return JoinConfig(
            threshold(settings['TAU']),
            SelectionStrategy(settings['SELECTOR']),
            Verifier(settings['VERIFIER']),
            mode)
    except ValueError as error:
        raise UsageError(str(error)) from None


def generate(settings):
    try:
        return generate_dataset(
            settings['GEN_COUNT'], settings['GEN_LEN_MIN'],
            settings['GEN_LEN_MAX'], settings['GEN_ALPHABET'],
            settings['GEN_SEED'])
    except ValueError as error:
        raise UsageError(str(error)) from None


def oracle_check(pairs, expected):
    found = set(pairs)
    expected = set(expected)
    if found != expected:
        raise OracleMismatch(
            sorted(expected - found), sorted(found - expected))
    log.info('Oracle check passed: %d pairs', len(found))


def run_join(options, settings, stdout):
    mode = JoinMode(options.mode)
    join_config = make_config(settings, mode)
    threads = settings['THREADS']
    if threads < 1:
        raise UsageError('--threads must be at least 1')

    if mode is JoinMode.SELF:
        if options.left or options.right:
            raise UsageError('--left and --right need --mode rs')
        if options.input:
            records = load_dataset(options.input)
        elif options.gen is not None:
            records = generate(settings)
        else:
            raise UsageError('Self join needs --input or --gen')
        if threads > 1:
            raise UsageError('--threads is only supported in rs mode')
        if options.dump:
            save_dataset(records, options.dump)
            return None
        result = similarity_join(join_config, records)
        if options.oracle_check:
            expected = brute_force_join(records, join_config.tau)
    else:
        if not (options.left and options.right):
            raise UsageError('rs join needs --left and --right')
        left = load_dataset(options.left)
        right = load_dataset(options.right)
        result = similarity_join(
            join_config, left, right, threads, options.index_side)
        if options.oracle_check:
            expected = brute_force_rs_join(left, right, join_config.tau)

    if options.output:
        try:
            with open(options.output, 'w') as output:
                write_pairs(result.pairs, output)
        except OSError as error:
            raise DatasetError(
                'Unable to write %s: %s' % (options.output, error)) from error
    else:
        write_pairs(result.pairs, stdout)

    if options.stats:
        document = dict(
            mode = mode.value, tau = join_config.tau,
            selector = join_config.strategy.value,
            verifier = join_config.verifier.value,
            threads = threads, pairs = len(result.pairs))
        document.update(result.stats.as_dict())
        write_stats(document, options.stats)

    if options.oracle_check:
        oracle_check(result.pairs, expected)
    return result


def run_cli(args, stdout = None, stderr = None):
    '''Runs the segjoin command with the given arguments and returns the exit
    status.'''
    if stdout is None:
        stdout = sys.stdout
    if stderr is None:
        stderr = sys.stderr
    parser = make_parser()
    try:
        options, arglist = parser.parse_args(args)
        if arglist:
            raise UsageError('Unexpected arguments: %s' % ' '.join(arglist))
        if options.tau is not None and options.tau < 0:
            raise UsageError('--tau must be a non-negative integer')
        settings = config.load_profile(
            options.profile, options.full_path,
            TAU = options.tau, SELECTOR = options.selector,
            VERIFIER = options.verifier, THREADS = options.threads,
            GEN_COUNT = options.gen, GEN_SEED = options.seed,
            GEN_LEN_MIN = options.len_min, GEN_LEN_MAX = options.len_max,
            GEN_ALPHABET = options.alphabet, GRAYLOG = options.graylog,
            LOG_LEVEL = options.log_level)
        configure_logging(settings['LOG_LEVEL'], settings['GRAYLOG'])
        run_join(options, settings, stdout)
    except UsageError as error:
        parser.print_usage(stderr)
        stderr.write('segjoin: error: %s\n' % error)
        return EXIT_USAGE
    except (DatasetError, ConfigError) as error:
        stderr.write('segjoin: %s\n' % error)
        return EXIT_IO
    except OracleMismatch as error:
        log.warning('%s', error)
        stderr.write('segjoin: %s\n' % error)
        for pair in error.missing[:10]:
            stderr.write('missing\t%d\t%d\t%d\n' % pair)
        for pair in error.spurious[:10]:
            stderr.write('spurious\t%d\t%d\t%d\n' % pair)
        return EXIT_ORACLE
    return EXIT_OK


def main():
    sys.exit(run_cli(sys.argv[1:]))
