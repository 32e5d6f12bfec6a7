# Similarity join driver: sort, probe the segment index with selected
# substrings, verify candidates, then index the probe string.

# Copyright (c) 2026 segjoin developers.
# Licensed under the Apache License, Version 2.0.

import collections
import enum
import logging
import time

from segjoin.sjlib.core import edit_distance, threshold
from segjoin.sjlib.index import SegmentIndex, SegmentKey
from segjoin.sjlib.selection import SelectionStrategy, enumerate_probes
from segjoin.sjlib.verify import (
    banded_verify, naive_band_verify, verify_posting_list)


__all__ = [
    'Verifier', 'JoinMode', 'JoinConfig', 'JoinStats', 'JoinResult',
    'Prober', 'sort_dataset', 'self_join', 'rs_join', 'short_string_fallback',
    'similarity_join']

log = logging.getLogger(__name__)


class Verifier(enum.Enum):
    FULL_DP = 'dp'
    NAIVE_BAND = 'naive'
    BANDED = 'banded'
    EXTENSION = 'extension'
    EXTENSION_SHARE = 'extension-share'

    @property
    def whole_string(self):
        '''Whole string verifiers give the same verdict whichever segment
        produced the candidate.'''
        return self not in (Verifier.EXTENSION, Verifier.EXTENSION_SHARE)

    @classmethod
    def ladder(cls):
        return [cls.FULL_DP, cls.BANDED, cls.EXTENSION, cls.EXTENSION_SHARE]

class JoinMode(enum.Enum):
    SELF = 'self'
    RS = 'rs'


JoinConfig = collections.namedtuple('JoinConfig',
    ['tau', 'strategy', 'verifier', 'mode'])
JoinConfig.__new__.__defaults__ = (
    SelectionStrategy.MULTIMATCH, Verifier.EXTENSION_SHARE, JoinMode.SELF)


# Counter names are part of the report format, see docs/segjoin.rst.
COUNTERS = [
    'probes_generated', 'candidates_seen', 'pairs_verified', 'pairs_matched',
    'segments_indexed', 'dp_cells_computed', 'dp_rows_computed',
    'dp_rows_reused', 'short_strings', 'lengths_evicted']
TIMERS = ['time_sort', 'time_probe', 'time_fallback', 'time_total']


class JoinStats:
    def __init__(self):
        for name in COUNTERS:
            setattr(self, name, 0)
        for name in TIMERS:
            setattr(self, name, 0.0)
        self.max_live_lengths = 0

    def merge(self, other):
        '''Adds the counters of other into self.  Timers are not merged: each
        worker's probe time overlaps with the others.'''
        for name in COUNTERS:
            setattr(self, name, getattr(self, name) + getattr(other, name))
        self.max_live_lengths = max(
            self.max_live_lengths, other.max_live_lengths)
        return self

    def as_dict(self):
        result = dict((name, getattr(self, name)) for name in COUNTERS)
        result['max_live_lengths'] = self.max_live_lengths
        result.update((name, getattr(self, name)) for name in TIMERS)
        return result


# pairs is a sorted list of (id_a, id_b, distance).
JoinResult = collections.namedtuple('JoinResult', ['pairs', 'stats'])


def sort_dataset(records):
    '''Stable sort by length, then by content.'''
    return sorted(records, key = lambda record: (len(record.content), record.content))


class Prober:
    '''Finds the indexed partners of one probe string at a time.  Each prober
    owns its verification scratch, so one prober serves one worker.'''

    def __init__(self, index, config, indexed, stats):
        self.index = index
        self.tau = config.tau
        self.strategy = config.strategy
        self.verifier = config.verifier
        self.indexed = indexed
        self.stats = stats

    def __whole(self, s, r):
        stats = self.stats
        if self.verifier is Verifier.FULL_DP:
            stats.dp_cells_computed += len(s) * len(r)
            distance = edit_distance(s, r)
            return distance if distance <= self.tau else None
        elif self.verifier is Verifier.NAIVE_BAND:
            verdict = naive_band_verify(s, r, self.tau, stats)
        else:
            verdict = banded_verify(s, r, self.tau, stats)
        return verdict.distance if verdict.within else None

    def probe(self, s, lengths):
        '''Returns [(r_id, distance)] for every indexed string similar to s
        among the given index lengths.'''
        stats = self.stats
        index = self.index
        indexed = self.indexed
        whole = self.verifier.whole_string
        share = self.verifier is Verifier.EXTENSION_SHARE
        content = s.content

        # Partners already reported.  For whole string verifiers every
        # partner verified once is settled, for extension verification only
        # accepted ones are: a rejection only rules out that one alignment.
        settled = set()
        found = []
        for l in lengths:
            if l not in index:
                continue
            for i, p, w in enumerate_probes(content, l, self.tau, self.strategy):
                stats.probes_generated += 1
                postings = index.lookup(l, i, w)
                if not postings:
                    continue
                stats.candidates_seen += len(postings)
                fresh = [r_id for r_id in postings if r_id not in settled]
                if not fresh:
                    continue
                stats.pairs_verified += len(fresh)
                if whole:
                    settled.update(fresh)
                    for r_id in fresh:
                        distance = self.__whole(content, indexed[r_id].content)
                        if distance is not None:
                            found.append((r_id, distance))
                else:
                    accepted = verify_posting_list(
                        s, SegmentKey(l, i, w), fresh, p, self.tau, indexed,
                        stats, share)
                    for r_id, bound in accepted:
                        settled.add(r_id)
                        # The accepting alignment need not be optimal, report
                        # the true distance.
                        verdict = banded_verify(
                            content, indexed[r_id].content, bound, stats)
                        found.append((r_id, verdict.distance))
        stats.pairs_matched += len(found)
        return found


def _by_length(records):
    '''Groups records by length: {length: [record]}.'''
    by_length = collections.defaultdict(list)
    for record in records:
        by_length[len(record.content)].append(record)
    return by_length


def short_string_fallback(shorts, all_records, tau, stats = None):
    '''Checks every pair involving a string too short to be partitioned
    directly with banded_verify, after the length filter.  Returns sorted
    (id_a, id_b, distance) triples with id_a < id_b, each pair once.'''
    if stats is None:
        stats = JoinStats()
    short_ids = set(record.id for record in shorts)
    by_length = _by_length(all_records)
    pairs = []
    for a in shorts:
        length = len(a.content)
        for l in range(max(0, length - tau), length + tau + 1):
            for b in by_length.get(l, ()):
                if b.id == a.id or (b.id in short_ids and b.id < a.id):
                    continue
                stats.candidates_seen += 1
                stats.pairs_verified += 1
                verdict = banded_verify(a.content, b.content, tau, stats)
                if verdict.within:
                    stats.pairs_matched += 1
                    pairs.append(
                        (min(a.id, b.id), max(a.id, b.id), verdict.distance))
    pairs.sort()
    return pairs


def self_join(records, config):
    '''Finds every pair of records within edit distance config.tau.  Returns
    a JoinResult with pairs (id_a, id_b, distance), id_a < id_b, sorted.'''
    tau = threshold(config.tau)
    stats = JoinStats()
    started = time.perf_counter()

    ordered = sort_dataset(records)
    stats.time_sort = time.perf_counter() - started

    shorts = [record for record in ordered if len(record.content) <= tau]
    stats.short_strings = len(shorts)
    if shorts:
        log.warning('%d strings shorter than %d checked directly',
            len(shorts), tau + 1)

    index = SegmentIndex(tau)
    prober = Prober(index, config, dict((r.id, r) for r in ordered), stats)
    pairs = []
    current = None
    probe_started = time.perf_counter()
    for s in ordered[len(shorts):]:
        length = len(s.content)
        if length != current:
            current = length
            stats.lengths_evicted += index.evict(length - tau)
        for r_id, distance in prober.probe(
                s, range(max(length - tau, tau + 1), length + 1)):
            pairs.append((min(s.id, r_id), max(s.id, r_id), distance))
        index.insert(s)
        stats.max_live_lengths = max(
            stats.max_live_lengths, len(index.buckets))
    stats.segments_indexed = index.segments_inserted
    stats.time_probe = time.perf_counter() - probe_started

    fallback_started = time.perf_counter()
    pairs.extend(short_string_fallback(shorts, ordered, tau, stats))
    stats.time_fallback = time.perf_counter() - fallback_started

    pairs.sort()
    stats.time_total = time.perf_counter() - started
    log.info('Self join of %d strings at tau=%d: %d pairs in %.3fs',
        len(ordered), tau, len(pairs), stats.time_total)
    return JoinResult(pairs, stats)


def probe_sorted(prober, probes, tau, evict = True):
    '''Probes an index of the other set with each string of probes, which must
    be in sorted order.  Returns [(probe_id, indexed_id, distance)].'''
    index = prober.index
    stats = prober.stats
    pairs = []
    current = None
    for r in probes:
        length = len(r.content)
        if evict and length != current:
            current = length
            stats.lengths_evicted += index.evict(length - tau)
        lengths = range(max(length - tau, tau + 1), length + tau + 1)
        for s_id, distance in prober.probe(r, lengths):
            pairs.append((r.id, s_id, distance))
    return pairs


def rs_join(r_set, s_set, config, threads = 1, index_side = 'larger'):
    '''Finds every pair (r, s), r from r_set and s from s_set, within edit
    distance config.tau.  One set is fully indexed and the other probes it in
    sorted order; index_side selects the indexed set: 'left', 'right', or by
    default the larger one.  Pairs are always (r_id, s_id, distance).'''
    tau = threshold(config.tau)
    if index_side == 'larger':
        swap = len(r_set) > len(s_set)
    else:
        if index_side not in ('left', 'right'):
            raise ValueError('Invalid index side %r' % index_side)
        swap = index_side == 'left'
    if swap:
        r_set, s_set = s_set, r_set

    stats = JoinStats()
    started = time.perf_counter()
    probes = sort_dataset(r_set)
    indexed = sort_dataset(s_set)
    stats.time_sort = time.perf_counter() - started

    index = SegmentIndex(tau)
    shorts = []
    for s in indexed:
        if len(s.content) <= tau:
            shorts.append(s)
        else:
            index.insert(s)
    stats.segments_indexed = index.segments_inserted
    stats.short_strings = len(shorts)
    stats.max_live_lengths = len(index.buckets)
    lookup = dict((s.id, s) for s in indexed)

    probe_started = time.perf_counter()
    if threads > 1:
        from segjoin.sjlib import workers
        pairs, worker_stats = workers.probe_parallel(
            index, probes, config, lookup, threads)
        stats.merge(worker_stats)
    else:
        pairs = probe_sorted(Prober(index, config, lookup, stats), probes, tau)
    stats.time_probe = time.perf_counter() - probe_started

    # Indexed strings too short to partition meet every probe string directly.
    fallback_started = time.perf_counter()
    by_length = _by_length(probes)
    for s in shorts:
        length = len(s.content)
        for l in range(max(0, length - tau), length + tau + 1):
            for r in by_length.get(l, ()):
                stats.candidates_seen += 1
                stats.pairs_verified += 1
                verdict = banded_verify(r.content, s.content, tau, stats)
                if verdict.within:
                    stats.pairs_matched += 1
                    pairs.append((r.id, s.id, verdict.distance))
    stats.time_fallback = time.perf_counter() - fallback_started

    if swap:
        pairs = [(b, a, d) for a, b, d in pairs]
    pairs.sort()
    stats.time_total = time.perf_counter() - started
    log.info('R-S join of %d x %d strings at tau=%d: %d pairs in %.3fs',
        len(probes), len(indexed), tau, len(pairs), stats.time_total)
    return JoinResult(pairs, stats)


def similarity_join(config, left, right = None, threads = 1,
        index_side = 'larger'):
    '''Runs the join selected by config.mode: a self join of left, or an rs
    join of left with right.'''
    mode = JoinMode(config.mode)
    if mode is JoinMode.SELF:
        if right is not None:
            raise ValueError('Self join takes a single input')
        if threads > 1:
            raise ValueError('Threads are only supported in rs mode')
        return self_join(left, config)
    else:
        if right is None:
            raise ValueError('rs join needs two inputs')
        return rs_join(left, right, config, threads, index_side)
