# Probe workers for joins of two sets against a frozen index.
#
# The sorted probe set is cut into contiguous slices and each slice is probed
# by its own cothread task with its own verification scratch and counters.
# The index is only read once all of the indexed set has been inserted, so
# the tasks share it without locking.  Results are merged and sorted, giving
# the same output as a single prober.

# Copyright (c) 2026 segjoin developers.
# Licensed under the Apache License, Version 2.0.

import logging

import numpy
import cothread

from segjoin.sjlib.join import JoinStats, Prober, probe_sorted


__all__ = ['probe_parallel']

log = logging.getLogger(__name__)


def split_slices(count, workers):
    '''Returns up to workers contiguous (start, stop) slices of range(count).'''
    bounds = numpy.linspace(0, count, workers + 1).astype(int)
    return [
        (start, stop) for start, stop in zip(bounds[:-1], bounds[1:])
        if stop > start]


def _worker(index, probes, config, indexed):
    stats = JoinStats()
    # Eviction would change the index under the other workers.
    pairs = probe_sorted(
        Prober(index, config, indexed, stats), probes, config.tau,
        evict = False)
    return pairs, stats


def probe_parallel(index, probes, config, indexed, workers):
    '''Probes index with the sorted list probes using the given number of
    worker tasks.  Returns (pairs, merged stats).'''
    slices = split_slices(len(probes), workers)
    log.debug('Probing %d strings with %d workers', len(probes), len(slices))
    tasks = [
        cothread.Spawn(
            _worker, index, probes[start:stop], config, indexed,
            raise_on_wait = True)
        for start, stop in slices]

    pairs = []
    stats = JoinStats()
    for task in tasks:
        worker_pairs, worker_stats = task.Wait()
        pairs.extend(worker_pairs)
        stats.merge(worker_stats)
    pairs.sort()
    return pairs, stats
