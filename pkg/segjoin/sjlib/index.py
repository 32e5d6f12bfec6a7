# Inverted indices over string segments, one family per string length.

# Copyright (c) 2026 segjoin developers.
# Licensed under the Apache License, Version 2.0.

import collections
import logging

from segjoin.sjlib.partition import partition


__all__ = ['SegmentKey', 'SegmentIndex']

log = logging.getLogger(__name__)


SegmentKey = collections.namedtuple('SegmentKey', ['l', 'i', 'content'])

EMPTY = ()


class SegmentIndex:
    '''Maps the i-th segment of every indexed string of length l to the list
    of ids of those strings.  Buckets are grouped by length so that a whole
    length can be dropped at once when probing moves past it.

    Posting lists are appended in insertion order, so feeding strings in
    (length, content) order keeps every list sorted by content.'''

    def __init__(self, tau):
        self.tau = tau
        # {l: {(i, content): [id, ...]}}
        self.buckets = {}
        # Number of strings retained for each live length.
        self.counts = {}
        self.segment_count = 0
        self.segments_inserted = 0

    @property
    def live_lengths(self):
        return sorted(self.buckets)

    def __contains__(self, length):
        return length in self.buckets

    def __len__(self):
        return sum(self.counts.values())

    def insert(self, record):
        '''Adds all tau+1 segments of record.  The caller must not pass strings
        shorter than tau+1.'''
        content = record.content
        length = len(content)
        bucket = self.buckets.setdefault(length, {})
        for i, (start, size) in enumerate(partition(length, self.tau), 1):
            key = (i, content[start - 1:start - 1 + size])
            postings = bucket.get(key)
            if postings is None:
                bucket[key] = [record.id]
            else:
                postings.append(record.id)
        self.counts[length] = self.counts.get(length, 0) + 1
        self.segment_count += self.tau + 1
        self.segments_inserted += self.tau + 1

    def lookup(self, l, i, content):
        '''Exact match lookup of a segment, returns an empty sequence when
        absent.'''
        bucket = self.buckets.get(l)
        if bucket is None:
            return EMPTY
        return bucket.get((i, content), EMPTY)

    def lookup_key(self, key):
        return self.lookup(key.l, key.i, key.content)

    def evict(self, min_length):
        '''Drops every length bucket below min_length.  Returns the number of
        lengths dropped.'''
        dropped = [l for l in self.buckets if l < min_length]
        for l in dropped:
            del self.buckets[l]
            self.segment_count -= (self.tau + 1) * self.counts.pop(l)
        if dropped:
            log.debug('Evicted lengths %s below %d', sorted(dropped), min_length)
        return len(dropped)
