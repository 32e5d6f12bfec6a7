# Even partition of a string into tau+1 segments.

# Copyright (c) 2026 segjoin developers.
# Licensed under the Apache License, Version 2.0.

import collections
import functools

from segjoin.sjlib.core import PartitionError


__all__ = ['Segment', 'Partition', 'partition', 'segments_of']


# Positions are 1-based to match the selection formulas.
Segment = collections.namedtuple('Segment', ['start', 'length'])


class Partition(tuple):
    '''The tau+1 segments of a string of a given length.  Only the length
    matters, so every string of that length shares the same layout.'''
    __slots__ = ()

    @property
    def starts(self):
        return [segment.start for segment in self]

    @property
    def lengths(self):
        return [segment.length for segment in self]

    def split(self, content):
        '''Applies this layout to content, returning its segments.'''
        assert len(content) == sum(self.lengths), 'Content does not fit layout'
        return [content[start - 1:start - 1 + length] for start, length in self]


@functools.lru_cache(maxsize = None)
def partition(length, tau):
    '''Returns the even partition of a string of the given length: with
    k = length - (length // (tau+1)) * (tau+1) the last k segments are one
    byte longer than the first tau+1-k.'''
    count = tau + 1
    if length < count:
        raise PartitionError(
            'Length %d cannot be split into %d segments' % (length, count))
    short = length // count
    k = length - short * count
    segments = []
    start = 1
    for i in range(count):
        size = short + 1 if i >= count - k else short
        segments.append(Segment(start, size))
        start += size
    return Partition(segments)


def segments_of(content, tau):
    return partition(len(content), tau).split(content)
