# Core types shared by the similarity join library, and the plain edit
# distance used as ground truth.

# Copyright (c) 2026 segjoin developers.
# Licensed under the Apache License, Version 2.0.

import collections


__all__ = [
    'SegjoinError', 'PartitionError', 'DatasetError', 'ConfigError',
    'OracleMismatch', 'Record', 'threshold', 'Verdict', 'Within', 'Exceeds',
    'edit_distance']


class SegjoinError(Exception):
    pass

class PartitionError(SegjoinError, ValueError):
    '''Raised for a string too short to be cut into tau+1 segments.  Such
    strings are routed to the short string fallback.'''

class DatasetError(SegjoinError):
    pass

class ConfigError(SegjoinError):
    pass

class OracleMismatch(SegjoinError):
    def __init__(self, missing, spurious):
        self.missing = missing
        self.spurious = spurious
        SegjoinError.__init__(self,
            'Join differs from oracle: %d missing, %d spurious pairs' % (
                len(missing), len(spurious)))


# A record is one input string.  The id is its ordinal in the input and the
# content is compared byte for byte, no normalisation is ever done.
Record = collections.namedtuple('Record', ['id', 'content'])


def threshold(tau):
    '''Validates an edit distance threshold, returning it as an int.'''
    if isinstance(tau, bool) or int(tau) != tau or tau < 0:
        raise ValueError('Threshold must be a non-negative integer: %r' % tau)
    return int(tau)


class Verdict(collections.namedtuple('Verdict', ['within', 'value'])):
    '''Result of a bounded distance check.  Within carries the exact distance,
    Exceeds carries the bound that was exceeded.'''
    __slots__ = ()

    @property
    def distance(self):
        if not self.within:
            raise ValueError('Exceeded verdict has no distance')
        return self.value

    def __repr__(self):
        if self.within:
            return 'Within(%d)' % self.value
        else:
            return 'Exceeds(%d)' % self.value

def Within(distance):
    return Verdict(True, distance)

def Exceeds(bound):
    return Verdict(False, bound)


def edit_distance(a, b):
    '''Returns the unit cost Levenshtein distance between two byte strings
    using the full dynamic programming matrix, one row at a time.'''
    if len(a) < len(b):
        a, b = b, a
    previous = list(range(len(b) + 1))
    for i, ca in enumerate(a, 1):
        current = [i]
        for j, cb in enumerate(b, 1):
            current.append(min(
                previous[j] + 1,
                current[j - 1] + 1,
                previous[j - 1] + (ca != cb)))
        previous = current
    return previous[-1]
