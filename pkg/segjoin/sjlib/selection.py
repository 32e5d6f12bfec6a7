# Substring selection: which substrings of a probe string are looked up in
# the segment index of a given length.

# Copyright (c) 2026 segjoin developers.
# Licensed under the Apache License, Version 2.0.

import collections
import enum

from segjoin.sjlib.partition import partition


__all__ = [
    'SelectionStrategy', 'PositionRange', 'window', 'enumerate_probes',
    'selection_count', 'selection_bound']


class SelectionStrategy(enum.Enum):
    LENGTH = 'length'
    SHIFT = 'shift'
    POSITION = 'position'
    MULTIMATCH = 'multimatch'

    @classmethod
    def ladder(cls):
        '''All strategies, from least to most selective.'''
        return [cls.LENGTH, cls.SHIFT, cls.POSITION, cls.MULTIMATCH]

DEFAULT_STRATEGY = SelectionStrategy.MULTIMATCH


class PositionRange(collections.namedtuple('PositionRange', ['lo', 'hi'])):
    '''Inclusive range of 1-based start positions, empty when lo > hi.'''
    __slots__ = ()

    @property
    def size(self):
        return max(0, self.hi - self.lo + 1)

    @property
    def empty(self):
        return self.lo > self.hi

    def positions(self):
        return range(self.lo, self.hi + 1)

    def within(self, other):
        '''True if every position of self is also in other.'''
        return self.empty or (other.lo <= self.lo and self.hi <= other.hi)


def window(strategy, s_len, l, i, tau, clamp = True):
    '''Returns the range of start positions in a probe string of length s_len
    to be matched against the i-th segments of indexed strings of length l.

    The probe may be shorter than l (delta negative) when joining two sets; the
    window formulas hold for either sign as long as |delta| <= tau.'''
    start, size = partition(l, tau)[i - 1]
    delta = s_len - l
    if strategy is SelectionStrategy.LENGTH:
        lo, hi = 1, s_len - size + 1
    elif strategy is SelectionStrategy.SHIFT:
        lo, hi = start - tau, start + tau
    elif strategy is SelectionStrategy.POSITION:
        lo = start - (tau - delta) // 2
        hi = start + (tau + delta) // 2
    else:
        # Left perspective: at most i-1 errors before the segment, right
        # perspective: at most tau+1-i errors after it.
        lo = max(start - (i - 1), start + delta - (tau + 1 - i))
        hi = min(start + (i - 1), start + delta + (tau + 1 - i))
    if clamp:
        lo = max(1, lo)
        hi = min(s_len - size + 1, hi)
    return PositionRange(lo, hi)


def enumerate_probes(content, l, tau, strategy = DEFAULT_STRATEGY):
    '''Returns the selected substrings of content as (i, p, substring) triples
    in (i, p) order.'''
    s_len = len(content)
    probes = []
    for i, (_, size) in enumerate(partition(l, tau), 1):
        lo, hi = window(strategy, s_len, l, i, tau)
        for p in range(lo, hi + 1):
            probes.append((i, p, content[p - 1:p - 1 + size]))
    return probes


def selection_count(strategy, s_len, l, tau):
    '''Number of substrings actually selected for one length, after clamping
    each window to the probe string.'''
    return sum(
        window(strategy, s_len, l, i, tau).size for i in range(1, tau + 2))


def selection_bound(strategy, s_len, l, tau):
    '''The analytic size of the selected substring set for one length.  Every
    selection_count is at most this; multi-match meets it exactly whenever no
    clamp is active.'''
    delta = s_len - l
    if strategy is SelectionStrategy.LENGTH:
        return (tau + 1) * (s_len + 1) - l
    elif strategy is SelectionStrategy.SHIFT:
        return (tau + 1) * (2 * tau + 1)
    elif strategy is SelectionStrategy.POSITION:
        return (tau + 1) ** 2
    else:
        return (tau * tau - delta * delta) // 2 + tau + 1
