# Candidate verification: threshold bounded edit distance on a diagonal band
# with early termination, and extension around a matched segment.

# Copyright (c) 2026 segjoin developers.
# Licensed under the Apache License, Version 2.0.

from segjoin.sjlib.core import Within, Exceeds
from segjoin.sjlib.partition import partition


__all__ = [
    'BandedMatrix', 'SharedPrefixState', 'SplitBudget', 'banded_verify',
    'naive_band_verify', 'extension_verify', 'verify_posting_list',
    'common_prefix_length']


def common_prefix_length(a, b):
    n = min(len(a), len(b))
    i = 0
    while i < n and a[i] == b[i]:
        i += 1
    return i


class BandedMatrix:
    '''Edit distance matrix restricted to a diagonal band, computed one row at
    a time.  Row i holds M(i, j) for j in
        [i - (bound - delta) // 2, i + (bound + delta) // 2]
    where delta = len(columns) - n_rows, any cell outside the band counts as
    bound + 1 and every stored value is capped there.

    Computation stops at the first row where every expected distance
        E(i, j) = M(i, j) + |(len(columns) - j) - (n_rows - i)|
    exceeds the bound.  With naive set the band is instead |i - j| <= bound and
    a row stops the computation only when every M(i, j) exceeds the bound.

    The rows are kept, so a later row string sharing a prefix with the last one
    only recomputes the rows after the common prefix.'''

    def __init__(self, columns, n_rows, bound, naive = False):
        self.columns = columns
        self.n_rows = n_rows
        self.bound = bound
        self.naive = naive
        self.cap = bound + 1
        delta = len(columns) - n_rows
        if naive:
            self.left = self.right = bound
        else:
            self.left = (bound - delta) // 2
            self.right = (bound + delta) // 2
        hi = min(len(columns), self.right)
        # Each row is (first column, values).
        self.rows = [(0, [min(j, self.cap) for j in range(hi + 1)])]
        self.text = b''
        self.stop = None
        self.widest = 0

    def __next_row(self, i, ch):
        columns = self.columns
        cap = self.cap
        lo = max(0, i - self.left)
        hi = min(len(columns), i + self.right)
        prev_lo, prev = self.rows[-1]
        prev_hi = prev_lo + len(prev) - 1
        row = []
        last = cap
        for j in range(lo, hi + 1):
            if j == 0:
                value = i
            else:
                value = last + 1
                if prev_lo <= j - 1 <= prev_hi:
                    diagonal = prev[j - 1 - prev_lo] + (ch != columns[j - 1])
                    if diagonal < value:
                        value = diagonal
                if prev_lo <= j <= prev_hi:
                    above = prev[j - prev_lo] + 1
                    if above < value:
                        value = above
            if value > cap:
                value = cap
            row.append(value)
            last = value
        return lo, row

    def __exceeds(self, i, lo, row):
        bound = self.bound
        if self.naive:
            return min(row, default = self.cap) > bound
        rest = len(self.columns) - self.n_rows + i
        for j, value in enumerate(row, lo):
            if value + abs(rest - j) <= bound:
                return False
        return True

    def solve(self, text, stats = None):
        '''Returns the banded distance between text (the rows) and columns,
        or bound + 1 if it exceeds the bound.'''
        assert len(text) == self.n_rows, 'Row string of unexpected length'
        keep = min(common_prefix_length(self.text, text), len(self.rows) - 1)
        self.text = text
        if self.stop is not None and self.stop <= keep:
            # The shared prefix already terminated.
            if stats is not None:
                stats.dp_rows_reused += self.stop
            return self.cap
        del self.rows[keep + 1:]
        self.stop = None

        cells = 0
        for i in range(keep + 1, len(text) + 1):
            lo, row = self.__next_row(i, text[i - 1])
            self.rows.append((lo, row))
            cells += len(row)
            if len(row) > self.widest:
                self.widest = len(row)
            if not row or self.__exceeds(i, lo, row):
                self.stop = i
                break
        if stats is not None:
            stats.dp_cells_computed += cells
            stats.dp_rows_reused += keep
            stats.dp_rows_computed += len(self.rows) - 1 - keep

        if self.stop is not None:
            return self.cap
        lo, row = self.rows[-1]
        j = len(self.columns) - lo
        if 0 <= j < len(row):
            return row[j]
        else:
            return self.cap


def _bounded(a, b, bound, naive, stats):
    if bound < 0 or abs(len(a) - len(b)) > bound:
        return Exceeds(bound)
    # The longer string runs along the columns.
    if len(a) > len(b):
        a, b = b, a
    distance = BandedMatrix(b, len(a), bound, naive).solve(a, stats)
    if distance <= bound:
        return Within(distance)
    else:
        return Exceeds(bound)

def banded_verify(a, b, bound, stats = None):
    '''Returns Within(ED(a, b)) if the distance is at most bound, otherwise
    Exceeds(bound).  Only bound + 1 cells per row are computed.'''
    return _bounded(a, b, bound, False, stats)

def naive_band_verify(a, b, bound, stats = None):
    '''As banded_verify, but with the 2*bound+1 band and plain row pruning.'''
    return _bounded(a, b, bound, True, stats)


class SharedPrefixState:
    '''Scratch matrix reused across consecutive verifications against the same
    column string and bound.'''

    def __init__(self):
        self.matrix = None

    def distance(self, rows, columns, bound, stats = None):
        matrix = self.matrix
        if matrix is None  or  matrix.bound != bound  or \
                matrix.n_rows != len(rows)  or  matrix.columns != columns:
            matrix = BandedMatrix(columns, len(rows), bound)
            self.matrix = matrix
        return matrix.solve(rows, stats)


def _part_distance(state, rows, columns, bound, stats):
    if bound < 0 or abs(len(rows) - len(columns)) > bound:
        return bound + 1
    if state is None:
        return BandedMatrix(columns, len(rows), bound).solve(rows, stats)
    else:
        return state.distance(rows, columns, bound, stats)


class SplitBudget:
    '''Bounds for the parts either side of a matched i-th segment.  The left
    bound is i-1, further capped by the length difference of the right parts;
    the right bound is tau+1-i, further capped by what the left part used.'''

    def __init__(self, i, tau, right_gap):
        self.tau = tau
        self.tau_left = min(i - 1, tau - right_gap)
        self.tau_right = tau + 1 - i

    def right(self, d_left):
        return min(self.tau_right, self.tau - d_left)


def extension_verify(s, r, i, p, p_i, l_i, tau,
        stats = None, left_state = None, right_state = None):
    '''Verifies s against r given that s[p : p+l_i-1] matches the i-th segment
    r[p_i : p_i+l_i-1].  Returns Within(d_l + d_r) when both sides fit their
    budgets, otherwise Exceeds(tau).

    A rejection here is not a proof that the pair is dissimilar: it only
    says this alignment does not account for the pair, and some other matched
    segment will.'''
    s, r = s.content, r.content
    s_left, s_right = s[:p - 1], s[p - 1 + l_i:]
    r_left, r_right = r[:p_i - 1], r[p_i - 1 + l_i:]

    budget = SplitBudget(i, tau, abs(len(r_right) - len(s_right)))
    d_left = _part_distance(
        left_state, r_left, s_left, budget.tau_left, stats)
    if d_left > budget.tau_left:
        return Exceeds(tau)
    tau_right = budget.right(d_left)
    d_right = _part_distance(
        right_state, r_right, s_right, tau_right, stats)
    if d_right > tau_right:
        return Exceeds(tau)
    return Within(d_left + d_right)


def verify_posting_list(s, key, candidates, p, tau, records,
        stats = None, share = True):
    '''Runs extension_verify of s against every candidate id in the posting
    list of key, returning [(r_id, distance)] for the accepted ones.  With
    share set the left and right matrices are carried from one candidate to
    the next; the result is the same either way.'''
    start, size = partition(key.l, tau)[key.i - 1]
    if share:
        left_state = SharedPrefixState()
        right_state = SharedPrefixState()
    else:
        left_state = right_state = None
    result = []
    for r_id in candidates:
        verdict = extension_verify(
            s, records[r_id], key.i, p, start, size, tau,
            stats, left_state, right_state)
        if verdict.within:
            result.append((r_id, verdict.distance))
    return result
