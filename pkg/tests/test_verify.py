import itertools

import pytest

from segjoin.sjlib import (
    Record, Within, Exceeds, JoinStats, SegmentIndex, SegmentKey,
    SelectionStrategy, BandedMatrix, SharedPrefixState, SplitBudget,
    banded_verify, naive_band_verify, extension_verify, verify_posting_list,
    enumerate_probes, partition, edit_distance, generate_dataset,
    common_prefix_length)


def test_banded_examples():
    assert banded_verify(b'kaushic chaduri', b'kaushuk chadhui', 4) == Within(4)
    assert banded_verify(b'kaushic chaduri', b'kaushuk chadhui', 3) == Exceeds(3)
    assert banded_verify(b'abc', b'abc', 0) == Within(0)
    assert banded_verify(b'', b'', 0) == Within(0)
    assert banded_verify(b'', b'ab', 2) == Within(2)
    # Length filter, no matrix needed
    stats = JoinStats()
    assert banded_verify(b'a', b'xyz', 1, stats) == Exceeds(1)
    assert stats.dp_cells_computed == 0


def test_early_termination_example():
    matrix = BandedMatrix(b'caushik chakrabar', 15, 3)
    assert matrix.solve(b'kaushuk chadhui') == 4
    assert matrix.stop is not None and matrix.stop <= 6
    assert banded_verify(b'kaushuk chadhui', b'caushik chakrabar', 3) == \
        Exceeds(3)


def check_against_oracle(pairs, max_bound):
    for n, (a, b) in enumerate(pairs):
        bound = n % (max_bound + 1)
        distance = edit_distance(a, b)
        for verify in [banded_verify, naive_band_verify]:
            verdict = verify(a, b, bound)
            if distance <= bound:
                assert verdict == Within(distance), (a, b, bound)
            else:
                assert verdict == Exceeds(bound), (a, b, bound)


def check_cell_budget(pairs, max_bound):
    for n, (a, b) in enumerate(pairs):
        bound = n % (max_bound + 1)
        if abs(len(a) - len(b)) > bound:
            continue
        rows, columns = sorted([a, b], key = len)
        matrix = BandedMatrix(columns, len(rows), bound)
        matrix.solve(rows)
        assert matrix.widest <= bound + 1


def test_banded_matches_oracle(random_pairs):
    check_against_oracle(random_pairs(3000, seed = 1), 6)


def test_cell_budget(random_pairs):
    check_cell_budget(random_pairs(3000, seed = 2), 6)


@pytest.mark.slow
def test_banded_matches_oracle_large(random_pairs):
    pairs = random_pairs(100000, seed = 11, len_max = 60, alphabet = 4)
    check_against_oracle(pairs, 8)
    check_cell_budget(pairs, 8)


def test_counters():
    stats = JoinStats()
    banded_verify(b'abcdef', b'abcxef', 2, stats)
    assert stats.dp_rows_computed == 6
    assert 0 < stats.dp_cells_computed <= 6 * 3
    assert stats.dp_rows_reused == 0


def test_shared_prefix_reuse():
    state = SharedPrefixState()
    assert state.distance(b'caushik', b'caushik', 1) == 0
    stats = JoinStats()
    assert state.distance(b'caushiq', b'caushik', 1, stats) == 1
    assert stats.dp_rows_reused == 6
    assert stats.dp_rows_computed == 1

    # A different bound or column string starts again
    stats = JoinStats()
    assert state.distance(b'caushiq', b'caushik', 2, stats) == 1
    assert stats.dp_rows_reused == 0


def test_shared_prefix_after_termination():
    state = SharedPrefixState()
    assert state.distance(b'xyzabcd', b'abcdefg', 1) == 2
    stats = JoinStats()
    # Shares the rows that already went past the bound
    assert state.distance(b'xyzefgh', b'abcdefg', 1, stats) == 2
    assert stats.dp_rows_computed == 0


def test_common_prefix_length():
    assert common_prefix_length(b'caushik', b'caushiq') == 6
    assert common_prefix_length(b'', b'abc') == 0
    assert common_prefix_length(b'abc', b'abc') == 3


def test_split_budget():
    budget = SplitBudget(3, 3, 2)
    assert budget.tau_left == 1
    assert budget.tau_right == 1
    assert budget.right(0) == 1
    budget = SplitBudget(1, 3, 0)
    assert budget.tau_left == 0
    assert budget.tau_right == 3
    assert budget.right(0) == 3


def test_extension_example():
    s = Record(1, b'caushik chakrabar')
    r = Record(4, b'kaushuk chadhui')
    start, size = partition(15, 3)[2]
    assert (start, size) == (8, 4)
    assert s.content[7:11] == r.content[7:11] == b' cha'
    assert extension_verify(s, r, 3, 8, start, size, 3) == Exceeds(3)

    # The left part check gives up at the sixth row
    matrix = BandedMatrix(b'caushik', 7, 1)
    assert matrix.solve(b'kaushuk') == 2
    assert matrix.stop == 6


def test_extension_identical():
    s = Record(0, b'vankatesh')
    r = Record(1, b'vankatesh')
    assert extension_verify(s, r, 1, 1, 1, 2, 3) == Within(0)


def test_extension_finds_distance(random_pairs):
    '''Some matched segment of every similar pair accounts for the exact
    distance, and no matched segment under-estimates it.'''
    checked = 0
    for a, b in random_pairs(1500, seed = 5, alphabet = 3):
        s, r = (a, b) if len(a) >= len(b) else (b, a)
        distance = edit_distance(s, r)
        for tau in range(max(distance, 1), 5):
            if len(r) < tau + 1:
                continue
            layout = partition(len(r), tau)
            found = []
            for i, p, w in enumerate_probes(
                    s, len(r), tau, SelectionStrategy.MULTIMATCH):
                start, size = layout[i - 1]
                if r[start - 1:start - 1 + size] == w:
                    verdict = extension_verify(
                        Record(0, s), Record(1, r), i, p, start, size, tau)
                    if verdict.within:
                        found.append(verdict.distance)
            assert found and min(found) == distance, (s, r, tau)
            checked += 1
    assert checked > 100


def test_posting_list_rejects_avataresha(names):
    index = SegmentIndex(3)
    index.insert(names[5])
    records = dict((r.id, r) for r in names)
    postings = index.lookup(9, 1, b'va')
    assert postings == [5]
    # avataresha probes its "va" at position 2 against the first segment
    assert verify_posting_list(
        names[0], SegmentKey(9, 1, b'va'), postings, 2, 3, records) == []


def compare_posting_lists(records, tau):
    '''Verifies every posting list of two or more records with and without
    prefix sharing and one record at a time, yielding once per list.'''
    lookup = dict((r.id, r) for r in records)
    index = SegmentIndex(tau)
    for record in records:
        index.insert(record)

    for s in records:
        length = len(s.content)
        for l in range(max(length - tau, tau + 1), length + 1):
            for i, p, w in enumerate_probes(s.content, l, tau):
                key = SegmentKey(l, i, w)
                postings = [r_id for r_id in index.lookup_key(key) if r_id != s.id]
                if len(postings) < 2:
                    continue
                start, size = partition(l, tau)[i - 1]
                single = []
                for r_id in postings:
                    verdict = extension_verify(
                        s, lookup[r_id], i, p, start, size, tau)
                    if verdict.within:
                        single.append((r_id, verdict.distance))
                shared = verify_posting_list(
                    s, key, postings, p, tau, lookup, share = True)
                plain = verify_posting_list(
                    s, key, postings, p, tau, lookup, share = False)
                assert shared == plain == single
                yield key


def test_posting_list_sharing_is_transparent():
    records = generate_dataset(
        300, len_min = 6, len_max = 12, alphabet = 3, seed = 4, mutate = 0.5)
    lists = sum(1 for _ in compare_posting_lists(records, 2))
    assert lists > 50


@pytest.mark.slow
@pytest.mark.parametrize('tau', [1, 2, 3])
def test_posting_list_sharing_is_transparent_large(tau):
    records = generate_dataset(
        2000, len_min = 6, len_max = 24, alphabet = 4, seed = 20 + tau,
        mutate = 0.5)
    checked = itertools.islice(compare_posting_lists(records, tau), 1000)
    assert sum(1 for _ in checked) == 1000
