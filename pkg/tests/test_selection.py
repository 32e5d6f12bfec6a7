import pytest

from segjoin.sjlib import (
    SelectionStrategy, PositionRange, window, enumerate_probes,
    selection_count, selection_bound)


LENGTH = SelectionStrategy.LENGTH
SHIFT = SelectionStrategy.SHIFT
POSITION = SelectionStrategy.POSITION
MULTIMATCH = SelectionStrategy.MULTIMATCH


def windows(strategy, s_len, l, tau, clamp = True):
    return [
        tuple(window(strategy, s_len, l, i, tau, clamp))
        for i in range(1, tau + 2)]


def test_multimatch_worked_example():
    assert windows(MULTIMATCH, 10, 9, 3) == [(1, 1), (2, 4), (5, 7), (8, 8)]
    assert enumerate_probes(b'avataresha', 9, 3, MULTIMATCH) == [
        (1, 1, b'av'),
        (2, 2, b'va'), (2, 3, b'at'), (2, 4, b'ta'),
        (3, 5, b'ar'), (3, 6, b're'), (3, 7, b'es'),
        (4, 8, b'sha')]


def test_position_and_shift_worked_example():
    assert windows(POSITION, 10, 9, 3) == [(1, 3), (2, 5), (4, 7), (6, 8)]
    assert selection_count(POSITION, 10, 9, 3) == 14
    assert selection_bound(SHIFT, 10, 9, 3) == 28
    # Clamping to the probe string removes 6 of the shift windows' positions
    assert selection_count(SHIFT, 10, 9, 3) == 22


def test_equal_length_counts():
    bounds = [selection_bound(s, 15, 15, 1) for s in SelectionStrategy.ladder()]
    assert bounds == [17, 6, 4, 2]
    counts = [selection_count(s, 15, 15, 1) for s in SelectionStrategy.ladder()]
    assert counts == [17, 4, 2, 2]


def test_zero_threshold_selects_one_probe():
    for strategy in SelectionStrategy:
        assert selection_count(strategy, 12, 12, 0) == 1
        probes = enumerate_probes(b'abcdefghijkl', 12, 0, strategy)
        assert probes == [(1, 1, b'abcdefghijkl')]


def test_position_range():
    assert PositionRange(2, 4).size == 3
    assert list(PositionRange(2, 4).positions()) == [2, 3, 4]
    assert PositionRange(5, 4).empty and PositionRange(5, 4).size == 0
    assert PositionRange(5, 4).within(PositionRange(7, 7))
    assert PositionRange(2, 3).within(PositionRange(1, 3))
    assert not PositionRange(1, 4).within(PositionRange(2, 4))


def cases(max_len, max_tau):
    for tau in range(max_tau + 1):
        for s_len in range(tau + 1, max_len + 1):
            for l in range(max(tau + 1, s_len - tau), s_len + 1):
                yield s_len, l, tau


def check_subset_chain(max_len, max_tau):
    ladder = SelectionStrategy.ladder()
    for s_len, l, tau in cases(max_len, max_tau):
        for i in range(1, tau + 2):
            ranges = [window(s, s_len, l, i, tau) for s in ladder]
            for looser, tighter in zip(ranges, ranges[1:]):
                assert tighter.within(looser), (s_len, l, tau, i)
            unclamped = window(MULTIMATCH, s_len, l, i, tau, clamp = False)
            assert unclamped.within(window(POSITION, s_len, l, i, tau, False))


def check_counts(max_len, max_tau):
    for s_len, l, tau in cases(max_len, max_tau):
        delta = s_len - l
        expected = (tau * tau - delta * delta) // 2 + tau + 1
        unclamped = sum(
            window(MULTIMATCH, s_len, l, i, tau, clamp = False).size
            for i in range(1, tau + 2))
        assert unclamped == expected, (s_len, l, tau)
        assert selection_bound(MULTIMATCH, s_len, l, tau) == expected
        # The multi-match windows always fit inside the probe string
        assert selection_count(MULTIMATCH, s_len, l, tau) == expected
        assert selection_count(LENGTH, s_len, l, tau) == \
            selection_bound(LENGTH, s_len, l, tau)
        for strategy in [SHIFT, POSITION]:
            assert selection_count(strategy, s_len, l, tau) <= \
                selection_bound(strategy, s_len, l, tau)


def test_subset_chain():
    check_subset_chain(24, 5)


def test_counts():
    check_counts(24, 5)


@pytest.mark.slow
def test_subset_chain_exhaustive():
    check_subset_chain(64, 8)


@pytest.mark.slow
def test_counts_exhaustive():
    check_counts(64, 8)


def test_probes_match_windows():
    content = b'the quick brown fox'
    for strategy in SelectionStrategy:
        for l in range(16, 20):
            probes = enumerate_probes(content, l, 3, strategy)
            assert len(probes) == selection_count(strategy, len(content), l, 3)
            assert probes == sorted(probes)
            for i, p, w in probes:
                assert content[p - 1:p - 1 + len(w)] == w


def test_shorter_probe_string():
    # Joining two sets, the probe may be shorter than the indexed length.
    for strategy in SelectionStrategy:
        for i, p, w in enumerate_probes(b'abcdefgh', 10, 2, strategy):
            assert 1 <= p and p - 1 + len(w) <= 8
