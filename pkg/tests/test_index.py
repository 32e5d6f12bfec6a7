from segjoin.sjlib import Record, SegmentIndex, SegmentKey


def test_lookup(names):
    index = SegmentIndex(3)
    for record in names:
        index.insert(record)
    assert index.lookup(9, 1, b'va') == [5]
    assert index.lookup(9, 4, b'esh') == [5]
    assert index.lookup_key(SegmentKey(15, 3, b' cha')) == [2, 3, 4]
    assert index.lookup(9, 2, b'va') == ()
    assert index.lookup(11, 1, b'va') == ()
    assert len(index) == 6
    assert index.live_lengths == [9, 10, 15, 17]


def test_postings_keep_insertion_order():
    index = SegmentIndex(1)
    index.insert(Record(4, b'abcd'))
    index.insert(Record(2, b'abce'))
    index.insert(Record(7, b'abcf'))
    assert index.lookup(4, 1, b'ab') == [4, 2, 7]
    assert index.lookup(4, 2, b'ce') == [2]


def test_evict(names):
    index = SegmentIndex(3)
    for record in names:
        index.insert(record)
    assert index.segments_inserted == 24
    assert index.segment_count == 24

    assert index.evict(12) == 2
    assert 9 not in index and 10 not in index
    assert 15 in index
    assert index.segment_count == 16
    assert index.segments_inserted == 24
    assert len(index) == 4
    assert index.lookup(9, 1, b'va') == ()

    assert index.evict(12) == 0
    assert index.evict(100) == 2
    assert len(index) == 0 and index.segment_count == 0
