# Shared fixtures for the segjoin test suite.

import numpy
import pytest

from segjoin.sjlib import Record, generate_dataset


# Six names used throughout as the running example, listed in input order.
NAMES = [
    b'avataresha',
    b'caushik chakrabar',
    b'kaushic chaduri',
    b'kaushik chakrab',
    b'kaushuk chadhui',
    b'vankatesh',
]


def as_records(strings):
    return [Record(id, content) for id, content in enumerate(strings)]


@pytest.fixture
def names():
    return as_records(NAMES)


@pytest.fixture
def names_file(tmp_path):
    path = tmp_path / 'names.txt'
    path.write_bytes(b'\n'.join(NAMES) + b'\n')
    return str(path)


@pytest.fixture
def small_dataset():
    '''Small alphabet and short strings, so that joins at low thresholds have
    plenty of answers and strings too short to partition turn up.'''
    return generate_dataset(
        120, len_min = 2, len_max = 14, alphabet = 4, seed = 7, mutate = 0.4)


@pytest.fixture
def random_pairs():
    '''Returns a function making count seeded random pairs of byte strings,
    about half of them near copies of each other.'''
    def make(count, seed = 0, len_max = 20, alphabet = 4):
        rng = numpy.random.default_rng(seed)
        letters = numpy.frombuffer(b'abcdefgh'[:alphabet], dtype = numpy.uint8)
        pairs = []
        for _ in range(count):
            a = rng.choice(letters, size = rng.integers(0, len_max + 1))
            if rng.random() < 0.5:
                b = rng.choice(letters, size = rng.integers(0, len_max + 1))
            else:
                b = a.copy()
                for _ in range(rng.integers(0, 4)):
                    j = rng.integers(len(b) + 1)
                    b = numpy.insert(b, j, rng.choice(letters)) \
                        if rng.random() < 0.5 or len(b) == 0 \
                        else numpy.delete(b, min(j, len(b) - 1))
            pairs.append((a.tobytes(), b.tobytes()))
        return pairs
    return make
