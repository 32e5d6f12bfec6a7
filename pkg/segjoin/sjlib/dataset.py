# Dataset input and output, synthetic datasets, and the brute force join
# that every other join is checked against.

# Copyright (c) 2026 segjoin developers.
# Licensed under the Apache License, Version 2.0.

import json
import logging

import numpy

from segjoin.sjlib.core import DatasetError, Record, edit_distance, threshold


__all__ = [
    'load_dataset', 'save_dataset', 'write_pairs', 'write_stats',
    'brute_force_join', 'brute_force_rs_join', 'generate_dataset',
    'dataset_stats']

log = logging.getLogger(__name__)


def load_dataset(path):
    '''Reads a file of newline separated byte strings, one record per line
    with ids counting lines from 0.  A trailing newline is optional and a
    carriage return before a newline is removed with it.  The whole file is
    read before any record is built, so errors never leave a partial load.'''
    try:
        with open(path, 'rb') as input:
            data = input.read()
    except OSError as error:
        raise DatasetError('Unable to read %s: %s' % (path, error)) from error
    if not data:
        return []
    lines = data.split(b'\n')
    last = lines.pop()
    # Only a carriage return ending a terminated line belongs to the terminator
    lines = [line[:-1] if line.endswith(b'\r') else line for line in lines]
    if last:
        lines.append(last)
    records = [Record(id, line) for id, line in enumerate(lines)]
    log.debug('Loaded %d records from %s', len(records), path)
    return records


def save_dataset(records, path):
    try:
        with open(path, 'wb') as output:
            for record in sorted(records, key = lambda r: r.id):
                output.write(record.content + b'\n')
    except OSError as error:
        raise DatasetError('Unable to write %s: %s' % (path, error)) from error


def write_pairs(pairs, output):
    '''Writes id_a, id_b, distance as tab separated lines, sorted.'''
    for id_a, id_b, distance in sorted(pairs):
        output.write('%d\t%d\t%d\n' % (id_a, id_b, distance))


def write_stats(document, path):
    '''Writes one flat key-value document as JSON.'''
    try:
        with open(path, 'w') as output:
            json.dump(document, output, indent = 1, sort_keys = True)
            output.write('\n')
    except OSError as error:
        raise DatasetError('Unable to write %s: %s' % (path, error)) from error


def _lengths(records):
    return numpy.array([len(r.content) for r in records], dtype = int)


def brute_force_join(records, tau):
    '''All pairs full matrix self join.  Only the length filter is applied
    before computing each distance.  Returns sorted (id_a, id_b, distance)
    with id_a < id_b.'''
    tau = threshold(tau)
    lengths = _lengths(records)
    order = numpy.argsort(lengths, kind = 'stable')
    lengths = lengths[order]
    # Partners of the k-th string in length order are those after it up to
    # the last one no more than tau longer.
    limits = numpy.searchsorted(lengths, lengths + tau, side = 'right')
    pairs = []
    for k, limit in enumerate(limits):
        a = records[order[k]]
        for m in range(k + 1, limit):
            b = records[order[m]]
            distance = edit_distance(a.content, b.content)
            if distance <= tau:
                pairs.append((min(a.id, b.id), max(a.id, b.id), distance))
    pairs.sort()
    return pairs


def brute_force_rs_join(r_set, s_set, tau):
    '''All pairs full matrix join of two sets, (r_id, s_id, distance).'''
    tau = threshold(tau)
    lengths = _lengths(s_set)
    order = numpy.argsort(lengths, kind = 'stable')
    lengths = lengths[order]
    pairs = []
    for r in r_set:
        length = len(r.content)
        first = numpy.searchsorted(lengths, length - tau, side = 'left')
        last = numpy.searchsorted(lengths, length + tau, side = 'right')
        for m in order[first:last]:
            s = s_set[m]
            distance = edit_distance(r.content, s.content)
            if distance <= tau:
                pairs.append((r.id, s.id, distance))
    pairs.sort()
    return pairs


ALPHABET = b'abcdefghijklmnopqrstuvwxyz'

def generate_dataset(count, len_min = 8, len_max = 40, alphabet = 26,
        seed = 0, mutate = 0.2):
    '''Returns count synthetic records.  Lengths are uniform over
    [len_min, len_max] and bytes uniform over the first alphabet lower case
    letters.  A fraction mutate of the records are copies of an earlier record
    with 1 to 3 random edits, so that joins find something.'''
    if count < 0:
        raise ValueError('Record count must not be negative: %d' % count)
    if not 0 < alphabet <= len(ALPHABET):
        raise ValueError(
            'Alphabet size must be 1 to %d: %d' % (len(ALPHABET), alphabet))
    if not 0 <= len_min <= len_max:
        raise ValueError('Invalid length range %d..%d' % (len_min, len_max))
    rng = numpy.random.default_rng(seed)
    letters = numpy.frombuffer(ALPHABET[:alphabet], dtype = numpy.uint8)

    records = []
    for id in range(count):
        if records and rng.random() < mutate:
            content = bytearray(records[rng.integers(len(records))].content)
            for _ in range(rng.integers(1, 4)):
                _random_edit(rng, content, letters, len_min, len_max)
            content = bytes(content)
        else:
            length = rng.integers(len_min, len_max + 1)
            content = rng.choice(letters, size = length).tobytes()
        records.append(Record(id, content))
    return records

def _random_edit(rng, content, letters, len_min, len_max):
    letter = int(rng.choice(letters))
    operation = rng.integers(3)
    if operation == 0 and len(content) < len_max:
        content.insert(rng.integers(len(content) + 1), letter)
    elif operation == 1 and len(content) > max(len_min, 0) and content:
        del content[rng.integers(len(content))]
    elif content:
        content[rng.integers(len(content))] = letter


def dataset_stats(records, bins = 10):
    '''Summary of a dataset: cardinality, average, maximum and minimum length
    and a histogram of lengths.'''
    lengths = _lengths(records)
    if len(lengths) == 0:
        return dict(cardinality = 0, avg_len = 0.0, max_len = 0, min_len = 0,
            histogram = [], bin_edges = [])
    counts, edges = numpy.histogram(lengths, bins = bins)
    return dict(
        cardinality = len(lengths),
        avg_len = float(lengths.mean()),
        max_len = int(lengths.max()),
        min_len = int(lengths.min()),
        histogram = counts.tolist(),
        bin_edges = edges.tolist())
