#!/usr/bin/env python3
# Software License Agreement (BSD License)
#
# Copyright (c) 2026, fixauth developers.
# All rights reserved.

import numpy as np

from ..core.config.fa_config import FACONF
from ..core.config.fa_code import DomainError, InconsistentCandidatesError
from ..core.utils.log import logger
from .hash_family import evaluate_indices, iter_index_chunks

_POPCOUNT = np.array([bin(i).count('1') for i in range(256)], dtype=np.uint8)


def _popcount(buf):
    return int(_POPCOUNT[buf].sum(dtype=np.int64))


class CandidateSet(object):
    """
    Surviving hash functions, one bit per family index (little-endian bit order
    inside each byte). Elimination walks the full bitmap chunk by chunk while the
    set is dense and switches to the explicit list of set bits once the
    population falls below FACONF.Candidates.SPARSE_DENSITY of the family.
    """

    def __init__(self, params, bitmap, count=None, indices=None,
                 chunk_bits=FACONF.Candidates.CHUNK_BITS, sparse_density=FACONF.Candidates.SPARSE_DENSITY):
        if chunk_bits <= 0 or chunk_bits % 8:
            raise DomainError('chunk_bits must be a positive multiple of 8, got {}'.format(chunk_bits))
        if len(bitmap) != params.bitmap_bytes:
            raise DomainError('bitmap holds {} bytes, family needs {}'.format(len(bitmap), params.bitmap_bytes))
        self._params = params
        self._bitmap = bitmap
        self._count = _popcount(bitmap) if count is None else int(count)
        self._indices = indices
        self._chunk_bits = chunk_bits
        self._sparse_density = sparse_density

    @classmethod
    def full(cls, params, **kwargs):
        bitmap = np.full(params.bitmap_bytes, 0xFF, dtype=np.uint8)
        tail = params.family_size % 8
        if tail:
            bitmap[-1] = (1 << tail) - 1
        return cls(params, bitmap, params.family_size, **kwargs)

    @classmethod
    def from_indices(cls, params, indices, **kwargs):
        indices = np.unique(np.asarray(indices, dtype=np.int64))
        if indices.size and (indices[0] < 0 or indices[-1] >= params.family_size):
            raise DomainError('candidate index outside [0, {})'.format(params.family_size))
        bitmap = np.zeros(params.bitmap_bytes, dtype=np.uint8)
        np.bitwise_or.at(bitmap, indices >> 3, (1 << (indices & 7)).astype(np.uint8))
        return cls(params, bitmap, indices.size, indices, **kwargs)

    @property
    def params(self):
        return self._params

    @property
    def bitmap(self):
        return self._bitmap

    @property
    def size(self):
        return self._params.family_size

    @property
    def count(self):
        return self._count

    @property
    def is_sparse(self):
        return self._count < self.size * self._sparse_density

    def __len__(self):
        return self._count

    def __contains__(self, index):
        if not 0 <= index < self.size:
            return False
        return bool((self._bitmap[index >> 3] >> (index & 7)) & 1)

    def __eq__(self, other):
        if not isinstance(other, CandidateSet):
            return NotImplemented
        return self._params == other._params and np.array_equal(self._bitmap, other._bitmap)

    def __repr__(self):
        return 'CandidateSet(count={}, size={}, sparse={})'.format(self._count, self.size, self.is_sparse)

    def _spawn(self, bitmap, count, indices=None):
        return CandidateSet(self._params, bitmap, count, indices,
                            chunk_bits=self._chunk_bits, sparse_density=self._sparse_density)

    def _chunk_indices(self, start, stop):
        bits = np.unpackbits(self._bitmap[start >> 3:(stop + 7) >> 3], bitorder='little', count=stop - start)
        return start + np.flatnonzero(bits)

    def iter_index_chunks(self):
        """Yield the set indices as int64 arrays, in increasing order"""
        if self._indices is not None:
            yield self._indices
            return
        for start, stop in iter_index_chunks(self.size, self._chunk_bits):
            if self._bitmap[start >> 3:(stop + 7) >> 3].any():
                yield self._chunk_indices(start, stop)

    def indices(self):
        if self._indices is None:
            parts = list(self.iter_index_chunks())
            self._indices = np.concatenate(parts) if parts else np.zeros(0, dtype=np.int64)
        return self._indices

    def copy(self):
        return self._spawn(self._bitmap.copy(), self._count, self._indices)

    def eliminate(self, m, tag_set):
        """
        Keep exactly the members whose hash of m lies in tag_set.

        :param m: message index
        :param tag_set: iterable of tag values
        :return: new CandidateSet
        """
        allowed = np.zeros(self._params.tag_space_size, dtype=bool)
        allowed[np.fromiter((int(t) for t in tag_set), dtype=np.int64)] = True
        if allowed.all():
            return self.copy()
        if self.is_sparse:
            new = self._eliminate_sparse(m, allowed)
        else:
            new = self._eliminate_dense(m, allowed)
        if new.count == 0:
            raise InconsistentCandidatesError('no candidate maps message {} into the possible tag set'.format(m))
        if new.is_sparse and not self.is_sparse:
            logger.debug('candidate set sparse at {} of {}'.format(new.count, new.size))
        return new

    def _eliminate_sparse(self, m, allowed):
        idx = self.indices()
        keep = allowed[evaluate_indices(self._params, idx, m)]
        dropped = idx[~keep]
        bitmap = self._bitmap.copy()
        np.bitwise_and.at(bitmap, dropped >> 3, ~(1 << (dropped & 7)).astype(np.uint8))
        survivors = idx[keep]
        return self._spawn(bitmap, survivors.size, survivors)

    def _eliminate_dense(self, m, allowed):
        bitmap = self._bitmap.copy()
        count = 0
        for start, stop in iter_index_chunks(self.size, self._chunk_bits):
            b0, b1 = start >> 3, (stop + 7) >> 3
            chunk = bitmap[b0:b1]
            if not chunk.any():
                continue
            tags = evaluate_indices(self._params, np.arange(start, stop, dtype=np.int64), m)
            chunk &= np.packbits(allowed[tags], bitorder='little')
            count += _popcount(chunk)
        return self._spawn(bitmap, count)

    def iter_tags(self, m):
        for idx in self.iter_index_chunks():
            yield evaluate_indices(self._params, idx, m)

    def common_tag(self, m):
        """
        The tag every survivor assigns to m, or None when two survivors disagree.
        """
        if self._count == 0 or self._count > self._params.max_preimage:
            return None
        first = None
        for tags in self.iter_tags(m):
            if tags.size == 0:
                continue
            if first is None:
                first = int(tags[0])
            if (tags != first).any():
                return None
        return first
