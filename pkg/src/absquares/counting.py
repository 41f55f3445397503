"""Exact counting of distinct factors and abelian-square factors.

Two independent routes are kept side by side:

* the engine (`asf_profile`, `inequivalent_profile`): a suffix array gives
  one representative occurrence per distinct factor, and an O(1) prefix-count
  test decides whether the two halves share a Parikh vector;
* the oracle (`asf_profile_brute`, `inequivalent_profile_brute`): transparent
  enumeration of all substrings with explicit per-letter counting.

Whether a factor is an abelian square depends only on its content, so testing
a single representative occurrence is enough; the suffix array makes the
deduplication exact without any hashing.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .words import Word


# -- suffix array -----------------------------------------------------------


def _suffix_array_naive(data: bytes) -> np.ndarray:
    return np.array(sorted(range(len(data)), key=lambda i: data[i:]), dtype=np.int64)


def _suffix_array_doubling(arr: np.ndarray) -> np.ndarray:
    """Rank-doubling suffix array, O(n log n) with numpy sorts."""
    n = arr.size
    rank = arr.astype(np.int64)
    k = 1
    while True:
        second = np.full(n, -1, dtype=np.int64)
        if k < n:
            second[: n - k] = rank[k:]
        order = np.lexsort((second, rank))
        r1 = rank[order]
        r2 = second[order]
        changed = np.empty(n, dtype=np.int64)
        changed[0] = 0
        if n > 1:
            changed[1:] = (r1[1:] != r1[:-1]) | (r2[1:] != r2[:-1])
        new_rank = np.empty(n, dtype=np.int64)
        new_rank[order] = np.cumsum(changed)
        if new_rank[order[-1]] == n - 1:
            return order.astype(np.int64)
        rank = new_rank
        k *= 2


def build_suffix_array(data: bytes) -> np.ndarray:
    if len(data) == 0:
        return np.empty(0, dtype=np.int64)
    if len(data) < 64:
        return _suffix_array_naive(data)
    return _suffix_array_doubling(np.frombuffer(data, dtype=np.uint8))


def lcp_array(data: bytes, sa: np.ndarray) -> np.ndarray:
    """Kasai's algorithm; lcp[i] is the common-prefix length of the suffixes
    at sa[i-1] and sa[i] (lcp[0] = 0)."""
    n = len(data)
    lcp = np.zeros(n, dtype=np.int64)
    if n == 0:
        return lcp
    rank = np.empty(n, dtype=np.int64)
    rank[sa] = np.arange(n)
    h = 0
    for i in range(n):
        r = rank[i]
        if r > 0:
            j = int(sa[r - 1])
            while i + h < n and j + h < n and data[i + h] == data[j + h]:
                h += 1
            lcp[r] = h
            if h > 0:
                h -= 1
        else:
            h = 0
    return lcp


class FactorIndex:
    """Suffix-array view of one word: distinct factors, their representative
    occurrences, and per-letter prefix counts for O(1) Parikh queries."""

    def __init__(self, word: Word):
        self.word = word
        self.n = len(word)
        self.sigma = word.alphabet.size
        self.arr = word.to_array()
        self.sa = build_suffix_array(word.data)
        self.lcp = lcp_array(word.data, self.sa)
        self.prefix_counts = np.zeros((self.sigma, self.n + 1), dtype=np.int64)
        for letter in range(self.sigma):
            np.cumsum(self.arr == letter, out=self.prefix_counts[letter, 1:])

    def representative_positions(self, length: int) -> np.ndarray:
        """Start position of the first occurrence (in suffix order) of each
        distinct factor of the given length; factors come out in
        lexicographic order."""
        if length < 0 or length > self.n:
            raise ValueError(f"factor length {length} out of range 0..{self.n}")
        if length == 0:
            return np.zeros(1, dtype=np.int64) if self.n >= 0 else np.empty(0, np.int64)
        long_enough = self.n - self.sa >= length
        new_factor = self.lcp < length
        return self.sa[long_enough & new_factor]

    def distinct_count(self, length: int) -> int:
        return int(self.representative_positions(length).size) if length else 1

    def distinct_factors(self, length: int) -> list[Word]:
        return [self.word.factor(int(p), length) for p in self.representative_positions(length)]

    def occurrence_blocks(self, length: int) -> list[np.ndarray]:
        """All occurrence positions of each distinct factor of the given
        length, one sorted array per factor."""
        if length < 1 or length > self.n:
            raise ValueError(f"factor length {length} out of range 1..{self.n}")
        valid = np.flatnonzero(self.n - self.sa >= length)
        starts = np.flatnonzero(self.lcp[valid] < length)
        blocks = np.split(self.sa[valid], starts[1:])
        return [np.sort(b) for b in blocks]

    def abelian_square_representatives(self, length: int) -> np.ndarray:
        """Representatives of the distinct length-`length` factors whose two
        halves share a Parikh vector (length must be even)."""
        if length % 2 != 0 or length < 2:
            raise ValueError(f"abelian squares have even positive length, got {length}")
        reps = self.representative_positions(length)
        half = length // 2
        ok = np.ones(reps.size, dtype=bool)
        # the last letter's count is implied by the others plus the length
        for letter in range(self.sigma - 1):
            c = self.prefix_counts[letter]
            ok &= 2 * c[reps + half] - c[reps] - c[reps + length] == 0
        return reps[ok]

    def abelian_square_count(self, length: int) -> int:
        return int(self.abelian_square_representatives(length).size)

    def abelian_square_parikh_classes(self, length: int) -> int:
        """Number of distinct Parikh vectors among the abelian-square factors
        of the given length."""
        reps = self.abelian_square_representatives(length)
        if reps.size == 0:
            return 0
        cols = [
            self.prefix_counts[letter][reps + length] - self.prefix_counts[letter][reps]
            for letter in range(self.sigma - 1)
        ]
        if not cols:  # unary alphabet: a single class per length
            return 1
        if (length + 1) ** len(cols) < 2**62:
            packed = cols[0].astype(np.int64)
            for col in cols[1:]:
                packed = packed * (length + 1) + col
            return int(np.unique(packed).size)
        return len({tuple(int(c[i]) for c in cols) for i in range(reps.size)})


# -- profiles ---------------------------------------------------------------


@dataclass(frozen=True)
class ASFProfile:
    """Distinct abelian-square factor counts per even length."""

    max_length: int
    counts: dict[int, int]

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def count(self, length: int) -> int:
        return self.counts.get(length, 0)


@dataclass(frozen=True)
class InequivalentProfile:
    """Distinct Parikh vectors among abelian-square factors, per even length.

    Lengths with no abelian squares are omitted; `total` pools the classes
    over all lengths (vectors of different total length never coincide, so
    this equals the sum of the per-length entries).
    """

    max_length: int
    per_length: dict[int, int]

    @property
    def total(self) -> int:
        return sum(self.per_length.values())


def _check_profile_args(word: Word, max_length: int) -> None:
    if max_length % 2 != 0 or max_length < 0:
        raise ValueError(f"max_length must be even and >= 0, got {max_length}")
    if max_length > len(word):
        raise ValueError(f"max_length {max_length} exceeds word length {len(word)}")


def asf_profile(word: Word, max_length: int, index: FactorIndex | None = None) -> ASFProfile:
    """Count the distinct abelian-square factors of each even length up to
    ``max_length`` (inclusive)."""
    _check_profile_args(word, max_length)
    idx = index if index is not None else FactorIndex(word)
    counts = {m: idx.abelian_square_count(m) for m in range(2, max_length + 1, 2)}
    return ASFProfile(max_length, counts)


def inequivalent_profile(
    word: Word, max_length: int, index: FactorIndex | None = None
) -> InequivalentProfile:
    _check_profile_args(word, max_length)
    idx = index if index is not None else FactorIndex(word)
    per_length = {}
    for m in range(2, max_length + 1, 2):
        classes = idx.abelian_square_parikh_classes(m)
        if classes:
            per_length[m] = classes
    return InequivalentProfile(max_length, per_length)


def distinct_factors(word: Word, length: int) -> list[Word]:
    """Distinct factors of one length, lexicographically ordered."""
    if length > len(word) or length < 0:
        raise ValueError(f"factor length {length} out of range 0..{len(word)}")
    if length == 0:
        return [Word(word.alphabet, b"")]
    return FactorIndex(word).distinct_factors(length)


def factor_counts_stable(word: Word, lengths) -> bool:
    """Adequacy certificate for a prefix of an infinite word: the distinct
    factor counts must agree between the half prefix and the full prefix."""
    half = word[: len(word) // 2]
    full_idx = FactorIndex(word)
    half_idx = FactorIndex(half)
    return all(
        n <= len(half) and half_idx.distinct_count(n) == full_idx.distinct_count(n)
        for n in lengths
    )


# -- brute-force oracles ----------------------------------------------------


def _halves_match(data: bytes, start: int, length: int, sigma: int) -> bool:
    half = length // 2
    mid = start + half
    end = start + length
    return all(
        data.count(letter, start, mid) == data.count(letter, mid, end)
        for letter in range(sigma)
    )


def asf_profile_brute(word: Word, max_length: int) -> ASFProfile:
    """Oracle: enumerate every substring, deduplicate by content, test the
    halves by counting letters."""
    _check_profile_args(word, max_length)
    data = word.data
    sigma = word.alphabet.size
    counts = {}
    for m in range(2, max_length + 1, 2):
        seen = set()
        for i in range(len(data) - m + 1):
            piece = data[i : i + m]
            if piece not in seen and _halves_match(data, i, m, sigma):
                seen.add(piece)
        counts[m] = len(seen)
    return ASFProfile(max_length, counts)


def inequivalent_profile_brute(word: Word, max_length: int) -> InequivalentProfile:
    _check_profile_args(word, max_length)
    data = word.data
    sigma = word.alphabet.size
    per_length = {}
    for m in range(2, max_length + 1, 2):
        classes = set()
        for i in range(len(data) - m + 1):
            if _halves_match(data, i, m, sigma):
                classes.add(tuple(data.count(letter, i, i + m) for letter in range(sigma)))
        if classes:
            per_length[m] = len(classes)
    return InequivalentProfile(max_length, per_length)
