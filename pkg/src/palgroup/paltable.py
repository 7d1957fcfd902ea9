"""Constant-time palindrome queries over substrings of a fixed word."""

from __future__ import annotations

from .words import Word


def _manacher_odd(s: tuple[int, ...]) -> list[int]:
    # d1[i] = number of odd-length palindromes centered at i
    n = len(s)
    d1 = [0] * n
    l, r = 0, -1
    for i in range(n):
        k = 1 if i > r else min(d1[l + r - i], r - i + 1)
        while i - k >= 0 and i + k < n and s[i - k] == s[i + k]:
            k += 1
        d1[i] = k
        if i + k - 1 > r:
            l, r = i - k + 1, i + k - 1
    return d1


def _manacher_even(s: tuple[int, ...]) -> list[int]:
    # d2[i] = number of even-length palindromes with right half starting at i
    n = len(s)
    d2 = [0] * n
    l, r = 0, -1
    for i in range(n):
        k = 0 if i > r else min(d2[l + r - i + 1], r - i + 1)
        while i - k - 1 >= 0 and i + k < n and s[i - k - 1] == s[i + k]:
            k += 1
        d2[i] = k
        if i + k - 1 > r:
            l, r = i - k, i + k - 1
    return d2


class PalTable:
    """Answers "is the substring [i, j) a palindrome?" in O(1).

    Built from Manacher radii in O(n); letter equality compares the full
    (generator, inverse-flag) code.
    """

    def __init__(self, word: Word):
        self.source = word
        self._n = len(word)
        self._d1 = _manacher_odd(word.codes)
        self._d2 = _manacher_even(word.codes)

    def is_pal(self, i: int, j: int) -> bool:
        """True iff the substring [i, j) equals its mirror image."""
        if not (0 <= i <= j <= self._n):
            raise IndexError(f"bad range [{i}, {j}) for word of length {self._n}")
        length = j - i
        if length <= 1:
            return True
        if length & 1:
            return self._d1[(i + j) // 2] >= (length + 1) // 2
        return self._d2[(i + j) // 2] >= length // 2

    def pal_ends(self) -> list[list[int]]:
        """For each end position j, the starts i of palindromic substrings [i, j).

        Total size is the number of palindromic substrings (O(n) in
        expectation for random words; quadratic for degenerate ones).
        """
        n = self._n
        ends: list[list[int]] = [[] for _ in range(n + 1)]
        d1, d2 = self._d1, self._d2
        for c in range(n):
            for k in range(1, d1[c] + 1):
                ends[c + k].append(c - k + 1)
            for k in range(1, d2[c] + 1):
                ends[c + k].append(c - k)
        return ends
