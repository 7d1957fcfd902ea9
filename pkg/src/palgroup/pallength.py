"""Semigroup palindromic length: reference DP, small-k witnesses, Saarela check."""

from __future__ import annotations

from dataclasses import dataclass

from .paltable import PalTable
from .words import Word


@dataclass(frozen=True)
class Factorization:
    """A factorization into nonempty palindromes whose concatenation is the source."""

    factors: tuple[Word, ...]

    def __len__(self) -> int:
        return len(self.factors)

    def concat(self) -> Word:
        out = Word()
        for f in self.factors:
            out = out + f
        return out

    def is_valid_for(self, w: Word) -> bool:
        return all(f and f.is_palindrome() for f in self.factors) and self.concat() == w


def _dp_lengths(w: Word) -> list[int]:
    """pl[j] = palindromic length of the prefix [0, j)."""
    n = len(w)
    ends = PalTable(w).pal_ends()
    inf = n + 1
    pl = [0] * (n + 1)
    for j in range(1, n + 1):
        best = inf
        plj = pl
        for i in ends[j]:
            v = plj[i]
            if v < best:
                best = v
        pl[j] = best + 1
    return pl


def semigroup_pl(w: Word) -> tuple[int, Factorization]:
    """Minimal number of palindromes whose concatenation is w, with a witness.

    Among optimal factorizations the witness has the lexicographically
    smallest sequence of split positions.
    """
    n = len(w)
    if n == 0:
        return 0, Factorization(())
    # pl of every suffix, via the DP on the mirror image
    mpl = _dp_lengths(w.mirror())
    suf = [mpl[n - i] for i in range(n + 1)]
    table = PalTable(w)
    factors = []
    p = 0
    while p < n:
        need = suf[p] - 1
        s = p + 1
        while not (table.is_pal(p, s) and suf[s] == need):
            s += 1
        factors.append(w[p:s])
        p = s
    return suf[0], Factorization(tuple(factors))


def pl_at_most(w: Word, k: int) -> Factorization | None:
    """Some factorization into at most k palindromes (empty factors dropped).

    The witness is deterministic: split positions are lexicographically
    smallest among all valid factorizations into <= k (possibly empty) parts.
    """
    if k not in (1, 2, 3):
        raise ValueError(f"k must be 1, 2 or 3, got {k}")
    n = len(w)
    if n == 0:
        return Factorization(())
    table = PalTable(w)
    if k == 1:
        return Factorization((w,)) if table.is_pal(0, n) else None
    if k == 2:
        for s in range(n + 1):
            if table.is_pal(0, s) and table.is_pal(s, n):
                factors = [w[0:s], w[s:n]]
                return Factorization(tuple(f for f in factors if f))
        return None
    for s1 in range(n + 1):
        if not table.is_pal(0, s1):
            continue
        for s2 in range(s1, n + 1):
            if table.is_pal(s1, s2) and table.is_pal(s2, n):
                factors = [w[0:s1], w[s1:s2], w[s2:n]]
                return Factorization(tuple(f for f in factors if f))
    return None


def saarela_check(x: Word, y: Word) -> bool:
    """Both palindromic-length triangle inequalities for the pair (x, y)."""
    px = semigroup_pl(x)[0]
    py = semigroup_pl(y)[0]
    pxy = semigroup_pl(x + y)[0]
    return px <= py + pxy and py <= px + pxy
