"""Structural-form patterns: variable occurrences under transforms, with
palindrome constraints, matched against concrete words by backtracking.

Pattern literal syntax: atoms separated by ``.``; transform prefixes ``~``
(mirror), ``!`` (inverse), ``~!`` (mirror o inverse); palindrome-constrained
variables are listed after a ``|``.  Example: ``A.P.Q.!A | P Q``.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from typing import Iterator

from .paltable import PalTable
from .words import Word


class Transform(IntEnum):
    IDENTITY = 0
    MIRROR = 1
    INVERT = 2
    MIRROR_INVERT = 3

    def apply(self, w: Word) -> Word:
        if self is Transform.IDENTITY:
            return w
        if self is Transform.MIRROR:
            return w.mirror()
        if self is Transform.INVERT:
            return w.invert()
        return w.mirror_invert()


_PREFIXES = (("~!", Transform.MIRROR_INVERT), ("~", Transform.MIRROR), ("!", Transform.INVERT))
_PREFIX_TEXT = {Transform.IDENTITY: "", Transform.MIRROR: "~", Transform.INVERT: "!",
                Transform.MIRROR_INVERT: "~!"}


@dataclass(frozen=True)
class Atom:
    var: str
    transform: Transform = Transform.IDENTITY


@dataclass(frozen=True)
class Pattern:
    atoms: tuple[Atom, ...]
    palindromic: frozenset[str] = frozenset()
    nonempty: frozenset[str] = frozenset()

    @classmethod
    def parse(cls, text: str) -> "Pattern":
        head, _, tail = text.partition("|")
        pal = frozenset(tail.split())
        atoms = []
        for part in head.strip().split("."):
            part = part.strip()
            if not part:
                raise ValueError(f"empty atom in pattern {text!r}")
            transform = Transform.IDENTITY
            for prefix, t in _PREFIXES:
                if part.startswith(prefix):
                    transform = t
                    part = part[len(prefix):]
                    break
            if not part.isalnum():
                raise ValueError(f"bad variable name {part!r} in pattern {text!r}")
            atoms.append(Atom(part, transform))
        return cls(tuple(atoms), pal)

    def __str__(self) -> str:
        head = ".".join(_PREFIX_TEXT[a.transform] + a.var for a in self.atoms)
        if self.palindromic:
            return head + " | " + " ".join(sorted(self.palindromic))
        return head

    @property
    def variables(self) -> tuple[str, ...]:
        seen = []
        for a in self.atoms:
            if a.var not in seen:
                seen.append(a.var)
        return tuple(seen)


def iter_matches(pattern: Pattern, w: Word,
                 bound: dict[str, Word] | None = None) -> Iterator[dict[str, Word]]:
    """All bindings, in canonical order (ascending atom-boundary tuples).

    Matching is exact concatenation over the letters of ``w``; no free
    reduction happens inside the pattern.
    """
    atoms = pattern.atoms
    pal_vars = pattern.palindromic
    nonempty = pattern.nonempty
    n = len(w)
    codes = w.codes
    table = PalTable(w)
    k = len(atoms)
    # var names occurring strictly after each atom index (with multiplicity)
    after: list[list[str]] = [[a.var for a in atoms[i + 1:]] for i in range(k)]

    env: dict[str, Word] = {}
    if bound:
        for name, value in bound.items():
            if name in pal_vars and not value.is_palindrome():
                return
            if name in nonempty and not value:
                return
        env.update(bound)

    def min_after(idx: int, probe_var: str | None, probe_len: int) -> int:
        total = 0
        for v in after[idx]:
            if v == probe_var:
                total += probe_len
            else:
                val = env.get(v)
                if val is not None:
                    total += len(val)
        return total

    def go(idx: int, pos: int) -> Iterator[dict[str, Word]]:
        if idx == k:
            if pos == n:
                yield dict(env)
            return
        atom = atoms[idx]
        value = env.get(atom.var)
        if value is not None:
            seg = atom.transform.apply(value).codes
            end = pos + len(seg)
            if end <= n and codes[pos:end] == seg and min_after(idx, None, 0) <= n - end:
                yield from go(idx + 1, end)
            return
        # unbound variable: enumerate lengths ascending
        later = after[idx].count(atom.var)
        budget = n - pos - min_after(idx, atom.var, 0)
        if budget < 0:
            return
        max_len = budget // (1 + later)
        start = 1 if atom.var in nonempty else 0
        is_pal_var = atom.var in pal_vars
        for length in range(start, max_len + 1):
            if is_pal_var and not table.is_pal(pos, pos + length):
                continue
            env[atom.var] = atom.transform.apply(w[pos:pos + length])
            yield from go(idx + 1, pos + length)
            del env[atom.var]

    yield from go(0, 0)


def match(pattern: Pattern, w: Word,
          bound: dict[str, Word] | None = None) -> dict[str, Word] | None:
    """First binding in canonical order, or None."""
    for binding in iter_matches(pattern, w, bound):
        return binding
    return None


def match_all(pattern: Pattern, w: Word,
              bound: dict[str, Word] | None = None) -> list[dict[str, Word]]:
    return list(iter_matches(pattern, w, bound))


# -- enumeration of pattern instances ---------------------------------------


def iter_reduced_words(m: int, maxlen: int) -> Iterator[Word]:
    """All reduced words over m generators, shortlex order."""
    for length in range(maxlen + 1):
        yield from _reduced_of_length(m, length)


def _reduced_of_length(m: int, length: int) -> Iterator[Word]:
    if length == 0:
        yield Word()
        return
    letters = range(2 * m)
    prefix: list[int] = []

    def go(rest: int) -> Iterator[Word]:
        if rest == 0:
            yield Word(prefix)
            return
        last = prefix[-1] if prefix else None
        for c in letters:
            if last is not None and c == last ^ 1:
                continue
            prefix.append(c)
            yield from go(rest - 1)
            prefix.pop()

    yield from go(length)


def iter_reduced_palindromes(m: int, maxlen: int) -> Iterator[Word]:
    """All reduced palindromes over m generators, shortlex order.

    A reduced palindrome is u + mirror(u) (even length) or u + c + mirror(u)
    with c not cancelling against the last letter of u (odd length).
    """
    for length in range(maxlen + 1):
        if length == 0:
            yield Word()
        elif length % 2 == 0:
            for half in _reduced_of_length(m, length // 2):
                yield Word(half.codes + half.codes[::-1])
        else:
            for half in _reduced_of_length(m, length // 2):
                forbidden = half.codes[-1] ^ 1 if half.codes else None
                for c in range(2 * m):
                    if c != forbidden:
                        yield Word(half.codes + (c,) + half.codes[::-1])


def enumerate_instances(pattern: Pattern, m: int, maxlen: int,
                        limit: int = 10_000_000) -> Iterator[tuple[Word, dict[str, Word]]]:
    """Every (word, binding) with reduced values whose concatenation is reduced
    and has length <= maxlen.  Deterministic shortlex-by-variable order."""
    atoms = pattern.atoms
    pal_vars = pattern.palindromic
    nonempty = pattern.nonempty
    k = len(atoms)
    after = [[a.var for a in atoms[i + 1:]] for i in range(k)]
    env: dict[str, Word] = {}
    produced = 0

    def values(is_pal: bool, budget: int) -> Iterator[Word]:
        if is_pal:
            return iter_reduced_palindromes(m, budget)
        return iter_reduced_words(m, budget)

    def seam_ok(cur: list[int], seg: tuple[int, ...]) -> bool:
        return not cur or not seg or cur[-1] != seg[0] ^ 1

    def min_after(idx: int, exclude: str | None) -> int:
        return sum(len(env[v]) for v in after[idx] if v != exclude and v in env)

    def go(idx: int, cur: list[int]) -> Iterator[tuple[Word, dict[str, Word]]]:
        nonlocal produced
        if idx == k:
            produced += 1
            if produced > limit:
                raise ValueError(
                    f"enumeration exceeded {limit} instances; lower the bound")
            yield Word(cur), dict(env)
            return
        atom = atoms[idx]
        value = env.get(atom.var)
        if value is not None:
            seg = atom.transform.apply(value).codes
            if len(cur) + len(seg) + min_after(idx, None) <= maxlen and seam_ok(cur, seg):
                yield from go(idx + 1, cur + list(seg))
            return
        later = after[idx].count(atom.var)
        budget = maxlen - len(cur) - min_after(idx, atom.var)
        if budget < 0:
            return
        vmax = budget // (1 + later)
        for value in values(atom.var in pal_vars, vmax):
            if atom.var in nonempty and not value:
                continue
            seg = atom.transform.apply(value).codes
            if not seam_ok(cur, seg):
                continue
            env[atom.var] = value
            yield from go(idx + 1, cur + list(seg))
            del env[atom.var]

    yield from go(0, [])
