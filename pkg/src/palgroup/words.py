"""Letters, words, free reduction, and the two involutive antimorphisms.

Words live over a signed alphabet: generator ``g`` and its formal inverse
``g^-1`` are both single letters.  Internally a letter is the integer
``2*generator + (1 if inverted else 0)``, so inverting a letter is ``code ^ 1``.
The text format uses lowercase ``a``-``z`` for generators 0-25, uppercase for
their inverses, and the single character ``1`` for the empty word.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


@dataclass(frozen=True)
class Letter:
    """A generator index plus an inverse flag."""

    generator: int
    inverted: bool = False

    @property
    def code(self) -> int:
        return 2 * self.generator + (1 if self.inverted else 0)

    @classmethod
    def from_code(cls, code: int) -> "Letter":
        return cls(code >> 1, bool(code & 1))

    def inverse(self) -> "Letter":
        return Letter(self.generator, not self.inverted)

    def __str__(self) -> str:
        if self.generator >= 26:
            base = f"<{self.generator}>"
            return base.upper() if self.inverted else base
        ch = chr(ord("a") + self.generator)
        return ch.upper() if self.inverted else ch


class Word:
    """An immutable sequence of letters; the empty word is the identity.

    Heavy algorithms work on ``codes`` (a tuple of ints) directly.
    """

    __slots__ = ("codes",)

    def __init__(self, codes: Iterable[int] = ()):
        object.__setattr__(self, "codes", tuple(codes))

    # -- construction ------------------------------------------------------

    @classmethod
    def from_letters(cls, letters: Iterable[Letter]) -> "Word":
        return cls(l.code for l in letters)

    @classmethod
    def parse(cls, text: str, m: int = 26) -> "Word":
        """Parse the text format; ``1`` denotes the empty word."""
        if text == "1":
            return cls()
        codes = []
        for ch in text:
            o = ord(ch)
            if ord("a") <= o <= ord("z"):
                gen, inv = o - ord("a"), 0
            elif ord("A") <= o <= ord("Z"):
                gen, inv = o - ord("A"), 1
            else:
                raise ValueError(f"malformed character {ch!r} in word {text!r}")
            if gen >= m:
                raise ValueError(
                    f"generator {ch!r} out of range for alphabet size {m}"
                )
            codes.append(2 * gen + inv)
        return cls(codes)

    # -- basic protocol ----------------------------------------------------

    def __len__(self) -> int:
        return len(self.codes)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Word) and self.codes == other.codes

    def __hash__(self) -> int:
        return hash(self.codes)

    def __bool__(self) -> bool:
        return bool(self.codes)

    def __add__(self, other: "Word") -> "Word":
        """Plain concatenation, no reduction."""
        return Word(self.codes + other.codes)

    def __getitem__(self, item):
        if isinstance(item, slice):
            return Word(self.codes[item])
        return Letter.from_code(self.codes[item])

    def __iter__(self) -> Iterator[Letter]:
        return (Letter.from_code(c) for c in self.codes)

    def __str__(self) -> str:
        if not self.codes:
            return "1"
        return "".join(str(Letter.from_code(c)) for c in self.codes)

    def __repr__(self) -> str:
        return f"Word({str(self)!r})"

    def __lt__(self, other: "Word") -> bool:
        """Shortlex order (length first, then letter codes)."""
        return (len(self.codes), self.codes) < (len(other.codes), other.codes)

    @property
    def letters(self) -> tuple[Letter, ...]:
        return tuple(Letter.from_code(c) for c in self.codes)

    # -- antimorphisms and reduction ----------------------------------------

    def mirror(self) -> "Word":
        """Letter sequence reversed, letters unchanged."""
        return Word(self.codes[::-1])

    def invert(self) -> "Word":
        """Group inverse: reverse and flip every letter."""
        return Word(c ^ 1 for c in self.codes[::-1])

    def mirror_invert(self) -> "Word":
        """Letterwise inverse without reversal (= mirror o invert)."""
        return Word(c ^ 1 for c in self.codes)

    def is_palindrome(self) -> bool:
        return self.codes == self.codes[::-1]

    def is_reduced(self) -> bool:
        cs = self.codes
        return all(cs[i + 1] != cs[i] ^ 1 for i in range(len(cs) - 1))

    def reduce(self) -> "Word":
        """Free reduction: single left-to-right stack pass, idempotent."""
        stack: list[int] = []
        for c in self.codes:
            if stack and stack[-1] == c ^ 1:
                stack.pop()
            else:
                stack.append(c)
        return Word(stack)


def parse_word(text: str, m: int = 26) -> Word:
    return Word.parse(text, m)


def format_word(w: Word) -> str:
    return str(w)


def reduce(w: Word) -> Word:
    return w.reduce()


def concat(u: Word, v: Word) -> Word:
    """Group product of reduced words: only seam cancellations performed."""
    uc, vc = u.codes, v.codes
    i, j = len(uc), 0
    while i > 0 and j < len(vc) and uc[i - 1] == vc[j] ^ 1:
        i -= 1
        j += 1
    return Word(uc[:i] + vc[j:])


def mirror(w: Word) -> Word:
    return w.mirror()


def invert(w: Word) -> Word:
    return w.invert()


def mirror_invert(w: Word) -> Word:
    return w.mirror_invert()


def is_palindrome(w: Word) -> bool:
    return w.is_palindrome()


EMPTY = Word()
