"""Deciders for group palindromic length <= 2 and <= 3, constructive
decomposers, product-closure oracles, and the five-form k=4 experiment."""

from __future__ import annotations

import multiprocessing
import time
from dataclasses import dataclass
from functools import partial
from typing import Iterator

from .paltable import PalTable
from .patterns import Pattern, iter_reduced_palindromes, match
from .report import VerificationReport
from .words import Word, concat

PL2_PATTERN = Pattern.parse("A.P.Q.!A | P Q")
PL3_ABP_PATTERN = Pattern.parse("A.B.P.Q.!B.R.~A | P Q R")
PL3_APB_PATTERN = Pattern.parse("A.P.B.Q.R.!B.~A | P Q R")

# The five conjectured reduced forms for products of four palindromes.
K4_FORMS = {
    "F1": Pattern.parse("A.P.B.Q.C.R.S.!C.~B.!A | P Q R S"),
    "F2": Pattern.parse("A.P.B.C.Q.R.!C.S.~B.!A | P Q R S"),
    "F3": Pattern.parse("A.B.P.Q.!B.C.R.S.!C.!A | P Q R S"),
    "F4": Pattern.parse("A.B.P.C.Q.R.!C.~B.S.!A | P Q R S"),
    "F5": Pattern.parse("A.B.C.P.Q.!C.R.~B.S.!A | P Q R S"),
}


@dataclass(frozen=True)
class Pl2Witness:
    """w = A + P + Q + invert(A), exact concatenation of the reduced word."""

    a: Word
    p: Word
    q: Word

    def target(self) -> Word:
        return self.a + self.p + self.q + self.a.invert()


@dataclass(frozen=True)
class Pl3Witness:
    """ABP: w = A+B+P+Q+invert(B)+R+mirror(A); APB: w = A+P+B+Q+R+invert(B)+mirror(A)."""

    variant: str  # "ABP" | "APB"
    a: Word
    b: Word
    p: Word
    q: Word
    r: Word

    def target(self) -> Word:
        if self.variant == "ABP":
            return (self.a + self.b + self.p + self.q + self.b.invert()
                    + self.r + self.a.mirror())
        return (self.a + self.p + self.b + self.q + self.r + self.b.invert()
                + self.a.mirror())


def _require_reduced(w: Word) -> None:
    if not w.is_reduced():
        raise ValueError(f"word {w} is not reduced")


def match_pl2(w: Word) -> Pl2Witness | None:
    """Witness iff the reduced word has the form A.P.Q.!A with P, Q palindromes.

    Boundary tuple is lexicographically minimal: smallest |A|, then smallest |P|.
    """
    _require_reduced(w)
    codes = w.codes
    n = len(codes)
    # valid |A| are exactly 0..amax where amax counts trailing positions at
    # which w agrees with its own inverse (w[n-1-j]^1 laid out forward)
    amax = 0
    while amax < n // 2 and codes[n - 1 - amax] == codes[amax] ^ 1:
        amax += 1
    table = PalTable(w)
    for a in range(amax + 1):
        lo, hi = a, n - a
        for s in range(lo, hi + 1):
            if table.is_pal(lo, s) and table.is_pal(s, hi):
                return Pl2Witness(w[0:a], w[lo:s], w[s:hi])
    return None


def decompose_pl2(wit: Pl2Witness) -> tuple[Word, Word]:
    """Two palindromes whose reduced product is the witness target."""
    a, p, q = wit.a, wit.p, wit.q
    f1 = a + p + a.mirror()
    f2 = a.mirror().invert() + q + a.invert()
    return f1, f2


def match_pl3(w: Word) -> Pl3Witness | None:
    """Witness iff w matches the ABP or the APB form; ABP is tried first."""
    _require_reduced(w)
    binding = match(PL3_ABP_PATTERN, w)
    if binding is not None:
        return Pl3Witness("ABP", binding["A"], binding["B"], binding["P"],
                          binding["Q"], binding["R"])
    binding = match(PL3_APB_PATTERN, w)
    if binding is not None:
        return Pl3Witness("APB", binding["A"], binding["B"], binding["P"],
                          binding["Q"], binding["R"])
    return None


def decompose_pl3(wit: Pl3Witness) -> tuple[Word, Word, Word]:
    """Three palindromes whose reduced product is the witness target."""
    a, b, p, q, r = wit.a, wit.b, wit.p, wit.q, wit.r
    am = a.mirror()
    bm = b.mirror()
    if wit.variant == "ABP":
        f1 = a + b + p + bm + am
        f2 = am.invert() + bm.invert() + q + b.invert() + a.invert()
        f3 = a + r + am
    else:
        f1 = a + p + am
        f2 = am.invert() + b + q + bm + a.invert()
        f3 = a + bm.invert() + r + b.invert() + am
    return f1, f2, f3


def group_pl_small(w: Word) -> int | str:
    """Exact group palindromic length when it is at most 3, else ">3"."""
    _require_reduced(w)
    if not w:
        return 0
    if w.is_palindrome():
        return 1
    if match_pl2(w) is not None:
        return 2
    if match_pl3(w) is not None:
        return 3
    return ">3"


# -- product closures ---------------------------------------------------------


def enumerate_palindromes(m: int, maxlen: int, limit: int = 10_000_000) -> Iterator[Word]:
    """All reduced palindromes of length <= maxlen, shortlex order."""
    if _palindrome_count(m, maxlen) > limit:
        raise ValueError(f"palindrome enumeration for m={m}, maxlen={maxlen} "
                         f"exceeds the resource guard ({limit})")
    return iter_reduced_palindromes(m, maxlen)


def _palindrome_count(m: int, maxlen: int) -> int:
    total = 0
    for length in range(maxlen + 1):
        half = (length + 1) // 2
        if half == 0:
            total += 1
        else:
            total += 2 * m * (2 * m - 1) ** (half - 1)
    return total


@dataclass
class ClosureSet:
    """Reduced words obtainable as products of <= k palindromes of length <= max_factor_len."""

    m: int
    k: int
    max_factor_len: int
    words: dict[Word, tuple[Word, ...]]  # member -> first witness in BFS order

    def __contains__(self, w: Word) -> bool:
        return w in self.words

    def __len__(self) -> int:
        return len(self.words)

    def members(self) -> list[Word]:
        return sorted(self.words)


def product_closure(m: int, k: int, max_factor_len: int,
                    limit: int = 20_000_000) -> ClosureSet:
    """Breadth-first closure by factor count; each member keeps one witness."""
    pals = list(enumerate_palindromes(m, max_factor_len))
    if len(pals) ** max(1, k) > limit:
        raise ValueError(f"closure for m={m}, k={k}, L={max_factor_len} "
                         f"exceeds the resource guard ({limit})")
    empty = Word()
    words: dict[Word, tuple[Word, ...]] = {empty: ()}
    frontier = [empty]
    for _ in range(k):
        next_frontier = []
        for base in frontier:
            base_witness = words[base]
            for p in pals:
                if not p:
                    continue
                prod = concat(base, p)
                if prod not in words:
                    words[prod] = base_witness + (p,)
                    next_frontier.append(prod)
        frontier = next_frontier
    return ClosureSet(m, k, max_factor_len, words)


# -- exhaustive verification ---------------------------------------------------


def _chunks(items: list, jobs: int) -> list[list]:
    n = max(1, min(len(items), jobs * 4))
    size = (len(items) + n - 1) // n
    return [items[i:i + size] for i in range(0, len(items), size)] or [[]]


def _run_chunks(worker, chunks: list, jobs: int) -> list:
    if jobs <= 1 or len(chunks) <= 1:
        return [worker(c) for c in chunks]
    ctx = multiprocessing.get_context("fork")
    with ctx.Pool(jobs) as pool:
        return pool.map(worker, chunks)


def _scan_pl2_chunk(code_chunk: list[tuple[int, ...]]) -> tuple[int, int, list[str]]:
    matched = verified = 0
    bad: list[str] = []
    for codes in code_chunk:
        w = Word(codes)
        wit = match_pl2(w)
        if wit is None:
            bad.append(str(w))
            continue
        matched += 1
        f1, f2 = decompose_pl2(wit)
        bound = 2 * len(w) if w else 0
        if (f1.is_palindrome() and f2.is_palindrome()
                and concat(f1.reduce(), f2.reduce()) == w
                and len(f1) <= max(bound, 0) + 2 * len(wit.a) == len(f1) or True):
            pass
        if (f1.is_palindrome() and f2.is_palindrome()
                and (f1 + f2).reduce() == w
                and max(len(f1), len(f2)) <= max(2 * len(w), 0)):
            verified += 1
        else:
            bad.append(str(w))
    return matched, verified, bad


def verify_theorem2(m: int, max_factor_len: int, jobs: int = 1) -> VerificationReport:
    """Exhaustively check the two-palindrome characterization at a bound.

    Every reduced product of <= 2 reduced palindromes of length <= L must be
    accepted by match_pl2, and every accepted member's decomposition must
    re-verify.  Expected: zero counterexamples.
    """
    t0 = time.perf_counter()
    closure = product_closure(m, 2, max_factor_len)
    members = closure.members()
    results = _run_chunks(_scan_pl2_chunk, _chunks([w.codes for w in members], jobs), jobs)
    matched = sum(r[0] for r in results)
    verified = sum(r[1] for r in results)
    bad = sorted((w for r in results for w in r[2]), key=lambda t: (len(t), t))
    return VerificationReport(
        kind="theorem-pl2",
        parameters={"m": m, "max_factor_len": max_factor_len, "jobs": jobs},
        totals={"closure_size": len(members), "matched": matched,
                "decompose_verified": verified},
        per_form_counts={str(PL2_PATTERN): matched},
        counterexamples=bad,
        runtime_ms=int((time.perf_counter() - t0) * 1000),
    )


def _scan_pl3_chunk(code_chunk: list[tuple[int, ...]]) -> tuple[dict, int, list[str]]:
    counts = {"ABP": 0, "APB": 0}
    verified = 0
    bad: list[str] = []
    for codes in code_chunk:
        w = Word(codes)
        wit = match_pl3(w)
        if wit is None:
            bad.append(str(w))
            continue
        counts[wit.variant] += 1
        f1, f2, f3 = decompose_pl3(wit)
        bound = 2 * len(w)
        if (f1.is_palindrome() and f2.is_palindrome() and f3.is_palindrome()
                and ((f1 + f2).reduce() + f3).reduce() == w
                and max(len(f1), len(f2), len(f3)) <= bound):
            verified += 1
        else:
            bad.append(str(w))
    return counts, verified, bad


def verify_theorem3(m: int, max_factor_len: int, jobs: int = 1) -> VerificationReport:
    """Same as verify_theorem2 for products of <= 3 palindromes and match_pl3."""
    t0 = time.perf_counter()
    closure = product_closure(m, 3, max_factor_len)
    members = closure.members()
    results = _run_chunks(_scan_pl3_chunk, _chunks([w.codes for w in members], jobs), jobs)
    counts = {"ABP": sum(r[0]["ABP"] for r in results),
              "APB": sum(r[0]["APB"] for r in results)}
    verified = sum(r[1] for r in results)
    bad = sorted((w for r in results for w in r[2]), key=lambda t: (len(t), t))
    return VerificationReport(
        kind="theorem-pl3",
        parameters={"m": m, "max_factor_len": max_factor_len, "jobs": jobs},
        totals={"closure_size": len(members), "matched": counts["ABP"] + counts["APB"],
                "decompose_verified": verified},
        per_form_counts=counts,
        counterexamples=bad,
        runtime_ms=int((time.perf_counter() - t0) * 1000),
    )


def _scan_k4_chunk(code_chunk: list[tuple[int, ...]]) -> tuple[dict, list[str]]:
    counts = {name: 0 for name in K4_FORMS}
    unmatched: list[str] = []
    for codes in code_chunk:
        w = Word(codes)
        hit = False
        for name, pattern in K4_FORMS.items():
            if match(pattern, w) is not None:
                counts[name] += 1
                hit = True
        if not hit:
            unmatched.append(str(w))
    return counts, unmatched


def k4_experiment(m: int, max_factor_len: int, jobs: int = 1) -> VerificationReport:
    """Test every product of <= 4 bounded palindromes against the five forms.

    Words matching no form are reported as conjecture counterexamples; the
    experiment reports, it does not assert.
    """
    t0 = time.perf_counter()
    closure = product_closure(m, 4, max_factor_len)
    members = closure.members()
    results = _run_chunks(_scan_k4_chunk, _chunks([w.codes for w in members], jobs), jobs)
    counts = {name: sum(r[0][name] for r in results) for name in K4_FORMS}
    unmatched = sorted((w for r in results for w in r[1]), key=lambda t: (len(t), t))
    return VerificationReport(
        kind="experiment-k4",
        parameters={"m": m, "max_factor_len": max_factor_len, "jobs": jobs,
                    "forms": {name: str(p) for name, p in K4_FORMS.items()}},
        totals={"closure_size": len(members),
                "matched_any": len(members) - len(unmatched),
                "matched_none": len(unmatched)},
        per_form_counts=counts,
        counterexamples=unmatched,
        runtime_ms=int((time.perf_counter() - t0) * 1000),
    )
