"""Braid words on n strands.

Letters are nonzero signed integers: +i means the generator acting at
positions (i, i+1) with the strand at position i passing over; -i is its
mirror.  Words act top-to-bottom; permutations compose left-to-right along
the word.  This over-strand convention is fixed here once and honored by
every other module (diagram construction, layered splitting, rendering).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

CONVENTION = "positive-generator-left-strand-over/v1"


class BraidError(ValueError):
    pass


class GeneratorOutOfRange(BraidError):
    pass


class StrandCountMismatch(BraidError):
    pass


class NotPure(BraidError):
    pass


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...]

    def to_wire(self) -> dict:
        return {"strands": self.strands, "letters": list(self.letters)}

    @staticmethod
    def from_wire(obj: dict) -> "BraidWord":
        return parse_braid(obj["strands"], obj["letters"])


@dataclass(frozen=True)
class StrandPermutation:
    """Bijection on 1..n mapping each starting strand to its ending position."""

    mapping: tuple[int, ...]

    def __call__(self, i: int) -> int:
        return self.mapping[i - 1]

    def is_identity(self) -> bool:
        return all(self.mapping[i] == i + 1 for i in range(len(self.mapping)))

    def cycles(self) -> list[tuple[int, ...]]:
        """Cycles sorted by their smallest member."""
        n = len(self.mapping)
        seen, out = set(), []
        for start in range(1, n + 1):
            if start in seen:
                continue
            cyc, v = [], start
            while v not in seen:
                seen.add(v)
                cyc.append(v)
                v = self.mapping[v - 1]
            out.append(tuple(cyc))
        return out


@dataclass(frozen=True)
class StrandCrossing:
    """One letter's crossing, reported in starting-strand identities."""

    position_in_word: int  # 0-based letter index
    strand_a: int  # strand currently at the letter's left position
    strand_b: int  # strand currently at the right position
    sign: int
    over_strand: int


def parse_braid(n: int, letters: Sequence[int]) -> BraidWord:
    if n < 1:
        raise BraidError(f"strand count must be >= 1, got {n}")
    for idx, letter in enumerate(letters):
        if letter == 0 or not 1 <= abs(letter) <= n - 1:
            raise GeneratorOutOfRange(
                f"letter {letter} at index {idx} invalid on {n} strands"
            )
    return BraidWord(strands=n, letters=tuple(letters))


def permutation_of(w: BraidWord) -> StrandPermutation:
    """Net position map of the word (signs are irrelevant to the permutation)."""
    pos_to_strand = list(range(1, w.strands + 1))
    for letter in w.letters:
        p = abs(letter) - 1
        pos_to_strand[p], pos_to_strand[p + 1] = pos_to_strand[p + 1], pos_to_strand[p]
    mapping = [0] * w.strands
    for pos, strand in enumerate(pos_to_strand, start=1):
        mapping[strand - 1] = pos
    return StrandPermutation(tuple(mapping))


def is_pure(w: BraidWord) -> bool:
    return permutation_of(w).is_identity()


def strand_crossings(w: BraidWord) -> list[StrandCrossing]:
    """Top-to-bottom simulation reporting, per letter, which starting strands
    cross, the crossing sign, and which of the two is the over-strand."""
    pos_to_strand = list(range(1, w.strands + 1))
    out = []
    for t, letter in enumerate(w.letters):
        p = abs(letter) - 1
        a, b = pos_to_strand[p], pos_to_strand[p + 1]
        sign = 1 if letter > 0 else -1
        out.append(
            StrandCrossing(
                position_in_word=t,
                strand_a=a,
                strand_b=b,
                sign=sign,
                over_strand=a if letter > 0 else b,
            )
        )
        pos_to_strand[p], pos_to_strand[p + 1] = b, a
    return out


def closure_linking_matrix(w: BraidWord) -> tuple[tuple[int, ...], ...]:
    """Linking matrix of the trace closure, indexed by strands.

    Only defined for pure words, where closure components are exactly the
    strands.  Entry (i, j) is half the signed crossing count between strands
    i and j.
    """
    if not is_pure(w):
        raise NotPure("closure components are strand-indexed only for pure words")
    n = w.strands
    sums = [[0] * n for _ in range(n)]
    for c in strand_crossings(w):
        i, j = c.strand_a - 1, c.strand_b - 1
        sums[i][j] += c.sign
        sums[j][i] += c.sign
    for i in range(n):
        for j in range(n):
            if i != j and sums[i][j] % 2 != 0:
                raise BraidError(f"odd signed crossing sum for strand pair ({i+1},{j+1})")
    return tuple(tuple(sums[i][j] // 2 for j in range(n)) for i in range(n))


def concat(w1: BraidWord, w2: BraidWord) -> BraidWord:
    if w1.strands != w2.strands:
        raise StrandCountMismatch(f"{w1.strands} != {w2.strands}")
    return BraidWord(strands=w1.strands, letters=w1.letters + w2.letters)


def inverse(w: BraidWord) -> BraidWord:
    """Letter-reversed, sign-flipped word; concat(w, inverse(w)) is pure."""
    return BraidWord(strands=w.strands, letters=tuple(-x for x in reversed(w.letters)))


def concat_all(words: Iterable[BraidWord]) -> BraidWord:
    words = list(words)
    if not words:
        raise BraidError("need at least one word")
    acc = words[0]
    for w in words[1:]:
        acc = concat(acc, w)
    return acc
