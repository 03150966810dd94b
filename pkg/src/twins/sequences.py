"""Strings over a finite alphabet, permutations, and their twin notions.

A string-twin is a pair of disjoint increasing index lists on which the
letters agree position by position. A weak-twin of a permutation is a
pair of disjoint increasing index lists whose restricted ascent/descent
patterns agree. Indices and letters are 1-based throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .core import VALID, FormatError, Verdict, check_index_lists


@dataclass(frozen=True)
class LetterString:
    r: int
    letters: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        if self.r < 1:
            raise ValueError("palette size must be positive")
        for letter in self.letters:
            if not 1 <= letter <= self.r:
                raise ValueError(f"letter {letter} outside [1..{self.r}]")

    @property
    def length(self) -> int:
        return len(self.letters)


@dataclass(frozen=True)
class Permutation:
    values: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        n = len(self.values)
        if sorted(self.values) != list(range(1, n + 1)):
            raise ValueError("values must be a bijection of [1..n]")

    @property
    def n(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class SignSequence:
    signs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "signs", tuple(self.signs))
        for s in self.signs:
            if s not in (1, -1):
                raise ValueError("signs must be +1 or -1")


def sign_sequence(pi: Permutation) -> SignSequence:
    """Ascent/descent profile: +1 where pi(i) < pi(i+1), else -1. Empty for n=1."""
    vals = pi.values
    return SignSequence(
        tuple(1 if vals[i] < vals[i + 1] else -1 for i in range(len(vals) - 1))
    )


def validate_string_twin(
    x: LetterString, first: Sequence[int], second: Sequence[int]
) -> Verdict:
    """Valid iff both lists increase, are disjoint, equal-length, and letters agree."""
    verdict = check_index_lists(x.length, first, second)
    if not verdict:
        return verdict
    letters = x.letters
    for t in range(len(first)):
        if letters[first[t] - 1] != letters[second[t] - 1]:
            return Verdict(False, "letter_mismatch", t + 1)
    return VALID


def validate_weak_twin(
    pi: Permutation, first: Sequence[int], second: Sequence[int]
) -> Verdict:
    """Valid iff the restricted sign sequences of the two index lists agree."""
    verdict = check_index_lists(pi.n, first, second)
    if not verdict:
        return verdict
    vals = pi.values
    for t in range(len(first) - 1):
        asc_first = vals[first[t] - 1] < vals[first[t + 1] - 1]
        asc_second = vals[second[t] - 1] < vals[second[t + 1] - 1]
        if asc_first != asc_second:
            return Verdict(False, "sign_mismatch", t + 1)
    return VALID


def lcs_length(p1: Permutation, p2: Permutation) -> int:
    """Longest common subsequence of the two value sequences (classic O(n^2) table)."""
    if p1.n != p2.n:
        raise ValueError(f"length mismatch: {p1.n} vs {p2.n}")
    a, b = p1.values, p2.values
    prev = [0] * (len(b) + 1)
    for ai in a:
        cur = [0]
        append = cur.append
        for j, bj in enumerate(b, start=1):
            if ai == bj:
                append(prev[j - 1] + 1)
            else:
                up = prev[j]
                left = cur[-1]
                append(up if up >= left else left)
        prev = cur
    return prev[-1]


# ---------------------------------------------------------------------------
# File formats
#
# String (text): first line "r n", then n whitespace-separated letters.
# Permutation (text): first line "n", then n whitespace-separated values.
# ---------------------------------------------------------------------------


def write_string(x: LetterString, path) -> None:
    with open(path, "w") as fh:
        fh.write(f"{x.r} {x.length}\n")
        fh.write(" ".join(str(v) for v in x.letters) + "\n")


def read_string(path) -> LetterString:
    with open(path) as fh:
        tokens = fh.read().split()
    if len(tokens) < 2:
        raise FormatError("string file must start with 'r n'")
    try:
        r, n = int(tokens[0]), int(tokens[1])
        letters = tuple(int(t) for t in tokens[2:])
    except ValueError as exc:
        raise FormatError("string file must contain integers") from exc
    if len(letters) != n:
        raise FormatError(f"expected {n} letters, got {len(letters)}")
    return LetterString(r, letters)


def write_permutation(pi: Permutation, path) -> None:
    with open(path, "w") as fh:
        fh.write(f"{pi.n}\n")
        fh.write(" ".join(str(v) for v in pi.values) + "\n")


def read_permutation(path) -> Permutation:
    with open(path) as fh:
        tokens = fh.read().split()
    if not tokens:
        raise FormatError("permutation file must start with 'n'")
    try:
        n = int(tokens[0])
        values = tuple(int(t) for t in tokens[1:])
    except ValueError as exc:
        raise FormatError("permutation file must contain integers") from exc
    if len(values) != n:
        raise FormatError(f"expected {n} values, got {len(values)}")
    return Permutation(values)
