"""Braid words on a fixed number of strands.

A word is a sequence of Artin generator letters.  Each letter is a pair
``(index, sign)`` with ``1 <= index <= strands - 1`` and ``sign`` either
``+1`` or ``-1``, standing for sigma_index or its inverse.  The strand
count travels with the word so that the same letter sequence on different
braid groups compares unequal.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator

__all__ = [
    "BraidWord",
    "StrandPermutation",
    "parse_word",
    "format_word",
    "sigma_power",
]


@dataclass(frozen=True, order=True)
class StrandPermutation:
    """Permutation of strand positions, 1-indexed.

    ``images[k]`` is where position ``k + 1`` is sent.
    """

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.images)
        if sorted(self.images) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of 1..{n}: {self.images}")

    @classmethod
    def identity(cls, n: int) -> StrandPermutation:
        return cls(tuple(range(1, n + 1)))

    def apply(self, position: int) -> int:
        return self.images[position - 1]

    def then(self, other: StrandPermutation) -> StrandPermutation:
        """Composite that applies ``self`` first, then ``other``."""
        if len(other.images) != len(self.images):
            raise ValueError("size mismatch")
        return StrandPermutation(tuple(other.images[i - 1] for i in self.images))

    def cycles(self) -> tuple[tuple[int, ...], ...]:
        """Cycle decomposition including fixed points.

        Each cycle starts at its smallest member; cycles are sorted by
        that member.  The cycles are the closure components of any braid
        with this permutation.

        >>> StrandPermutation((1, 3, 2)).cycles()
        ((1,), (2, 3))
        """
        seen: set[int] = set()
        out: list[tuple[int, ...]] = []
        for start in range(1, len(self.images) + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            k = self.apply(start)
            while k != start:
                cyc.append(k)
                seen.add(k)
                k = self.apply(k)
            out.append(tuple(cyc))
        return tuple(out)


@dataclass(frozen=True, order=True)
class BraidWord:
    """A word in the braid group on ``strands`` strands."""

    strands: int
    letters: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        if self.strands < 1:
            raise ValueError(f"strands must be >= 1, got {self.strands}")
        for index, sign in self.letters:
            if not 1 <= index <= self.strands - 1:
                raise ValueError(
                    f"generator index {index} out of range for {self.strands} strands"
                )
            if sign not in (1, -1):
                raise ValueError(f"sign must be +-1, got {sign}")

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.letters)

    def __mul__(self, other: BraidWord) -> BraidWord:
        if other.strands != self.strands:
            raise ValueError(
                f"cannot multiply words on {self.strands} and {other.strands} strands"
            )
        return BraidWord(self.strands, self.letters + other.letters)

    def __str__(self) -> str:
        return format_word(self)

    def inverse(self) -> BraidWord:
        """Reversed word with all signs flipped.

        >>> str(parse_word("n=3 s1 s2^-1").inverse())
        'n=3 s2 s1^-1'
        """
        return BraidWord(
            self.strands, tuple((i, -s) for i, s in reversed(self.letters))
        )

    def conjugated_by(self, g: BraidWord) -> BraidWord:
        """g * self * g^-1, unreduced."""
        return g * self * g.inverse()

    def free_reduced(self) -> BraidWord:
        """Cancel adjacent inverse pairs until none remain."""
        stack: list[tuple[int, int]] = []
        for letter in self.letters:
            if stack and stack[-1][0] == letter[0] and stack[-1][1] == -letter[1]:
                stack.pop()
            else:
                stack.append(letter)
        return BraidWord(self.strands, tuple(stack))

    def exponent_sum(self) -> int:
        return sum(s for _, s in self.letters)

    def bennequin(self) -> int:
        """Self-linking number of the closure: exponent sum minus strands."""
        return self.exponent_sum() - self.strands

    def permutation(self) -> StrandPermutation:
        """Underlying permutation: starting position -> ending position."""
        occupant = list(range(1, self.strands + 1))  # occupant[p-1] = strand at p
        for index, _ in self.letters:
            occupant[index - 1], occupant[index] = occupant[index], occupant[index - 1]
        images = [0] * self.strands
        for pos, strand in enumerate(occupant, start=1):
            images[strand - 1] = pos
        return StrandPermutation(tuple(images))

    def rotated(self, k: int) -> BraidWord:
        """Cyclic rotation moving the first ``k`` letters to the end."""
        if not self.letters:
            return self
        k %= len(self.letters)
        return BraidWord(self.strands, self.letters[k:] + self.letters[:k])

    def rotations(self) -> tuple[BraidWord, ...]:
        """All cyclic rotations, in rotation order.  The empty word has
        exactly one rotation, itself."""
        if not self.letters:
            return (self,)
        return tuple(self.rotated(k) for k in range(len(self.letters)))


def sigma_power(strands: int, index: int, power: int) -> BraidWord:
    """sigma_index^power as a word on ``strands`` strands."""
    sign = 1 if power >= 0 else -1
    return BraidWord(strands, ((index, sign),) * abs(power))


_TOKEN = re.compile(r"^s(\d+)(?:\^(-?\d+))?$")


def parse_word(text: str, default_strands: int | None = None) -> BraidWord:
    """Parse the ``s1 s2^-1``-style notation.

    Tokens are whitespace separated.  An optional leading ``n=INT`` pins
    the strand count; otherwise ``default_strands`` is used if given,
    else the count is inferred as ``max index + 1`` (1 for the empty
    word).  A bare ``sI`` means ``sI^1``; ``^0`` is rejected.

    >>> parse_word("s1^3 s2^-1").letters
    ((1, 1), (1, 1), (1, 1), (2, -1))
    >>> parse_word("n=4 s1").strands
    4
    """
    tokens = text.split()
    strands = default_strands
    if tokens and tokens[0].startswith("n="):
        head = tokens.pop(0)
        try:
            strands = int(head[2:])
        except ValueError:
            raise ValueError(f"bad strand count: {head!r}") from None
    letters: list[tuple[int, int]] = []
    for tok in tokens:
        m = _TOKEN.match(tok)
        if m is None:
            raise ValueError(f"bad letter token: {tok!r}")
        index = int(m.group(1))
        power = int(m.group(2)) if m.group(2) is not None else 1
        if power == 0:
            raise ValueError(f"zero power not allowed: {tok!r}")
        sign = 1 if power > 0 else -1
        letters.extend(((index, sign),) * abs(power))
    if strands is None:
        strands = max((i for i, _ in letters), default=0) + 1
    return BraidWord(strands, tuple(letters))


def format_word(word: BraidWord) -> str:
    """Inverse of :func:`parse_word`, with powers collected.

    The ``n=`` prefix appears only when the strand count is not what
    parsing would infer, so round-trips are exact.

    >>> format_word(parse_word("s1 s1 s1 s2^-1"))
    's1^3 s2^-1'
    """
    runs: list[str] = []
    i = 0
    letters = word.letters
    while i < len(letters):
        j = i
        while j < len(letters) and letters[j] == letters[i]:
            j += 1
        power = (j - i) * letters[i][1]
        runs.append(f"s{letters[i][0]}" + (f"^{power}" if power != 1 else ""))
        i = j
    inferred = max((i for i, _ in letters), default=0) + 1
    prefix = [f"n={word.strands}"] if word.strands != inferred else []
    return " ".join(prefix + runs)
