"""Invariants of the closure link of a braid word.

Components are the cycles of the underlying permutation, labelled by
their starting strand positions.  A single sweep down the word attributes
each crossing either to one component's self-writhe or to a pair's mixed
crossing count; mixed counts are always even and halve to linking
numbers.
"""

from __future__ import annotations

from dataclasses import dataclass

from .burau import Laurent, burau_matrix, determinant
from .words import BraidWord

__all__ = [
    "ComponentInvariants",
    "LinkingMatrix",
    "components",
    "linking_matrix",
    "alexander_polynomial",
]


@dataclass(frozen=True)
class ComponentInvariants:
    """One closure component: its strands and its own Bennequin number.

    ``bennequin`` is ``self_writhe - strand_count``, the self-linking
    number the component would have as a closed braid on its own strands.
    """

    members: tuple[int, ...]
    strand_count: int
    self_writhe: int
    bennequin: int


@dataclass(frozen=True)
class LinkingMatrix:
    """Pairwise linking numbers, indexed like the component tuple."""

    members: tuple[tuple[int, ...], ...]
    entries: tuple[tuple[int, ...], ...]

    def between(self, i: int, j: int) -> int:
        return self.entries[i][j]

    def total(self) -> int:
        n = len(self.members)
        return sum(self.entries[i][j] for i in range(n) for j in range(i + 1, n))


def _sweep(word: BraidWord) -> tuple[tuple[tuple[int, ...], ...], list[int], dict[tuple[int, int], int]]:
    """Attribute every crossing to a component or a component pair."""
    cycles = word.permutation().cycles()
    comp_of = {strand: k for k, cyc in enumerate(cycles) for strand in cyc}
    occupant = list(range(1, word.strands + 1))
    self_writhe = [0] * len(cycles)
    mixed: dict[tuple[int, int], int] = {}
    for index, sign in word.letters:
        a, b = occupant[index - 1], occupant[index]
        ca, cb = comp_of[a], comp_of[b]
        if ca == cb:
            self_writhe[ca] += sign
        else:
            key = (ca, cb) if ca < cb else (cb, ca)
            mixed[key] = mixed.get(key, 0) + sign
        occupant[index - 1], occupant[index] = b, a
    return cycles, self_writhe, mixed


def components(word: BraidWord) -> tuple[ComponentInvariants, ...]:
    """Per-component invariants, sorted by smallest member strand.

    >>> [c.bennequin for c in components(BraidWord(3, ((1, 1), (1, 1))))]
    [-1, -1]
    """
    cycles, self_writhe, _ = _sweep(word)
    return tuple(
        ComponentInvariants(cyc, len(cyc), e, e - len(cyc))
        for cyc, e in zip(cycles, self_writhe)
    )


def linking_matrix(word: BraidWord) -> LinkingMatrix:
    cycles, _, mixed = _sweep(word)
    n = len(cycles)
    entries = [[0] * n for _ in range(n)]
    for (i, j), count in mixed.items():
        if count % 2 != 0:
            raise AssertionError(f"odd mixed crossing count {count} between {i} and {j}")
        entries[i][j] = entries[j][i] = count // 2
    return LinkingMatrix(cycles, tuple(tuple(row) for row in entries))


def alexander_polynomial(word: BraidWord) -> Laurent:
    """Alexander polynomial of the closure, via the reduced Burau matrix.

    Normalized to minimum degree 0 with positive top coefficient; the
    zero polynomial is returned as such (split links).
    """
    m = burau_matrix(word)
    size = word.strands - 1
    shifted = tuple(
        tuple(m[i][j] - (Laurent.one() if i == j else Laurent.zero()) for j in range(size))
        for i in range(size)
    )
    det = determinant(shifted)
    if det.is_zero():
        return det
    cyclotomic_like = Laurent.from_dict({k: 1 for k in range(word.strands)})
    return det.divexact(cyclotomic_like).unit_normalized()
