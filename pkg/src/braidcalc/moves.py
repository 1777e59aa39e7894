"""Markov moves on closed-braid representatives and audited move towers.

A tower is a sequence of words linked by moves.  ``validate_tower``
replays every move independently of how the tower was built, checks the
mode's legality rules, and attributes elliptic/hyperbolic point counts
(v+, v-, s+, s-) of the swept annulus foliation to the moves:

* positive stabilization or destabilization: one positive vertex and one
  positive singularity,
* negative stabilization: one negative vertex, one positive singularity,
* negative destabilization: one positive vertex, one negative
  singularity,
* conjugation and exchange: none.

These attributions are the unique single-vertex, single-singularity
choices under which the self-linking bookkeeping identity

    sl(first) - sl(last) == (s+ - s-) - (v+ - v-)

holds for arbitrary towers.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Union

from .words import BraidWord, format_word, parse_word

__all__ = [
    "Stabilize",
    "Destabilize",
    "ConjugateBy",
    "Exchange",
    "Move",
    "MoveError",
    "NotDestabilizable",
    "InvalidSplit",
    "apply_move",
    "find_exchange_splits",
    "MarkovTower",
    "tower_from_moves",
    "FoliationCounts",
    "TowerValidation",
    "validate_tower",
    "tower_to_json",
    "tower_from_json",
]


class MoveError(ValueError):
    """A move does not apply to the word it was asked to act on."""


class NotDestabilizable(MoveError):
    pass


class InvalidSplit(MoveError):
    pass


@dataclass(frozen=True)
class Stabilize:
    sign: int

    def apply(self, word: BraidWord) -> BraidWord:
        """Append sigma_n^sign on one extra strand."""
        if self.sign not in (1, -1):
            raise MoveError(f"sign must be +-1, got {self.sign}")
        return BraidWord(word.strands + 1, word.letters + ((word.strands, self.sign),))


@dataclass(frozen=True)
class Destabilize:
    sign: int

    def apply(self, word: BraidWord) -> BraidWord:
        """Drop a final sigma_{n-1}^sign, searching cyclic representatives.

        The freely reduced word must use the last generator exactly once
        and with the requested sign; the first qualifying rotation (in
        rotation order) is the one destabilized, so replays are exact.
        """
        if word.strands < 2:
            raise NotDestabilizable("no strand to remove")
        top = word.strands - 1
        reduced = word.free_reduced()
        uses = [s for i, s in reduced.letters if i == top]
        if len(uses) != 1 or uses[0] != self.sign:
            raise NotDestabilizable(
                f"last generator must occur exactly once with sign {self.sign}"
            )
        for rot in reduced.rotations():
            if rot.letters and rot.letters[-1] == (top, self.sign):
                return BraidWord(word.strands - 1, rot.letters[:-1])
        raise NotDestabilizable("no rotation ends in the required letter")


@dataclass(frozen=True)
class ConjugateBy:
    conjugator: BraidWord

    def apply(self, word: BraidWord) -> BraidWord:
        return word.conjugated_by(self.conjugator)


@dataclass(frozen=True)
class Exchange:
    """Flip the signs of the two outermost last-generator letters.

    ``split`` is the pair of letter positions (i, j) carrying
    sigma_{n-1}^d and sigma_{n-1}^-d; the word must factor as
    P sigma_{n-1}^d Q sigma_{n-1}^-d with P, Q not using the last
    generator after position bookkeeping, and j must be the final letter.
    """

    split: tuple[int, int]

    def apply(self, word: BraidWord) -> BraidWord:
        i, j = self.split
        top = word.strands - 1
        if not (0 <= i < j == len(word.letters) - 1):
            raise InvalidSplit(f"split {self.split} out of range for length {len(word.letters)}")
        li, lj = word.letters[i], word.letters[j]
        if li[0] != top or lj[0] != top or li[1] != -lj[1]:
            raise InvalidSplit("split positions must hold opposite last-generator letters")
        between = word.letters[i + 1 : j]
        before = word.letters[:i]
        if any(idx == top for idx, _ in before + between):
            raise InvalidSplit("interior segments may not use the last generator")
        flipped = (
            before + ((top, -li[1]),) + between + ((top, li[1]),)
        )
        return BraidWord(word.strands, flipped)


Move = Union[Stabilize, Destabilize, ConjugateBy, Exchange]


def apply_move(word: BraidWord, move: Move) -> BraidWord:
    return move.apply(word)


def find_exchange_splits(word: BraidWord) -> tuple[tuple[int, int], ...]:
    """All positions where an exchange move applies to the word as written."""
    out: list[tuple[int, int]] = []
    j = len(word.letters) - 1
    for i in range(j):
        try:
            Exchange((i, j)).apply(word)
        except InvalidSplit:
            continue
        out.append((i, j))
    return tuple(out)


@dataclass(frozen=True)
class MarkovTower:
    """Words chained by moves; states[k+1] is claimed to be the result of
    moves[k] acting on states[k]."""

    mode: str
    states: tuple[BraidWord, ...]
    moves: tuple[Move, ...]

    def __post_init__(self) -> None:
        if self.mode not in ("transversal", "topological"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if len(self.states) != len(self.moves) + 1:
            raise ValueError("need exactly one more state than moves")


def tower_from_moves(initial: BraidWord, moves: tuple[Move, ...], mode: str) -> MarkovTower:
    states = [initial]
    for move in moves:
        states.append(apply_move(states[-1], move))
    return MarkovTower(mode, tuple(states), tuple(moves))


@dataclass(frozen=True)
class FoliationCounts:
    v_plus: int = 0
    v_minus: int = 0
    s_plus: int = 0
    s_minus: int = 0

    def add(self, dv_plus: int, dv_minus: int, ds_plus: int, ds_minus: int) -> FoliationCounts:
        return FoliationCounts(
            self.v_plus + dv_plus,
            self.v_minus + dv_minus,
            self.s_plus + ds_plus,
            self.s_minus + ds_minus,
        )


@dataclass(frozen=True)
class TowerValidation:
    ok: bool
    counts: FoliationCounts
    problems: tuple[tuple[str, int], ...]


def _counts_for(move: Move) -> tuple[int, int, int, int]:
    if isinstance(move, Stabilize):
        return (1, 0, 1, 0) if move.sign > 0 else (0, 1, 1, 0)
    if isinstance(move, Destabilize):
        return (1, 0, 1, 0) if move.sign > 0 else (1, 0, 0, 1)
    return (0, 0, 0, 0)


def validate_tower(tower: MarkovTower) -> TowerValidation:
    """Replay, legality-check, and balance a tower.

    Problems carry (code, step).  Codes: ``step_mismatch`` when replaying
    a move does not give the recorded next state (up to free reduction),
    ``illegal_move_for_mode`` for negative (de)stabilizations in
    transversal mode, ``bennequin_drift`` when a transversal tower's
    self-linking changes, and ``bennequin_identity`` when the foliation
    count bookkeeping fails across the tower.
    """
    problems: list[tuple[str, int]] = []
    counts = FoliationCounts()
    for k, move in enumerate(tower.moves):
        if tower.mode == "transversal" and isinstance(move, (Stabilize, Destabilize)):
            if move.sign < 0:
                problems.append(("illegal_move_for_mode", k))
        try:
            replayed = apply_move(tower.states[k], move)
        except MoveError:
            problems.append(("step_mismatch", k))
            counts = counts.add(*_counts_for(move))
            continue
        if replayed.free_reduced() != tower.states[k + 1].free_reduced():
            problems.append(("step_mismatch", k))
        counts = counts.add(*_counts_for(move))
    if tower.mode == "transversal":
        first = tower.states[0].bennequin()
        for k, state in enumerate(tower.states):
            if state.bennequin() != first:
                problems.append(("bennequin_drift", k))
                break
    delta = tower.states[0].bennequin() - tower.states[-1].bennequin()
    balance = (counts.s_plus - counts.s_minus) - (counts.v_plus - counts.v_minus)
    if delta != balance:
        problems.append(("bennequin_identity", len(tower.moves)))
    return TowerValidation(not problems, counts, tuple(problems))


def _move_to_obj(move: Move) -> dict:
    if isinstance(move, Stabilize):
        return {"kind": "stabilize", "sign": move.sign}
    if isinstance(move, Destabilize):
        return {"kind": "destabilize", "sign": move.sign}
    if isinstance(move, ConjugateBy):
        return {"kind": "conjugate", "conjugator": format_word(move.conjugator)}
    if isinstance(move, Exchange):
        return {"kind": "exchange", "split": list(move.split)}
    raise TypeError(f"not a move: {move!r}")


def _move_from_obj(obj: dict, strands: int) -> Move:
    kind = obj.get("kind")
    if kind == "stabilize":
        return Stabilize(int(obj["sign"]))
    if kind == "destabilize":
        return Destabilize(int(obj["sign"]))
    if kind == "conjugate":
        return ConjugateBy(parse_word(obj["conjugator"], default_strands=strands))
    if kind == "exchange":
        i, j = obj["split"]
        return Exchange((int(i), int(j)))
    raise ValueError(f"unknown move kind {kind!r}")


def tower_to_json(tower: MarkovTower) -> str:
    return json.dumps(
        {
            "mode": tower.mode,
            "initial_word": format_word(tower.states[0]),
            "moves": [_move_to_obj(m) for m in tower.moves],
        },
        indent=2,
    )


def tower_from_json(text: str) -> MarkovTower:
    """Rebuild a tower from its JSON description by replaying the moves."""
    obj = json.loads(text)
    initial = parse_word(obj["initial_word"])
    moves: list[Move] = []
    word = initial
    for raw in obj["moves"]:
        move = _move_from_obj(raw, word.strands)
        moves.append(move)
        word = apply_move(word, move)
    return tower_from_moves(initial, tuple(moves), obj["mode"])
