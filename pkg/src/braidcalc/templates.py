"""Block-strand move templates and their braid-word instantiations.

A template is a pair of skeletons sharing a set of named blocks.  Filling
every block with a concrete braid word produces two closed-braid words
that present the same oriented link; the port bookkeeping then matches
closure components of one side with closure components of the other.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Dict, List, Mapping, Tuple, Union

from .links import components
from .words import BraidWord, format_word, parse_word

PORT_FIXED = "fixed"
PORT_ROTATED = "rotated"


class TemplateError(ValueError):
    """Base class for template construction and instantiation failures."""


class MissingAssignment(TemplateError):
    """A skeleton block has no assigned braiding."""


class WidthMismatch(TemplateError):
    """An assigned word's strand count differs from its block's width."""


class WeightConstraintViolation(TemplateError):
    """A built-in template's weight constraints are violated."""


class InconsistentCorrespondence(TemplateError):
    """Port pairings do not glue into a bijection of closure components.

    This signals a modeling error in the template itself, not bad input.
    """


@dataclass(frozen=True)
class Crossing:
    """One fixed crossing between adjacent strands: index i, sign +-1."""

    index: int
    sign: int

    def __post_init__(self) -> None:
        if self.index < 1:
            raise TemplateError(f"crossing index must be >= 1, got {self.index}")
        if self.sign not in (1, -1):
            raise TemplateError(f"crossing sign must be +-1, got {self.sign}")


@dataclass(frozen=True)
class BlockSlot:
    """A hole for a braiding block covering `width` adjacent strands."""

    block_id: str
    start_position: int
    width: int

    def __post_init__(self) -> None:
        if not self.block_id:
            raise TemplateError("block_id must be a nonempty string")
        if self.start_position < 1:
            raise TemplateError("start_position must be >= 1")
        # block boundaries must meet at least two strands
        if self.width < 2:
            raise TemplateError(f"block width must be >= 2, got {self.width}")


SkeletonItem = Union[Crossing, BlockSlot]


@dataclass(frozen=True)
class BlockSkeleton:
    """An ordered word-with-holes on `strands` strands.

    `weights` is descriptive metadata naming the pre-expansion strand
    weights of the built-in weighted templates; items are always stored
    already expanded, so instantiation never consults it.
    """

    strands: int
    items: Tuple[SkeletonItem, ...]
    weights: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.strands < 1:
            raise TemplateError(f"strands must be >= 1, got {self.strands}")
        seen = set()
        for item in self.items:
            if isinstance(item, Crossing):
                if item.index > self.strands - 1:
                    raise TemplateError(
                        f"crossing index {item.index} does not fit in {self.strands} strands"
                    )
            elif isinstance(item, BlockSlot):
                if item.start_position + item.width - 1 > self.strands:
                    raise TemplateError(
                        f"block {item.block_id!r} does not fit in {self.strands} strands"
                    )
                if item.block_id in seen:
                    raise TemplateError(f"duplicate block id {item.block_id!r}")
                seen.add(item.block_id)
            else:
                raise TemplateError(f"unknown skeleton item {item!r}")
        if any(w < 1 for w in self.weights):
            raise TemplateError("strand weights must be positive")

    def block_slots(self) -> Tuple[BlockSlot, ...]:
        return tuple(i for i in self.items if isinstance(i, BlockSlot))

    def block_ids(self) -> frozenset:
        return frozenset(slot.block_id for slot in self.block_slots())


@dataclass(frozen=True)
class BraidingAssignment:
    """A map from block id to the braid word filling that block."""

    words: Tuple[Tuple[str, BraidWord], ...]

    def __post_init__(self) -> None:
        ids = [bid for bid, _ in self.words]
        if len(set(ids)) != len(ids):
            raise TemplateError("duplicate block id in assignment")
        for bid, word in self.words:
            if not isinstance(word, BraidWord):
                raise TemplateError(f"assignment for {bid!r} is not a BraidWord")

    @classmethod
    def from_mapping(cls, mapping: Mapping[str, BraidWord]) -> "BraidingAssignment":
        return cls(tuple(sorted(mapping.items())))

    def word_for(self, block_id: str) -> BraidWord:
        for bid, word in self.words:
            if bid == block_id:
                return word
        raise MissingAssignment(f"no braiding assigned to block {block_id!r}")

    def as_mapping(self) -> Dict[str, BraidWord]:
        return dict(self.words)


@dataclass(frozen=True)
class Template:
    """A plus/minus skeleton pair over one block set, plus the port map.

    `port_map` records, per block, how the block's boundary ports on the
    plus side correspond to those on the minus side: "fixed" keeps each
    port in place, "rotated" turns the block half a turn about its
    vertical axis, so the j-th port meets the (width+1-j)-th port at the
    same height.
    """

    plus: BlockSkeleton
    minus: BlockSkeleton
    port_map: Tuple[Tuple[str, str], ...]

    def __post_init__(self) -> None:
        ids = self.plus.block_ids()
        if ids != self.minus.block_ids():
            raise TemplateError("plus and minus sides use different block sets")
        mapped = {bid for bid, _ in self.port_map}
        if mapped != set(ids):
            raise TemplateError("port_map must cover exactly the template's blocks")
        for bid, mode in self.port_map:
            if mode not in (PORT_FIXED, PORT_ROTATED):
                raise TemplateError(f"unknown port map mode {mode!r} for block {bid!r}")
        widths_p = {s.block_id: s.width for s in self.plus.block_slots()}
        widths_m = {s.block_id: s.width for s in self.minus.block_slots()}
        if widths_p != widths_m:
            raise TemplateError("block widths differ between the two sides")

    def block_widths(self) -> Dict[str, int]:
        return {s.block_id: s.width for s in self.plus.block_slots()}


@dataclass(frozen=True)
class Destabilize:
    """Kind tag: remove a strand that crosses the rest exactly once."""

    sign: int
    weight: int = 1


@dataclass(frozen=True)
class Exchange:
    """Kind tag: carry a unit strand across a weight-w cable and back."""

    weight: int = 1


@dataclass(frozen=True)
class Flype:
    """Kind tag: turn the middle tangle half a turn past one crossing."""

    sign: int
    w: int = 1
    w_prime: int = 1
    k: int = 1
    k_prime: int = 1


TemplateKind = Union[Destabilize, Exchange, Flype]


def instantiate(sk: BlockSkeleton, a: BraidingAssignment) -> BraidWord:
    """Fill every block of `sk` with its assigned word.

    Block letters have their generator indices shifted by the block's
    start position minus one; fixed crossings are kept in order.
    """
    letters: List[Tuple[int, int]] = []
    for item in sk.items:
        if isinstance(item, Crossing):
            letters.append((item.index, item.sign))
            continue
        word = a.word_for(item.block_id)
        if word.strands != item.width:
            raise WidthMismatch(
                f"block {item.block_id!r} has width {item.width}, "
                f"assigned word has {word.strands} strands"
            )
        shift = item.start_position - 1
        letters.extend((index + shift, sign) for index, sign in word.letters)
    return BraidWord(sk.strands, tuple(letters))


def _destabilize_template(kind: Destabilize) -> Template:
    if kind.sign not in (1, -1):
        raise TemplateError(f"destabilization sign must be +-1, got {kind.sign}")
    if kind.weight < 1:
        raise WeightConstraintViolation("destabilization weight must be >= 1")
    k = kind.weight + 1
    plus = BlockSkeleton(
        k + 1,
        (BlockSlot("P", 1, k), Crossing(k, kind.sign)),
        weights=(kind.weight, 1, 1),
    )
    minus = BlockSkeleton(k, (BlockSlot("P", 1, k),), weights=(kind.weight, 1))
    return Template(plus, minus, (("P", PORT_FIXED),))


def _exchange_template(kind: Exchange) -> Template:
    w = kind.weight
    if w < 1:
        raise WeightConstraintViolation("exchange weight must be >= 1")

    def side(direction: int) -> BlockSkeleton:
        # unit strand leaves position w+2, crosses the cable down to
        # position 2, passes through Q, and crosses back up
        down = tuple(Crossing(i, direction) for i in range(w + 1, 1, -1))
        back = tuple(Crossing(i, -direction) for i in range(2, w + 2))
        items = (BlockSlot("P", 1, w + 1),) + down + (BlockSlot("Q", 1, 2),) + back
        return BlockSkeleton(w + 2, items, weights=(1, w, 1))

    return Template(side(1), side(-1), (("P", PORT_FIXED), ("Q", PORT_FIXED)))


def _flype_template(kind: Flype) -> Template:
    if kind.sign not in (1, -1):
        raise TemplateError(f"flype sign must be +-1, got {kind.sign}")
    weights = (kind.w, kind.w_prime, kind.k, kind.k_prime)
    if any(x < 1 for x in weights):
        raise WeightConstraintViolation("flype weights must be positive")
    if kind.k_prime - kind.w < 0:
        raise WeightConstraintViolation(
            f"flype weights must satisfy k' - w >= 0, got k'={kind.k_prime}, w={kind.w}"
        )
    if weights != (1, 1, 1, 1):
        # a flype of a weighted cable introduces half-twists inside the
        # cable; that convention is deliberately not modeled
        raise NotImplementedError("only unit-weight flype templates are supported")
    plus = BlockSkeleton(
        3,
        (BlockSlot("P", 1, 2), BlockSlot("R", 2, 2), BlockSlot("Q", 1, 2), Crossing(2, kind.sign)),
        weights=(1, 1, 1),
    )
    minus = BlockSkeleton(
        3,
        (BlockSlot("P", 1, 2), Crossing(2, kind.sign), BlockSlot("Q", 1, 2), BlockSlot("R", 2, 2)),
        weights=(1, 1, 1),
    )
    # the flype carries the middle block R turned half a turn
    port_map = (("P", PORT_FIXED), ("Q", PORT_FIXED), ("R", PORT_ROTATED))
    return Template(plus, minus, port_map)


def builtin_template(kind: TemplateKind) -> Template:
    """Build one of the three built-in move templates."""
    if isinstance(kind, Destabilize):
        return _destabilize_template(kind)
    if isinstance(kind, Exchange):
        return _exchange_template(kind)
    if isinstance(kind, Flype):
        return _flype_template(kind)
    raise TemplateError(f"unknown template kind {kind!r}")


def _port_components(sk: BlockSkeleton, a: BraidingAssignment) -> Dict[Tuple[str, str, int], int]:
    """Map each block port to the id of the closure component through it.

    Ports are (block_id, "in"|"out", column); component ids are the
    smallest strand position on the component, as used by closure_links.
    """
    word = instantiate(sk, a)
    comp_of: Dict[int, int] = {}
    for comp in components(word):
        for member in comp.members:
            comp_of[member] = comp.members[0]
    # occupants[p] = starting position of the strand currently at position p
    occupants = list(range(sk.strands + 1))
    ports: Dict[Tuple[str, str, int], int] = {}
    for item in sk.items:
        if isinstance(item, Crossing):
            i = item.index
            occupants[i], occupants[i + 1] = occupants[i + 1], occupants[i]
            continue
        start, width = item.start_position, item.width
        for j in range(1, width + 1):
            ports[(item.block_id, "in", j)] = comp_of[occupants[start + j - 1]]
        for index, _ in a.word_for(item.block_id).letters:
            p = start - 1 + index
            occupants[p], occupants[p + 1] = occupants[p + 1], occupants[p]
        for j in range(1, width + 1):
            ports[(item.block_id, "out", j)] = comp_of[occupants[start + j - 1]]
    return ports


def component_correspondence(t: Template, a: BraidingAssignment) -> Dict[int, int]:
    """Match closure components of the plus side with the minus side.

    Each block port marks one component on each side; the pairings from
    all ports must agree and must glue into a bijection, which is
    returned as {plus component id: minus component id}.
    """
    ports_plus = _port_components(t.plus, a)
    ports_minus = _port_components(t.minus, a)
    widths = t.block_widths()
    forward: Dict[int, int] = {}
    backward: Dict[int, int] = {}
    for block_id, mode in t.port_map:
        width = widths[block_id]
        for side in ("in", "out"):
            for j in range(1, width + 1):
                if mode == PORT_FIXED:
                    partner = (block_id, side, j)
                else:
                    partner = (block_id, side, width + 1 - j)
                cp = ports_plus[(block_id, side, j)]
                cm = ports_minus[partner]
                if forward.setdefault(cp, cm) != cm or backward.setdefault(cm, cp) != cp:
                    raise InconsistentCorrespondence(
                        f"port ({block_id}, {side}, {j}) pairs component {cp} "
                        f"with {cm}, conflicting with earlier ports"
                    )
    plus_ids = {comp.members[0] for comp in components(instantiate(t.plus, a))}
    minus_ids = {comp.members[0] for comp in components(instantiate(t.minus, a))}
    if set(forward) != plus_ids or set(backward) != minus_ids:
        raise InconsistentCorrespondence("a closure component touches no block port")
    return forward


def per_component_beta_delta(
    t: Template, a: BraidingAssignment
) -> List[Tuple[int, int, int]]:
    """Table of (plus component id, self-linking plus, self-linking minus).

    Rows are sorted by plus-side component id; a row whose two values
    differ exhibits a component whose self-linking number the move does
    not preserve.
    """
    correspondence = component_correspondence(t, a)
    beta_plus = {c.members[0]: c.bennequin for c in components(instantiate(t.plus, a))}
    beta_minus = {c.members[0]: c.bennequin for c in components(instantiate(t.minus, a))}
    return [
        (cid, beta_plus[cid], beta_minus[correspondence[cid]])
        for cid in sorted(beta_plus)
    ]


_KIND_NAMES = {Destabilize: "destabilize", Exchange: "exchange", Flype: "flype"}


def format_template_description(kind: TemplateKind, a: BraidingAssignment) -> str:
    """Serialize a built-in kind plus assignment as a JSON description."""
    params = {field: getattr(kind, field) for field in kind.__dataclass_fields__}
    assignment = {bid: format_word(word) for bid, word in a.words}
    payload = {"kind": _KIND_NAMES[type(kind)], "params": params, "assignment": assignment}
    return json.dumps(payload, indent=2, sort_keys=True)


def parse_template_description(text: str) -> Tuple[TemplateKind, Template, BraidingAssignment]:
    """Parse a JSON description into (kind, template, assignment)."""
    payload = json.loads(text)
    by_name = {name: cls for cls, name in _KIND_NAMES.items()}
    try:
        cls = by_name[payload["kind"]]
    except KeyError:
        raise TemplateError(f"unknown template kind {payload.get('kind')!r}") from None
    try:
        kind = cls(**payload.get("params", {}))
    except TypeError as exc:
        raise TemplateError(f"bad params for {payload['kind']}: {exc}") from None
    assignment = BraidingAssignment.from_mapping(
        {bid: parse_word(text) for bid, text in payload.get("assignment", {}).items()}
    )
    return kind, builtin_template(kind), assignment
