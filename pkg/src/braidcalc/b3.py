"""Conjugacy decisions in the 3-strand braid group.

The center of B3 is generated by the full twist (s1 s2)^3, and the
quotient by the center is the modular group, a free product of a
two-element and a three-element cyclic group.  Exponent sum pins the
central power (the full twist has exponent sum 6), so two words are
conjugate iff their exponent sums agree and their quotient images are
conjugate; free-product conjugacy is cyclic rotation of the cyclically
reduced word, with single-letter words compared inside their finite
factor.

The brute-force oracle at the bottom audits the normal-form route by a
disjoint one: invariant batteries (exponent sum, exact Burau
characteristic polynomial, and a modular-group class computed from
integer matrices by continued-fraction peeling) plus a bounded search
for an explicit conjugator, verified through the Burau representation,
which is faithful on three strands.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Union

from .burau import Laurent, burau_matrix, determinant, trace
from .words import BraidWord, sigma_power

__all__ = [
    "FreeProductWord",
    "B3NormalForm",
    "quotient_image",
    "normal_form",
    "conjugate_in_B3",
    "UnknotClass",
    "TorusKnot2k",
    "GenericUnique",
    "classify_closure",
    "kolee_both_signs",
    "Conjugate",
    "NotConjugate",
    "Unresolved",
    "OracleOutcome",
    "brute_force_conjugacy_oracle",
]


# ---------------------------------------------------------------------------
# free product Z/2 * Z/3: shared reduction engine
#
# The engine is parameterized by letter names so the quotient route
# (X, Y, Y2) and the oracle's matrix route (S, U, U2) never share state,
# only code.

def _reduce_z2z3(letters: tuple[str, ...], two: str, y_exp: dict[str, int]) -> tuple[str, ...]:
    by_exp = {v: k for k, v in y_exp.items()}
    stack: list[str] = []
    for letter in letters:
        if not stack:
            stack.append(letter)
            continue
        top = stack[-1]
        if top == two and letter == two:
            stack.pop()
        elif top != two and letter != two:
            total = (y_exp[top] + y_exp[letter]) % 3
            stack.pop()
            if total:
                stack.append(by_exp[total])
        else:
            stack.append(letter)
    return tuple(stack)


def _cyclic_reduce_z2z3(letters: tuple[str, ...], two: str, y_exp: dict[str, int]) -> tuple[str, ...]:
    by_exp = {v: k for k, v in y_exp.items()}
    w = list(letters)
    while len(w) >= 2:
        first, last = w[0], w[-1]
        if first == two and last == two:
            w = w[1:-1]
        elif first != two and last != two:
            total = (y_exp[last] + y_exp[first]) % 3
            w = w[1:-1]
            if total:
                w.append(by_exp[total])
        else:
            break
    return tuple(w)


def _min_rotation(letters: tuple[str, ...]) -> tuple[str, ...]:
    if len(letters) <= 1:
        return letters
    return min(letters[k:] + letters[:k] for k in range(len(letters)))


_Y_EXP = {"Y": 1, "Y2": 2}


@dataclass(frozen=True)
class FreeProductWord:
    """Reduced word in the central quotient of B3.

    Letters: ``X`` (the involution, image of s1 s2 s1) and ``Y``/``Y2``
    (the order-three element, image of s1 s2, and its square).
    """

    letters: tuple[str, ...]

    def __post_init__(self) -> None:
        for letter in self.letters:
            if letter not in ("X", "Y", "Y2"):
                raise ValueError(f"unknown letter {letter!r}")

    @classmethod
    def from_letters(cls, raw: tuple[str, ...]) -> FreeProductWord:
        return cls(_reduce_z2z3(tuple(raw), "X", _Y_EXP))

    def __mul__(self, other: FreeProductWord) -> FreeProductWord:
        return FreeProductWord.from_letters(self.letters + other.letters)

    def inverse(self) -> FreeProductWord:
        flip = {"X": "X", "Y": "Y2", "Y2": "Y"}
        return FreeProductWord(tuple(flip[l] for l in reversed(self.letters)))


# with Y = image(s1 s2) and X = image(s1 s2 s1):
#   s1 = Y^-1 X = Y2 X,   s1^-1 = X Y,   s2 = X Y^-2 = X Y2,   s2^-1 = Y X
_LETTER_IMAGES: dict[tuple[int, int], tuple[str, ...]] = {
    (1, 1): ("Y2", "X"),
    (1, -1): ("X", "Y"),
    (2, 1): ("X", "Y2"),
    (2, -1): ("Y", "X"),
}


def quotient_image(word: BraidWord) -> FreeProductWord:
    """Image of a 3-strand word in the central quotient."""
    if word.strands != 3:
        raise ValueError(f"need exactly 3 strands, got {word.strands}")
    raw = tuple(out for letter in word.letters for out in _LETTER_IMAGES[letter])
    return FreeProductWord.from_letters(raw)


@dataclass(frozen=True)
class B3NormalForm:
    """Complete conjugacy invariant: exponent sum + canonical cyclic word.

    The cyclic word is the lexicographically smallest rotation
    (X < Y < Y2) of the cyclically reduced quotient image.
    """

    exponent_sum: int
    cyclic_word: tuple[str, ...]

    def __str__(self) -> str:
        return f"e={self.exponent_sum}; [{','.join(self.cyclic_word)}]"


def normal_form(word: BraidWord) -> B3NormalForm:
    image = quotient_image(word)
    cyc = _cyclic_reduce_z2z3(image.letters, "X", _Y_EXP)
    return B3NormalForm(word.exponent_sum(), _min_rotation(cyc))


def conjugate_in_B3(w1: BraidWord, w2: BraidWord) -> bool:
    """Decide conjugacy of two 3-strand words.

    >>> from .words import parse_word
    >>> conjugate_in_B3(parse_word("n=3 s1 s2"), parse_word("n=3 s2 s1"))
    True
    """
    return normal_form(w1) == normal_form(w2)


# ---------------------------------------------------------------------------
# closures with non-unique conjugacy classes


@dataclass(frozen=True)
class UnknotClass:
    """One of the three 3-braid conjugacy classes closing to the unknot."""

    tag: tuple[int, int]


@dataclass(frozen=True)
class TorusKnot2k:
    """Class of s1^k s2^mu, closing to a (2, k) torus knot or link."""

    k: int
    mu: int


@dataclass(frozen=True)
class GenericUnique:
    """Closure admits a unique conjugacy class of 3-braid representatives."""


ClosureClass = Union[UnknotClass, TorusKnot2k, GenericUnique]


def classify_closure(word: BraidWord) -> ClosureClass:
    """Detect the exceptional 3-braid closure classes.

    The unknot has exactly three classes, s1^mu s2^tau for (mu, tau) in
    {(1,1), (-1,-1), (1,-1)}; the (2,k) torus types are carried by
    s1^k s2^mu with |k| >= 2.  Exponent sum pins the finitely many
    candidates, so each test is a single conjugacy check.  Everything
    else closes to a link with a unique class.
    """
    if word.strands != 3:
        raise ValueError(f"need exactly 3 strands, got {word.strands}")
    e = word.exponent_sum()
    for mu, tau in ((1, 1), (-1, -1), (1, -1)):
        if mu + tau != e:
            continue
        if conjugate_in_B3(word, sigma_power(3, 1, mu) * sigma_power(3, 2, tau)):
            return UnknotClass((mu, tau))
    for mu in (1, -1):
        k = e - mu
        if abs(k) < 2:
            continue
        if conjugate_in_B3(word, sigma_power(3, 1, k) * sigma_power(3, 2, mu)):
            return TorusKnot2k(k, mu)
    return GenericUnique()


def kolee_both_signs(u: int, v: int, w: int, eps: int) -> bool:
    """Whether s1^u s2^v s1^w s2^eps admits flypes of both signs.

    True exactly when u == -eps, or w == -eps, or v == -2*eps.
    """
    return u == -eps or w == -eps or v == -2 * eps


# ---------------------------------------------------------------------------
# brute-force oracle


@dataclass(frozen=True)
class Conjugate:
    conjugator: BraidWord


@dataclass(frozen=True)
class NotConjugate:
    witness: str


@dataclass(frozen=True)
class Unresolved:
    pass


OracleOutcome = Union[Conjugate, NotConjugate, Unresolved]

DEFAULT_BATTERIES = ("exponent_sum", "burau_char_poly", "psl2z_class")

# reduced Burau generators at t = -1: integer matrices whose classes in
# PSL2(Z) realize the central quotient (the full twist maps to -identity)
_PSL_GEN: dict[tuple[int, int], tuple[int, int, int, int]] = {
    (1, 1): (2, -1, 1, 0),
    (1, -1): (0, 1, -1, 2),
    (2, 1): (1, -1, 0, 1),
    (2, -1): (1, 1, 0, 1),
}

_S_EXP = {"U": 1, "U2": 2}


def _t_power_letters(power: int) -> tuple[str, ...]:
    # T = S U and T^-1 = U2 S in PSL2(Z), with S = [[0,-1],[1,0]]
    if power >= 0:
        return ("S", "U") * power
    return ("U2", "S") * (-power)


def _su_class(m: tuple[int, int, int, int]) -> tuple[str, ...]:
    """Canonical cyclic S/U word of a determinant-one integer matrix.

    Continued-fraction peeling: while the lower-left entry is nonzero,
    split off T^q S with q the floor quotient; the terminal matrix is
    +-T^m.  The letter word is then reduced in the free product
    (S^2 = U^3 = identity), cyclically reduced, and rotated to its
    lexicographic minimum, which is a complete conjugacy invariant.
    """
    a, b, c, d = m
    if a * d - b * c != 1:
        raise ValueError("matrix must have determinant 1")
    letters: list[str] = []
    while c != 0:
        q = a // c
        letters.extend(_t_power_letters(q))
        letters.append("S")
        # M := S^-1 T^-q M, which strictly shrinks |c|
        a, b, c, d = c, d, -(a - q * c), -(b - q * d)
    letters.extend(_t_power_letters(b if a == 1 else -b))
    reduced = _reduce_z2z3(tuple(letters), "S", _S_EXP)
    return _min_rotation(_cyclic_reduce_z2z3(reduced, "S", _S_EXP))


def _psl2z_class(word: BraidWord) -> tuple[str, ...]:
    m = (1, 0, 0, 1)
    for letter in word.letters:
        g = _PSL_GEN[letter]
        m = (
            m[0] * g[0] + m[1] * g[2],
            m[0] * g[1] + m[1] * g[3],
            m[2] * g[0] + m[3] * g[2],
            m[2] * g[1] + m[3] * g[3],
        )
    return _su_class(m)


def _char_poly_key(word: BraidWord) -> tuple[Laurent, Laurent]:
    m = burau_matrix(word)
    return trace(m), determinant(m)


_BATTERY_FUNCTIONS: dict[str, Callable[[BraidWord], object]] = {
    "exponent_sum": lambda w: w.exponent_sum(),
    "burau_char_poly": _char_poly_key,
    "psl2z_class": _psl2z_class,
}


@lru_cache(maxsize=16384)
def _battery_key(name: str, strands: int, letters: tuple[tuple[int, int], ...]) -> object:
    return _BATTERY_FUNCTIONS[name](BraidWord(strands, letters))


_FP_PRIME = 2**61 - 1
_FP_T = 1_048_573


def _fp_generator_tables() -> tuple[dict, dict]:
    p, t = _FP_PRIME, _FP_T
    tinv = pow(t, -1, p)
    gens = {
        (1, 1): ((1 - t) % p, t % p, 1, 0),
        (1, -1): (0, 1, tinv, (1 - tinv) % p),
        (2, 1): (1, p - 1, 0, (-t) % p),
        (2, -1): (1, (-tinv) % p, 0, (-tinv) % p),
    }
    inverses = {letter: gens[(letter[0], -letter[1])] for letter in gens}
    return gens, inverses


_FP_GENS, _FP_INVS = _fp_generator_tables()


def _fp_mul(x: tuple[int, int, int, int], y: tuple[int, int, int, int]) -> tuple[int, int, int, int]:
    p = _FP_PRIME
    return (
        (x[0] * y[0] + x[1] * y[2]) % p,
        (x[0] * y[1] + x[1] * y[3]) % p,
        (x[2] * y[0] + x[3] * y[2]) % p,
        (x[2] * y[1] + x[3] * y[3]) % p,
    )


def _fp_of_word(letters: tuple[tuple[int, int], ...]) -> tuple[int, int, int, int]:
    m = (1, 0, 0, 1)
    for letter in letters:
        m = _fp_mul(m, _FP_GENS[letter])
    return m


@lru_cache(maxsize=16)
def _conjugation_ball(
    letters: tuple[tuple[int, int], ...], bound: int
) -> dict[tuple[int, int, int, int], list[tuple[tuple[int, int], ...]]]:
    """Fingerprint index of g w g^-1 over all reduced conjugators |g| <= bound.

    Keys are Burau matrices mod a 61-bit prime at a fixed t; values list
    the conjugators (breadth-first, so shortest first).  Children extend
    g on the left, which costs one conjugation of the parent's matrix.
    """
    base = _fp_of_word(letters)
    index: dict[tuple[int, int, int, int], list[tuple[tuple[int, int], ...]]] = {}
    index[base] = [()]
    frontier: list[tuple[tuple[tuple[int, int], ...], tuple[int, int, int, int]]] = [((), base)]
    for _ in range(bound):
        next_frontier = []
        for g_letters, matrix in frontier:
            for gen in ((1, 1), (1, -1), (2, 1), (2, -1)):
                if g_letters and g_letters[0] == (gen[0], -gen[1]):
                    continue
                child_letters = (gen,) + g_letters
                child_matrix = _fp_mul(_FP_GENS[gen], _fp_mul(matrix, _FP_INVS[gen]))
                index.setdefault(child_matrix, []).append(child_letters)
                next_frontier.append((child_letters, child_matrix))
        frontier = next_frontier
    return index


def brute_force_conjugacy_oracle(
    w1: BraidWord,
    w2: BraidWord,
    conjugator_bound: int = 6,
    invariant_batteries: tuple[str, ...] = DEFAULT_BATTERIES,
) -> OracleOutcome:
    """Independent conjugacy decision for 3-strand words.

    Runs the invariant batteries in order and reports ``NotConjugate``
    naming the first one that separates the words.  Otherwise searches
    all freely reduced conjugators up to the length bound; a fingerprint
    hit is confirmed by exact Burau-matrix equality (faithful on three
    strands), so a returned certificate is always valid.  ``Unresolved``
    means the bounded search ended without a certificate.
    """
    if w1.strands != 3 or w2.strands != 3:
        raise ValueError("oracle works on 3-strand words only")
    for name in invariant_batteries:
        if name not in _BATTERY_FUNCTIONS:
            raise ValueError(f"unknown battery {name!r}")
        if _battery_key(name, 3, w1.letters) != _battery_key(name, 3, w2.letters):
            return NotConjugate(name)
    target = _fp_of_word(w2.letters)
    ball = _conjugation_ball(w1.letters, conjugator_bound)
    expected = burau_matrix(w2)
    for g_letters in ball.get(target, ()):
        g = BraidWord(3, g_letters)
        if burau_matrix(w1.conjugated_by(g)) == expected:
            return Conjugate(g)
    return Unresolved()
