"""Exact Laurent-polynomial arithmetic and the reduced Burau representation.

Everything here is integer arithmetic in Z[t, t^-1]; coefficients are
Python ints, so nothing overflows.  The reduced Burau matrix of a word on
n strands is (n-1) x (n-1), built by column operations so a length-L word
costs O(L * n) polynomial updates instead of full matrix products.
"""

from __future__ import annotations

from dataclasses import dataclass

from .words import BraidWord

__all__ = [
    "Laurent",
    "burau_matrix",
    "identity_matrix",
    "mat_mul",
    "determinant",
    "trace",
]

Matrix = tuple[tuple["Laurent", ...], ...]


@dataclass(frozen=True)
class Laurent:
    """Laurent polynomial over Z, stored as sorted (power, coeff) pairs.

    Zero coefficients are never stored, so equality and hashing are
    structural.
    """

    pairs: tuple[tuple[int, int], ...] = ()

    @classmethod
    def from_dict(cls, coeffs: dict[int, int]) -> Laurent:
        return cls(tuple(sorted((p, c) for p, c in coeffs.items() if c != 0)))

    @classmethod
    def zero(cls) -> Laurent:
        return cls(())

    @classmethod
    def one(cls) -> Laurent:
        return cls(((0, 1),))

    @classmethod
    def term(cls, coeff: int, power: int = 0) -> Laurent:
        return cls(((power, coeff),) if coeff else ())

    def is_zero(self) -> bool:
        return not self.pairs

    def min_degree(self) -> int:
        if not self.pairs:
            raise ValueError("zero polynomial has no degree")
        return self.pairs[0][0]

    def max_degree(self) -> int:
        if not self.pairs:
            raise ValueError("zero polynomial has no degree")
        return self.pairs[-1][0]

    def coeff(self, power: int) -> int:
        for p, c in self.pairs:
            if p == power:
                return c
        return 0

    def __add__(self, other: Laurent) -> Laurent:
        out = dict(self.pairs)
        for p, c in other.pairs:
            out[p] = out.get(p, 0) + c
        return Laurent.from_dict(out)

    def __neg__(self) -> Laurent:
        return Laurent(tuple((p, -c) for p, c in self.pairs))

    def __sub__(self, other: Laurent) -> Laurent:
        return self + (-other)

    def __mul__(self, other: Laurent) -> Laurent:
        out: dict[int, int] = {}
        for p1, c1 in self.pairs:
            for p2, c2 in other.pairs:
                key = p1 + p2
                out[key] = out.get(key, 0) + c1 * c2
        return Laurent.from_dict(out)

    def shift(self, k: int) -> Laurent:
        """Multiply by t^k."""
        return Laurent(tuple((p + k, c) for p, c in self.pairs))

    def divexact(self, divisor: Laurent) -> Laurent:
        """Exact quotient; raises ValueError if division leaves a remainder."""
        if divisor.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return Laurent.zero()
        offset = self.min_degree() - divisor.min_degree()
        rem = dict(self.shift(-self.min_degree()).pairs)
        div = divisor.shift(-divisor.min_degree()).pairs
        lead_pow, lead_coeff = div[-1]
        quot: dict[int, int] = {}
        while rem:
            top = max(rem)
            q, r = divmod(rem[top], lead_coeff)
            if r != 0 or top < lead_pow:
                raise ValueError("inexact polynomial division")
            qpow = top - lead_pow
            quot[qpow] = q
            for p, c in div:
                key = p + qpow
                rem[key] = rem.get(key, 0) - c * q
                if rem[key] == 0:
                    del rem[key]
        return Laurent.from_dict(quot).shift(offset)

    def unit_normalized(self) -> Laurent:
        """Representative up to units +-t^k: min degree 0, top coefficient > 0."""
        if self.is_zero():
            return self
        shifted = self.shift(-self.min_degree())
        return shifted if shifted.pairs[-1][1] > 0 else -shifted

    def eval_mod(self, t_value: int, modulus: int) -> int:
        low = self.min_degree() if self.pairs else 0
        if low < 0:
            # clear denominators with t^-low, which is a unit mod p
            acc = 0
            t_inv = pow(t_value, -1, modulus)
            for p, c in self.pairs:
                acc = (acc + c * pow(t_value if p >= 0 else t_inv, abs(p), modulus)) % modulus
            return acc
        acc = 0
        for p, c in self.pairs:
            acc = (acc + c * pow(t_value, p, modulus)) % modulus
        return acc

    def __str__(self) -> str:
        if not self.pairs:
            return "0"
        parts: list[str] = []
        for p, c in self.pairs:
            if p == 0:
                body = str(abs(c))
            else:
                var = "t" if p == 1 else f"t^{p}"
                body = var if abs(c) == 1 else f"{abs(c)}*{var}"
            parts.append(("- " if c < 0 else "+ ") + body)
        head = parts[0][2:] if parts[0][0] == "+" else "-" + parts[0][2:]
        return " ".join([head] + parts[1:])


_T = Laurent.term(1, 1)
_ONE = Laurent.one()


def identity_matrix(size: int) -> Matrix:
    return tuple(
        tuple(_ONE if i == j else Laurent.zero() for j in range(size))
        for i in range(size)
    )


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    size = len(a)
    return tuple(
        tuple(
            sum((a[i][k] * b[k][j] for k in range(size)), Laurent.zero())
            for j in range(size)
        )
        for i in range(size)
    )


def trace(m: Matrix) -> Laurent:
    return sum((m[i][i] for i in range(len(m))), Laurent.zero())


def burau_matrix(word: BraidWord) -> Matrix:
    """Reduced Burau matrix of ``word``, size (strands-1) squared.

    Convention: the generator with index i < strands-1 acts as the
    identity except for the 2x2 block [[1-t, t], [1, 0]] at (i, i); the
    last generator acts as the identity except for its final column
    (-1, ..., -1, -t)^T.  Determinants are (-t)^(exponent sum).
    """
    m = word.strands - 1
    cols: list[list[Laurent]] = [
        [_ONE if i == j else Laurent.zero() for i in range(m)] for j in range(m)
    ]

    def combine(coeffs: list[tuple[Laurent, int]]) -> list[Laurent]:
        out = [Laurent.zero()] * m
        for scalar, j in coeffs:
            col = cols[j]
            for i in range(m):
                out[i] = out[i] + scalar * col[i]
        return out

    t_inv = Laurent.term(1, -1)
    minus_one = Laurent.term(-1)
    for index, sign in word.letters:
        c = index - 1
        if index <= m - 1:
            if sign > 0:
                new_c = combine([(_ONE - _T, c), (_ONE, c + 1)])
                new_c1 = [_T * x for x in cols[c]]
            else:
                new_c = [t_inv * x for x in cols[c + 1]]
                new_c1 = combine([(_ONE, c), (_ONE - t_inv, c + 1)])
            cols[c], cols[c + 1] = new_c, new_c1
        else:
            # index == strands - 1: only the last column moves
            if sign > 0:
                pieces = [(minus_one, j) for j in range(m - 1)]
                pieces.append((-_T, m - 1))
            else:
                pieces = [(-t_inv, j) for j in range(m)]
            cols[m - 1] = combine(pieces)
    return tuple(tuple(cols[j][i] for j in range(m)) for i in range(m))


def determinant(m: Matrix) -> Laurent:
    """Fraction-free Bareiss determinant; exact over Z[t, t^-1]."""
    size = len(m)
    if size == 0:
        return Laurent.one()
    a = [list(row) for row in m]
    sign = 1
    prev = Laurent.one()
    for k in range(size - 1):
        if a[k][k].is_zero():
            for r in range(k + 1, size):
                if not a[r][k].is_zero():
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return Laurent.zero()
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]).divexact(prev)
            a[i][k] = Laurent.zero()
        prev = a[k][k]
    det = a[size - 1][size - 1]
    return det if sign == 1 else -det
