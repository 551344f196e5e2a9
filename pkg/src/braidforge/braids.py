"""
Braid words, half-twist bands, and the exact word problem.

Positions in the fiber disk are 1..n on the real axis, left to right.  The
generator sigma_i swaps the punctures i and i+1 by a counterclockwise
half-twist along the straight segment below the axis.  The below-axis band
from a to b (a < b) expands to

    Z_{a,b} = sigma_{b-1} ... sigma_{a+1} . sigma_a . sigma_{a+1}^-1 ... sigma_{b-1}^-1

which has permutation (a b).  The full twist Delta^2 = (sigma_1 ... sigma_{n-1})^n
generates the center; for a subset S of punctures, ``block_full_twist``
returns the full twist of a disk gathered along the below-axis chain through
S, which is the standard localized Delta^2 of those punctures.

Text syntax for words is ``s1 s2^-1 s3^2`` (whitespace separated, optional
integer exponents).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Sequence, Tuple

from . import words as _w


@dataclass(frozen=True)
class BraidWord:
    """An exact word in the Artin generators of B_n, freely reduced."""

    strands: int
    letters: Tuple[int, ...]

    def __post_init__(self):
        if self.strands < 1:
            raise ValueError("strand count must be positive")
        reduced = _w.free_reduce(self.letters)
        object.__setattr__(self, "letters", reduced)
        for x in reduced:
            if x == 0 or abs(x) >= self.strands:
                raise ValueError(f"letter {x} out of range for {self.strands} strands")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def identity(n: int) -> "BraidWord":
        return BraidWord(n, ())

    @staticmethod
    def gen(n: int, i: int, sign: int = 1) -> "BraidWord":
        return BraidWord(n, (i if sign > 0 else -i,))

    @staticmethod
    def from_text(n: int, text: str) -> "BraidWord":
        """Parse ``s1 s2^-1`` syntax."""
        letters: list[int] = []
        for tok in text.split():
            m = re.fullmatch(r"s(\d+)(?:\^(-?\d+))?", tok)
            if not m:
                raise ValueError(f"bad braid letter {tok!r}")
            i = int(m.group(1))
            e = int(m.group(2)) if m.group(2) else 1
            letters.extend([i if e > 0 else -i] * abs(e))
        return BraidWord(n, tuple(letters))

    def to_text(self) -> str:
        return " ".join(f"s{x}" if x > 0 else f"s{-x}^-1" for x in self.letters)

    # -- group operations --------------------------------------------------

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if self.strands != other.strands:
            raise ValueError("strand count mismatch")
        return BraidWord(self.strands, self.letters + other.letters)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.strands, _w.inverse(self.letters))

    def __pow__(self, k: int) -> "BraidWord":
        if k == 0:
            return BraidWord.identity(self.strands)
        base = self if k > 0 else self.inverse()
        return reduce(lambda a, b: a * b, [base] * abs(k))

    def conjugate_by(self, g: "BraidWord") -> "BraidWord":
        """g . self . g^-1"""
        return g * self * g.inverse()

    # -- invariants ---------------------------------------------------------

    def degree(self) -> int:
        return _w.degree(self.letters)

    def permutation(self) -> Tuple[int, ...]:
        return _w.permutation(self.letters, self.strands)

    def __len__(self) -> int:
        return len(self.letters)


def concat(ws: Iterable[BraidWord]) -> BraidWord:
    ws = list(ws)
    if not ws:
        raise ValueError("empty product needs an explicit strand count")
    return BraidWord(ws[0].strands, tuple(x for w in ws for x in w.letters))


def braid_equal(u: BraidWord, v: BraidWord, max_letters: int = _w._MAX_LETTERS_DEFAULT) -> bool:
    """Exact word problem via handle reduction, degree/permutation prefilters."""
    if u.strands != v.strands:
        raise ValueError("strand count mismatch")
    return _w.words_equal(u.letters, v.letters, u.strands, max_letters)


def is_trivial_braid(u: BraidWord) -> bool:
    return _w.is_trivial(u.letters)


def band_word(n: int, a: int, b: int) -> BraidWord:
    """The below-axis band half-twist Z_{a,b}."""
    if not (1 <= a < b <= n):
        raise ValueError(f"bad band ({a},{b}) for {n} strands")
    letters = list(range(b - 1, a, -1)) + [a] + [-j for j in range(a + 1, b)]
    return BraidWord(n, tuple(letters))


def full_twist(n: int) -> BraidWord:
    """Delta^2, the generator of the center of B_n (n >= 2)."""
    if n < 2:
        raise ValueError("full twist needs at least 2 strands")
    return BraidWord(n, tuple(range(1, n))) ** n


def chain_half_twist(n: int, points: Sequence[int]) -> BraidWord:
    """Positive half-twist of the disk gathered along the chain through points.

    For consecutive points this is the Garside half-twist Delta of the block.
    """
    pts = sorted(points)
    if len(pts) < 2:
        return BraidWord.identity(n)
    bands = [band_word(n, pts[k], pts[k + 1]) for k in range(len(pts) - 1)]
    # Delta of a k-block as a chain product: (x_1)(x_2 x_1)...(x_{k-1} ... x_1)
    out = BraidWord.identity(n)
    for k in range(len(bands)):
        for j in range(k, -1, -1):
            out = out * bands[j]
    return out


def block_full_twist(n: int, points: Sequence[int]) -> BraidWord:
    """Localized Delta^2 of the punctures in ``points``.

    Equals (x_1 ... x_{k-1})^k for the chain bands x_j between consecutive
    points of the gathered disk; degree k(k-1).
    """
    pts = sorted(set(points))
    k = len(pts)
    if k < 2:
        return BraidWord.identity(n)
    chain = concat([band_word(n, pts[j], pts[j + 1]) for j in range(k - 1)])
    return chain ** k


def tube_full_twist(n: int, left_block: Sequence[int], right_block: Sequence[int]) -> BraidWord:
    """Full twist of two cabled blocks around each other, without the internal
    spin of either block: Delta^2<L u R> . Delta^2<L>^-1 . Delta^2<R>^-1."""
    both = list(left_block) + list(right_block)
    return (
        block_full_twist(n, both)
        * block_full_twist(n, left_block).inverse()
        * block_full_twist(n, right_block).inverse()
    )
