"""
Braid monodromy factorizations: ordered lists of powers of half-twists.

A Factorization stores its factors in time order: the first factor belongs
to the singular fiber nearest the basepoint.  Braid words compose like
functions (rightmost first), so the product braid is the concatenation of
the factor braids in reversed list order; rendering a factorization
left-to-right therefore matches the usual printed product whose leftmost
factor is the last singularity swept.

Factor exponents follow the singularity dictionary: 1 branch, 2 node,
3 cusp, 4 tangency.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Tuple

from .braids import BraidWord, braid_equal, concat, full_twist
from .paths import HalfTwist, PathSpec, compile_path


@dataclass(frozen=True)
class OriginTag:
    """Provenance of a factor: vertex(i), parasitic(i,j), or extra_branch(j)."""

    kind: str
    data: Tuple[int, ...] = ()

    VERTEX = "vertex"
    PARASITIC = "parasitic"
    EXTRA_BRANCH = "extra_branch"
    LOCAL = "local"

    def __str__(self):
        if self.data:
            return f"{self.kind}({','.join(map(str, self.data))})"
        return self.kind


@dataclass(frozen=True)
class Factor:
    twist: HalfTwist
    exponent: int
    tag: OriginTag = OriginTag(OriginTag.LOCAL)
    label: str = ""

    def __post_init__(self):
        if self.exponent not in (1, 2, 3, 4):
            raise ValueError(f"factor exponent {self.exponent} outside 1..4")

    def braid(self) -> BraidWord:
        return self.twist.power(self.exponent)

    def degree(self) -> int:
        return self.exponent

    def conjugate_by(self, g: BraidWord) -> "Factor":
        return Factor(self.twist.conjugate_by(g), self.exponent, self.tag, self.label)


@dataclass(frozen=True)
class Factorization:
    strands: int
    factors: Tuple[Factor, ...]

    def __post_init__(self):
        for f in self.factors:
            if f.twist.strands != self.strands:
                raise ValueError("factor strand count mismatch")

    def __len__(self):
        return len(self.factors)

    def degree(self) -> int:
        return sum(f.exponent for f in self.factors)

    def product(self) -> BraidWord:
        """The braid the factorization multiplies to (first factor acts first)."""
        if not self.factors:
            return BraidWord.identity(self.strands)
        return concat([f.braid() for f in reversed(self.factors)])

    def product_permutation(self) -> Tuple[int, ...]:
        return self.product().permutation()

    def is_full_twist(self, exact: bool = True) -> bool:
        """Audit: degree n(n-1) and (when exact) braid equality with Delta^2."""
        n = self.strands
        if self.degree() != n * (n - 1):
            return False
        if not exact:
            return self.product_permutation() == tuple(range(1, n + 1))
        return braid_equal(self.product(), full_twist(n))

    # -- serialization -------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "strands": self.strands,
            "factors": [
                {
                    "band": list(f.twist.band),
                    "conjugator": f.twist.conjugator.to_text(),
                    "exponent": f.exponent,
                    "tag": str(f.tag),
                    "label": f.label,
                }
                for f in self.factors
            ],
        }

    @staticmethod
    def from_json(data: dict) -> "Factorization":
        n = data["strands"]
        factors = []
        for fd in data["factors"]:
            ht = HalfTwist(n, tuple(fd["band"]), BraidWord.from_text(n, fd["conjugator"]))
            tag = OriginTag(OriginTag.LOCAL)
            factors.append(Factor(ht, fd["exponent"], tag, fd.get("label", "")))
        return Factorization(n, tuple(factors))

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    def labels(self) -> Tuple[str, ...]:
        return tuple(f.label for f in self.factors)


def path_factor(p: PathSpec, exponent: int, tag: OriginTag = OriginTag(OriginTag.LOCAL),
                label: str = "") -> Factor:
    return Factor(compile_path(p), exponent, tag, label or p.to_text() + f"^{exponent}")


def factors_braid_equal(f: Factorization, g: Factorization) -> bool:
    """Factor-by-factor comparison: same length, exponents, and braids."""
    if f.strands != g.strands or len(f) != len(g):
        return False
    for a, b in zip(f.factors, g.factors):
        if a.exponent != b.exponent:
            return False
        if not braid_equal(a.braid(), b.braid()):
            return False
    return True
