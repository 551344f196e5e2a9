"""
Decorated band paths and their compilation to half-twists.

A PathSpec describes a simple path between two punctures a < b of the fiber
disk: a base side (below or above the real axis) plus detour intervals on
which the path crosses to the opposite side.  Compilation slides the b-end of
the band leftwards across each intermediate puncture m, below it
(sigma_m^+1) when the path passes under, above it (sigma_m^-1) when it passes
over, producing W = prod_{m=b-1..a+1} sigma_m^(u_m) and the half-twist
W . sigma_a . W^-1.  A plain below path therefore expands to

    sigma_{b-1} ... sigma_{a+1} . sigma_a . sigma_{a+1}^-1 ... sigma_{b-1}^-1.

Paths that wrap around punctures outside [a, b] are not PathSpecs; they are
HalfTwist values with an explicit conjugator braid (see
braidforge.regeneration for the band tables that use them).

Text syntax: ``Z[a,b]``, ``Z[a,b;above]``, ``Z[a,b;below;detour=(c,d,above)]``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Tuple

from .braids import BraidWord, band_word, braid_equal

BELOW = "below"
ABOVE = "above"


@dataclass(frozen=True)
class PathSpec:
    strands: int
    endpoints: Tuple[int, int]
    side: str = BELOW
    detours: Tuple[Tuple[Tuple[int, int], str], ...] = ()

    def __post_init__(self):
        a, b = self.endpoints
        if not (1 <= a < b <= self.strands):
            raise ValueError(f"endpoints {self.endpoints} out of range for {self.strands} strands")
        if self.side not in (BELOW, ABOVE):
            raise ValueError(f"bad side {self.side!r}")
        for (c, d), side in self.detours:
            if side not in (BELOW, ABOVE):
                raise ValueError(f"bad detour side {side!r}")
            if not (a < c <= d < b):
                raise ValueError(f"detour ({c},{d}) not strictly between endpoints {self.endpoints}")

    def passes_below(self, m: int) -> bool:
        """Side of the path at intermediate puncture m."""
        side = self.side
        for (c, d), dside in self.detours:
            if c <= m <= d:
                side = dside
        return side == BELOW

    def to_text(self) -> str:
        a, b = self.endpoints
        parts = [f"{a},{b}", self.side]
        for (c, d), side in self.detours:
            parts.append(f"detour=({c},{d},{side})")
        return "Z[" + ";".join(parts) + "]"

    @staticmethod
    def from_text(n: int, text: str) -> "PathSpec":
        m = re.fullmatch(r"Z\[([^\]]*)\]", text.strip())
        if not m:
            raise ValueError(f"bad path syntax {text!r}")
        fields = m.group(1).split(";")
        a, b = (int(t) for t in fields[0].split(","))
        side = BELOW
        detours: list[Tuple[Tuple[int, int], str]] = []
        for f in fields[1:]:
            f = f.strip()
            if f in (BELOW, ABOVE):
                side = f
            elif f.startswith("detour="):
                dm = re.fullmatch(r"detour=\((\d+),(\d+),(below|above)\)", f)
                if not dm:
                    raise ValueError(f"bad detour {f!r}")
                detours.append(((int(dm.group(1)), int(dm.group(2))), dm.group(3)))
            else:
                raise ValueError(f"bad path field {f!r}")
        return PathSpec(n, (a, b), side, tuple(detours))


@dataclass(frozen=True)
class HalfTwist:
    """conjugator . Z_{a,b} . conjugator^-1 for the below-axis band Z_{a,b}."""

    strands: int
    band: Tuple[int, int]
    conjugator: BraidWord = field(default=None)  # type: ignore[assignment]

    def __post_init__(self):
        a, b = self.band
        if not (1 <= a < b <= self.strands):
            raise ValueError(f"band {self.band} out of range")
        if self.conjugator is None:
            object.__setattr__(self, "conjugator", BraidWord.identity(self.strands))
        if self.conjugator.strands != self.strands:
            raise ValueError("conjugator strand mismatch")

    def expand(self) -> BraidWord:
        core = band_word(self.strands, *self.band)
        return self.conjugator * core * self.conjugator.inverse()

    def power(self, e: int) -> BraidWord:
        core = band_word(self.strands, *self.band) ** e
        return self.conjugator * core * self.conjugator.inverse()

    def permutation(self) -> Tuple[int, ...]:
        return self.expand().permutation()

    def conjugate_by(self, g: BraidWord) -> "HalfTwist":
        return HalfTwist(self.strands, self.band, g * self.conjugator)

    def braid_equal(self, other: "HalfTwist") -> bool:
        return braid_equal(self.expand(), other.expand())


def compile_path(p: PathSpec) -> HalfTwist:
    """Compile a decorated path to its half-twist in band form."""
    a, b = p.endpoints
    slide: list[int] = []
    for m in range(b - 1, a, -1):
        slide.append(m if p.passes_below(m) else -m)
    w = BraidWord(p.strands, tuple(slide))
    below_chain = BraidWord(p.strands, tuple(range(b - 1, a, -1)))
    return HalfTwist(p.strands, (a, b), w * below_chain.inverse())
