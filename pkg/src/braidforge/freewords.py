"""
Freely reduced words in a free group, and the Artin action of braids on them.

A free word of rank r is a tuple of nonzero ints; +k is the k-th generator
(k = 1..r), -k its inverse.  When the free group is the fundamental group of
the punctured fiber disk, generator k is the geometric loop Gamma_k around
puncture k.

The braid group acts by: sigma_i sends Gamma_i to Gamma_i Gamma_{i+1}
Gamma_i^-1 and Gamma_{i+1} to Gamma_i, fixing the other generators.  The
action of a word is composed letter by letter as a left action:
act(u v) = act(u) after act(v).  The boundary word Gamma_1 ... Gamma_n is
fixed by every braid.
"""

from __future__ import annotations

from typing import Iterable, Sequence, Tuple

from .braids import BraidWord

FreeWord = Tuple[int, ...]


def freeword_reduce(word: Iterable[int]) -> FreeWord:
    out: list[int] = []
    for x in word:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def freeword_inverse(word: Sequence[int]) -> FreeWord:
    return tuple(-x for x in reversed(word))


def conjugate_word(word: Sequence[int], by: Sequence[int]) -> FreeWord:
    """by . word . by^-1"""
    return freeword_reduce(tuple(by) + tuple(word) + freeword_inverse(by))


def _act_letter(letter: int, word: Sequence[int]) -> FreeWord:
    i = abs(letter)
    out: list[int] = []
    if letter > 0:
        # Gamma_i -> Gamma_i Gamma_{i+1} Gamma_i^-1 ; Gamma_{i+1} -> Gamma_i
        for x in word:
            g = abs(x)
            if g == i:
                out.extend((i, i + 1, -i) if x > 0 else (i, -(i + 1), -i))
            elif g == i + 1:
                out.append(i if x > 0 else -i)
            else:
                out.append(x)
    else:
        # Gamma_i -> Gamma_{i+1} ; Gamma_{i+1} -> Gamma_{i+1}^-1 Gamma_i Gamma_{i+1}
        for x in word:
            g = abs(x)
            if g == i:
                out.append(i + 1 if x > 0 else -(i + 1))
            elif g == i + 1:
                out.extend((-(i + 1), i, i + 1) if x > 0 else (-(i + 1), -i, i + 1))
            else:
                out.append(x)
    return freeword_reduce(out)


def artin_action(braid: BraidWord, word: Sequence[int], rank: int | None = None) -> FreeWord:
    """Apply the automorphism of the free group induced by ``braid``."""
    rank = braid.strands if rank is None else rank
    if rank != braid.strands:
        raise ValueError("rank mismatch between braid and free group")
    for x in word:
        if x == 0 or abs(x) > rank:
            raise ValueError(f"free letter {x} out of range for rank {rank}")
    cur = freeword_reduce(word)
    for letter in reversed(braid.letters):
        cur = _act_letter(letter, cur)
    return cur


def freeword_to_text(word: Sequence[int], names: Sequence[str]) -> str:
    parts = []
    for x in word:
        name = names[abs(x) - 1]
        parts.append(name if x > 0 else name + "^-1")
    return " ".join(parts)


def freeword_from_text(text: str, names: Sequence[str]) -> FreeWord:
    index = {name: k + 1 for k, name in enumerate(names)}
    out: list[int] = []
    for tok in text.split():
        if tok.endswith("^-1"):
            base, sign = tok[:-3], -1
        else:
            base, sign = tok, 1
        if base not in index:
            raise ValueError(f"unknown generator {base!r}")
        out.append(sign * index[base])
    return freeword_reduce(out)
