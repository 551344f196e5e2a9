"""
Low-level kernel for exact braid word arithmetic.

A word in the Artin generators of the braid group B_n is stored as a tuple of
nonzero machine ints: the letter ``+i`` is the generator sigma_i (a positive
half-twist of the punctures i and i+1, 1 <= i <= n-1) and ``-i`` is its
inverse.  Everything in this module is position-based and purely
combinatorial; the object layer lives in :mod:`braidforge.braids`.

The word problem is solved by Dehornoy handle reduction.  A sigma_i-handle is
a subword ``sigma_i^e . v . sigma_i^-e`` where v contains no letter of index
<= i.  Reducing it removes the bracketing pair and rewrites every
sigma_{i+1}^d inside v as ``sigma_{i+1}^-e . sigma_i^d . sigma_{i+1}^e``
(letters of index >= i+2 commute with the bracket and pass through
unchanged).  Reducing always the handle with the leftmost closing letter
terminates, and the result is a freely reduced word that is empty iff the
braid is trivial; a nonempty handle-free word is sigma-definite, hence
nontrivial.  Handle reduction can blow a word up before it collapses, so a
letter budget guards the loop.

A compiled version of the two hot loops (free reduction and handle
reduction) is built from ``_speedups.pyx``; the pure Python code below is the
reference implementation and the import-time fallback.  Set
``BRAIDFORGE_PURE=1`` to force the fallback.
"""

from __future__ import annotations

import os
from typing import Iterable, Sequence, Tuple

Word = Tuple[int, ...]

_MAX_LETTERS_DEFAULT = 4_000_000


def free_reduce_py(word: Iterable[int]) -> Word:
    """Cancel adjacent inverse pairs; single left-to-right stack pass."""
    out: list[int] = []
    for x in word:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def handle_reduce_py(word: Iterable[int], max_letters: int = _MAX_LETTERS_DEFAULT) -> Word:
    """Return a handle-free word equal to ``word`` in the braid group.

    Raises RuntimeError if the intermediate word exceeds ``max_letters``
    (the reduction is guaranteed to terminate, but not cheaply).
    """
    w = list(free_reduce_py(word))
    while True:
        # Scan for the handle with the smallest closing position.  last[i]
        # remembers the most recent occurrence of index i, invalidated as
        # soon as any smaller index shows up after it.
        handle = None
        last: dict[int, tuple[int, int]] = {}
        for q, x in enumerate(w):
            i = x if x > 0 else -x
            s = 1 if x > 0 else -1
            prev = last.get(i)
            if prev is not None and prev[1] == -s:
                handle = (prev[0], q, i, prev[1])
                break
            last[i] = (q, s)
            for j in [k for k in last if k > i]:
                del last[j]
        if handle is None:
            return tuple(w)
        p, q, i, e = handle
        mid: list[int] = []
        step = i + 1
        for x in w[p + 1:q]:
            if x == step or x == -step:
                mid.extend((-e * step, i if x > 0 else -i, e * step))
            else:
                mid.append(x)
        w = list(free_reduce_py(w[:p] + tuple(mid) + w[q + 1:]))
        if len(w) > max_letters:
            raise RuntimeError("handle reduction exceeded the letter budget")


_speedups = None
if not os.environ.get("BRAIDFORGE_PURE"):
    try:
        from . import _speedups  # type: ignore[attr-defined]
    except ImportError:
        _speedups = None

if _speedups is not None:
    def free_reduce(word: Iterable[int]) -> Word:
        return _speedups.free_reduce(tuple(word))

    def handle_reduce(word: Iterable[int], max_letters: int = _MAX_LETTERS_DEFAULT) -> Word:
        return _speedups.handle_reduce(tuple(word), max_letters)

    USING_SPEEDUPS = True
else:
    free_reduce = free_reduce_py
    handle_reduce = handle_reduce_py
    USING_SPEEDUPS = False


def inverse(word: Sequence[int]) -> Word:
    return tuple(-x for x in reversed(word))


def degree(word: Iterable[int]) -> int:
    """Exponent sum; the homomorphism B_n -> Z."""
    return sum(1 if x > 0 else -1 for x in word)


def permutation(word: Iterable[int], n: int) -> Tuple[int, ...]:
    """Image in S_n, as the tuple p with p[k-1] = final position of strand k.

    Words compose like functions: the rightmost letter acts first, so
    permutation(u + v) equals compose_perm(permutation(u), permutation(v)).
    This matches the Artin action convention (act(uv) = act(u) after act(v)).
    """
    img = list(range(n + 1))  # img[p] = current occupant tracking by position
    for x in reversed(tuple(word)):
        i = x if x > 0 else -x
        img[i], img[i + 1] = img[i + 1], img[i]
    final = [0] * n
    for pos in range(1, n + 1):
        final[img[pos] - 1] = pos
    return tuple(final)


def compose_perm(p: Sequence[int], q: Sequence[int]) -> Tuple[int, ...]:
    """(p o q): apply q first, then p."""
    return tuple(p[q[k] - 1] for k in range(len(p)))


def invert_perm(p: Sequence[int]) -> Tuple[int, ...]:
    out = [0] * len(p)
    for k, v in enumerate(p):
        out[v - 1] = k + 1
    return tuple(out)


def is_trivial(word: Iterable[int], max_letters: int = _MAX_LETTERS_DEFAULT) -> bool:
    return not handle_reduce(word, max_letters)


def words_equal(u: Sequence[int], v: Sequence[int], n: int,
                max_letters: int = _MAX_LETTERS_DEFAULT) -> bool:
    """Exact equality in B_n: cheap invariant filters, then handle reduction."""
    if degree(u) != degree(v):
        return False
    if permutation(u, n) != permutation(v, n):
        return False
    return is_trivial(free_reduce(tuple(u) + inverse(v)), max_letters)
