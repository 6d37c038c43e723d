"""Permutations of {1..k} in one-line notation, group actions and projections."""

from __future__ import annotations

from itertools import permutations as _permutations
from typing import Iterable, Tuple

__all__ = [
    "Perm",
    "identity",
    "all_perms",
    "compose",
    "inverse",
    "act",
    "project_pair",
    "project_triple",
    "block_substitute",
    "perm_from_text",
    "perm_text",
    "ACT_RELABEL",
]

# A permutation is the tuple (p(1), ..., p(k)) of its one-line word.
Perm = Tuple[int, ...]

# Relabelling convention for act(g, p): "direct" replaces each letter x of p
# by g(x); "inverse" replaces it by the preimage of x under g. The direct
# convention is the one that reproduces the published relabelled cycle tables;
# tests pin it down against anchor simplices.
ACT_RELABEL = "direct"

MAX_ARITY = 8


def _check(p: Perm) -> int:
    k = len(p)
    if k == 0 or k > MAX_ARITY:
        raise ValueError(f"arity must be between 1 and {MAX_ARITY}")
    if sorted(p) != list(range(1, k + 1)):
        raise ValueError(f"not a permutation word: {p}")
    return k


def identity(k: int) -> Perm:
    if k < 1 or k > MAX_ARITY:
        raise ValueError(f"arity must be between 1 and {MAX_ARITY}")
    return tuple(range(1, k + 1))


def all_perms(k: int) -> Tuple[Perm, ...]:
    """All permutations of arity k in lexicographic one-line order."""
    if k < 1 or k > MAX_ARITY:
        raise ValueError(f"arity must be between 1 and {MAX_ARITY}")
    return tuple(_permutations(range(1, k + 1)))


def compose(p: Perm, q: Perm) -> Perm:
    """(p.q)(x) = p(q(x))."""
    if len(p) != len(q):
        raise ValueError("arity mismatch")
    return tuple(p[x - 1] for x in q)


def inverse(p: Perm) -> Perm:
    k = _check(p)
    inv = [0] * k
    for pos, v in enumerate(p, start=1):
        inv[v - 1] = pos
    return tuple(inv)


def act(g: Perm, p: Perm) -> Perm:
    """Relabel p by g: letter x becomes g(x) (or its g-preimage, see ACT_RELABEL)."""
    if len(g) != len(p):
        raise ValueError("arity mismatch")
    if ACT_RELABEL == "direct":
        return compose(g, p)
    return compose(inverse(g), p)


def project_pair(p: Perm, i: int, j: int) -> Perm:
    """(1,2) when label i precedes label j in the word of p, else (2,1)."""
    k = len(p)
    if i == j or not (1 <= i <= k) or not (1 <= j <= k):
        raise ValueError(f"labels must be distinct and in 1..{k}")
    for v in p:
        if v == i:
            return (1, 2)
        if v == j:
            return (2, 1)
    raise ValueError(f"not a permutation word: {p}")


def project_triple(p: Perm, labels: Tuple[int, int, int]) -> Perm:
    """Relative order pattern of the three symbols (j1, j2, j3) inside p.

    Scanning the word of p, each occurrence of labels[s-1] contributes the
    value s; the resulting arity-3 word is the pattern.
    """
    a, b, c = labels
    if len({a, b, c}) != 3:
        raise ValueError("labels must be distinct")
    slot = {a: 1, b: 2, c: 3}
    out = tuple(slot[v] for v in p if v in slot)
    if len(out) != 3:
        raise ValueError("labels must occur in the permutation")
    return out


def block_substitute(p: Perm, i: int, q: Perm) -> Perm:
    """Replace letter i of p by the block {i..i+m-1} arranged by q; shift the rest."""
    k = len(p)
    m = len(q)
    if not (1 <= i <= k):
        raise ValueError(f"slot must be in 1..{k}")
    out = []
    for v in p:
        if v < i:
            out.append(v)
        elif v == i:
            out.extend(i - 1 + x for x in q)
        else:
            out.append(v + m - 1)
    return tuple(out)


def perm_from_text(text: str) -> Perm:
    """Parse concatenated digits, e.g. "4312"."""
    if not text or not text.isdigit():
        raise ValueError(f"not a permutation text: {text!r}")
    p = tuple(int(ch) for ch in text)
    _check(p)
    return p


def perm_text(p: Perm) -> str:
    return "".join(str(v) for v in p)


def ordered_pairs(k: int) -> Tuple[Tuple[int, int], ...]:
    """All pairs (i, j) with 1 <= i < j <= k, lexicographically."""
    return tuple((i, j) for i in range(1, k + 1) for j in range(i + 1, k + 1))


def pair_flags(p: Perm, pairs: Iterable[Tuple[int, int]]) -> int:
    """Bitmask with bit b set when pair b of `pairs` is inverted in p."""
    pos = {v: n for n, v in enumerate(p)}
    mask = 0
    for b, (i, j) in enumerate(pairs):
        if pos[i] > pos[j]:
            mask |= 1 << b
    return mask
