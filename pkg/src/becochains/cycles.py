"""Operadic chain-level cycles representing the degree-2 homology basis.

Chains here are support sets of raw simplices (strings of permutations),
composed through the operad structure: substitution with level shuffles.
The degree-2 basis of the arity-4 complex is realized by relabellings of
two cycles, one with a three-label satellite block and one with two
independent two-label blocks.
"""

from __future__ import annotations

from functools import lru_cache
from typing import FrozenSet, Sequence, Tuple

from .algebras import Word, arnold_basis
from .cochains import F2Chain, F2Cochain, coboundary, cup, from_simplices, omega, pair
from .complexes import Complex, Simplex, get_complex, is_nondegenerate
from .gf2 import BitMatrix, solve
from .perms import Perm, act, block_substitute

__all__ = [
    "Chain",
    "compose_simplices",
    "circ",
    "mult",
    "unit_chain",
    "gamma",
    "act_chain",
    "t_cycle",
    "gamma_gamma",
    "h2_cycle_table",
    "h2_cycles",
    "to_chain",
    "omega_product",
    "pairing_matrix",
    "class_of_cocycle",
    "is_two_block_cycle",
    "is_satellite_cycle",
]

Chain = FrozenSet[Simplex]


def compose_simplices(s: Simplex, i: int, u: Simplex) -> Chain:
    """Substitute u into slot i of s, one summand per monotone level shuffle.

    A shuffle of the level strings is a lattice path: each step advances the
    level of s or of u, and the summand takes the substitution of the current
    pair of levels. Degenerate results vanish in the normalized complex.
    """
    p, q = len(s) - 1, len(u) - 1
    out: set = set()
    stack = [(0, 0, (block_substitute(s[0], i, u[0]),))]
    while stack:
        a, b, levels = stack.pop()
        if a == p and b == q:
            if is_nondegenerate(levels):
                out ^= {levels}
            continue
        if a < p:
            stack.append((a + 1, b, levels + (block_substitute(s[a + 1], i, u[b]),)))
        if b < q:
            stack.append((a, b + 1, levels + (block_substitute(s[a], i, u[b + 1]),)))
    return frozenset(out)


def circ(x: Chain, i: int, y: Chain) -> Chain:
    """Bilinear extension of the slot-i composition to chains."""
    acc: set = set()
    for s in x:
        for u in y:
            acc ^= compose_simplices(s, i, u)
    return frozenset(acc)


def unit_chain() -> Chain:
    return frozenset({((1,),)})


def mult(x: Chain, y: Chain) -> Chain:
    """Product of chains: substitute both into the two slots of (1 2)."""
    m: Chain = frozenset({((1, 2),)})
    return circ(circ(m, 2, y), 1, x)


def gamma() -> Chain:
    """The degree-1 cycle of the arity-2 complex: both 1-simplexes."""
    return frozenset({((1, 2), (2, 1)), ((2, 1), (1, 2))})


def act_chain(g: Perm, ch: Chain) -> Chain:
    """Relabel every level of every simplex by g."""
    return frozenset(tuple(act(g, level) for level in s) for s in ch)


@lru_cache(maxsize=None)
def t_cycle() -> Chain:
    """Satellite cycle: gamma composed into itself, then one label appended."""
    return mult(circ(gamma(), 2, gamma()), unit_chain())


@lru_cache(maxsize=None)
def gamma_gamma() -> Chain:
    """Two-block cycle: the product of gamma with itself."""
    return mult(gamma(), gamma())


# Relabellings (one-line words) sending each base cycle to the representative
# dual to one admissible quadratic monomial of the arity-4 cohomology.
_RELABELLINGS: Tuple[Tuple[Word, Perm, str], ...] = (
    ((((1, 2), (1, 3))), (2, 1, 3, 4), "t"),
    ((((1, 2), (1, 4))), (2, 1, 4, 3), "t"),
    ((((1, 2), (2, 3))), (1, 2, 3, 4), "t"),
    ((((1, 2), (2, 4))), (1, 2, 4, 3), "t"),
    ((((1, 2), (3, 4))), (1, 2, 3, 4), "gg"),
    ((((1, 3), (1, 4))), (3, 4, 1, 2), "t"),
    ((((1, 3), (2, 4))), (1, 3, 2, 4), "gg"),
    ((((1, 3), (3, 4))), (1, 4, 3, 2), "t"),
    ((((2, 3), (1, 4))), (1, 4, 3, 2), "gg"),
    ((((2, 3), (2, 4))), (3, 2, 4, 1), "t"),
    ((((2, 3), (3, 4))), (2, 3, 4, 1), "t"),
)


@lru_cache(maxsize=None)
def h2_cycle_table() -> Tuple[Tuple[Word, Chain], ...]:
    """The 11 cycle representatives, ordered like the quadratic Arnold basis.

    Each entry pairs the admissible monomial whose dual class the cycle
    represents with the relabelled satellite or two-block cycle.
    """
    base = {"t": t_cycle(), "gg": gamma_gamma()}
    table = []
    for word, g, kind in _RELABELLINGS:
        table.append((word, act_chain(g, base[kind])))
    order = {m: r for r, m in enumerate(arnold_basis(4, 2))}
    assert [order[w] for w, _ in table] == list(range(11))
    return tuple(table)


def h2_cycles() -> Tuple[Chain, ...]:
    return tuple(ch for _, ch in h2_cycle_table())


def to_chain(cx: Complex, ch: Chain) -> F2Chain:
    """View a raw chain inside a filtered complex; every simplex must lie in it."""
    if not ch:
        raise ValueError("empty chain has no well-defined degree")
    return from_simplices(cx, ch)


def omega_product(monomial: Word, k: int = 4) -> F2Cochain:
    """Cup product of the pullback cocycles along one admissible monomial."""
    if not monomial:
        raise ValueError("need at least one factor")
    out = omega(k, *monomial[0])
    for i, j in monomial[1:]:
        out = cup(out, omega(k, i, j))
    return out


@lru_cache(maxsize=None)
def pairing_matrix() -> BitMatrix:
    """Pairings of the quadratic cocycle products against the 11 cycles.

    Row r is the product cocycle of basis monomial r, column s the cycle
    dual to basis monomial s; the matrix must be invertible for the cycles
    to detect the full quadratic cohomology.
    """
    cx = get_complex(4, 2)
    cycles = [to_chain(cx, ch) for ch in h2_cycles()]
    rows = []
    for monomial in arnold_basis(4, 2):
        c = omega_product(monomial)
        rows.append([pair(c, z) for z in cycles])
    return BitMatrix.from_rows(rows, cols=len(cycles))


def class_of_cocycle(c: F2Cochain) -> FrozenSet[Word]:
    """Cohomology class of a degree-2 cocycle in the admissible basis.

    Solves the pairing system: the class's coefficient vector x satisfies
    M^T x = (pairings of c with the cycles).
    """
    if c.degree != 2 or c.cx.k != 4 or c.cx.t != 2:
        raise ValueError("expected a degree-2 cochain of the arity-4 complex")
    if coboundary(c):
        raise ValueError("not a cocycle")
    cx = c.cx
    p = [pair(c, to_chain(cx, ch)) for ch in h2_cycles()]
    x = solve(pairing_matrix().transpose(), p)
    if x is None:
        raise ValueError("pairings are inconsistent with the cycle basis")
    basis = arnold_basis(4, 2)
    return frozenset(basis[r] for r, bit in enumerate(x) if bit)


def is_two_block_cycle(ch: Chain) -> bool:
    """Two fixed pairs of labels, one per position block, one block swapping per step."""
    sims = list(ch)
    if not sims:
        return False
    first = sims[0][0]
    s1, s2 = frozenset(first[:2]), frozenset(first[2:])
    for s in sims:
        for level in s:
            if frozenset(level[:2]) != s1 or frozenset(level[2:]) != s2:
                return False
        for u, v in zip(s, s[1:]):
            swaps = (u[:2] != v[:2]) + (u[2:] != v[2:])
            if swaps != 1:
                return False
    return True


def _triple_step_ok(u: Sequence[int], v: Sequence[int]) -> bool:
    """One step of the satellite block: an adjacent swap or a full rotation."""
    u, v = tuple(u), tuple(v)
    if v in ((u[1], u[0], u[2]), (u[0], u[2], u[1])):
        return True
    return v in ((u[1], u[2], u[0]), (u[2], u[0], u[1]))


def is_satellite_cycle(ch: Chain) -> bool:
    """One label parked last everywhere; the other three move by swaps and jumps."""
    sims = list(ch)
    if not sims:
        return False
    parked = sims[0][0][-1]
    for s in sims:
        for level in s:
            if level[-1] != parked:
                return False
        for u, v in zip(s, s[1:]):
            if not _triple_step_ok(u[:3], v[:3]):
                return False
    return True
