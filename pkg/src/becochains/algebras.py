"""Arnold cohomology ring, Yang-Baxter algebra, dual generators and twisting cochain.

Both algebras are handled in their admissible bases over GF(2):
Arnold monomials have strictly increasing second indices, Yang-Baxter words
non-decreasing ones. Elements are support sets of basis words.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, product
from typing import Callable, Dict, FrozenSet, Iterable, List, Sequence, Tuple

__all__ = [
    "Pair",
    "Word",
    "arnold_normalize",
    "arnold_mult",
    "yb_normalize",
    "is_admissible_arnold",
    "is_admissible_yb",
    "arnold_basis",
    "yb_basis",
    "w_basis",
    "dims",
    "coproduct",
    "coproduct_component",
    "d_w1",
    "HomWH",
    "tau",
    "convolution",
    "hochschild_d",
    "parse_word",
    "word_text",
]

Pair = Tuple[int, int]
Word = Tuple[Pair, ...]
Element = FrozenSet[Word]

MAX_REWRITE_STEPS = 10 ** 6


def _normpair(a: int, b: int) -> Pair:
    if a == b:
        raise ValueError("generator indices must be distinct")
    return (a, b) if a < b else (b, a)


def is_admissible_arnold(word: Word) -> bool:
    return all(i < j for i, j in word) and all(
        word[m][1] < word[m + 1][1] for m in range(len(word) - 1)
    )


def is_admissible_yb(word: Word) -> bool:
    return all(i < j for i, j in word) and all(
        word[m][1] <= word[m + 1][1] for m in range(len(word) - 1)
    )


def arnold_normalize(raw: Sequence[Sequence[int]]) -> Element:
    """Admissible-basis expansion of a product of Arnold generators.

    Uses commutativity (sort by second index), squares vanishing, and the
    characteristic-two three-term relation to split equal second indices.
    """
    start = tuple(sorted((_normpair(a, b) for a, b in raw), key=lambda p: (p[1], p[0])))
    acc: set = set()
    pending = {start}
    steps = 0
    while pending:
        steps += 1
        if steps > MAX_REWRITE_STEPS:
            raise RuntimeError("rewriting did not terminate within the step bound")
        word = pending.pop()
        if len(set(word)) != len(word):
            continue  # a squared generator kills the monomial
        m = next(
            (m for m in range(len(word) - 1) if word[m][1] == word[m + 1][1]),
            None,
        )
        if m is None:
            acc ^= {word}
            continue
        (i1, j), (i2, _) = word[m], word[m + 1]
        rest = word[:m] + word[m + 2:]
        for repl in (((i1, i2), (i2, j)), ((i1, i2), (i1, j))):
            new = tuple(sorted(rest + repl, key=lambda p: (p[1], p[0])))
            pending ^= {new}
    return frozenset(acc)


def arnold_mult(x: Iterable[Word], y: Iterable[Word]) -> Element:
    """Bilinear product of two admissible-support elements."""
    acc: set = set()
    ys = list(y)
    for a in x:
        for b in ys:
            acc ^= arnold_normalize(a + b)
    return frozenset(acc)


def yb_normalize(raw: Sequence[Sequence[int]]) -> Element:
    """Admissible-basis expansion of a product of Yang-Baxter generators.

    An adjacent descent in second indices is rewritten: disjoint factors
    commute; overlapping ones produce the two extra quadratic terms of the
    Yang-Baxter relation. The second-index multiset strictly decreases, so
    rewriting terminates; a loud bound guards against regressions.
    """
    start = tuple(_normpair(a, b) for a, b in raw)
    acc: set = set()
    pending = {start}
    steps = 0
    while pending:
        steps += 1
        if steps > MAX_REWRITE_STEPS:
            raise RuntimeError("rewriting did not terminate within the step bound")
        word = min(pending)
        pending.discard(word)
        m = next(
            (m for m in range(len(word) - 1) if word[m][1] > word[m + 1][1]),
            None,
        )
        if m is None:
            acc ^= {word}
            continue
        (i, j), (u, v) = word[m], word[m + 1]
        head, tail = word[:m], word[m + 2:]
        repls = [((u, v), (i, j))]
        if {i, j} & {u, v}:
            repls.append(((u, j), (v, j)))
            repls.append((((v, j), (u, j))))
        for repl in repls:
            pending ^= {head + repl + tail}
    return frozenset(acc)


@lru_cache(maxsize=None)
def arnold_basis(k: int, length: int) -> Tuple[Word, ...]:
    """Admissible Arnold monomials of the given length, lexicographically."""
    if length == 0:
        return ((),)
    words = []
    for js in combinations(range(2, k + 1), length):
        for istuple in product(*(range(1, j) for j in js)):
            words.append(tuple(zip(istuple, js)))
    return tuple(sorted(words))


@lru_cache(maxsize=None)
def yb_basis(k: int, length: int) -> Tuple[Word, ...]:
    """Admissible Yang-Baxter words of the given length, lexicographically."""
    if length == 0:
        return ((),)
    words: List[Word] = []

    def extend(prefix: Word, min_j: int):
        if len(prefix) == length:
            words.append(prefix)
            return
        for j in range(min_j, k + 1):
            for i in range(1, j):
                extend(prefix + ((i, j),), j)

    extend((), 2)
    return tuple(sorted(words))


def w_basis(k: int, level: int) -> Tuple[Word, ...]:
    """Dual generators at one resolution level are indexed by words of length level+1."""
    return yb_basis(k, level + 1)


def dims(kind: str, k: int, length: int) -> int:
    """Number of admissible basis words of one length."""
    if kind == "arnold":
        return len(arnold_basis(k, length))
    if kind == "yb":
        return len(yb_basis(k, length))
    raise ValueError("kind must be 'arnold' or 'yb'")


@lru_cache(maxsize=None)
def _split_table(k: int, lu: int, lv: int) -> Dict[Word, Tuple[Tuple[Word, Word], ...]]:
    """For each admissible word, the (u, v) with given lengths whose product contains it."""
    table: Dict[Word, List[Tuple[Word, Word]]] = {}
    for u in yb_basis(k, lu):
        for v in yb_basis(k, lv):
            for w in yb_normalize(u + v):
                table.setdefault(w, []).append((u, v))
    return {w: tuple(pairs) for w, pairs in table.items()}


def coproduct_component(k: int, w: Word, lu: int, lv: int) -> Tuple[Tuple[Word, Word], ...]:
    """Summands of the dualized multiplication landing in one length bidegree."""
    if lu + lv != len(w) or lu < 1 or lv < 1:
        return ()
    return _split_table(k, lu, lv).get(w, ())


def coproduct(k: int, w: Word) -> FrozenSet[Tuple[Word, Word]]:
    """Outer part of the dual of multiplication: one tensor leg has length 1."""
    n = len(w)
    if n < 2:
        raise ValueError("coproduct needs a word of length at least 2")
    out = set(coproduct_component(k, w, n - 1, 1))
    out |= set(coproduct_component(k, w, 1, n - 1))
    return frozenset(out)


def d_w1(w: Word) -> FrozenSet[Tuple[Pair, Pair]]:
    """Differential of a level-1 dual generator as quadratic level-0 words.

    Four cases by the shape of the admissible word ((i,j),(k,l)): a square,
    distinct second indices (a commutator), or equal second indices with the
    extra Yang-Baxter correction terms.
    """
    if len(w) != 2:
        raise ValueError("expected a length-2 word")
    (i, j), (k, l) = w
    if (i, j) == (k, l):
        return frozenset({((i, j), (k, l))})
    if j < l:
        return frozenset({((i, j), (k, l)), ((k, l), (i, j))})
    if j != l:
        raise ValueError(f"word is not admissible: {w}")
    ki = _normpair(k, i)
    return frozenset({((i, j), (k, l)), ((i, l), ki), ((k, l), ki)})


class HomWH:
    """GF(2) linear map from one resolution level of W to one Arnold degree.

    Rows follow the canonical level basis; each row is a bitmask over the
    canonical Arnold basis of the target degree.
    """

    __slots__ = ("k", "level", "qdeg", "rows")

    def __init__(self, k: int, level: int, qdeg: int, rows: Sequence[int]):
        self.k = k
        self.level = level
        self.qdeg = qdeg
        expected = len(w_basis(k, level))
        if len(rows) != expected:
            raise ValueError(f"expected {expected} rows, got {len(rows)}")
        self.rows = tuple(rows)

    @classmethod
    def zero(cls, k: int, level: int, qdeg: int) -> "HomWH":
        return cls(k, level, qdeg, [0] * len(w_basis(k, level)))

    @classmethod
    def from_map(cls, k: int, level: int, qdeg: int, fn: Callable[[Word], Iterable[Word]]) -> "HomWH":
        basis = arnold_basis(k, qdeg)
        col = {m: c for c, m in enumerate(basis)}
        rows = []
        for w in w_basis(k, level):
            r = 0
            for m in fn(w):
                r ^= 1 << col[m]
            rows.append(r)
        return cls(k, level, qdeg, rows)

    def apply(self, w: Word) -> Element:
        idx = _w_index(self.k, self.level)[w]
        basis = arnold_basis(self.k, self.qdeg)
        r = self.rows[idx]
        out = []
        while r:
            low = r & -r
            out.append(basis[low.bit_length() - 1])
            r ^= low
        return frozenset(out)

    def __add__(self, other: "HomWH") -> "HomWH":
        if (self.k, self.level, self.qdeg) != (other.k, other.level, other.qdeg):
            raise ValueError("bidegree mismatch")
        return HomWH(self.k, self.level, self.qdeg, [a ^ b for a, b in zip(self.rows, other.rows)])

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, HomWH)
            and (self.k, self.level, self.qdeg) == (other.k, other.level, other.qdeg)
            and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return hash((self.k, self.level, self.qdeg, self.rows))

    def is_zero(self) -> bool:
        return not any(self.rows)

    def __repr__(self) -> str:
        return f"HomWH(k={self.k}, level={self.level}, qdeg={self.qdeg})"


@lru_cache(maxsize=None)
def _w_index(k: int, level: int) -> Dict[Word, int]:
    return {w: i for i, w in enumerate(w_basis(k, level))}


@lru_cache(maxsize=None)
def tau(k: int = 4) -> HomWH:
    """The twisting cochain: length-1 dual generators to the matching Arnold class."""
    return HomWH.from_map(k, 0, 1, lambda w: [w])


def convolution(f: HomWH, g: HomWH) -> HomWH:
    """Convolution product through the coproduct of W and the Arnold multiplication."""
    if f.k != g.k:
        raise ValueError("arity mismatch")
    k = f.k
    level = f.level + g.level + 1
    qdeg = f.qdeg + g.qdeg

    def fn(w: Word) -> Element:
        acc: set = set()
        for u, v in coproduct_component(k, w, f.level + 1, g.level + 1):
            fu = f.apply(u)
            gv = g.apply(v)
            if fu and gv:
                acc ^= arnold_mult(fu, gv)
        return frozenset(acc)

    return HomWH.from_map(k, level, qdeg, fn)


def hochschild_d(f: HomWH) -> HomWH:
    """Differential of the convolution complex: f * tau + tau * f."""
    t = tau(f.k)
    return convolution(f, t) + convolution(t, f)


def parse_word(text: str) -> Tuple[str, Word]:
    """Parse "B12.B23.B13" or "A12.A23" into (kind letter, factor pairs)."""
    parts = text.strip().split(".")
    kinds = {part[0] for part in parts if part}
    if len(kinds) != 1 or kinds - {"A", "B"}:
        raise ValueError(f"not a generator word: {text!r}")
    kind = kinds.pop()
    word = []
    for part in parts:
        if len(part) != 3 or not part[1:].isdigit():
            raise ValueError(f"bad factor {part!r} in {text!r}")
        word.append(_normpair(int(part[1]), int(part[2])))
    return kind, tuple(word)


def word_text(kind: str, word: Word) -> str:
    if kind not in ("A", "B"):
        raise ValueError("kind must be 'A' or 'B'")
    return ".".join(f"{kind}{i}{j}" for i, j in word)
