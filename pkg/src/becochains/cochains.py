"""Normalized chains and cochains of the filtered complexes over GF(2).

A cochain is stored as its support, a set of indices into the canonical
degree table of its ambient complex. Chains share the representation; the
distinction is semantic (pairing treats one argument as each).
"""

from __future__ import annotations

from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .complexes import Complex, Simplex, get_complex, simplex_from_text, simplex_text
from .gf2 import BitMatrix
from .perms import Perm, project_pair, project_triple

__all__ = [
    "F2Cochain",
    "F2Chain",
    "zero",
    "from_simplices",
    "coboundary",
    "boundary",
    "cup",
    "cup1",
    "pullback",
    "omega",
    "ar",
    "pair",
    "coboundary_matrix",
    "parse_cochain",
    "cochain_text",
]


class F2Cochain:
    """Degree-homogeneous GF(2) support set of simplices of one ambient complex."""

    __slots__ = ("cx", "degree", "support")

    def __init__(self, cx: Complex, degree: int, support: Iterable[int] = ()):
        self.cx = cx
        self.degree = degree
        self.support = frozenset(support)

    def __add__(self, other: "F2Cochain") -> "F2Cochain":
        _check_same(self, other)
        return F2Cochain(self.cx, self.degree, self.support ^ other.support)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, F2Cochain)
            and self.cx is other.cx
            and self.degree == other.degree
            and self.support == other.support
        )

    def __hash__(self) -> int:
        return hash((id(self.cx), self.degree, self.support))

    def __bool__(self) -> bool:
        return bool(self.support)

    def __len__(self) -> int:
        return len(self.support)

    def simplices(self) -> List[Simplex]:
        tbl = self.cx.index(self.degree)
        return [tbl.simplex(i) for i in sorted(self.support)]

    def __repr__(self) -> str:
        return f"F2Cochain(k={self.cx.k}, t={self.cx.t}, degree={self.degree}, {cochain_text(self)})"


F2Chain = F2Cochain


def _check_same(a: F2Cochain, b: F2Cochain):
    if a.cx is not b.cx:
        raise ValueError("ambient complex mismatch")
    if a.degree != b.degree:
        raise ValueError("degree mismatch")


def zero(cx: Complex, degree: int) -> F2Cochain:
    return F2Cochain(cx, degree)


def from_simplices(cx: Complex, simplices: Iterable[Simplex]) -> F2Cochain:
    """Cochain supported on the given simplices (all of one degree)."""
    sims = list(simplices)
    if not sims:
        raise ValueError("degree is ambiguous for an empty set; use zero(cx, degree)")
    degs = {len(s) - 1 for s in sims}
    if len(degs) != 1:
        raise ValueError("simplices must share one degree")
    deg = degs.pop()
    tbl = cx.index(deg)
    return F2Cochain(cx, deg, (tbl.index_of(s) for s in sims))


def coboundary(c: F2Cochain) -> F2Cochain:
    """(dc)(s) = sum of c over the faces of s, degenerate faces contributing zero."""
    cx = c.cx
    if c.degree >= cx.top_degree:
        # The next cochain group vanishes, so the coboundary is zero there.
        return F2Cochain(cx, c.degree + 1)
    rows = cx.face_indices(c.degree + 1)
    supp = c.support
    out = [
        s for s, row in enumerate(rows)
        if sum(1 for f in row if f in supp) & 1
    ]
    return F2Cochain(cx, c.degree + 1, out)


def boundary(z: F2Chain) -> F2Chain:
    """Sum of the nondegenerate faces of every simplex of z, over GF(2)."""
    if z.degree < 1:
        raise ValueError("boundary needs degree at least 1")
    rows = z.cx.face_indices(z.degree)
    acc: set = set()
    for s in z.support:
        for f in rows[s]:
            if f >= 0:
                acc ^= {f}
    return F2Chain(z.cx, z.degree - 1, acc)


def cup(a: F2Cochain, b: F2Cochain) -> F2Cochain:
    """Alexander-Whitney product: evaluate a on front faces and b on back faces."""
    if a.cx is not b.cx:
        raise ValueError("ambient complex mismatch")
    cx = a.cx
    p, q = a.degree, b.degree
    if p + q > cx.top_degree:
        # Nothing lives above the top degree; the product collapses.
        return F2Cochain(cx, p + q)
    fronts, backs = cx.front_back(p, q)
    sa, sb = a.support, b.support
    out = [s for s in range(len(fronts)) if fronts[s] in sa and backs[s] in sb]
    return F2Cochain(cx, p + q, out)


def cup1(a: F2Cochain, b: F2Cochain) -> F2Cochain:
    """Degree-1 cup-one product: the support intersection."""
    _check_same(a, b)
    if a.degree != 1:
        raise ValueError("cup1 is defined here for degree-1 cochains only")
    return F2Cochain(a.cx, 1, a.support & b.support)


def _projector(tag: Sequence[int]):
    if len(tag) == 2:
        i, j = tag
        return lambda p: project_pair(p, i, j), 2
    if len(tag) == 3:
        labels = tuple(tag)
        return lambda p: project_triple(p, labels), 3
    raise ValueError("projection tag must be a pair or a triple of labels")


def pullback(target: Complex, tag: Sequence[int], c: F2Cochain) -> F2Cochain:
    """(f*c)(s) = c(f(s)) for the label-forgetting projection named by tag.

    tag (i, j) projects to arity 2; tag (a, b, c) records the pattern of the
    three labels, projecting to arity 3. The source cochain c lives on the
    smaller complex with the same complexity.
    """
    fn, src_arity = _projector(tag)
    if c.cx.k != src_arity:
        raise ValueError(f"pullback source must have arity {src_arity}")
    if c.cx.t != target.t:
        raise ValueError("complexity mismatch")
    deg = c.degree
    tbl = target.index(deg)
    src_tbl = c.cx.index(deg)
    supp = c.support
    out = []
    for s_idx, code in enumerate(tbl.codes):
        sim = tbl.unpack(code)
        img = tuple(fn(p) for p in sim)
        if any(img[m] == img[m + 1] for m in range(deg)):
            continue
        if src_tbl.pos[src_tbl.pack(img)] in supp:
            out.append(s_idx)
    return F2Cochain(target, deg, out)


@lru_cache(maxsize=None)
def omega(k: int, i: int, j: int) -> F2Cochain:
    """The 1-cocycle pulled back from the top cell of the two-label complex."""
    if i == j or not (1 <= i <= k) or not (1 <= j <= k):
        raise ValueError("labels must be distinct and within the arity")
    cx2 = get_complex(2, 2)
    top = from_simplices(cx2, [(((1, 2), (2, 1)))])
    return pullback(get_complex(k, 2), (i, j), top)


@lru_cache(maxsize=None)
def ar() -> F2Cochain:
    """The 1-cochain supported on the single arity-3 string 132|312."""
    return from_simplices(get_complex(3, 2), [((1, 3, 2), (3, 1, 2))])


def pair(c: F2Cochain, z: F2Chain) -> int:
    """Evaluation of a cochain on a chain: |Supp(c) & Supp(z)| mod 2."""
    _check_same(c, z)
    return len(c.support & z.support) & 1


def coboundary_matrix(cx: Complex, deg: int) -> BitMatrix:
    """Matrix of d from degree deg to deg+1 in the canonical bases.

    Rows are indexed by the degree deg+1 table, columns by the degree deg
    table; entry (s, f) counts occurrences of face f of s, mod 2.
    """
    rows_faces = cx.face_indices(deg + 1)
    n_rows = len(cx.index(deg + 1))
    n_cols = len(cx.index(deg))
    data = []
    for row in rows_faces:
        r = 0
        for f in row:
            if f >= 0:
                r ^= 1 << f
        data.append(r)
    assert len(data) == n_rows
    return BitMatrix(n_rows, n_cols, data)


def parse_cochain(cx: Complex, text: str, degree: Optional[int] = None) -> F2Cochain:
    """Parse "+"-joined simplex strings, e.g. "132|312 + 123|321"; "0" is zero."""
    body = text.strip()
    if body == "0":
        if degree is None:
            raise ValueError("parsing the zero cochain needs an explicit degree")
        return zero(cx, degree)
    sims = [simplex_from_text(part.strip()) for part in body.split("+")]
    c = from_simplices(cx, sims)
    if degree is not None and c.degree != degree:
        raise ValueError("parsed degree does not match the requested one")
    return c


def cochain_text(c: F2Cochain) -> str:
    """Canonical text form; inverse of parse_cochain."""
    if not c.support:
        return "0"
    return " + ".join(simplex_text(s) for s in c.simplices())
