"""Dense bit-packed linear algebra over the two-element field."""

from __future__ import annotations

from typing import List, Optional

__all__ = ["BitMatrix", "rank", "solve", "rowspace_basis", "kernel_basis"]


class BitMatrix:
    """Matrix over GF(2) with rows packed into Python ints (bit j = column j)."""

    def __init__(self, rows: int, cols: int, data: Optional[List[int]] = None):
        if rows < 0 or cols < 0:
            raise ValueError("negative dimensions")
        self.rows = rows
        self.cols = cols
        if data is None:
            self.data = [0] * rows
        else:
            if len(data) != rows:
                raise ValueError("row count mismatch")
            mask = (1 << cols) - 1
            self.data = [r & mask for r in data]

    @classmethod
    def from_rows(cls, rows_of_bits: List[List[int]], cols: Optional[int] = None) -> "BitMatrix":
        """Build from a list of 0/1 lists."""
        n = len(rows_of_bits)
        c = cols if cols is not None else (len(rows_of_bits[0]) if n else 0)
        data = []
        for bits in rows_of_bits:
            r = 0
            for j, b in enumerate(bits):
                if b & 1:
                    r |= 1 << j
            data.append(r)
        return cls(n, c, data)

    def row_bits(self, i: int) -> List[int]:
        r = self.data[i]
        return [(r >> j) & 1 for j in range(self.cols)]

    def column(self, j: int) -> List[int]:
        return [(r >> j) & 1 for r in self.data]

    def transpose(self) -> "BitMatrix":
        out = [0] * self.cols
        for i, r in enumerate(self.data):
            while r:
                low = r & -r
                out[low.bit_length() - 1] |= 1 << i
                r ^= low
        return BitMatrix(self.cols, self.rows, out)

    def mul_vec(self, x: int) -> int:
        """Product m.x with x packed as an int of cols bits; returns rows bits."""
        y = 0
        for i, r in enumerate(self.data):
            if (r & x).bit_count() & 1:
                y |= 1 << i
        return y

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, BitMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.data == other.data
        )

    def __repr__(self) -> str:
        return f"BitMatrix({self.rows}x{self.cols})"


def _eliminate(data: List[int], cols: int):
    """Row echelon form with deterministic lowest-column pivots.

    Returns (reduced rows, list of pivot columns, row index per pivot).
    """
    rows = list(data)
    pivots: List[int] = []
    pivot_rows: List[int] = []
    r = 0
    n = len(rows)
    for c in range(cols):
        bit = 1 << c
        sel = -1
        for i in range(r, n):
            if rows[i] & bit:
                sel = i
                break
        if sel < 0:
            continue
        rows[r], rows[sel] = rows[sel], rows[r]
        prow = rows[r]
        for i in range(n):
            if i != r and rows[i] & bit:
                rows[i] ^= prow
        pivots.append(c)
        pivot_rows.append(r)
        r += 1
        if r == n:
            break
    return rows, pivots, pivot_rows


def rank(m: BitMatrix) -> int:
    """Row rank over GF(2); does not mutate the input."""
    _, pivots, _ = _eliminate(m.data, m.cols)
    return len(pivots)


def solve(m: BitMatrix, b: List[int]) -> Optional[List[int]]:
    """Some x with m.x = b, or None when the system is inconsistent.

    b has one bit per row of m; x has one bit per column.
    """
    if len(b) != m.rows:
        raise ValueError("right-hand side length must equal the row count")
    aug_col = m.cols
    aug = [m.data[i] | ((b[i] & 1) << aug_col) for i in range(m.rows)]
    rows, pivots, _ = _eliminate(aug, m.cols)
    # Inconsistent iff a nonzero remainder survives in the augmented column.
    used = len(pivots)
    for i in range(used, len(rows)):
        if rows[i] >> aug_col:
            return None
    x = 0
    for r_i, c in enumerate(pivots):
        if rows[r_i] >> aug_col:
            x |= 1 << c
    return [(x >> j) & 1 for j in range(m.cols)]


def rowspace_basis(m: BitMatrix) -> List[int]:
    """Nonzero reduced-echelon rows of m, as bit rows over its columns.

    Each row's lowest set bit is its pivot column, and no other returned row
    has that bit, so membership in the row space reduces by single passes.
    """
    rows, pivots, _ = _eliminate(m.data, m.cols)
    return [rows[i] for i in range(len(pivots))]


def kernel_basis(m: BitMatrix) -> List[List[int]]:
    """Independent vectors spanning the nullspace; count = cols - rank."""
    rows, pivots, _ = _eliminate(m.data, m.cols)
    pivot_set = set(pivots)
    basis: List[List[int]] = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        v = 1 << free
        fbit = 1 << free
        for r_i, c in enumerate(pivots):
            if rows[r_i] & fbit:
                v |= 1 << c
        basis.append([(v >> j) & 1 for j in range(m.cols)])
    return basis
