"""Packed-bitset linear algebra over GF(2).

Rows of binary matrices are stored as Python integers: bit i (LSB first)
holds the entry of column i.  Externally coordinates are numbered 1..n;
bit 0 corresponds to coordinate 1.  Codes are kept in reduced row-echelon
form so that two equal codes always compare bit-identical.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

# Exhaustive enumeration is the only codeword engine here; 2^28 words is
# the largest job we accept.
MAX_ENUM_DIM = 28


def rref(rows, n_cols):
    """Reduced row-echelon form over GF(2).

    Args:
        rows: iterable of int bit-rows.
        n_cols: number of columns.

    Returns:
        (rows, pivots) where rows is a tuple of the nonzero RREF rows and
        pivots the strictly increasing list of pivot column indices.
    """
    work = [int(r) for r in rows]
    out = []
    pivots = []
    for col in range(n_cols):
        mask = 1 << col
        src = None
        for i, r in enumerate(work):
            if r & mask:
                src = i
                break
        if src is None:
            continue
        piv = work.pop(src)
        work = [r ^ piv if r & mask else r for r in work]
        out = [r ^ piv if r & mask else r for r in out]
        out.append(piv)
        pivots.append(col)
    return tuple(out), pivots


@dataclass(frozen=True)
class BinaryMatrix:
    """A binary matrix: ordered bit-rows of common width."""

    n_cols: int
    rows: tuple

    def __post_init__(self):
        limit = 1 << self.n_cols
        for r in self.rows:
            if not 0 <= r < limit:
                raise ValueError("row has bits beyond column count")

    @classmethod
    def parse(cls, text):
        """Parse the one-row-per-line '0'/'1' text format."""
        lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
        if not lines:
            raise ValueError("empty matrix text")
        n = len(lines[0])
        rows = []
        for ln in lines:
            if len(ln) != n:
                raise ValueError("ragged rows in matrix text")
            if set(ln) - {"0", "1"}:
                raise ValueError("matrix text must contain only 0/1")
            rows.append(int(ln[::-1], 2))
        return cls(n, tuple(rows))

    def to_text(self):
        return "\n".join(
            format(r, "0%db" % self.n_cols)[::-1] for r in self.rows
        )

    @property
    def n_rows(self):
        return len(self.rows)

    def rank(self):
        return len(rref(self.rows, self.n_cols)[0])

    def rref(self):
        return BinaryMatrix(self.n_cols, rref(self.rows, self.n_cols)[0])


def weight(word):
    """Hamming weight of a bit-row."""
    return int(word).bit_count()


def permute_word(word, img):
    """Move bit i of ``word`` to position img[i]."""
    out = 0
    w = int(word)
    while w:
        low = w & -w
        i = low.bit_length() - 1
        out |= 1 << img[i]
        w ^= low
    return out


@dataclass(frozen=True)
class BinaryCode:
    """A binary [n, k] linear code, stored as an RREF generator matrix.

    Equality of codes is equality of the stored rows: the RREF is a
    canonical form, so identical codes always hash and compare equal.
    """

    n: int
    rows: tuple

    @classmethod
    def from_rows(cls, rows, n):
        reduced, _ = rref(rows, n)
        return cls(n, reduced)

    @classmethod
    def from_matrix(cls, m):
        return cls.from_rows(m.rows, m.n_cols)

    @classmethod
    def parse(cls, text):
        return cls.from_matrix(BinaryMatrix.parse(text))

    @property
    def k(self):
        return len(self.rows)

    @cached_property
    def pivots(self):
        return rref(self.rows, self.n)[1]

    @property
    def gen(self):
        return BinaryMatrix(self.n, self.rows)

    def contains(self, word):
        """Membership test by reduction against the stored RREF."""
        if not 0 <= word < (1 << self.n):
            raise ValueError("word length does not match code length")
        w = int(word)
        for row, piv in zip(self.rows, self.pivots):
            if w & (1 << piv):
                w ^= row
        return w == 0

    def dual(self):
        """The [n, n-k] dual code."""
        pivset = set(self.pivots)
        free = [c for c in range(self.n) if c not in pivset]
        dual_rows = []
        for f in free:
            v = 1 << f
            fmask = 1 << f
            for row, piv in zip(self.rows, self.pivots):
                if row & fmask:
                    v |= 1 << piv
            dual_rows.append(v)
        return BinaryCode.from_rows(dual_rows, self.n)

    def is_self_dual(self):
        return 2 * self.k == self.n and self.dual() == self

    def permuted(self, img):
        """The code with coordinate i moved to img[i]."""
        return BinaryCode.from_rows(
            [permute_word(r, img) for r in self.rows], self.n
        )

    def _codeword_array(self):
        if self.k > MAX_ENUM_DIM:
            raise ValueError("enumeration budget exceeded")
        if self.n > 63:
            raise ValueError("codeword enumeration limited to n <= 63")
        arr = np.zeros(1 << self.k, dtype=np.uint64)
        size = 1
        for row in self.rows:
            arr[size : 2 * size] = arr[:size] ^ np.uint64(row)
            size *= 2
        return arr

    def weight_enumerator(self):
        """Exact weight distribution (A_0, ..., A_n) by full enumeration."""
        arr = self._codeword_array()
        counts = np.bincount(
            np.bitwise_count(arr).astype(np.int64), minlength=self.n + 1
        )
        return counts

    def min_distance(self, abort_below=None):
        """Exact minimum distance, with an optional early-abort threshold.

        With ``abort_below=t`` the return value v satisfies v = d if
        v >= t, and v < t iff d < t; enumeration stops at the first
        codeword of weight below t.
        """
        if self.k == 0:
            raise ValueError("empty code")
        if self.n > 63:
            raise ValueError("enumeration limited to n <= 63")
        if self.k > MAX_ENUM_DIM:
            raise ValueError("enumeration budget exceeded")
        arr = np.zeros(1 << self.k, dtype=np.uint64)
        size = 1
        best = self.n + 1
        for row in self.rows:
            arr[size : 2 * size] = arr[:size] ^ np.uint64(row)
            block = np.bitwise_count(arr[size : 2 * size]).astype(np.int64)
            best = min(best, int(block.min()))
            if abort_below is not None and best < abort_below:
                return best
            size *= 2
        return best
