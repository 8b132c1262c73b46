"""GF(2) linear algebra on bitset-encoded rows.

Rows are Python ints; bit q of a row is the coefficient of qubit q.  Sizes
here are small (n <= a few hundred), so dense bitset elimination is fast and
exact.
"""

from __future__ import annotations

from typing import Iterable, List


def to_bitset(support: Iterable[int]) -> int:
    mask = 0
    for q in support:
        mask |= 1 << q
    return mask


def rank(rows: List[int]) -> int:
    """Rank of the row set over GF(2)."""
    basis: List[int] = []
    for row in rows:
        for b in basis:
            low = b & -b
            if row & low:
                row ^= b
        if row:
            basis.append(row)
            # keep basis rows reduced against each other
            low = row & -row
            for i, b in enumerate(basis[:-1]):
                if b & low:
                    basis[i] = b ^ row
    return len(basis)


class RowSpace:
    """Incrementally reduced row space supporting membership tests."""

    def __init__(self, rows: Iterable[int] = ()):
        self._basis: List[int] = []
        for row in rows:
            self.add(row)

    def add(self, row: int) -> bool:
        """Add a row; returns True if it enlarged the space."""
        row = self.reduce(row)
        if not row:
            return False
        low = row & -row
        for i, b in enumerate(self._basis):
            if b & low:
                self._basis[i] = b ^ row
        self._basis.append(row)
        return True

    def reduce(self, vec: int) -> int:
        for b in self._basis:
            if vec & (b & -b):
                vec ^= b
        return vec

    def contains(self, vec: int) -> bool:
        return self.reduce(vec) == 0

    @property
    def dimension(self) -> int:
        return len(self._basis)


def kernel_basis(rows: List[int], ncols: int) -> List[int]:
    """Basis of {v : every row has even overlap with v}."""
    work = list(rows)
    pivots: dict[int, int] = {}
    r = 0
    for col in range(ncols):
        piv = None
        for i in range(r, len(work)):
            if (work[i] >> col) & 1:
                piv = i
                break
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        for i in range(len(work)):
            if i != r and ((work[i] >> col) & 1):
                work[i] ^= work[r]
        pivots[col] = r
        r += 1
    basis = []
    for free in range(ncols):
        if free in pivots:
            continue
        v = 1 << free
        for col, row_i in pivots.items():
            if (work[row_i] >> free) & 1:
                v |= 1 << col
        basis.append(v)
    return basis
