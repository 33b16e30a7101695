"""Exact reduced simplicial homology over the rationals.

Chains are indexed by the faces of the complex in canonical sorted order,
with the empty face as the basis of degree -1, so the degree-0 boundary map
is the all-ones augmentation row.  Betti numbers come from exact integer
ranks of the boundary matrices, computed by fraction-free (one-step
division) Gaussian elimination; every division is checked to be exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .simplicial import AbstractComplex, faces_by_dimension


@dataclass
class BoundaryMatrix:
    """Sparse signed boundary map from degree-k chains to degree-(k-1) chains."""

    degree: int
    rows: list[tuple]
    cols: list[tuple]
    entries: dict[tuple[int, int], int] = field(repr=False)

    def dense(self) -> list[list[int]]:
        out = [[0] * len(self.cols) for _ in self.rows]
        for (i, j), sign in self.entries.items():
            out[i][j] = sign
        return out


def boundary_matrix(complex_: AbstractComplex, k: int) -> BoundaryMatrix:
    """Boundary map in degree k; faces are sorted tuples, signs alternate by
    the index of the dropped vertex."""
    if k < 0:
        raise ValueError(f"boundary degree must be >= 0, got {k}")
    fbd = faces_by_dimension(complex_)
    rows = fbd.get(k - 1, [])
    cols = fbd.get(k, [])
    row_index = {face: i for i, face in enumerate(rows)}
    entries: dict[tuple[int, int], int] = {}
    for j, face in enumerate(cols):
        for pos in range(len(face)):
            sub = face[:pos] + face[pos + 1 :]
            entries[(row_index[sub], j)] = -1 if pos % 2 else 1
    return BoundaryMatrix(k, rows, cols, entries)


def matrix_rank(mat: list[list[int]]) -> int:
    """Exact rank of an integer matrix by fraction-free elimination."""
    work = [row[:] for row in mat]
    nrows = len(work)
    ncols = len(work[0]) if work else 0
    rank = 0
    prev = 1
    for col in range(ncols):
        pivot_row = next((i for i in range(rank, nrows) if work[i][col]), None)
        if pivot_row is None:
            continue
        work[rank], work[pivot_row] = work[pivot_row], work[rank]
        pivot = work[rank][col]
        top = work[rank]
        for i in range(rank + 1, nrows):
            row = work[i]
            factor = row[col]
            for j in range(col + 1, ncols):
                num = pivot * row[j] - factor * top[j]
                q, r = divmod(num, prev)
                if r:
                    raise ArithmeticError("fraction-free elimination lost exactness")
                row[j] = q
            row[col] = 0
        prev = pivot
        rank += 1
        if rank == nrows:
            break
    return rank


def reduced_betti(complex_: AbstractComplex) -> tuple[int, ...]:
    """Reduced Betti numbers (b_0, ..., b_dim) over the rationals."""
    fbd = faces_by_dimension(complex_)
    if not fbd:
        return ()
    dim = max(fbd)
    if dim < 0:
        return ()
    ranks = [matrix_rank(boundary_matrix(complex_, k).dense()) for k in range(dim + 1)]
    ranks.append(0)  # no chains above the top dimension
    return tuple(len(fbd[k]) - ranks[k] - ranks[k + 1] for k in range(dim + 1))
