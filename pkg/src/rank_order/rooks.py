"""
Rook placements X_sigma and South-West rank matrices R and R*.

Type C boards are 2n x 2n in the display order 1..n, -n..-1; type A boards
are n x n with plain labels 1..n.
"""
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Tuple, Union

from ..coxeter.signed_permutation import Permutation, SignedPermutation
from ..linalg.elimination import bareiss_rank
from ..linalg.matrix import position, signed_indices

Element = Union[SignedPermutation, Permutation]
Grid = Tuple[Tuple[int, ...], ...]


@dataclass(frozen=True)
class RookPlacement:
    """0-1 matrix with exactly one rook per row and column"""
    size: int
    grid: Grid
    labels: Tuple[int, ...]

    def __post_init__(self):
        if len(self.grid) != self.size or any(len(row) != self.size for row in self.grid):
            raise ValueError(f"Grid is not {self.size}x{self.size}")
        if any(sum(row) != 1 for row in self.grid) or any(sum(col) != 1 for col in zip(*self.grid)):
            raise ValueError("A rook placement needs one rook in every row and column")

    def rooks(self) -> List[Tuple[int, int]]:
        """(row, column) labels of every rook, top to bottom"""
        return [(self.labels[p], self.labels[row.index(1)]) for p, row in enumerate(self.grid)]

    def is_centrally_symmetric(self) -> bool:
        return all(self.grid[p][q] == self.grid[self.size - 1 - p][self.size - 1 - q]
                   for p in range(self.size) for q in range(self.size))


@dataclass(frozen=True)
class RankMatrix:
    size: int
    R: Grid
    Rstar: Grid
    labels: Tuple[int, ...]

    def entry(self, i: int, j: int) -> int:
        return self.R[self.labels.index(i)][self.labels.index(j)]

    def star_entry(self, i: int, j: int) -> int:
        return self.Rstar[self.labels.index(i)][self.labels.index(j)]

    def is_monotone(self) -> bool:
        """Unit steps rightwards and upwards, never decreasing"""
        for p in range(self.size):
            for q in range(self.size):
                if q + 1 < self.size and self.R[p][q + 1] - self.R[p][q] not in (0, 1):
                    return False
                if p > 0 and self.R[p - 1][q] - self.R[p][q] not in (0, 1):
                    return False
        return True

    def to_text(self, star: bool = False) -> str:
        grid = self.Rstar if star else self.R
        labels = [str(x) for x in self.labels]
        width = max(len(x) for x in labels + [str(v) for row in grid for v in row])
        lines = [" " * (width + 1) + " ".join(l.rjust(width) for l in labels)]
        for label, row in zip(labels, grid):
            lines.append(label.rjust(width) + " " + " ".join(str(v).rjust(width) for v in row))
        return "\n".join(lines)


def rook_placement(sigma: Element) -> RookPlacement:
    """(X_sigma)_{i,j} = 1 iff sigma'(i) = j; any (signed) permutation is accepted"""
    if isinstance(sigma, Permutation):
        m = sigma.n
        labels = tuple(range(1, m + 1))
        grid = [[0] * m for _ in range(m)]
        for i in labels:
            grid[i - 1][sigma(i) - 1] = 1
    else:
        n = sigma.n
        m = 2 * n
        labels = tuple(signed_indices(n))
        grid = [[0] * m for _ in range(m)]
        for i in labels:
            grid[position(i, n)][position(sigma(i), n)] = 1
    return RookPlacement(m, tuple(tuple(row) for row in grid), labels)


def _sw_counts(grid: Grid) -> List[List[int]]:
    m = len(grid)
    counts = [[0] * m for _ in range(m)]
    for p in range(m - 1, -1, -1):
        for q in range(m):
            below = counts[p + 1][q] if p + 1 < m else 0
            left = counts[p][q - 1] if q > 0 else 0
            corner = counts[p + 1][q - 1] if p + 1 < m and q > 0 else 0
            counts[p][q] = grid[p][q] + below + left - corner
    return counts


def _submatrix_ranks(grid: Grid) -> List[List[int]]:
    m = len(grid)
    return [[bareiss_rank([row[: q + 1] for row in grid[p:]]) for q in range(m)] for p in range(m)]


def rank_matrix(placement: RookPlacement) -> RankMatrix:
    """R via ranks of the SW blocks, cross-checked against the rook count"""
    by_rank = _submatrix_ranks(placement.grid)
    by_count = _sw_counts(placement.grid)
    if by_rank != by_count:
        raise AssertionError("Rank and South-West rook count disagree; board indexing is broken")
    m = placement.size
    R = tuple(tuple(row) for row in by_rank)
    Rstar = tuple(tuple(R[p][q] if q < p else 0 for q in range(m)) for p in range(m))
    return RankMatrix(m, R, Rstar, placement.labels)


@lru_cache(maxsize=None)
def rank_matrix_of(sigma: Element) -> RankMatrix:
    return rank_matrix(rook_placement(sigma))
