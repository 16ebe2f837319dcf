"""
2n x 2n matrices over an exact ring, rows and columns indexed by the signed
labels 1, 2, ..., n, -n, ..., -1 in that display order.
"""
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple

from ..exceptions import LaurentRankError, NegativeExponentError, RankMismatchError, RingMismatchError
from .elimination import bareiss_rank
from .scalars import Laurent, Ring, Scalar, format_scalar


def signed_indices(n: int) -> List[int]:
    """Display order 1..n, -n..-1"""
    return list(range(1, n + 1)) + list(range(-n, 0))


def position(index: int, n: int) -> int:
    if index == 0 or abs(index) > n:
        raise IndexError(f"Signed index {index} out of range for n={n}")
    return index - 1 if index > 0 else index + 2 * n


def index_at(pos: int, n: int) -> int:
    if not 0 <= pos < 2 * n:
        raise IndexError(f"Display position {pos} out of range for n={n}")
    return pos + 1 if pos < n else pos - 2 * n


class IndexedMatrix:
    __slots__ = ("n", "ring", "_rows")

    def __init__(self, n: int, rows: Sequence[Sequence], ring: Ring = Ring.RATIONAL):
        size = 2 * n
        if len(rows) != size or any(len(r) != size for r in rows):
            raise ValueError(f"Expected a {size}x{size} grid for n={n}")
        self.n = n
        self.ring = ring
        self._rows: Tuple[Tuple[Scalar, ...], ...] = tuple(
            tuple(ring.coerce(v) for v in row) for row in rows
        )

    # constructors

    @classmethod
    def zero(cls, n: int, ring: Ring = Ring.RATIONAL) -> "IndexedMatrix":
        z = ring.zero()
        return cls(n, [[z] * (2 * n) for _ in range(2 * n)], ring)

    @classmethod
    def identity(cls, n: int, ring: Ring = Ring.RATIONAL) -> "IndexedMatrix":
        return cls.from_entries(n, {(i, i): 1 for i in signed_indices(n)}, ring)

    @classmethod
    def from_entries(cls, n: int, entries: Dict[Tuple[int, int], object],
                     ring: Ring = Ring.RATIONAL) -> "IndexedMatrix":
        """Sparse constructor keyed by signed (row, column) labels"""
        grid = [[ring.zero()] * (2 * n) for _ in range(2 * n)]
        for (i, j), value in entries.items():
            grid[position(i, n)][position(j, n)] = ring.coerce(value)
        return cls(n, grid, ring)

    @classmethod
    def diagonal(cls, n: int, values: Dict[int, object], ring: Ring = Ring.RATIONAL) -> "IndexedMatrix":
        entries = {(i, i): values.get(i, 1) for i in signed_indices(n)}
        return cls.from_entries(n, entries, ring)

    # access

    def __getitem__(self, key: Tuple[int, int]) -> Scalar:
        i, j = key
        return self._rows[position(i, self.n)][position(j, self.n)]

    def at(self, row_pos: int, col_pos: int) -> Scalar:
        return self._rows[row_pos][col_pos]

    @property
    def rows(self) -> Tuple[Tuple[Scalar, ...], ...]:
        return self._rows

    @property
    def size(self) -> int:
        return 2 * self.n

    def nonzero_entries(self) -> Iterator[Tuple[Tuple[int, int], Scalar]]:
        for p, row in enumerate(self._rows):
            for q, value in enumerate(row):
                if value:
                    yield (index_at(p, self.n), index_at(q, self.n)), value

    def is_zero(self) -> bool:
        return not any(v for row in self._rows for v in row)

    def map(self, fn: Callable[[Scalar], object], ring: Optional[Ring] = None) -> "IndexedMatrix":
        return IndexedMatrix(self.n, [[fn(v) for v in row] for row in self._rows], ring or self.ring)

    def to_laurent(self) -> "IndexedMatrix":
        if self.ring is Ring.LAURENT:
            return self
        return IndexedMatrix(self.n, self._rows, Ring.LAURENT)

    # arithmetic

    def _check(self, other: "IndexedMatrix") -> None:
        if not isinstance(other, IndexedMatrix):
            raise TypeError(f"Expected IndexedMatrix, got {type(other).__name__}")
        if self.n != other.n:
            raise RankMismatchError(f"n={self.n} vs n={other.n}")
        if self.ring is not other.ring:
            raise RingMismatchError(f"{self.ring.value} vs {other.ring.value}")

    def __add__(self, other: "IndexedMatrix") -> "IndexedMatrix":
        self._check(other)
        return IndexedMatrix(self.n, [[a + b for a, b in zip(r1, r2)]
                                      for r1, r2 in zip(self._rows, other._rows)], self.ring)

    def __sub__(self, other: "IndexedMatrix") -> "IndexedMatrix":
        self._check(other)
        return IndexedMatrix(self.n, [[a - b for a, b in zip(r1, r2)]
                                      for r1, r2 in zip(self._rows, other._rows)], self.ring)

    def __neg__(self) -> "IndexedMatrix":
        return self.map(lambda v: -v)

    def scale(self, c) -> "IndexedMatrix":
        c = self.ring.coerce(c)
        return self.map(lambda v: c * v)

    def __matmul__(self, other: "IndexedMatrix") -> "IndexedMatrix":
        self._check(other)
        size = self.size
        zero = self.ring.zero()
        out = [[zero] * size for _ in range(size)]
        # skip zero entries on the left; most of our matrices are sparse
        for p, row in enumerate(self._rows):
            acc = out[p]
            for k, a in enumerate(row):
                if not a:
                    continue
                for q, b in enumerate(other._rows[k]):
                    if b:
                        acc[q] = acc[q] + a * b
        return IndexedMatrix(self.n, out, self.ring)

    def transpose(self) -> "IndexedMatrix":
        return IndexedMatrix(self.n, list(zip(*self._rows)), self.ring)

    def __eq__(self, other) -> bool:
        if not isinstance(other, IndexedMatrix):
            return NotImplemented
        return self.n == other.n and self._rows == other._rows

    def __hash__(self) -> int:
        return hash((self.n, self._rows))

    # shape predicates in display order

    def is_upper_triangular(self) -> bool:
        return all(not self._rows[p][q] for p in range(self.size) for q in range(p))

    def is_strictly_lower(self) -> bool:
        return all(not self._rows[p][q] for p in range(self.size) for q in range(p, self.size))

    def is_diagonal(self) -> bool:
        return all(not self._rows[p][q] for p in range(self.size) for q in range(self.size) if p != q)

    # rendering

    def to_json(self, var: str = "s") -> List[List[str]]:
        return [[format_scalar(v, var) for v in row] for row in self._rows]

    def to_text(self, var: str = "s") -> str:
        labels = [str(i) for i in signed_indices(self.n)]
        cells = self.to_json(var)
        width = max(len(x) for x in labels + [c for row in cells for c in row])
        lines = [" " * (width + 1) + " ".join(l.rjust(width) for l in labels)]
        for label, row in zip(labels, cells):
            lines.append(label.rjust(width) + " " + " ".join(c.rjust(width) for c in row))
        return "\n".join(lines)

    def __repr__(self) -> str:
        return f"IndexedMatrix(n={self.n}, ring={self.ring.name})\n{self.to_text()}"


def mat_mul(a: IndexedMatrix, b: IndexedMatrix) -> IndexedMatrix:
    return a @ b


def mat_add(a: IndexedMatrix, b: IndexedMatrix) -> IndexedMatrix:
    return a + b


def transpose(a: IndexedMatrix) -> IndexedMatrix:
    return a.transpose()


def lower_projection(a: IndexedMatrix) -> IndexedMatrix:
    """A_low: keep entries strictly below the diagonal in display order"""
    zero = a.ring.zero()
    return IndexedMatrix(a.n, [[v if q < p else zero for q, v in enumerate(row)]
                               for p, row in enumerate(a.rows)], a.ring)


def rank(a: IndexedMatrix) -> int:
    if a.ring is not Ring.RATIONAL:
        raise LaurentRankError("Evaluate or specialise a Laurent matrix before taking its rank")
    return bareiss_rank(a.rows)


def submatrix_rank(a: IndexedMatrix, row_from: int, col_to: int) -> int:
    """Rank of rows row_from..-1 and columns 1..col_to (signed labels)"""
    if a.ring is not Ring.RATIONAL:
        raise LaurentRankError("pi-ranks need rational entries")
    p = position(row_from, a.n)
    q = position(col_to, a.n)
    return bareiss_rank([row[: q + 1] for row in a.rows[p:]])


def symplectic_form(n: int, ring: Ring = Ring.RATIONAL) -> IndexedMatrix:
    """J = [[0, s], [-s, 0]] with s the antidiagonal ones; J[i,-i] = 1, J[-i,i] = -1"""
    entries: Dict[Tuple[int, int], object] = {}
    for i in range(1, n + 1):
        entries[(i, -i)] = 1
        entries[(-i, i)] = -1
    return IndexedMatrix.from_entries(n, entries, ring)


def is_symplectic_group(g: IndexedMatrix) -> bool:
    j = symplectic_form(g.n, g.ring)
    return g.transpose() @ j @ g == j


def is_symplectic_algebra(x: IndexedMatrix) -> bool:
    j = symplectic_form(x.n, x.ring)
    return (x.transpose() @ j + j @ x).is_zero()


def laurent_limit_at_zero(a: IndexedMatrix) -> IndexedMatrix:
    """Entrywise constant terms; raises when some entry diverges at 0"""
    if a.ring is Ring.RATIONAL:
        return a
    worst: Optional[Tuple[Tuple[int, int], int]] = None
    for (i, j), value in a.nonzero_entries():
        low = value.valuation()
        if low < 0 and (worst is None or low < worst[1]):
            worst = ((i, j), low)
    if worst is not None:
        raise NegativeExponentError(*worst)
    return a.map(lambda v: v.constant_term(), Ring.RATIONAL)
