"""
Positive roots of C_n: e_i - e_j, e_i + e_j (i < j) and 2e_i
"""
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Optional

from ..exceptions import NonOrthogonalError, UnsupportedRootSystemError

DIFF = "diff"
SUM = "sum"
LONG = "long"

_KIND_ORDER = {DIFF: 0, SUM: 1, LONG: 2}
_ROOT_PATTERN = re.compile(r"^\s*(?:e(\d+)([+-])e(\d+)|2e(\d+))\s*$")


@dataclass(frozen=True, order=False)
class RootC:
    kind: str
    i: int
    j: Optional[int] = None

    def __post_init__(self):
        if self.kind not in _KIND_ORDER:
            raise ValueError(f"Unknown root kind: {self.kind}")
        if self.i < 1:
            raise ValueError(f"Root index must be positive, got {self.i}")
        if self.kind == LONG:
            if self.j is not None:
                raise ValueError("Long roots 2e_i carry a single index")
        elif self.j is None or not self.i < self.j:
            raise ValueError(f"Need i < j for {self.kind} roots, got ({self.i}, {self.j})")

    @classmethod
    def diff(cls, i: int, j: int) -> "RootC":
        return cls(DIFF, i, j)

    @classmethod
    def sum(cls, i: int, j: int) -> "RootC":
        return cls(SUM, i, j)

    @classmethod
    def long(cls, i: int) -> "RootC":
        return cls(LONG, i)

    @property
    def is_long(self) -> bool:
        return self.kind == LONG

    def max_index(self) -> int:
        return self.i if self.j is None else self.j

    def coordinates(self) -> Dict[int, int]:
        """epsilon-coordinates, materialised only on demand"""
        if self.kind == LONG:
            return {self.i: 2}
        return {self.i: 1, self.j: -1 if self.kind == DIFF else 1}

    def sort_key(self):
        return (self.i, _KIND_ORDER[self.kind], self.j or 0)

    def __lt__(self, other: "RootC") -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        if self.kind == LONG:
            return f"2e{self.i}"
        op = "-" if self.kind == DIFF else "+"
        return f"e{self.i}{op}e{self.j}"


def parse_root(text: str) -> RootC:
    """'e1-e2', 'e1+e2' or '2e3'"""
    match = _ROOT_PATTERN.match(text)
    if not match:
        raise ValueError(f"Cannot parse root: {text!r}")
    if match.group(4):
        return RootC.long(int(match.group(4)))
    i, op, j = int(match.group(1)), match.group(2), int(match.group(3))
    return RootC.diff(i, j) if op == "-" else RootC.sum(i, j)


def positive_roots(n: int, root_type: str = "C") -> List[RootC]:
    if root_type not in ("A", "C"):
        # no canonical support exists e.g. for D_n, so refuse rather than guess
        raise UnsupportedRootSystemError(f"Root system {root_type}_{n} is not supported")
    roots = [RootC.diff(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    if root_type == "C":
        roots += [RootC.sum(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
        roots += [RootC.long(i) for i in range(1, n + 1)]
    return sorted(roots)


def inner(alpha: RootC, beta: RootC) -> Fraction:
    a, b = alpha.coordinates(), beta.coordinates()
    return Fraction(sum(a[k] * b[k] for k in a if k in b))


def is_orthogonal(roots: Iterable[RootC]) -> bool:
    roots = list(roots)
    return all(inner(a, b) == 0 for x, a in enumerate(roots) for b in roots[x + 1:])


def check_orthogonal(roots: Iterable[RootC]) -> None:
    roots = list(roots)
    for x, a in enumerate(roots):
        for b in roots[x + 1:]:
            if inner(a, b) != 0:
                raise NonOrthogonalError(f"{a} and {b} are not orthogonal")


def is_positive_root(vector: Dict[int, int]) -> bool:
    """Whether an epsilon-coordinate vector is a root of C_n^+"""
    support = {k: v for k, v in vector.items() if v != 0}
    if len(support) == 1:
        (_, v), = support.items()
        return v == 2
    if len(support) == 2:
        (i, a), (j, b) = sorted(support.items())
        return a == 1 and b in (1, -1)
    return False


def difference_is_root(alpha: RootC, beta: RootC) -> bool:
    a, b = alpha.coordinates(), beta.coordinates()
    keys = set(a) | set(b)
    return is_positive_root({k: a.get(k, 0) - b.get(k, 0) for k in keys})
