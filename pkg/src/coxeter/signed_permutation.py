"""
Signed permutations (the hyperoctahedral group W(C_n)) and plain
permutations of S_n for the type-A recap.

Only the positive window w(1..n) is stored; w(-i) = -w(i) is rebuilt on
demand so the symmetry cannot be broken.
"""
import itertools
import re
from dataclasses import dataclass
from typing import Iterator, List, Sequence, Tuple

from ..exceptions import BoundExceededError, NotAnInvolutionError, RankMismatchError
from ..roots.root_system import DIFF, LONG, RootC

DEFAULT_MAX_N = 6

_WINDOW_PATTERN = re.compile(r"^\s*\[\s*(-?\d+(?:\s*,\s*-?\d+)*)?\s*\]\s*$")


def display_position(value: int, n: int) -> int:
    """Position of a signed letter in 1 < 2 < ... < n < -n < ... < -1"""
    return value - 1 if value > 0 else value + 2 * n


@dataclass(frozen=True, eq=False)
class SignedPermutation:
    n: int
    images: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(int(x) for x in self.images))
        if self.n < 1 or len(self.images) != self.n:
            raise ValueError(f"Need exactly n={self.n} images, got {list(self.images)}")
        if sorted(abs(x) for x in self.images) != list(range(1, self.n + 1)):
            raise ValueError(f"Not a signed permutation of 1..{self.n}: {list(self.images)}")

    def __call__(self, i: int) -> int:
        if i == 0 or abs(i) > self.n:
            raise IndexError(f"{i} is not in 1..{self.n} or -{self.n}..-1")
        image = self.images[abs(i) - 1]
        return image if i > 0 else -image

    def __eq__(self, other) -> bool:
        if not isinstance(other, SignedPermutation):
            return NotImplemented
        return self.n == other.n and self.images == other.images

    def __hash__(self) -> int:
        return hash((self.n, self.images))

    def __mul__(self, other: "SignedPermutation") -> "SignedPermutation":
        return compose(self, other)

    def inverse(self) -> "SignedPermutation":
        images = [0] * self.n
        for i, w in enumerate(self.images, start=1):
            images[abs(w) - 1] = i if w > 0 else -i
        return SignedPermutation(self.n, tuple(images))

    def is_identity(self) -> bool:
        return self.images == tuple(range(1, self.n + 1))

    def is_involution(self) -> bool:
        return compose(self, self).is_identity()

    def full_images(self) -> List[int]:
        """sigma'(i) for every signed i, in display order"""
        return [self(i) for i in list(range(1, self.n + 1)) + list(range(-self.n, 0))]

    def window(self) -> str:
        return "[" + ",".join(str(x) for x in self.images) + "]"

    def to_json(self) -> dict:
        return {"n": self.n, "images": list(self.images)}

    @classmethod
    def from_json(cls, data: dict) -> "SignedPermutation":
        return cls(int(data["n"]), tuple(data["images"]))

    def __str__(self) -> str:
        return self.window()

    def __repr__(self) -> str:
        return f"SignedPermutation({self.window()})"


class Involution(SignedPermutation):
    """Signed permutation of order at most 2 (identity included)"""

    def __post_init__(self):
        super().__post_init__()
        if not compose(self, self).is_identity():
            raise NotAnInvolutionError(f"{self.window()} squared is not the identity")

    @classmethod
    def of(cls, w: SignedPermutation) -> "Involution":
        return cls(w.n, w.images)

    @property
    def perm(self) -> SignedPermutation:
        return SignedPermutation(self.n, self.images)

    def __repr__(self) -> str:
        return f"Involution({self.window()})"


def identity(n: int) -> SignedPermutation:
    return SignedPermutation(n, tuple(range(1, n + 1)))


def compose(u: SignedPermutation, w: SignedPermutation) -> SignedPermutation:
    """(u . w)(i) = u(w(i))"""
    if u.n != w.n:
        raise RankMismatchError(f"Cannot compose n={u.n} with n={w.n}")
    return SignedPermutation(u.n, tuple(u(x) for x in w.images))


def reflection(alpha: RootC, n: int) -> SignedPermutation:
    """r'_{e_i-e_j} = (i,j)(-i,-j), r'_{e_i+e_j} = (i,-j)(-i,j), r'_{2e_i} = (i,-i)"""
    if alpha.max_index() > n:
        raise RankMismatchError(f"Root {alpha} does not live in C_{n}")
    images = list(range(1, n + 1))
    i = alpha.i
    if alpha.kind == LONG:
        images[i - 1] = -i
    elif alpha.kind == DIFF:
        images[i - 1], images[alpha.j - 1] = alpha.j, i
    else:
        images[i - 1], images[alpha.j - 1] = -alpha.j, -i
    return SignedPermutation(n, tuple(images))


def fundamental_roots(n: int) -> List[RootC]:
    """e_1-e_2, ..., e_{n-1}-e_n, 2e_n"""
    return [RootC.diff(i, i + 1) for i in range(1, n)] + [RootC.long(n)]


def length(w: SignedPermutation) -> int:
    """Number of positive roots sent to negative roots.

    Comparisons use the display order 1 < ... < n < -n < ... < -1, which is
    the order matching the fundamental root 2e_n.
    """
    n = w.n
    pos = [display_position(x, n) for x in w.images]
    neg_pos = [display_position(-x, n) for x in w.images]
    inv = sum(1 for a in range(n) for b in range(a + 1, n) if pos[a] > pos[b])
    nsp = sum(1 for a in range(n) for b in range(a + 1, n) if pos[a] > neg_pos[b])
    neg = sum(1 for x in w.images if x < 0)
    return inv + nsp + neg


def parse_window(text: str) -> Tuple[int, ...]:
    """'[2,-1,3]' -> (2, -1, 3)"""
    match = _WINDOW_PATTERN.match(text)
    if not match or match.group(1) is None:
        raise ValueError(f"Not a window notation: {text!r}")
    return tuple(int(x) for x in match.group(1).split(","))


def check_bound(n: int, max_n: int) -> None:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if n > max_n:
        raise BoundExceededError(f"n={n} exceeds the configured bound max_n={max_n}")


def iter_group(n: int, max_n: int = DEFAULT_MAX_N) -> Iterator[SignedPermutation]:
    """All 2^n * n! signed permutations, in a fixed order"""
    check_bound(n, max_n)
    for perm in itertools.permutations(range(1, n + 1)):
        for signs in itertools.product((1, -1), repeat=n):
            yield SignedPermutation(n, tuple(s * x for s, x in zip(signs, perm)))


def enumerate_involutions(n: int, max_n: int = DEFAULT_MAX_N) -> List[Involution]:
    return sorted(
        (Involution.of(w) for w in iter_group(n, max_n) if w.is_involution()),
        key=lambda s: (length(s), s.window()),
    )


# --- type A -----------------------------------------------------------------

@dataclass(frozen=True)
class Permutation:
    """Element of S_n in one-line notation"""
    n: int
    images: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(int(x) for x in self.images))
        if sorted(self.images) != list(range(1, self.n + 1)):
            raise ValueError(f"Not a permutation of 1..{self.n}: {list(self.images)}")

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if self.n != other.n:
            raise RankMismatchError(f"Cannot compose n={self.n} with n={other.n}")
        return Permutation(self.n, tuple(self(x) for x in other.images))

    def inverse(self) -> "Permutation":
        images = [0] * self.n
        for i, w in enumerate(self.images, start=1):
            images[w - 1] = i
        return Permutation(self.n, tuple(images))

    def is_identity(self) -> bool:
        return self.images == tuple(range(1, self.n + 1))

    def is_involution(self) -> bool:
        return (self * self).is_identity()

    def length(self) -> int:
        return sum(1 for a in range(self.n) for b in range(a + 1, self.n)
                   if self.images[a] > self.images[b])

    def window(self) -> str:
        return "[" + ",".join(str(x) for x in self.images) + "]"

    def to_json(self) -> dict:
        return {"n": self.n, "images": list(self.images)}

    def __str__(self) -> str:
        return self.window()


def transposition(i: int, j: int, n: int) -> Permutation:
    images = list(range(1, n + 1))
    images[i - 1], images[j - 1] = j, i
    return Permutation(n, tuple(images))


def iter_symmetric_group(n: int, max_n: int = DEFAULT_MAX_N) -> Iterator[Permutation]:
    check_bound(n, max_n)
    for perm in itertools.permutations(range(1, n + 1)):
        yield Permutation(n, perm)


def enumerate_type_a_involutions(n: int, max_n: int = DEFAULT_MAX_N) -> List[Permutation]:
    return sorted((p for p in iter_symmetric_group(n, max_n) if p.is_involution()),
                  key=lambda p: (p.length(), p.window()))


def involution_from_cycles(n: int, cycles: Sequence[Tuple[int, int]]) -> Permutation:
    """Type-A involution from disjoint 2-cycles, e.g. [(1, 4), (3, 5)]"""
    images = list(range(1, n + 1))
    for i, j in cycles:
        images[i - 1], images[j - 1] = j, i
    return Permutation(n, tuple(images))
