"""
Chevalley generators of the Borel subgroup B of Sp_2n and the dual action
g.lambda = (g lambda g^-1)_low on n*.
"""
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ..exceptions import BOrbitError, NilpotencyError, RingMismatchError
from ..linalg.matrix import IndexedMatrix, lower_projection
from ..linalg.scalars import Ring
from ..roots.root_system import RootC, positive_roots
from .functional import Functional, basis_element

UNIPOTENT_VALUES = (Fraction(-2), Fraction(-1), Fraction(-1, 2), Fraction(0),
                    Fraction(1, 2), Fraction(1), Fraction(2), Fraction(3))
TORUS_VALUES = (Fraction(-2), Fraction(-1), Fraction(1, 3), Fraction(1, 2), Fraction(2), Fraction(3))


@dataclass(frozen=True)
class GroupElement:
    """g together with its exact inverse, kept factor by factor"""
    g: IndexedMatrix
    g_inv: IndexedMatrix

    def __post_init__(self):
        if self.g.ring is not self.g_inv.ring:
            raise RingMismatchError("g and g^-1 live over different rings")
        if self.g @ self.g_inv != IndexedMatrix.identity(self.g.n, self.g.ring):
            raise BOrbitError("g * g_inv is not the identity")

    @property
    def n(self) -> int:
        return self.g.n

    @property
    def ring(self) -> Ring:
        return self.g.ring

    @classmethod
    def identity(cls, n: int, ring: Ring = Ring.RATIONAL) -> "GroupElement":
        one = IndexedMatrix.identity(n, ring)
        return cls(one, one)

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        return GroupElement(self.g @ other.g, other.g_inv @ self.g_inv)

    def inverse(self) -> "GroupElement":
        return GroupElement(self.g_inv, self.g)

    def in_borel(self) -> bool:
        return self.g.is_upper_triangular() and self.g_inv.is_upper_triangular()


def product(elements: Sequence[GroupElement], n: int, ring: Ring = Ring.RATIONAL) -> GroupElement:
    result = GroupElement.identity(n, ring)
    for element in elements:
        result = result * element
    return result


def _nilpotent_basis(alpha: RootC, n: int, ring: Ring) -> IndexedMatrix:
    e = basis_element(alpha, n, ring)
    if not (e @ e).is_zero():
        raise NilpotencyError(f"e_{alpha} squared is nonzero; 1 + c*e is not the exponential")
    return e


def _x_matrix(alpha: RootC, c, n: int, ring: Ring) -> IndexedMatrix:
    return IndexedMatrix.identity(n, ring) + _nilpotent_basis(alpha, n, ring).scale(c)


def chevalley_x(alpha: RootC, c, n: int, ring: Ring = Ring.RATIONAL) -> GroupElement:
    """x_alpha(c) = exp(c e_alpha) = 1 + c e_alpha, inverse x_alpha(-c)"""
    c = ring.coerce(c)
    return GroupElement(_x_matrix(alpha, c, n, ring), _x_matrix(alpha, -c, n, ring))


def _w_matrix(alpha: RootC, c, n: int, ring: Ring) -> IndexedMatrix:
    """w_alpha(c) = x_alpha(c) x_{-alpha}(-1/c) x_alpha(c), with x_{-alpha}(t) = x_alpha(t)^t"""
    x = _x_matrix(alpha, c, n, ring)
    x_neg = _x_matrix(alpha, -ring.invert(c), n, ring).transpose()
    return x @ x_neg @ x


def chevalley_w(alpha: RootC, c, n: int, ring: Ring = Ring.RATIONAL) -> GroupElement:
    c = ring.coerce(c)
    # w(c)^-1 = x(-c) x_-(1/c) x(-c)
    inv = _w_matrix(alpha, -c, n, ring)
    return GroupElement(_w_matrix(alpha, c, n, ring), inv)


def _h_matrix(alpha: RootC, c, n: int, ring: Ring) -> IndexedMatrix:
    w_one_inv = _w_matrix(alpha, ring.coerce(-1), n, ring)
    h = _w_matrix(alpha, c, n, ring) @ w_one_inv
    if not h.is_diagonal():
        raise BOrbitError(f"h_{alpha}({c}) came out non-diagonal")
    return h


def chevalley_h(alpha: RootC, c, n: int, ring: Ring = Ring.RATIONAL) -> GroupElement:
    """h_alpha(c) = w_alpha(c) w_alpha(1)^-1, inverse h_alpha(1/c)"""
    c = ring.coerce(c)
    c_inv = ring.invert(c)
    return GroupElement(_h_matrix(alpha, c, n, ring), _h_matrix(alpha, c_inv, n, ring))


def dual_action(g: GroupElement, lam: Functional) -> Functional:
    if g.ring is not lam.ring:
        raise RingMismatchError(f"Group element over {g.ring.value}, functional over {lam.ring.value}")
    return Functional(lower_projection(g.g @ lam.matrix @ g.g_inv), validate=False)


def random_unipotent(n: int, rng: random.Random, values: Sequence[Fraction] = UNIPOTENT_VALUES) -> GroupElement:
    """Product of x_alpha(c) over a shuffled copy of Phi+; lies in U by construction"""
    roots = positive_roots(n, "C")
    rng.shuffle(roots)
    return product([chevalley_x(alpha, rng.choice(values), n) for alpha in roots], n)


def random_torus(n: int, rng: random.Random, values: Sequence[Fraction] = TORUS_VALUES) -> GroupElement:
    return product([chevalley_h(RootC.long(i), rng.choice(values), n) for i in range(1, n + 1)], n)


def random_borel(n: int, rng: random.Random) -> GroupElement:
    return random_unipotent(n, rng) * random_torus(n, rng)
