"""
Elements of n* realised as strictly lower-triangular matrices via
e_alpha^* = e_alpha^t.
"""
import random
from fractions import Fraction
from typing import Dict, Iterable, Mapping, Optional, Sequence, Tuple

from ..coxeter.signed_permutation import SignedPermutation
from ..exceptions import BOrbitError, RankMismatchError
from ..linalg.matrix import IndexedMatrix
from ..linalg.scalars import Ring, Scalar, format_scalar
from ..roots.root_system import DIFF, LONG, RootC, check_orthogonal, positive_roots
from ..roots.support import support


def basis_element(alpha: RootC, n: int, ring: Ring = Ring.RATIONAL) -> IndexedMatrix:
    """e_{i,j} - e_{-j,-i} | e_{i,-j} + e_{j,-i} | e_{i,-i}"""
    if alpha.max_index() > n:
        raise RankMismatchError(f"Root {alpha} does not live in C_{n}")
    i, j = alpha.i, alpha.j
    if alpha.kind == LONG:
        entries = {(i, -i): 1}
    elif alpha.kind == DIFF:
        entries = {(i, j): 1, (-j, -i): -1}
    else:
        entries = {(i, -j): 1, (j, -i): 1}
    return IndexedMatrix.from_entries(n, entries, ring)


def coefficient_position(alpha: RootC) -> Tuple[int, int]:
    """Where the coefficient of e_alpha^* sits in the lower-triangular picture"""
    if alpha.kind == LONG:
        return (-alpha.i, alpha.i)
    if alpha.kind == DIFF:
        return (alpha.j, alpha.i)
    return (-alpha.j, alpha.i)


class Functional:
    """lambda = sum over Phi+ of c_alpha e_alpha^t"""

    def __init__(self, matrix: IndexedMatrix, validate: bool = True):
        self.matrix = matrix
        self.n = matrix.n
        if validate:
            self._validate()

    def _validate(self) -> None:
        if not self.matrix.is_strictly_lower():
            raise BOrbitError("A functional must be strictly lower-triangular in display order")
        rebuilt = self._from_coefficients(self.n, self.coefficients(), self.matrix.ring)
        if rebuilt != self.matrix:
            raise BOrbitError("Matrix is not a combination of the e_alpha^t")

    @property
    def ring(self) -> Ring:
        return self.matrix.ring

    @staticmethod
    def _from_coefficients(n: int, coefficients: Mapping[RootC, object], ring: Ring) -> IndexedMatrix:
        total = IndexedMatrix.zero(n, ring)
        for alpha, c in coefficients.items():
            if c:
                total = total + basis_element(alpha, n, ring).transpose().scale(c)
        return total

    @classmethod
    def from_coefficients(cls, n: int, coefficients: Mapping[RootC, object],
                          ring: Ring = Ring.RATIONAL) -> "Functional":
        return cls(cls._from_coefficients(n, coefficients, ring), validate=False)

    @classmethod
    def zero(cls, n: int, ring: Ring = Ring.RATIONAL) -> "Functional":
        return cls(IndexedMatrix.zero(n, ring), validate=False)

    def coefficients(self) -> Dict[RootC, Scalar]:
        """Nonzero coefficients only"""
        coeffs = {}
        for alpha in positive_roots(self.n, "C"):
            value = self.matrix[coefficient_position(alpha)]
            if value:
                coeffs[alpha] = value
        return coeffs

    def coefficient(self, alpha: RootC) -> Scalar:
        return self.matrix[coefficient_position(alpha)]

    def to_laurent(self) -> "Functional":
        return Functional(self.matrix.to_laurent(), validate=False)

    def coefficient_strings(self, var: str = "s") -> Dict[str, str]:
        return {str(alpha): format_scalar(c, var) for alpha, c in sorted(self.coefficients().items())}

    def __eq__(self, other) -> bool:
        if not isinstance(other, Functional):
            return NotImplemented
        return self.matrix == other.matrix

    def __hash__(self) -> int:
        return hash(self.matrix)

    def __repr__(self) -> str:
        return f"Functional({self.coefficient_strings()})"


def f_of(roots: Iterable[RootC], n: int, xi: Optional[Mapping[RootC, object]] = None,
         ring: Ring = Ring.RATIONAL) -> Functional:
    """f_{D,xi} = sum xi(alpha) e_alpha^*; xi defaults to all ones (f_D)"""
    roots = list(roots)
    check_orthogonal(roots)
    positive = set(positive_roots(n, "C"))
    coeffs = {}
    for alpha in roots:
        if alpha not in positive:
            raise BOrbitError(f"{alpha} is not a positive root of C_{n}")
        value = 1 if xi is None else xi[alpha]
        if not value:
            raise BOrbitError(f"xi({alpha}) must be nonzero")
        coeffs[alpha] = value
    return Functional.from_coefficients(n, coeffs, ring)


def f_sigma(sigma: SignedPermutation, ring: Ring = Ring.RATIONAL) -> Functional:
    return f_of(support(sigma).roots, sigma.n, ring=ring)


def random_functional(n: int, rng: random.Random,
                      values: Sequence[Fraction] = (Fraction(-2), Fraction(-1), Fraction(0),
                                                    Fraction(1, 2), Fraction(1), Fraction(3))) -> Functional:
    return Functional.from_coefficients(n, {alpha: rng.choice(values) for alpha in positive_roots(n, "C")})
