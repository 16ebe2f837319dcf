"""
Rank invariants and dimensions of B-orbits in n*.

orbit_dimension linearises the action at f_sigma: the rank of
x -> ([x, f_sigma])_low over a basis of Lie(B) is dim B - dim Stab(f_sigma).
"""
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Tuple

from ..coxeter.signed_permutation import SignedPermutation
from ..exceptions import BOrbitError
from ..linalg.elimination import bareiss_rank
from ..linalg.matrix import IndexedMatrix, index_at, lower_projection, submatrix_rank
from ..linalg.scalars import Laurent, Ring
from ..roots.root_system import LONG, RootC, check_orthogonal, positive_roots
from .chevalley import GroupElement, chevalley_h, dual_action, product
from .functional import Functional, basis_element, f_of, f_sigma


def pi_rank(lam: Functional, i: int, j: int) -> int:
    """rk of the block with rows i..-1 and columns 1..j"""
    return submatrix_rank(lam.matrix, i, j)


def lower_positions(n: int) -> List[Tuple[int, int]]:
    """Signed (row, column) pairs strictly below the diagonal, row-major"""
    return [(index_at(p, n), index_at(q, n)) for p in range(2 * n) for q in range(p)]


def rank_profile(lam: Functional) -> Dict[Tuple[int, int], int]:
    return {(i, j): pi_rank(lam, i, j) for i, j in lower_positions(lam.n)}


def _torus_basis(n: int) -> List[IndexedMatrix]:
    return [IndexedMatrix.from_entries(n, {(i, i): 1, (-i, -i): -1}) for i in range(1, n + 1)]


def _tangent_rows(lam: Functional, basis: Iterable[IndexedMatrix]) -> List[List[Fraction]]:
    positions = lower_positions(lam.n)
    rows = []
    for x in basis:
        bracket = lower_projection(x @ lam.matrix - lam.matrix @ x)
        rows.append([bracket[pos] for pos in positions])
    return rows


def tangent_matrix(sigma: SignedPermutation) -> List[List[Fraction]]:
    """One row per Lie(B) basis vector: coordinates of [x, f_sigma]_low"""
    n = sigma.n
    basis = [basis_element(alpha, n) for alpha in positive_roots(n, "C")] + _torus_basis(n)
    return _tangent_rows(f_sigma(sigma), basis)


def orbit_dimension(sigma: SignedPermutation) -> int:
    return bareiss_rank(tangent_matrix(sigma))


def unipotent_orbit_dimension(sigma: SignedPermutation) -> int:
    """Same rank restricted to Lie(U)"""
    n = sigma.n
    basis = [basis_element(alpha, n) for alpha in positive_roots(n, "C")]
    return bareiss_rank(_tangent_rows(f_sigma(sigma), basis))


# --- rescaling --------------------------------------------------------------

def rescaling_generator(alpha: RootC) -> Tuple[RootC, Laurent]:
    """(alpha', s') with h_{alpha'}(s') multiplying the e_alpha^* coefficient by s.

    For 2e_i the parameter is t^-1 in the variable t with s = t^2.
    """
    return RootC.long(alpha.i), Laurent.variable().inverse()


def rescale_element(alpha: RootC, value, n: int) -> GroupElement:
    """h_{alpha'}(xi') over Q[t, 1/t]: 1/xi for short roots, 1/t for 2e_i"""
    target, param = rescaling_generator(alpha)
    if alpha.kind != LONG:
        param = Laurent.constant(1 / Fraction(value))
    return chevalley_h(target, param, n, Ring.LAURENT)


def rescale_to(roots: Iterable[RootC], xi: Mapping[RootC, object], n: int) -> Functional:
    """prod h_{alpha'}(xi(alpha)') . f_D, with t^2 specialised to xi(alpha) afterwards"""
    roots = sorted(roots)
    check_orthogonal(roots)
    indices = [alpha.i for alpha in roots]
    if len(set(indices)) != len(indices):
        raise BOrbitError("Rescaling needs roots with pairwise distinct first indices")
    g = product([rescale_element(alpha, xi[alpha], n) for alpha in roots], n, Ring.LAURENT)
    moved = dual_action(g, f_of(roots, n, ring=Ring.LAURENT))
    coefficients = {}
    for alpha, c in moved.coefficients().items():
        coefficients[alpha] = c.evaluate_in_square(xi[alpha]) if alpha.kind == LONG else c.constant_term()
    return Functional.from_coefficients(n, coefficients)


def rescaling_step_holds(roots: Iterable[RootC], xi: Mapping[RootC, object], alpha: RootC, n: int) -> bool:
    """h_{alpha'}(s').f_{D,xi} = sum_{beta != alpha} xi(beta) e_beta^* + s xi(alpha) e_alpha^*

    Checked symbolically; for long alpha the variable is t and s = t^2.
    """
    roots = list(roots)
    target, param = rescaling_generator(alpha)
    var = Laurent.variable()
    s = var * var if alpha.kind == LONG else var
    moved = dual_action(chevalley_h(target, param, n, Ring.LAURENT), f_of(roots, n, xi, Ring.LAURENT))
    expected = {beta: Laurent.constant(xi[beta]) for beta in roots}
    expected[alpha] = s * xi[alpha]
    return moved.coefficients() == expected
