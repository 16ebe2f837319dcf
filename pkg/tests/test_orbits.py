import itertools
import random
from fractions import Fraction

import pytest

from src.coxeter.signed_permutation import Involution, enumerate_involutions, identity, length, reflection
from src.exceptions import BOrbitError, IndexOrderError, RingMismatchError
from src.linalg.matrix import IndexedMatrix, is_symplectic_algebra, is_symplectic_group
from src.linalg.scalars import Laurent, Ring
from src.orbits.chevalley import (
    GroupElement,
    chevalley_h,
    chevalley_w,
    chevalley_x,
    dual_action,
    random_borel,
    random_unipotent,
)
from src.orbits.degeneration import all_case5_triples, case5_curve, case5_expected, verify_case5
from src.orbits.functional import Functional, basis_element, f_of, f_sigma, random_functional
from src.orbits.geometry import (
    lower_positions,
    orbit_dimension,
    pi_rank,
    rank_profile,
    rescale_to,
    rescaling_generator,
    rescaling_step_holds,
    tangent_matrix,
    unipotent_orbit_dimension,
)
from src.rank_order.rooks import rank_matrix_of
from src.roots.root_system import RootC, positive_roots
from src.roots.support import support

S = Laurent.variable()


@pytest.fixture
def rng():
    return random.Random(20240611)


def test_basis_element_examples():
    assert dict(basis_element(RootC.long(1), 1).nonzero_entries()) == {(1, -1): 1}
    assert dict(basis_element(RootC.diff(1, 2), 2).nonzero_entries()) == {(1, 2): 1, (-2, -1): -1}
    assert dict(basis_element(RootC.sum(1, 2), 2).nonzero_entries()) == {(1, -2): 1, (2, -1): 1}


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_basis_elements_are_nilpotent_and_symplectic(n):
    for alpha in positive_roots(n):
        e = basis_element(alpha, n)
        assert (e @ e).is_zero()
        assert is_symplectic_algebra(e)
        assert is_symplectic_algebra(e.transpose())
        assert e.is_upper_triangular()


def test_f_of_examples():
    assert f_of([], 2) == Functional.zero(2)
    single = f_of([RootC.long(1)], 1)
    assert dict(single.matrix.nonzero_entries()) == {(-1, 1): 1}


def test_f_of_figure_support():
    """Nonzero entries sit on the strictly lower rooks of the n = 4 figure"""
    f = f_of([RootC.diff(1, 4), RootC.long(2)], 4)
    assert dict(f.matrix.nonzero_entries()) == {(4, 1): 1, (-1, -4): -1, (-2, 2): 1}
    assert f.coefficients() == {RootC.diff(1, 4): 1, RootC.long(2): 1}
    assert is_symplectic_algebra(f.matrix.transpose())


def test_f_of_rejects_bad_input():
    with pytest.raises(BOrbitError):
        f_of([RootC.long(1)], 1, xi={RootC.long(1): 0})
    with pytest.raises(BOrbitError):
        f_of([RootC.long(3)], 2)
    with pytest.raises(BOrbitError):
        f_of([RootC.diff(1, 2), RootC.diff(2, 3)], 3)


def test_functional_validation():
    f = f_of([RootC.sum(1, 3), RootC.long(2)], 3, xi={RootC.sum(1, 3): 2, RootC.long(2): -1})
    assert Functional(f.matrix) == f
    assert f.coefficient(RootC.sum(1, 3)) == 2
    with pytest.raises(BOrbitError):
        Functional(IndexedMatrix.from_entries(1, {(1, -1): 1}))
    with pytest.raises(BOrbitError):
        # strictly lower but not of the form sum c_alpha e_alpha^t
        Functional(IndexedMatrix.from_entries(2, {(2, 1): 1}))


def test_chevalley_x_identity_and_inverse():
    for alpha in positive_roots(2):
        assert chevalley_x(alpha, 0, 2) == GroupElement.identity(2)
        x = chevalley_x(alpha, Fraction(3, 2), 2)
        assert (x * chevalley_x(alpha, Fraction(-3, 2), 2)) == GroupElement.identity(2)
        assert is_symplectic_group(x.g)


def test_chevalley_h_long_root_over_laurent():
    h = chevalley_h(RootC.long(1), S, 1, Ring.LAURENT)
    assert h.g[(1, 1)] == S
    assert h.g[(-1, -1)] == S.inverse()
    assert h.g.is_diagonal()


def test_chevalley_h_is_multiplicative():
    alpha = RootC.diff(1, 2)
    assert chevalley_h(alpha, 2, 2) * chevalley_h(alpha, 3, 2) == chevalley_h(alpha, 6, 2)
    h = chevalley_h(alpha, 2, 2)
    assert h.inverse() == chevalley_h(alpha, Fraction(1, 2), 2)


def test_chevalley_w_is_symplectic():
    for alpha in positive_roots(2):
        w = chevalley_w(alpha, 2, 2)
        assert is_symplectic_group(w.g)
        assert not w.in_borel()


def test_group_element_checks_inverse():
    with pytest.raises(BOrbitError):
        GroupElement(IndexedMatrix.diagonal(1, {1: 2, -1: Fraction(1, 2)}), IndexedMatrix.identity(1))


def test_dual_action_identity_and_ring(rng):
    lam = random_functional(3, rng)
    assert dual_action(GroupElement.identity(3), lam) == lam
    with pytest.raises(RingMismatchError):
        dual_action(GroupElement.identity(3), lam.to_laurent())


def test_action_axiom(rng):
    """(gh).lambda = g.(h.lambda) and the image is again a functional"""
    for _ in range(10):
        g, h = random_borel(2, rng), random_borel(2, rng)
        lam = random_functional(2, rng)
        assert g.in_borel() and is_symplectic_group(g.g)
        assert dual_action(g * h, lam) == dual_action(g, dual_action(h, lam))
        Functional(dual_action(g, lam).matrix)


def test_action_axiom_over_laurent(rng):
    g = chevalley_x(RootC.diff(1, 2), S, 2, Ring.LAURENT) * chevalley_h(RootC.long(2), S, 2, Ring.LAURENT)
    h = chevalley_x(RootC.sum(1, 2), S * S - 1, 2, Ring.LAURENT) * chevalley_h(RootC.long(1), 2 * S, 2, Ring.LAURENT)
    assert g.ring is Ring.LAURENT and g.in_borel()
    for _ in range(5):
        lam = random_functional(2, rng).to_laurent()
        assert dual_action(g * h, lam) == dual_action(g, dual_action(h, lam))
    assert dual_action(GroupElement.identity(2, Ring.LAURENT), lam) == lam


def test_case5_instance():
    curve = case5_curve(1, 2, 3, 3)
    assert support(curve.sigma).roots == {RootC.sum(1, 3), RootC.long(2)}
    assert support(curve.tau).roots == {RootC.long(1), RootC.sum(2, 3)}
    assert curve.sigma == Involution(3, (-3, -2, -1))
    assert curve.assemble().in_borel()


def test_case5_coefficient_table():
    report = verify_case5(1, 2, 3, 3)
    assert report.limit_ok and report.table_ok
    assert report.coefficients == {
        RootC.sum(1, 3): 1,
        RootC.long(2): 1,
        RootC.sum(1, 2): -S,
        RootC.long(1): S * S,
    }
    assert RootC.sum(2, 3) not in report.coefficients


@pytest.mark.parametrize("n", [3, 4])
def test_case5_all_triples(n):
    for i, k, j in all_case5_triples(n):
        report = verify_case5(i, k, j, n)
        assert report.ok, report.to_json()
        assert report.coefficients == case5_expected(i, k, j, n)


def test_case5_index_order():
    with pytest.raises(IndexOrderError):
        case5_curve(2, 1, 3, 3)
    with pytest.raises(IndexOrderError):
        case5_curve(1, 2, 4, 3)


def test_pi_rank_of_zero():
    zero = Functional.zero(2)
    assert all(pi_rank(zero, i, j) == 0 for i, j in lower_positions(2))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_pi_ranks_match_rstar(n):
    """rk pi_ij(f_sigma) is the R* entry for every involution"""
    for sigma in enumerate_involutions(n):
        rm = rank_matrix_of(sigma)
        assert rank_profile(f_sigma(sigma)) == {(i, j): rm.star_entry(i, j) for i, j in lower_positions(n)}


def test_pi_ranks_are_unipotent_invariant(rng):
    n = 3
    samples = [random_unipotent(n, rng) for _ in range(5)]
    for sigma in enumerate_involutions(n):
        f = f_sigma(sigma)
        expected = rank_profile(f)
        assert all(rank_profile(dual_action(u, f)) == expected for u in samples)


def test_orbit_dimension_examples():
    assert orbit_dimension(identity(3)) == 0
    for n in (1, 2, 3):
        assert orbit_dimension(reflection(RootC.long(n), n)) == 1
    r = reflection(RootC.long(1), 2)
    assert orbit_dimension(r) == 3
    assert unipotent_orbit_dimension(r) == 2
    assert len(tangent_matrix(r)) == 2 * 2 + 2


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_dimension_equals_length(n):
    for sigma in enumerate_involutions(n):
        assert orbit_dimension(sigma) == length(sigma)
        assert unipotent_orbit_dimension(sigma) == length(sigma) - len(support(sigma))


def test_rescaling_generator():
    assert rescaling_generator(RootC.diff(1, 3)) == (RootC.long(1), S.inverse())
    assert rescaling_generator(RootC.long(2)) == (RootC.long(2), S.inverse())


@pytest.mark.parametrize("n", [1, 2, 3])
def test_rescaling_reaches_every_xi(n):
    for sigma in enumerate_involutions(n):
        roots = sorted(support(sigma).roots)
        for values in itertools.product((1, 2, -1), repeat=len(roots)):
            xi = dict(zip(roots, values))
            assert rescale_to(roots, xi, n) == f_of(roots, n, xi)


def test_rescaling_single_step():
    roots = [RootC.sum(1, 3), RootC.long(2)]
    xi = {RootC.sum(1, 3): 2, RootC.long(2): -1}
    assert all(rescaling_step_holds(roots, xi, alpha, 3) for alpha in roots)
