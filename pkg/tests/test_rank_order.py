import itertools
import json

import networkx as nx
import pytest

from src.coxeter.bruhat import build_bruhat_poset
from src.coxeter.signed_permutation import (
    Involution,
    Permutation,
    enumerate_involutions,
    identity,
    involution_from_cycles,
    length,
)
from src.exceptions import RankMismatchError, UnknownFormatError
from src.rank_order.hasse import export_hasse, involution_poset, saturated_chain
from src.rank_order.orders import leq_R, leq_Rstar, pair_table, rstar_witness, verify_equivalences
from src.rank_order.rooks import RookPlacement, rank_matrix, rank_matrix_of, rook_placement


def test_identity_placement_n1():
    placement = rook_placement(identity(1))
    assert placement.grid == ((1, 0), (0, 1))
    rm = rank_matrix(placement)
    # rows 1, -1 and columns 1, -1 in display order
    assert rm.R == ((1, 2), (0, 1))
    assert rm.Rstar == ((0, 0), (0, 0))


def test_empty_placement():
    rm = rank_matrix(RookPlacement(0, (), ()))
    assert rm.R == () and rm.Rstar == ()


def test_figure_placement_type_c():
    """Supp = {e1-e4, 2e2} in C_4"""
    sigma = Involution(4, (4, -2, 3, 1))
    placement = rook_placement(sigma)
    assert placement.rooks() == [(1, 4), (2, -2), (3, 3), (4, 1), (-4, -1), (-3, -3), (-2, 2), (-1, -4)]
    assert placement.is_centrally_symmetric()
    rm = rank_matrix(placement)
    assert rm.entry(-1, 1) == 0
    assert rm.entry(-1, -4) == 1
    assert rm.entry(1, -1) == 8


def test_figure_placement_type_a():
    """sigma = (1,4)(3,5) in S_6"""
    sigma = involution_from_cycles(6, [(1, 4), (3, 5)])
    placement = rook_placement(sigma)
    assert placement.size == 6
    assert placement.rooks() == [(1, 4), (2, 2), (3, 5), (4, 1), (5, 3), (6, 6)]


def test_placement_rejects_two_rooks_in_a_row():
    with pytest.raises(ValueError):
        RookPlacement(2, ((1, 1), (0, 0)), (1, 2))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_rank_matrices_are_monotone(n):
    for sigma in enumerate_involutions(n):
        assert rank_matrix_of(sigma).is_monotone()


def test_type_a_rank_matrices():
    for images in itertools.permutations(range(1, 6)):
        p = Permutation(5, images)
        if p.is_involution():
            assert rank_matrix_of(p).is_monotone()


def test_leq_trivial_cases():
    involutions = enumerate_involutions(3)
    bottom = identity(3)
    for tau in involutions:
        assert leq_R(bottom, tau) and leq_Rstar(bottom, tau)
        assert leq_R(tau, tau) and leq_Rstar(tau, tau)


def test_leq_rank_mismatch():
    with pytest.raises(RankMismatchError):
        leq_R(identity(2), identity(3))
    with pytest.raises(RankMismatchError):
        leq_Rstar(identity(2), involution_from_cycles(2, [(1, 2)]))


def test_leq_R_matches_bruhat_n2(bruhat_c2):
    involutions = enumerate_involutions(2)
    pairs = list(itertools.product(involutions, repeat=2))
    assert len(pairs) == 36
    for sigma, tau in pairs:
        assert leq_R(sigma, tau) == bruhat_c2.leq(sigma, tau)


@pytest.mark.parametrize("n, count", [(1, 2), (2, 6), (3, 20)])
def test_verify_equivalences_type_c(n, count):
    report = verify_equivalences(n, "C")
    assert report.involutions == count
    assert report.pairs == count * count
    assert report.ok
    assert list(report.table.columns) == ["sigma", "tau", "bruhat", "leq_R", "leq_Rstar", "agree"]
    assert report.table["agree"].all()


def test_verify_equivalences_n4():
    report = verify_equivalences(4, "C")
    assert report.involutions == 76
    assert report.pairs == 5776
    assert report.discrepancies == []


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_verify_equivalences_type_a(n):
    report = verify_equivalences(n, "A")
    assert report.ok
    if n == 4:
        assert report.involutions == 10


def test_rstar_witness_exists_exactly_when_the_order_fails():
    for sigma, tau in itertools.product(enumerate_involutions(3), repeat=2):
        box = rstar_witness(sigma, tau)
        assert (box is None) == leq_Rstar(sigma, tau)
        if box is not None:
            assert rank_matrix_of(sigma).star_entry(*box) > rank_matrix_of(tau).star_entry(*box)


def test_rstar_witness_example():
    assert rstar_witness(Involution(2, (1, -2)), identity(2)) == (-2, 2)
    assert rstar_witness(identity(2), Involution(2, (1, -2))) is None


def test_pair_table(bruhat_c2):
    elements = enumerate_involutions(2)[:3]
    table = pair_table(elements, bruhat_c2)
    assert len(table) == 9
    assert table["agree"].all()
    assert table.iloc[0].to_dict() == {"sigma": "[1,2]", "tau": "[1,2]", "bruhat": True,
                                       "leq_R": True, "leq_Rstar": True, "agree": True}


def test_distinct_rstar():
    """R* separates involutions, so <=* is antisymmetric"""
    involutions = enumerate_involutions(4)
    assert len({rank_matrix_of(s).Rstar for s in involutions}) == len(involutions)


def _brute_force_covers(poset):
    elements = poset.elements
    covers = set()
    for sigma, tau in itertools.permutations(elements, 2):
        if poset.less(sigma, tau) and not any(
                poset.less(sigma, mid) and poset.less(mid, tau) for mid in elements):
            covers.add((sigma, tau))
    return covers


def test_involution_poset_n1():
    poset = involution_poset(1, "C")
    assert len(poset) == 2
    assert len(poset.covers) == 1


def test_involution_poset_covers_n2():
    poset = involution_poset(2, "C")
    assert len(poset) == 6
    assert set(poset.covers) == _brute_force_covers(poset)


def test_involution_poset_covers_type_a():
    poset = involution_poset(4, "A")
    assert len(poset) == 10
    assert set(poset.covers) == _brute_force_covers(poset)


def test_saturated_chains(involutions_c3):
    """Every sigma < tau is joined by a chain of covers with increasing length"""
    covers = set(involutions_c3.covers)
    for sigma, tau in itertools.permutations(involutions_c3.elements, 2):
        chain = saturated_chain(involutions_c3, sigma, tau)
        if not involutions_c3.less(sigma, tau):
            assert chain is None
            continue
        assert chain[0] == sigma and chain[-1] == tau
        assert all((a, b) in covers for a, b in zip(chain, chain[1:]))
        assert all(length(a) < length(b) for a, b in zip(chain, chain[1:]))


def test_saturated_chain_trivial(involutions_c3):
    sigma = involutions_c3.elements[3]
    assert saturated_chain(involutions_c3, sigma, sigma) == [sigma]


def test_length_is_monotone_along_the_order(involutions_c3):
    for sigma, tau in involutions_c3.relation.edges:
        assert length(sigma) < length(tau)


def test_export_hasse_dot_is_deterministic():
    poset = involution_poset(2, "C")
    first = export_hasse(poset, "dot")
    assert first == export_hasse(involution_poset(2, "C"), "dot")
    assert first.startswith("digraph involutions_C2 {")
    assert first.count("->") == len(poset.covers)
    assert '"[1,2]" [label="[1,2]\\nl=0"];' in first


def test_export_hasse_json():
    poset = involution_poset(2, "C", poset=build_bruhat_poset(2, "C"))
    document = json.loads(export_hasse(poset, "json"))
    assert document["n"] == 2 and document["mode"] == "C"
    assert len(document["elements"]) == 6
    assert document["elements"][0] == "[1,2]"
    graph = nx.DiGraph([tuple(edge) for edge in document["covers"]])
    assert nx.is_directed_acyclic_graph(graph)


def test_export_hasse_unknown_format():
    with pytest.raises(UnknownFormatError):
        export_hasse(involution_poset(1, "C"), "svg")
