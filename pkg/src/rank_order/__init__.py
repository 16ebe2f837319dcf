"""
Rook placements, South-West rank matrices and the orders they define
"""
from .rooks import RankMatrix, RookPlacement, rank_matrix, rank_matrix_of, rook_placement
from .orders import EquivalenceReport, involutions_for, leq_R, leq_Rstar, verify_equivalences
from .hasse import InvolutionPoset, export_hasse, involution_poset, saturated_chain

__all__ = [
    'RankMatrix', 'RookPlacement', 'rank_matrix', 'rank_matrix_of', 'rook_placement',
    'EquivalenceReport', 'involutions_for', 'leq_R', 'leq_Rstar', 'verify_equivalences',
    'InvolutionPoset', 'export_hasse', 'involution_poset', 'saturated_chain',
]
