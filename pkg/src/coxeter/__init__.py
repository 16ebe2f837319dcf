"""
Weyl group W(C_n) as signed permutations, plus S_n for the type-A recap
"""
from .signed_permutation import (
    DEFAULT_MAX_N,
    Involution,
    Permutation,
    SignedPermutation,
    compose,
    enumerate_involutions,
    enumerate_type_a_involutions,
    fundamental_roots,
    identity,
    involution_from_cycles,
    iter_group,
    length,
    parse_window,
    reflection,
)
from .bruhat import BruhatPoset, bruhat_leq_oracle, build_bruhat_poset, cayley_lengths

__all__ = [
    'DEFAULT_MAX_N', 'Involution', 'Permutation', 'SignedPermutation', 'compose',
    'enumerate_involutions', 'enumerate_type_a_involutions', 'fundamental_roots',
    'identity', 'involution_from_cycles', 'iter_group', 'length', 'parse_window',
    'reflection', 'BruhatPoset', 'bruhat_leq_oracle', 'build_bruhat_poset', 'cayley_lengths',
]
