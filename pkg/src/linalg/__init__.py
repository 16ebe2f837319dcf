from .scalars import Laurent, Ring, format_scalar
from .matrix import (
    IndexedMatrix,
    index_at,
    is_symplectic_algebra,
    is_symplectic_group,
    laurent_limit_at_zero,
    lower_projection,
    mat_add,
    mat_mul,
    position,
    rank,
    signed_indices,
    submatrix_rank,
    symplectic_form,
    transpose,
)
from .elimination import bareiss_rank, gaussian_rank

__all__ = [
    'Laurent', 'Ring', 'format_scalar', 'IndexedMatrix', 'index_at',
    'is_symplectic_algebra', 'is_symplectic_group', 'laurent_limit_at_zero',
    'lower_projection', 'mat_add', 'mat_mul', 'position', 'rank', 'signed_indices',
    'submatrix_rank', 'symplectic_form', 'transpose', 'bareiss_rank', 'gaussian_rank',
]
