from .root_system import RootC, inner, is_orthogonal, parse_root, positive_roots

__all__ = ['RootC', 'inner', 'is_orthogonal', 'parse_root', 'positive_roots']
