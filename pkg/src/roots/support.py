"""
Supports of involutions: the unique orthogonal set D with sigma = prod r_alpha
and no alpha - beta in Phi+.
"""
from dataclasses import dataclass
from typing import FrozenSet, Iterable, List

from ..coxeter.signed_permutation import Involution, Permutation, SignedPermutation, identity, reflection
from ..exceptions import NonOrthogonalError, NotAnInvolutionError
from .root_system import DIFF, RootC, check_orthogonal, difference_is_root


@dataclass(frozen=True)
class OrthogonalSet:
    roots: FrozenSet[RootC]

    def __post_init__(self):
        object.__setattr__(self, "roots", frozenset(self.roots))
        check_orthogonal(self.roots)

    def __iter__(self):
        return iter(sorted(self.roots))

    def __len__(self) -> int:
        return len(self.roots)

    def __contains__(self, root) -> bool:
        return root in self.roots

    def labels(self) -> List[str]:
        return [str(r) for r in sorted(self.roots)]


@dataclass(frozen=True)
class Support:
    set: OrthogonalSet
    owner: SignedPermutation

    @property
    def roots(self) -> FrozenSet[RootC]:
        return self.set.roots

    def __iter__(self):
        return iter(self.set)

    def __len__(self) -> int:
        return len(self.set)


def _product(roots: Iterable[RootC], n: int) -> SignedPermutation:
    w = identity(n)
    for alpha in roots:
        w = w * reflection(alpha, n)
    return w


def support(sigma: SignedPermutation) -> Support:
    """Read Supp(sigma) off the cycles of sigma'"""
    if not sigma.is_involution():
        raise NotAnInvolutionError(f"{sigma.window()} is not an involution")
    roots = set()
    for i in range(1, sigma.n + 1):
        image = sigma(i)
        if image == -i:
            roots.add(RootC.long(i))
        elif image > i:
            roots.add(RootC.diff(i, image))
        elif -image > i:
            roots.add(RootC.sum(i, -image))
    result = Support(OrthogonalSet(frozenset(roots)), Involution.of(sigma))
    # both defining properties, checked rather than assumed
    assert _product(sorted(roots), sigma.n) == sigma
    assert not any(difference_is_root(a, b) for a in roots for b in roots if a != b)
    return result


def normalize_orthogonal_set(roots: Iterable[RootC]) -> FrozenSet[RootC]:
    """Replace every pair {e_i-e_j, e_i+e_j} by {2e_i, 2e_j}"""
    roots = set(roots)
    for alpha in [r for r in roots if r.kind == DIFF]:
        partner = RootC.sum(alpha.i, alpha.j)
        if partner in roots:
            roots -= {alpha, partner}
            roots |= {RootC.long(alpha.i), RootC.long(alpha.j)}
    return frozenset(roots)


def involution_from_orthogonal_set(roots: Iterable[RootC], n: int) -> Involution:
    roots = list(roots)
    check_orthogonal(roots)
    if any(r.max_index() > n for r in roots):
        raise NonOrthogonalError(f"Roots {[str(r) for r in roots]} do not live in C_{n}")
    ordered = sorted(roots)
    forward = _product(ordered, n)
    # orthogonal reflections commute
    assert forward == _product(reversed(ordered), n)
    return Involution.of(forward)


def type_a_support(perm: Permutation) -> FrozenSet[RootC]:
    """{e_i - e_j : sigma = ... (i, j) ...} for an S_n involution"""
    if not perm.is_involution():
        raise NotAnInvolutionError(f"{perm.window()} is not an involution")
    return frozenset(RootC.diff(i, perm(i)) for i in range(1, perm.n + 1) if perm(i) > i)
