"""
Bruhat order oracle built from reflection covers, independent of rank
matrices.

u <. w is a cover when w = u * r for some reflection r and l(w) = l(u) + 1;
the order is the reachability relation of the cover digraph.
"""
import itertools
import logging
import time
from collections import deque
from math import factorial
from typing import Dict, Hashable, Iterable, List, Optional, Sequence, Set, Tuple

import networkx as nx

from ..exceptions import ElementNotInPosetError
from ..roots.root_system import positive_roots
from .signed_permutation import (
    DEFAULT_MAX_N,
    SignedPermutation,
    check_bound,
    fundamental_roots,
    identity,
    iter_symmetric_group,
    reflection,
    transposition,
)


class BruhatPoset:
    def __init__(self, n: int, mode: str, elements: Sequence[Hashable],
                 lengths: Dict[Hashable, int], covers: Iterable[Tuple[Hashable, Hashable]]):
        self.n = n
        self.mode = mode
        self.elements = list(elements)
        self.lengths = dict(lengths)
        self.graph = nx.DiGraph()
        self.graph.add_nodes_from(self.elements)
        self.graph.add_edges_from(covers)
        self._up_sets: Dict[Hashable, Set[Hashable]] = {}

    @property
    def covers(self) -> List[Tuple[Hashable, Hashable]]:
        return list(self.graph.edges)

    def __contains__(self, item) -> bool:
        return item in self.lengths

    def __len__(self) -> int:
        return len(self.elements)

    def up_set(self, u: Hashable) -> Set[Hashable]:
        """Everything weakly above u"""
        if u not in self.lengths:
            raise ElementNotInPosetError(f"{u} is not an element of this poset")
        if u not in self._up_sets:
            self._up_sets[u] = nx.descendants(self.graph, u) | {u}
        return self._up_sets[u]

    def leq(self, u: Hashable, w: Hashable) -> bool:
        for x in (u, w):
            if x not in self.lengths:
                raise ElementNotInPosetError(f"{x} is not an element of this poset")
        if self.lengths[u] > self.lengths[w]:
            return False
        return w in self.up_set(u)


def cayley_lengths(n: int, max_n: int = DEFAULT_MAX_N) -> Dict[SignedPermutation, int]:
    """BFS distance from the identity over the fundamental reflections"""
    check_bound(n, max_n)
    generators = [reflection(alpha, n) for alpha in fundamental_roots(n)]
    start = identity(n)
    group_size = 2 ** n * factorial(n)
    dist = {start: 0}
    queue = deque([start])
    while queue:
        w = queue.popleft()
        for s in generators:
            nxt = w * s
            if nxt not in dist:
                dist[nxt] = dist[w] + 1
                queue.append(nxt)
    if len(dist) != group_size:
        raise RuntimeError(f"Fundamental reflections reached {len(dist)} of {group_size} elements")
    return dist


def reduced_word(w: SignedPermutation, lengths: Optional[Dict[SignedPermutation, int]] = None) -> List[int]:
    """Indices into fundamental_roots(n) of a reduced expression for w"""
    n = w.n
    lengths = lengths or cayley_lengths(n, max(n, DEFAULT_MAX_N))
    generators = [reflection(alpha, n) for alpha in fundamental_roots(n)]
    word: List[int] = []
    current = w
    # peel a right descent at each step
    while lengths[current] > 0:
        for k, s in enumerate(generators):
            shorter = current * s
            if lengths[shorter] == lengths[current] - 1:
                word.append(k)
                current = shorter
                break
    return list(reversed(word))


def subword_products(word: Sequence[int], n: int) -> Set[SignedPermutation]:
    """Products over all subwords; for a reduced word this is the Bruhat interval [e, w]"""
    generators = [reflection(alpha, n) for alpha in fundamental_roots(n)]
    products = set()
    for mask in itertools.product((False, True), repeat=len(word)):
        w = identity(n)
        for keep, k in zip(mask, word):
            if keep:
                w = w * generators[k]
        products.add(w)
    return products


def build_bruhat_poset(n: int, mode: str = "C", max_n: int = DEFAULT_MAX_N) -> BruhatPoset:
    """Full group poset: W(C_n) for mode C, S_n for mode A"""
    started = time.perf_counter()
    if mode == "C":
        lengths: Dict = cayley_lengths(n, max_n)
        reflections = [reflection(alpha, n) for alpha in positive_roots(n, "C")]
    elif mode == "A":
        lengths = {p: p.length() for p in iter_symmetric_group(n, max_n)}
        reflections = [transposition(i, j, n) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    else:
        raise ValueError(f"Unknown mode: {mode}")

    elements = sorted(lengths, key=lambda w: (lengths[w], w.images))
    covers = []
    for u in elements:
        for r in reflections:
            w = u * r
            if lengths[w] == lengths[u] + 1:
                covers.append((u, w))
    logging.info(f"Bruhat poset mode={mode} n={n}: {len(elements)} elements, "
                 f"{len(covers)} covers in {time.perf_counter() - started:.2f}s")
    return BruhatPoset(n, mode, elements, lengths, covers)


def bruhat_leq_oracle(u: Hashable, w: Hashable, poset: BruhatPoset) -> bool:
    if u not in poset:
        raise ElementNotInPosetError(f"{u} is not an element of this poset")
    return poset.leq(u, w)
