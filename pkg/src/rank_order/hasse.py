"""
Bruhat order restricted to involutions, its covers, and Hasse diagram export
"""
import json
import logging
from typing import Dict, List, Optional, Sequence, Tuple

import networkx as nx

from ..coxeter.bruhat import BruhatPoset, build_bruhat_poset
from ..coxeter.signed_permutation import DEFAULT_MAX_N
from ..exceptions import ElementNotInPosetError, UnknownFormatError
from .orders import involutions_for
from .rooks import Element

HASSE_FORMATS = ("dot", "json")


class InvolutionPoset:
    """Involutions (identity included) under the Bruhat order, with covers taken inside the subposet"""

    def __init__(self, n: int, mode: str, elements: Sequence[Element], lengths: Dict[Element, int],
                 relation: nx.DiGraph):
        self.n = n
        self.mode = mode
        self.elements = list(elements)
        self.lengths = dict(lengths)
        self.relation = relation
        self.hasse = nx.transitive_reduction(relation)
        self._index = {sigma: k for k, sigma in enumerate(self.elements)}

    @property
    def covers(self) -> List[Tuple[Element, Element]]:
        """Sorted by the position of both ends in the element list"""
        return sorted(self.hasse.edges, key=lambda e: (self._index[e[0]], self._index[e[1]]))

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, sigma) -> bool:
        return sigma in self._index

    def less(self, sigma: Element, tau: Element) -> bool:
        return self.relation.has_edge(sigma, tau)


def involution_poset(n: int, mode: str = "C", max_n: int = DEFAULT_MAX_N,
                     poset: Optional[BruhatPoset] = None) -> InvolutionPoset:
    poset = poset or build_bruhat_poset(n, mode, max_n)
    elements = involutions_for(n, mode, max_n)
    relation = nx.DiGraph()
    relation.add_nodes_from(elements)
    relation.add_edges_from((sigma, tau) for sigma in elements for tau in elements
                            if sigma != tau and poset.leq(sigma, tau))
    lengths = {sigma: poset.lengths[sigma] for sigma in elements}
    result = InvolutionPoset(n, mode, elements, lengths, relation)
    logging.info(f"Involution poset mode={mode} n={n}: {len(elements)} elements, "
                 f"{len(result.covers)} covers")
    return result


def saturated_chain(poset: InvolutionPoset, sigma: Element, tau: Element) -> Optional[List[Element]]:
    """A chain sigma = t_0 <. t_1 <. ... <. t_r = tau of covers, or None when sigma is not below tau"""
    for x in (sigma, tau):
        if x not in poset:
            raise ElementNotInPosetError(f"{x} is not an involution of this poset")
    if sigma == tau:
        return [sigma]
    try:
        return nx.shortest_path(poset.hasse, sigma, tau)
    except nx.NetworkXNoPath:
        return None


def _to_dot(poset: InvolutionPoset) -> str:
    def node(sigma):
        return '"{}"'.format(sigma.window())

    lines = [f"digraph involutions_{poset.mode}{poset.n} {{", "  rankdir=BT;"]
    for sigma in poset.elements:
        lines.append(f'  {node(sigma)} [label="{sigma.window()}\\nl={poset.lengths[sigma]}"];')
    for sigma, tau in poset.covers:
        lines.append(f"  {node(sigma)} -> {node(tau)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _to_json(poset: InvolutionPoset) -> str:
    document = {
        "n": poset.n,
        "mode": poset.mode,
        "elements": [sigma.window() for sigma in poset.elements],
        "lengths": {sigma.window(): poset.lengths[sigma] for sigma in poset.elements},
        "covers": [[sigma.window(), tau.window()] for sigma, tau in poset.covers],
    }
    return json.dumps(document, indent=2, sort_keys=True) + "\n"


def export_hasse(poset: InvolutionPoset, fmt: str = "dot") -> str:
    if fmt == "dot":
        return _to_dot(poset)
    if fmt == "json":
        return _to_json(poset)
    raise UnknownFormatError(f"Unknown Hasse format {fmt!r}; expected one of {', '.join(HASSE_FORMATS)}")
