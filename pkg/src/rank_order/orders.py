"""
The three orders on involutions (Bruhat, R and R*) and an exhaustive
check that they coincide.
"""
import logging
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import pandas as pd

from ..coxeter.bruhat import BruhatPoset, build_bruhat_poset
from ..coxeter.signed_permutation import (
    DEFAULT_MAX_N,
    Permutation,
    enumerate_involutions,
    enumerate_type_a_involutions,
)
from ..exceptions import RankMismatchError
from .rooks import Element, Grid, rank_matrix_of

EQUIVALENCE_COLUMNS = ["sigma", "tau", "bruhat", "leq_R", "leq_Rstar", "agree"]


def _entrywise_leq(a: Grid, b: Grid) -> bool:
    return all(x <= y for row_a, row_b in zip(a, b) for x, y in zip(row_a, row_b))


def _check_pair(sigma: Element, tau: Element) -> None:
    if isinstance(sigma, Permutation) != isinstance(tau, Permutation):
        raise RankMismatchError("Cannot compare a type-A and a type-C element")
    if sigma.n != tau.n:
        raise RankMismatchError(f"Cannot compare n={sigma.n} with n={tau.n}")


def leq_R(sigma: Element, tau: Element) -> bool:
    _check_pair(sigma, tau)
    return _entrywise_leq(rank_matrix_of(sigma).R, rank_matrix_of(tau).R)


def leq_Rstar(sigma: Element, tau: Element) -> bool:
    _check_pair(sigma, tau)
    return _entrywise_leq(rank_matrix_of(sigma).Rstar, rank_matrix_of(tau).Rstar)


def rstar_witness(sigma: Element, tau: Element) -> Optional[Tuple[int, int]]:
    """First strictly lower box, row-major in display order, where R*_sigma exceeds R*_tau"""
    _check_pair(sigma, tau)
    a, b = rank_matrix_of(sigma), rank_matrix_of(tau)
    for p in range(a.size):
        for q in range(p):
            if a.Rstar[p][q] > b.Rstar[p][q]:
                return a.labels[p], a.labels[q]
    return None


def involutions_for(n: int, mode: str, max_n: int = DEFAULT_MAX_N) -> List[Element]:
    if mode == "C":
        return list(enumerate_involutions(n, max_n))
    if mode == "A":
        return list(enumerate_type_a_involutions(n, max_n))
    raise ValueError(f"Unknown mode: {mode}")


@dataclass
class EquivalenceReport:
    n: int
    mode: str
    involutions: int
    table: pd.DataFrame
    discrepancies: List[Tuple[str, str]] = field(default_factory=list)

    @property
    def pairs(self) -> int:
        return len(self.table)

    @property
    def ok(self) -> bool:
        return not self.discrepancies

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "mode": self.mode,
            "involutions": self.involutions,
            "pairs": self.pairs,
            "discrepancies": [list(pair) for pair in self.discrepancies],
        }


def _assert_distinct_rstar(elements: Sequence[Element]) -> None:
    seen: Dict[Grid, Element] = {}
    for sigma in elements:
        key = rank_matrix_of(sigma).Rstar
        if key in seen:
            raise AssertionError(f"{seen[key]} and {sigma} share R*; the R* order is not antisymmetric")
        seen[key] = sigma


def _rows_for(sigma: Element, elements: Sequence[Element], poset: BruhatPoset) -> List[dict]:
    rows = []
    for tau in elements:
        bruhat = poset.leq(sigma, tau)
        by_r = leq_R(sigma, tau)
        by_star = leq_Rstar(sigma, tau)
        rows.append({
            "sigma": sigma.window(),
            "tau": tau.window(),
            "bruhat": bruhat,
            "leq_R": by_r,
            "leq_Rstar": by_star,
            "agree": bruhat == by_r == by_star,
        })
    return rows


def pair_table(elements: Sequence[Element], poset: BruhatPoset) -> pd.DataFrame:
    """The three comparisons for every ordered pair drawn from elements"""
    rows = [row for sigma in elements for row in _rows_for(sigma, elements, poset)]
    return pd.DataFrame(rows, columns=EQUIVALENCE_COLUMNS)


def verify_equivalences(n: int, mode: str = "C", max_n: int = DEFAULT_MAX_N,
                        poset: Optional[BruhatPoset] = None, max_workers: int = 4) -> EquivalenceReport:
    """Bruhat <=> R <= <=> R* <= over every ordered pair of involutions"""
    started = time.perf_counter()
    elements = involutions_for(n, mode, max_n)
    poset = poset or build_bruhat_poset(n, mode, max_n)
    _assert_distinct_rstar(elements)

    # warm the caches before fanning out
    for sigma in elements:
        rank_matrix_of(sigma)
        poset.up_set(sigma)

    with ThreadPoolExecutor(max_workers=max_workers) as executor:
        chunks = list(executor.map(lambda s: _rows_for(s, elements, poset), elements))
    table = pd.DataFrame([row for chunk in chunks for row in chunk], columns=EQUIVALENCE_COLUMNS)

    bad = table[~table["agree"]]
    discrepancies = list(zip(bad["sigma"], bad["tau"]))
    if discrepancies:
        logging.warning(f"Order equivalence mode={mode} n={n}: {len(discrepancies)} discrepancies, "
                        f"first {discrepancies[0]}")
    logging.info(f"Order equivalence mode={mode} n={n}: {len(elements)} involutions, "
                 f"{len(table)} pairs in {time.perf_counter() - started:.2f}s")
    return EquivalenceReport(n, mode, len(elements), table, discrepancies)
