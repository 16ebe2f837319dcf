"""
Verification pipeline: every suite checks one claim about B-orbits of
involutions exhaustively or on seeded random samples.
"""
import itertools
import logging
import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Tuple

from ..coxeter.bruhat import build_bruhat_poset
from ..coxeter.signed_permutation import enumerate_involutions, length
from ..linalg.matrix import is_symplectic_group
from ..orbits.chevalley import GroupElement, dual_action, random_borel, random_unipotent
from ..orbits.degeneration import all_case5_triples, verify_case5
from ..orbits.functional import Functional, f_of, f_sigma, random_functional
from ..orbits.geometry import (
    lower_positions,
    orbit_dimension,
    rank_profile,
    rescale_to,
    rescaling_step_holds,
    unipotent_orbit_dimension,
)
from ..quality.validator import RunConfig
from ..rank_order.orders import verify_equivalences
from ..rank_order.rooks import rank_matrix_of
from ..roots.support import support

PASSED = "passed"
FAILED = "failed"
SKIPPED = "skipped"

CLAIMS = {
    "order_equivalence": "sigma <=_B tau iff R_sigma <= R_tau iff R*_sigma <= R*_tau on involutions of W(C_n)",
    "order_equivalence_type_a": "sigma <=_B tau iff R_sigma <= R_tau iff R*_sigma <= R*_tau on involutions of S_n",
    "dimension_theorem": "dim of the B-orbit of f_sigma equals l(sigma); the U-orbit has dimension l(sigma) - |Supp sigma|",
    "rank_invariance": "rk pi_ij(u.f_sigma) = (R*_sigma)_ij for every u in U",
    "action_axioms": "1.lambda = lambda and (gh).lambda = g.(h.lambda) for g, h in B",
    "rescaling": "prod h_alpha'(xi(alpha)').f_D = f_{D,xi}",
    "case5_degeneration": "g(s).f_tau -> f_sigma for Supp sigma \\ Supp tau = {e_i+e_j, 2e_k}",
}


@dataclass
class SuiteResult:
    name: str
    status: str
    details: Dict[str, Any] = field(default_factory=dict)

    @property
    def claim(self) -> str:
        return CLAIMS[self.name]

    def to_dict(self) -> dict:
        return {"name": self.name, "claim": self.claim, "status": self.status, "details": self.details}


@dataclass
class VerificationReport:
    n: int
    mode: str
    seed: int
    suites: List[SuiteResult]

    @property
    def ok(self) -> bool:
        return all(s.status != FAILED for s in self.suites)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "mode": self.mode,
            "seed": self.seed,
            "passed": self.ok,
            "suites": [s.to_dict() for s in self.suites],
        }


def _status(ok: bool) -> str:
    return PASSED if ok else FAILED


class VerificationPipeline:
    def __init__(self, config: RunConfig):
        self.config = config
        self.settings = config.verification

    def suite_names(self) -> List[str]:
        if self.config.mode == "A":
            return ["order_equivalence_type_a"]
        return ["order_equivalence", "dimension_theorem", "rank_invariance",
                "action_axioms", "rescaling", "case5_degeneration"]

    def _rng(self, suite: str) -> random.Random:
        """Independent stream per suite so results do not depend on scheduling"""
        return random.Random(f"{self.config.seed}:{suite}")

    def _skip_reason(self, suite: str) -> Optional[str]:
        n = self.config.n
        if suite == "dimension_theorem" and n > self.settings.dimension_max_n:
            return f"n={n} above dimension_max_n={self.settings.dimension_max_n}"
        if suite in ("rank_invariance", "action_axioms", "rescaling") and n > self.settings.geometric_max_n:
            return f"n={n} above geometric_max_n={self.settings.geometric_max_n}"
        if suite == "case5_degeneration":
            if n < 3:
                return "needs n >= 3 for a triple i < k < j"
            if n > self.settings.dimension_max_n:
                return f"n={n} above dimension_max_n={self.settings.dimension_max_n}"
        return None

    # suites

    def _order_equivalence(self, rng: random.Random) -> Tuple[bool, dict]:
        report = verify_equivalences(self.config.n, self.config.mode, self.config.max_n,
                                     max_workers=self.settings.max_workers)
        return report.ok, report.to_dict()

    def _dimension_theorem(self, rng: random.Random) -> Tuple[bool, dict]:
        poset = build_bruhat_poset(self.config.n, "C", self.config.max_n)
        mismatches = []
        involutions = enumerate_involutions(self.config.n, self.config.max_n)
        for sigma in involutions:
            l_sigma = poset.lengths[sigma]
            dim_b = orbit_dimension(sigma)
            dim_u = unipotent_orbit_dimension(sigma)
            expected_u = l_sigma - len(support(sigma))
            if dim_b != l_sigma or dim_u != expected_u or length(sigma) != l_sigma:
                mismatches.append({"sigma": sigma.window(), "length": l_sigma,
                                   "orbit_dimension": dim_b, "unipotent_orbit_dimension": dim_u})
        return not mismatches, {"involutions": len(involutions), "mismatches": mismatches}

    def _rank_invariance(self, rng: random.Random) -> Tuple[bool, dict]:
        n = self.config.n
        samples = [random_unipotent(n, rng, self.settings.unipotent_values)
                   for _ in range(self.settings.random_samples)]
        positions = lower_positions(n)
        failures = []
        involutions = enumerate_involutions(n, self.config.max_n)
        for sigma in involutions:
            rm = rank_matrix_of(sigma)
            expected = {(i, j): rm.star_entry(i, j) for i, j in positions}
            f = f_sigma(sigma)
            if rank_profile(f) != expected:
                failures.append({"sigma": sigma.window(), "sample": None})
                continue
            for k, u in enumerate(samples):
                if rank_profile(dual_action(u, f)) != expected:
                    failures.append({"sigma": sigma.window(), "sample": k})
                    break
        return not failures, {"involutions": len(involutions), "samples": len(samples), "failures": failures}

    def _action_axioms(self, rng: random.Random) -> Tuple[bool, dict]:
        n = self.config.n
        one = GroupElement.identity(n)
        failures = []
        for k in range(self.settings.action_triples):
            g, h = random_borel(n, rng), random_borel(n, rng)
            lam = random_functional(n, rng)
            ok = (
                g.in_borel() and is_symplectic_group(g.g)
                and dual_action(one, lam) == lam
                and dual_action(g * h, lam) == dual_action(g, dual_action(h, lam))
            )
            if ok:
                # closure: the image is again a combination of the e_alpha^t
                Functional(dual_action(g, lam).matrix)
            else:
                failures.append(k)
        return not failures, {"triples": self.settings.action_triples, "failures": failures}

    def _rescaling(self, rng: random.Random) -> Tuple[bool, dict]:
        n = self.config.n
        checked, failures = 0, []
        for sigma in enumerate_involutions(n, self.config.max_n):
            roots = sorted(support(sigma).roots)
            for values in itertools.product(self.settings.xi_values, repeat=len(roots)):
                xi = dict(zip(roots, values))
                checked += 1
                ok = rescale_to(roots, xi, n) == f_of(roots, n, xi)
                ok = ok and all(rescaling_step_holds(roots, xi, alpha, n) for alpha in roots)
                if not ok:
                    failures.append({"sigma": sigma.window(), "xi": [str(v) for v in values]})
        return not failures, {"assignments": checked, "failures": failures}

    def _case5_degeneration(self, rng: random.Random) -> Tuple[bool, dict]:
        n = self.config.n
        reports = [verify_case5(i, k, j, n) for i, k, j in all_case5_triples(n)]
        return all(r.ok for r in reports), {"curves": [r.to_dict() for r in reports]}

    def _suite(self, name: str) -> Callable[[random.Random], Tuple[bool, dict]]:
        if name == "order_equivalence_type_a":
            return self._order_equivalence
        return getattr(self, f"_{name}")

    def run_suite(self, name: str) -> SuiteResult:
        reason = self._skip_reason(name)
        if reason:
            logging.info(f"Suite {name} skipped: {reason}")
            return SuiteResult(name, SKIPPED, {"reason": reason})
        started = time.perf_counter()
        try:
            ok, details = self._suite(name)(self._rng(name))
        except Exception as e:
            logging.error(f"Suite {name} failed with {type(e).__name__}: {e}")
            return SuiteResult(name, FAILED, {"error": f"{type(e).__name__}: {e}"})
        logging.info(f"Suite {name} {_status(ok)} in {time.perf_counter() - started:.2f}s")
        return SuiteResult(name, _status(ok), details)

    def run(self) -> VerificationReport:
        names = self.suite_names()
        with ThreadPoolExecutor(max_workers=self.settings.max_workers) as executor:
            results = list(executor.map(self.run_suite, names))
        report = VerificationReport(self.config.n, self.config.mode, self.config.seed, results)
        if report.ok:
            logging.info(f"Verification n={self.config.n} mode={self.config.mode} passed")
        else:
            failed = [s.name for s in results if s.status == FAILED]
            logging.error(f"Verification n={self.config.n} mode={self.config.mode} failed: {failed}")
        return report
