"""
Degeneration curves g(s) in B with g(s).f_tau -> f_sigma as s -> 0.

Only the covering case Supp(sigma) \\ Supp(tau) = {e_i+e_j, 2e_k},
Supp(tau) \\ Supp(sigma) = {2e_i, e_k+e_j} (i < k < j) has an explicit curve
here; other covering cases plug into the same verify_curve contract.
"""
import json
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Tuple

from ..coxeter.signed_permutation import Involution
from ..exceptions import IndexOrderError, NegativeExponentError
from ..linalg.matrix import laurent_limit_at_zero
from ..linalg.scalars import Laurent, Ring, Scalar, format_scalar
from ..roots.root_system import RootC
from ..roots.support import involution_from_orthogonal_set
from .chevalley import GroupElement, chevalley_h, chevalley_x, dual_action, product
from .functional import f_sigma

S = Laurent.variable()


@dataclass(frozen=True)
class Factor:
    kind: str  # "x" or "h"
    root: RootC
    param: Laurent

    def element(self, n: int) -> GroupElement:
        make = chevalley_x if self.kind == "x" else chevalley_h
        return make(self.root, self.param, n, Ring.LAURENT)

    def __str__(self) -> str:
        return f"{self.kind}_{self.root}({self.param})"


@dataclass(frozen=True)
class DegenerationCurve:
    sigma: Involution
    tau: Involution
    factors: Tuple[Factor, ...]
    label: str = "case5"

    @property
    def n(self) -> int:
        return self.sigma.n

    def assemble(self) -> GroupElement:
        g = product([f.element(self.n) for f in self.factors], self.n, Ring.LAURENT)
        if not g.in_borel():
            raise ValueError(f"g(s) for {self.label} is not upper-triangular")
        return g


@dataclass
class CurveReport:
    sigma: Involution
    tau: Involution
    coefficients: Dict[RootC, Scalar]
    limit_ok: bool
    table_ok: bool
    failure: str = ""
    expected: Dict[RootC, Scalar] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.limit_ok and self.table_ok

    def to_dict(self) -> dict:
        return {
            "sigma": self.sigma.window(),
            "tau": self.tau.window(),
            "coefficients": {str(a): format_scalar(c) for a, c in sorted(self.coefficients.items())},
            "limit_ok": self.limit_ok,
            "table_ok": self.table_ok,
            "failure": self.failure,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)


def _check_triple(i: int, k: int, j: int, n: int) -> None:
    if not 1 <= i < k < j <= n:
        raise IndexOrderError(f"Need 1 <= i < k < j <= n, got i={i}, k={k}, j={j}, n={n}")


def case5_curve(i: int, k: int, j: int, n: int) -> DegenerationCurve:
    """g(s) = h_{e_i-e_k}(1/s) x_{e_i-e_k}(s) x_{e_k-e_j}(1/(2s^2)) x_{e_i-e_j}(-1/s)"""
    _check_triple(i, k, j, n)
    sigma = involution_from_orthogonal_set([RootC.sum(i, j), RootC.long(k)], n)
    tau = involution_from_orthogonal_set([RootC.long(i), RootC.sum(k, j)], n)
    factors = (
        Factor("h", RootC.diff(i, k), S.inverse()),
        Factor("x", RootC.diff(i, k), S),
        Factor("x", RootC.diff(k, j), Laurent.monomial(Fraction(1, 2), -2)),
        Factor("x", RootC.diff(i, j), -S.inverse()),
    )
    return DegenerationCurve(sigma, tau, factors)


def case5_expected(i: int, k: int, j: int, n: int) -> Dict[RootC, Scalar]:
    """Nonzero coefficients of g(s).f_tau in the minimal instance"""
    _check_triple(i, k, j, n)
    return {
        RootC.sum(i, j): Laurent.constant(1),
        RootC.long(k): Laurent.constant(1),
        RootC.sum(i, k): -S,
        RootC.long(i): S * S,
    }


def case5_table_order(i: int, k: int, j: int) -> List[RootC]:
    return [RootC.sum(i, j), RootC.long(k), RootC.sum(k, j), RootC.sum(i, k), RootC.long(i)]


def verify_curve(curve: DegenerationCurve, expected: Dict[RootC, Scalar] = None) -> CurveReport:
    f_tau = f_sigma(curve.tau, Ring.LAURENT)
    moved = dual_action(curve.assemble(), f_tau)
    coefficients = moved.coefficients()
    target = f_sigma(curve.sigma)

    limit_ok, failure = False, ""
    try:
        limit = laurent_limit_at_zero(moved.matrix)
        limit_ok = limit == target.matrix
        if not limit_ok:
            failure = "limit differs from f_sigma"
    except NegativeExponentError as e:
        failure = str(e)

    table_ok = True
    if expected is not None:
        table_ok = coefficients == expected
        if not table_ok:
            failure = failure or "coefficient table differs from the expected case split"

    if not (limit_ok and table_ok):
        logging.warning(f"Curve {curve.label} tau={curve.tau} -> sigma={curve.sigma} failed: {failure}")
    return CurveReport(curve.sigma, curve.tau, coefficients, limit_ok, table_ok, failure,
                       dict(expected or {}))


def verify_case5(i: int, k: int, j: int, n: int) -> CurveReport:
    return verify_curve(case5_curve(i, k, j, n), case5_expected(i, k, j, n))


def all_case5_triples(n: int) -> List[Tuple[int, int, int]]:
    return [(i, k, j) for i in range(1, n + 1) for k in range(i + 1, n + 1) for j in range(k + 1, n + 1)]
