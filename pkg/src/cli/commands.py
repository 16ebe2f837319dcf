"""
Sub-command implementations; each returns the process exit code
"""
import logging
from typing import Any, Dict, List, Optional, Sequence

import pandas as pd

from ..coxeter.bruhat import build_bruhat_poset
from ..coxeter.signed_permutation import Permutation, length
from ..exceptions import UnknownFormatError, UsageError
from ..export.writer import ReportWriter, table_to_text, to_json
from ..extract.extract import Element, InvolutionReader
from ..orbits.degeneration import case5_table_order, verify_case5
from ..orbits.functional import f_sigma
from ..orbits.geometry import pi_rank
from ..quality.validator import RunConfig
from ..rank_order.hasse import export_hasse, involution_poset
from ..rank_order.orders import (
    EQUIVALENCE_COLUMNS,
    involutions_for,
    leq_R,
    leq_Rstar,
    pair_table,
    rstar_witness,
    verify_equivalences,
)
from ..rank_order.rooks import rank_matrix_of
from ..roots.support import support, type_a_support
from ..verify.pipeline import FAILED, VerificationPipeline

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def _format(config: RunConfig, default: str, allowed: Sequence[str], command: str) -> str:
    fmt = config.format or default
    if fmt not in allowed:
        raise UnknownFormatError(f"{command} writes {', '.join(allowed)}; got {fmt!r}")
    return fmt


def _support_labels(sigma: Element) -> List[str]:
    if isinstance(sigma, Permutation):
        return [str(r) for r in sorted(type_a_support(sigma))]
    return support(sigma).set.labels()


def _length(sigma: Element) -> int:
    return sigma.length() if isinstance(sigma, Permutation) else length(sigma)


def _grid_string(grid) -> str:
    return ";".join(",".join(str(v) for v in row) for row in grid)


def cmd_enumerate(config: RunConfig) -> int:
    fmt = _format(config, "text", ("text", "csv", "json"), "enumerate")
    elements = involutions_for(config.n, config.mode, config.max_n)
    rows = [{
        "window": sigma.window(),
        "length": _length(sigma),
        "support": " ".join(_support_labels(sigma)),
        "rstar": _grid_string(rank_matrix_of(sigma).Rstar),
    } for sigma in elements]
    df = pd.DataFrame(rows, columns=["window", "length", "support", "rstar"])
    logging.info(f"Enumerated {len(df)} involutions for mode={config.mode} n={config.n}")

    if fmt == "json":
        document = {
            "n": config.n,
            "mode": config.mode,
            "involutions": [{
                "window": sigma.window(),
                "length": _length(sigma),
                "support": _support_labels(sigma),
                "rstar": [list(row) for row in rank_matrix_of(sigma).Rstar],
            } for sigma in elements],
        }
        text = to_json(document)
    elif fmt == "csv":
        text = table_to_text(df, "csv")
    else:
        blocks = [table_to_text(df.drop(columns=["rstar"]), "text")]
        for sigma in elements:
            blocks.append(f"\nR* of {sigma.window()}\n{rank_matrix_of(sigma).to_text(star=True)}\n")
        text = "".join(blocks)
    return EXIT_OK if ReportWriter(config.output).write_text(text) else EXIT_FAILED


def _verify_text(report) -> str:
    lines = [f"verify mode={report.mode} n={report.n} seed={report.seed}: "
             f"{'PASS' if report.ok else 'FAIL'}"]
    for suite in report.suites:
        lines.append(f"  {suite.name:<26} {suite.status:<8} {suite.claim}")
        if suite.status == FAILED:
            lines.append(f"    {suite.details}")
    return "\n".join(lines) + "\n"


def cmd_verify(config: RunConfig) -> int:
    fmt = _format(config, "json", ("json", "text", "csv"), "verify")
    writer = ReportWriter(config.output)
    if fmt == "csv":
        # the per-pair table of the order equivalence alone
        equivalence = verify_equivalences(config.n, config.mode, config.max_n,
                                          max_workers=config.verification.max_workers)
        table = equivalence.table[[c for c in EQUIVALENCE_COLUMNS if c != "agree"]]
        if not writer.write_text(table_to_text(table, "csv")):
            return EXIT_FAILED
        return EXIT_OK if equivalence.ok else EXIT_FAILED

    report = VerificationPipeline(config).run()
    written = writer.write_json(report.to_dict()) if fmt == "json" else writer.write_text(_verify_text(report))
    if not written:
        return EXIT_FAILED
    return EXIT_OK if report.ok else EXIT_FAILED


def cmd_hasse(config: RunConfig) -> int:
    fmt = _format(config, "dot", ("dot", "json"), "hasse")
    poset = involution_poset(config.n, config.mode, config.max_n)
    return EXIT_OK if ReportWriter(config.output).write_text(export_hasse(poset, fmt)) else EXIT_FAILED


def cmd_degenerate(config: RunConfig, i: int, k: int, j: int) -> int:
    fmt = _format(config, "text", ("text", "json"), "degenerate")
    report = verify_case5(i, k, j, config.n)
    if fmt == "json":
        text = report.to_json() + "\n"
    else:
        lines = [f"tau = {report.tau.window()}  ->  sigma = {report.sigma.window()}"]
        for alpha in case5_table_order(i, k, j):
            value = report.coefficients.get(alpha, 0)
            lines.append(f"  {str(alpha):<8} {value}")
        lines.append(f"  limit_ok={report.limit_ok} table_ok={report.table_ok}")
        text = "\n".join(lines) + "\n"
    if not ReportWriter(config.output).write_text(text):
        return EXIT_FAILED
    return EXIT_OK if report.ok else EXIT_FAILED


def _witness(sigma: Element, tau: Element) -> Optional[Dict[str, int]]:
    """A box where R*_sigma exceeds R*_tau; pi-ranks there rule out O_sigma in the closure of O_tau"""
    box = rstar_witness(sigma, tau)
    if box is None:
        return None
    i, j = box
    witness = {
        "row": i,
        "column": j,
        "rstar_sigma": rank_matrix_of(sigma).star_entry(i, j),
        "rstar_tau": rank_matrix_of(tau).star_entry(i, j),
    }
    if not isinstance(sigma, Permutation):
        witness["pi_rank_sigma"] = pi_rank(f_sigma(sigma), i, j)
    return witness


def _witness_text(witness: Optional[Dict[str, int]]) -> str:
    if witness is None:
        return "none"
    text = (f"R*[{witness['row']},{witness['column']}] "
            f"{witness['rstar_sigma']} > {witness['rstar_tau']}")
    if "pi_rank_sigma" in witness:
        text += f", rk pi(f_sigma) = {witness['pi_rank_sigma']}"
    return text


def _compare_file(config: RunConfig, reader: InvolutionReader, input_path: str) -> int:
    fmt = _format(config, "text", ("text", "csv", "json"), "compare --input")
    elements = reader.read_file(input_path)
    poset = build_bruhat_poset(config.n, config.mode, config.max_n)
    table = pair_table(elements, poset)
    disagreements = int((~table["agree"]).sum())
    if disagreements:
        logging.warning(f"{disagreements} of {len(table)} pairs from {input_path} disagree across the orders")
    if not ReportWriter(config.output).write_text(table_to_text(table, fmt)):
        return EXIT_FAILED
    return EXIT_OK if not disagreements else EXIT_FAILED


def cmd_compare(config: RunConfig, sigma_text: Optional[str], tau_text: Optional[str],
                input_path: Optional[str] = None) -> int:
    reader = InvolutionReader(config.mode, config.n)
    if input_path is not None:
        if sigma_text is not None or tau_text is not None:
            raise UsageError("compare takes either two involutions or --input, not both")
        return _compare_file(config, reader, input_path)
    if sigma_text is None or tau_text is None:
        raise UsageError("compare needs two involutions, or --input with a file of them")

    fmt = _format(config, "text", ("text", "json"), "compare")
    sigma, tau = reader.parse(sigma_text), reader.parse(tau_text)
    poset = build_bruhat_poset(config.n, config.mode, config.max_n)
    result: Dict[str, Any] = {
        "sigma": sigma.window(),
        "tau": tau.window(),
        "bruhat": poset.leq(sigma, tau),
        "leq_R": leq_R(sigma, tau),
        "leq_Rstar": leq_Rstar(sigma, tau),
        "witness": _witness(sigma, tau),
    }
    writer = ReportWriter(config.output)
    if fmt == "json":
        result["rstar_sigma"] = [list(row) for row in rank_matrix_of(sigma).Rstar]
        result["rstar_tau"] = [list(row) for row in rank_matrix_of(tau).Rstar]
        return EXIT_OK if writer.write_json(result) else EXIT_FAILED
    text = (f"sigma = {result['sigma']}  tau = {result['tau']}\n"
            f"  bruhat    {result['bruhat']}\n"
            f"  leq_R     {result['leq_R']}\n"
            f"  leq_Rstar {result['leq_Rstar']}\n"
            f"  witness   {_witness_text(result['witness'])}\n"
            f"\nR* of {result['sigma']}\n{rank_matrix_of(sigma).to_text(star=True)}\n"
            f"\nR* of {result['tau']}\n{rank_matrix_of(tau).to_text(star=True)}\n")
    return EXIT_OK if writer.write_text(text) else EXIT_FAILED
