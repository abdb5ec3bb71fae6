"""
Reports: level records → pydantic models → JSON or a text table.
"""

from __future__ import annotations

import logging
from enum import Enum
from typing import Dict, Optional

from algebra.polynomial import render_polynomial
from cli.schemas import LevelReport, LevelTimings, ProblemEcho, ProblemFile, Report
from config import Config
from core.error_handling import COMPUTATION_ERRORS, ErrorContext
from frobenius.ladder import FrobeniusLadder, LevelRecord
from groebner.ideal import ComputePath
from groebner.operations import ideal_equal

logger = logging.getLogger(__name__)


class ReportFormat(str, Enum):
    JSON = "json"
    TEXT = "text"


def _render_K(record: LevelRecord) -> Optional[list]:
    """Canonical generators of K_e, or None when K_e is missing or cannot be canonicalized."""
    if record.K is None:
        return None
    # a failed level may hold a memoized K_e that no longer fits the exponent ceiling
    with ErrorContext(
        f"report of K_e at e={record.e}", reraise=False, log_level="warning", exceptions=COMPUTATION_ERRORS
    ):
        return [render_polynomial(g) for g in record.K.canonical_generators()]
    return None


def _level_report(record: LevelRecord) -> LevelReport:
    rendered = _render_K(record)
    K = rendered or []
    timings = None
    if record.ok:
        timings = LevelTimings(
            k_ms=round(record.timings.k_ms, 3),
            l_ms=round(record.timings.l_ms, 3),
            verdict_ms=round(record.timings.verdict_ms, 3),
            total_ms=round(record.timings.total_ms, 3),
        )
    return LevelReport(
        e=record.e,
        q=record.q,
        path=record.path,
        K_generator_count=len(rendered) if rendered is not None else None,
        K=K,
        L_generator_count=len(record.L) if record.L is not None else None,
        contained_raw=record.contained_raw,
        contained_mod_bracket=record.contained_mod_bracket,
        witnesses=[render_polynomial(w) for w in record.witnesses],
        closed_form_match=record.closed_form_match,
        error=record.error,
        timings=timings,
    )


def levels_agree(a: LevelRecord, b: LevelRecord) -> Optional[bool]:
    """Same K_e, verdicts and witnesses on two code paths; None when either level failed."""
    if not a.ok or not b.ok:
        return None
    return (
        ideal_equal(a.K, b.K, ComputePath.GROEBNER)
        and a.contained_raw == b.contained_raw
        and a.contained_mod_bracket == b.contained_mod_bracket
        and [render_polynomial(w) for w in a.witnesses] == [render_polynomial(w) for w in b.witnesses]
    )


def build_report(
    problem: ProblemFile,
    ladder: FrobeniusLadder,
    comparison: Optional[FrobeniusLadder] = None,
) -> Report:
    levels = []
    for record in ladder.records():
        level = _level_report(record)
        if comparison is not None and record.e in comparison.levels:
            level.paths_agree = levels_agree(record, comparison[record.e])
        levels.append(level)
    return Report(problem=ProblemEcho.from_problem(problem), levels=levels, version=Config.VERSION)


# =============================================================================
# RENDERING
# =============================================================================


def _flag(value: Optional[bool]) -> str:
    return "-" if value is None else ("yes" if value else "no")


def _render_text(report: Report, omit_timings: bool) -> str:
    problem = report.problem
    header = f"I = ({', '.join(problem.gens)}) in GF({problem.p})[{', '.join(problem.vars)}]"
    if problem.preset:
        header += f"  [{problem.preset}]"
    columns = ["e", "q", "path", "#K", "raw", "mod I^[q]", "closed form", "witnesses"]
    if not omit_timings:
        columns.append("ms")
    rows = []
    for level in report.levels:
        if level.error:
            row = [str(level.e), str(level.q), level.path, "-", "-", "-", "-", f"FAILED: {level.error}"]
        else:
            witnesses = ", ".join(level.witnesses[:3]) + (" ..." if len(level.witnesses) > 3 else "")
            row = [
                str(level.e),
                str(level.q),
                level.path,
                str(level.K_generator_count),
                _flag(level.contained_raw),
                _flag(level.contained_mod_bracket),
                _flag(level.closed_form_match),
                witnesses or "-",
            ]
        if not omit_timings:
            row.append(f"{level.timings.total_ms:.1f}" if level.timings else "-")
        rows.append(row)

    widths = [max(len(columns[i]), *(len(r[i]) for r in rows)) if rows else len(columns[i]) for i in range(len(columns))]
    lines = [header, "", "  ".join(c.ljust(w) for c, w in zip(columns, widths)).rstrip()]
    lines.append("  ".join("-" * w for w in widths))
    lines += ["  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() for row in rows]
    agreement = [level.paths_agree for level in report.levels if level.paths_agree is not None]
    if agreement:
        lines.append("")
        lines.append(f"monomial and groebner paths agree: {_flag(all(agreement))}")
    lines.append(f"version {report.version}")
    return "\n".join(lines) + "\n"


def render_report(report: Report, fmt: ReportFormat = ReportFormat.JSON, omit_timings: bool = False) -> str:
    fmt = ReportFormat(fmt)
    if fmt is ReportFormat.TEXT:
        return _render_text(report, omit_timings)
    exclude: Optional[Dict] = {"levels": {"__all__": {"timings"}}} if omit_timings else None
    return report.model_dump_json(indent=2, exclude=exclude) + "\n"
