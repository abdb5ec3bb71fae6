# frobmaps CLI — problem files, presets, reports
from cli.commands import build_parser, run_cli
from cli.parser import parse_polynomial, parse_problem
from cli.report import ReportFormat, build_report, render_report

__all__ = [
    "ReportFormat",
    "build_parser",
    "build_report",
    "parse_polynomial",
    "parse_problem",
    "render_report",
    "run_cli",
]
