"""Reversible adder netlists, metrics and comparison reports."""

import json as _json

from ._core import (
    Circuit,
    ParseError,
    asap_depth,
    bcd,
    bin2bcd,
    check_formulas,
    correction,
    detection,
    generate,
    improvement_hundredths,
    parse_real,
    quantum_cost,
    rbcd,
    rca_no_carry,
    rca_with_carry,
    step_delay,
    verify,
)
from ._core import report_json as _report_json


def report(kind, ns=(8, 16, 32, 64, 128, 256, 512)):
    """Comparison tables for ``adder-nocarry``, ``adder-carry`` or ``bcd`` as a dict."""
    return _json.loads(_report_json(kind, list(ns)))


__all__ = [
    "Circuit",
    "ParseError",
    "asap_depth",
    "bcd",
    "bin2bcd",
    "check_formulas",
    "correction",
    "detection",
    "generate",
    "improvement_hundredths",
    "parse_real",
    "quantum_cost",
    "rbcd",
    "rca_no_carry",
    "rca_with_carry",
    "report",
    "step_delay",
    "verify",
]
