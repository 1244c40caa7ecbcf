"""Exact truncated q-series for MacMahon's divisor-sum families and their identities."""

from .identities import IdentityReport, limit_consistency, verify, verify_suite
from .macmahon import SeriesSpec, build_side, macmahon_A, macmahon_C
from .qfunctions import QPolynomial, Sign, binomial, q_binomial
from .series import TruncatedSeries

__all__ = [
    "IdentityReport",
    "QPolynomial",
    "SeriesSpec",
    "Sign",
    "TruncatedSeries",
    "binomial",
    "build_side",
    "limit_consistency",
    "macmahon_A",
    "macmahon_C",
    "q_binomial",
    "verify",
    "verify_suite",
]
