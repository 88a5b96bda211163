"""Exact beta-function matrices: construction, closed forms and verification.

All values are exact: rationals come back as ``fractions.Fraction`` and
matrices as lists of rows.
"""

import json

from ._core import (
    InvalidParameters,
    SingularMatrix,
    UsageError,
    __version__,
    beta_matrix,
    beta_recip_matrix,
    bj_orthogonal,
    char_poly,
    closed_form_det,
    closed_form_inverse,
    closed_form_lu,
    det,
    generate,
    inertia,
    inverse,
    is_totally_nonnegative,
    is_totally_positive,
    pascal_hadamard_inverse,
    positive_roots,
    sign_changes,
    trace_norm,
    verify_nonsingularity,
    verify_summation,
    verify_tp,
)
from . import _core


def gen(kind, n=None, lambdas=None, mus=None, m=1):
    """Report of the ``gen`` command as a dict."""
    return json.loads(_core._run_gen(kind, n, lambdas, mus, m))


def analyze(n=None, matrix=None):
    """Report of the ``analyze`` command as a dict."""
    return json.loads(_core._run_analyze(n, matrix))


def verify(theorem, n=None, n_max=None, seed=42, samples=None):
    """Report of the ``verify`` command as a dict; ``report["exit_code"]`` mirrors the CLI."""
    text, code = _core._run_verify(theorem, n, n_max, seed, samples)
    report = json.loads(text)
    report["exit_code"] = code
    return report


__all__ = [
    "InvalidParameters",
    "SingularMatrix",
    "UsageError",
    "__version__",
    "analyze",
    "beta_matrix",
    "beta_recip_matrix",
    "bj_orthogonal",
    "char_poly",
    "closed_form_det",
    "closed_form_inverse",
    "closed_form_lu",
    "det",
    "gen",
    "generate",
    "inertia",
    "inverse",
    "is_totally_nonnegative",
    "is_totally_positive",
    "pascal_hadamard_inverse",
    "positive_roots",
    "sign_changes",
    "trace_norm",
    "verify",
    "verify_nonsingularity",
    "verify_summation",
    "verify_tp",
]
