# Copyright 2026 The anyonlab Authors
# SPDX-License-Identifier: Apache-2.0
"""Anyon theory of 2D translation-invariant Z_d Pauli stabilizer codes."""

import json as _json

from ._core import (  # noqa: F401
    AnalysisError,
    CodeError,
    RegionError,
    TorusError,
    analyze_json,
    bench_mge_csv,
    builtin_names,
    code_file,
    mge,
    smith_diagonal,
    torus_gsd,
)


def analyze(name="", *, text="", **kw):
    """Full pipeline; returns the report as a dict (same schema as the CLI's JSON)."""
    return _json.loads(analyze_json(name=name, text=text, **kw))


__all__ = [
    "analyze",
    "bench_mge_csv",
    "builtin_names",
    "code_file",
    "mge",
    "smith_diagonal",
    "torus_gsd",
]
