"""Equal sums of polynomial values: exact enumeration, surface census and growth ladders.

Polynomials are given as text ("x^3+3x^2", "0,0,3,1") or as a list of ints with the
constant term first. Reports come back as plain dicts in the same layout the CLI prints.
"""

import json

from . import _core
from ._core import (
    SCHEMA,
    PaucityError,
    classify,
    critical_sum_polynomial,
    critical_values,
    fit_power_law,
    numeric_singular_test,
    parse,
    points_on_surface,
    singular_test,
    trivial_count,
)
from ._core import format as format_poly

__all__ = [
    "SCHEMA",
    "PaucityError",
    "brute_counts",
    "census",
    "classify",
    "critical_sum_polynomial",
    "critical_values",
    "depress",
    "enumerate",
    "family_audit",
    "fit_power_law",
    "format_poly",
    "ladder",
    "numeric_singular_test",
    "parse",
    "points_on_surface",
    "singular_test",
    "solutions",
    "trivial_count",
]


def depress(f):
    return json.loads(_core.depress(f))


def enumerate(f, s, B, memory_budget=None, threads=0):
    text, _ = _core.enumerate(f, s, B, memory_budget, threads, False, False)
    return json.loads(text)


def solutions(f, s, B, include_trivial=False, memory_budget=None, threads=0):
    """Counts plus the emitted solutions as (lhs, rhs, class) tuples in lexicographic order."""
    text, rows = _core.enumerate(f, s, B, memory_budget, threads, True, include_trivial)
    return json.loads(text), rows


def brute_counts(f, s, B):
    return json.loads(_core.brute_counts(f, s, B))


def census(g, s, B, sample=20):
    return json.loads(_core.census(g, s, B, sample))


def family_audit(g, s, n):
    return json.loads(_core.family_audit(g, s, list(n)))


def ladder(f, s, B_list, cache_dir=None, compare=False, tolerance=0.15):
    return json.loads(_core.ladder(f, s, list(B_list), cache_dir, compare, tolerance))
