"""Exact ECH capacities, Weyl-law error terms and related numerics."""

from fractions import Fraction

from . import _core
from ._core import (
    FlowError,
    HypothesisViolation,
    ValidationError,
    ball_error_extremes,
    billiard_itinerary,
    canonical,
    coloring,
    cutoff_N,
    divergence,
    partition,
    ribbon_rotation,
    rotcheck,
    selftest,
    validate,
    xh_volume,
)


def capacities(domain, kmax):
    return [Fraction(x) for x in _core.capacities(domain, kmax)]


def volume(domain):
    return Fraction(_core.volume(domain))


def error_terms(domain, k_lo, k_hi):
    return [(k, Fraction(c), e) for k, c, e in _core.error_terms(domain, k_lo, k_hi)]


def weight_sequence(a, b):
    return [Fraction(w) for w in _core.weight_sequence(str(a), str(b))]


def embedding_function_lower(a, kmax):
    ratio, k = _core.embedding_function_lower(str(a), kmax)
    return Fraction(ratio), k


__all__ = [
    "FlowError",
    "HypothesisViolation",
    "ValidationError",
    "ball_error_extremes",
    "billiard_itinerary",
    "canonical",
    "capacities",
    "coloring",
    "cutoff_N",
    "divergence",
    "embedding_function_lower",
    "error_terms",
    "partition",
    "ribbon_rotation",
    "rotcheck",
    "selftest",
    "validate",
    "volume",
    "weight_sequence",
    "xh_volume",
]
