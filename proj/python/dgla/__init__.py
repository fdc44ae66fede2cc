"""Exact-arithmetic engine for free graded Lie algebras with a truncated
Baker-Campbell-Hausdorff kernel, and the symmetric DGLA models of the
triangle and k-gons built on top of it.

All coefficients are exact rationals carried as "p/q" strings; documents
(certificates, models, coefficient tables) are JSON.
"""

import json as _json

try:
    from ._dgla import (  # type: ignore[attr-defined]
        Algebra,
        ConfigError,
        DomainError,
        Element,
        InternalError,
        bch,
        bch_coefficient_table,
        bch_list,
        bracket,
        depth_component,
        element_from_json,
        exp,
        is_lie_element,
        kgon_spectrum_json,
        log,
        lyndon_coordinates,
        model_json,
        triangle_coefficients_json,
        verify_kgon_json,
        verify_triangle_json,
    )
except ImportError:  # build-tree layout: the module sits next to the package
    from _dgla import (  # type: ignore[no-redef]
        Algebra,
        ConfigError,
        DomainError,
        Element,
        InternalError,
        bch,
        bch_coefficient_table,
        bch_list,
        bracket,
        depth_component,
        element_from_json,
        exp,
        is_lie_element,
        kgon_spectrum_json,
        log,
        lyndon_coordinates,
        model_json,
        triangle_coefficients_json,
        verify_kgon_json,
        verify_triangle_json,
    )

__all__ = [
    "Algebra",
    "ConfigError",
    "DomainError",
    "Element",
    "InternalError",
    "bch",
    "bch_coefficient_table",
    "bch_list",
    "bracket",
    "depth_component",
    "element_from_json",
    "exp",
    "is_lie_element",
    "log",
    "lyndon_coordinates",
    "triangle_coefficients",
    "verify_triangle",
    "verify_kgon",
    "kgon_spectrum",
    "model",
]


def triangle_coefficients(depth=4, universal=False):
    """Lyndon coordinate tables for the connectors alpha, beta, gamma."""
    return _json.loads(triangle_coefficients_json(depth, universal))


def verify_triangle(depth=4, seed=0, corrupt=""):
    """Certificate document for the symmetric triangle model."""
    return _json.loads(verify_triangle_json(depth, seed, corrupt))


def verify_kgon(k=4, depth=3, seed=0):
    """Certificate document for the k-gon construction."""
    return _json.loads(verify_kgon_json(k, depth, seed))


def kgon_spectrum(k):
    """Depth-0 subdivision matrix, characteristic polynomial, unit-disc test."""
    return _json.loads(kgon_spectrum_json(k))


def model(depth=4, based=""):
    """The symmetric (or based) triangle model with all differentials."""
    return _json.loads(model_json(depth, based))
