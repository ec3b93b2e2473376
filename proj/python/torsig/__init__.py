"""Exact Charney-Davis signatures and normal fan convexity of simple rational polytopes."""

from ._core import (
    Fan,
    Polytope,
    TorsigError,
    analyze,
    arrangement_fan,
    arrangement_preset,
    associahedron,
    associahedron_sigma,
    bounds,
    chow_signature,
    corpus_verify,
    cube,
    generate,
    mirror,
    permutohedron,
    polygon,
    polygon_inequality_rhs,
    product,
    tanh_sigma,
)

__all__ = [
    "Fan",
    "Polytope",
    "TorsigError",
    "analyze",
    "arrangement_fan",
    "arrangement_preset",
    "associahedron",
    "associahedron_sigma",
    "bounds",
    "chow_signature",
    "corpus_verify",
    "cube",
    "generate",
    "mirror",
    "permutohedron",
    "polygon",
    "polygon_inequality_rhs",
    "product",
    "tanh_sigma",
]
