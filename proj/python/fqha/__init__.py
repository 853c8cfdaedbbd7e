"""Finite-field harmonic analysis verification kernels."""

from ._fqha import (
    Field,
    FqhaError,
    PointSet,
    additive_energy,
    cone_l2_ratio,
    count_incidences,
    distance_sets,
    exponent_catalog,
    index_point,
    interpolate,
    mu3_counts,
    paraboloid,
    point_index,
    quad_norm,
    right_angle_triples,
    run_suite,
    sphere,
    sphere_fourier_decay,
    sphere_sizes,
    suite_names,
)

__all__ = [
    "Field",
    "FqhaError",
    "PointSet",
    "additive_energy",
    "cone_l2_ratio",
    "count_incidences",
    "distance_sets",
    "exponent_catalog",
    "index_point",
    "interpolate",
    "mu3_counts",
    "paraboloid",
    "point_index",
    "quad_norm",
    "right_angle_triples",
    "run_suite",
    "sphere",
    "sphere_fourier_decay",
    "sphere_sizes",
    "suite_names",
]
