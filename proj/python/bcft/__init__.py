"""Bicomplex Fourier transforms of real signals."""

from ._core import (
    Bicomplex,
    ConvergenceError,
    ConvergenceRegion,
    DomainError,
    Error,
    OutsideRegionError,
    SingularityError,
    ZeroDivisorError,
    catalog_names,
    closed_form_transform,
    invert,
    is_zero_divisor,
    make_signal,
    run_suite,
    transform,
    transform_grid,
)

__all__ = [
    "Bicomplex",
    "ConvergenceError",
    "ConvergenceRegion",
    "DomainError",
    "Error",
    "OutsideRegionError",
    "SingularityError",
    "ZeroDivisorError",
    "catalog_names",
    "closed_form_transform",
    "invert",
    "is_zero_divisor",
    "make_signal",
    "run_suite",
    "transform",
    "transform_grid",
]
