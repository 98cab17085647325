"""Cosine convolution on R, Z, S^1 and Z_n, its Gelfand transform, and checks."""

from .algebra import (
    Signal,
    anticonvolve,
    convolve,
    cosine_convolve,
    is_even,
    l1_norm,
    reflect,
    symmetrize,
    translate,
)
from .cosine_class import (
    CosineElement,
    character_pair,
    coord_of,
    coord_token,
    dalembert_residual,
    enumerate_class,
    evaluate,
    from_coord,
    half_range_size,
)
from .groups import OUT_OF_WINDOW, Group, Kind, add_points, haar_weight, make_group, negate_point, parse_group
from .transform import (
    Spectrum,
    cosine_convolve_fast,
    cosine_transform_integers,
    cosine_transform_real,
    dct_fast,
    dct_naive,
    fourier_cosine_coeffs,
    functional_apply,
    reconstruct_even,
)
from .verify import SuiteConfig, VerificationReport, run_suite

__all__ = [
    "Signal",
    "anticonvolve",
    "convolve",
    "cosine_convolve",
    "is_even",
    "l1_norm",
    "reflect",
    "symmetrize",
    "translate",
    "CosineElement",
    "character_pair",
    "coord_of",
    "coord_token",
    "dalembert_residual",
    "enumerate_class",
    "evaluate",
    "from_coord",
    "half_range_size",
    "OUT_OF_WINDOW",
    "Group",
    "Kind",
    "add_points",
    "haar_weight",
    "make_group",
    "negate_point",
    "parse_group",
    "Spectrum",
    "cosine_convolve_fast",
    "cosine_transform_integers",
    "cosine_transform_real",
    "dct_fast",
    "dct_naive",
    "fourier_cosine_coeffs",
    "functional_apply",
    "reconstruct_even",
    "SuiteConfig",
    "VerificationReport",
    "run_suite",
]

__version__ = "0.1.0"
