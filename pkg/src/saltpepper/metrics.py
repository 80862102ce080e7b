"""Restoration quality measures for (reference, test) image pairs.

MSE accumulates squared differences in exact integer arithmetic and
divides once at the end; PSNR is ``10*log10(255^2 / MSE)`` in decibels.
Both report ``INFINITE`` (IEEE infinity, rendered as ``inf``) for a
perfect match.  IEF is the ratio of pre- to post-restoration total
squared error.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateInputError, DimensionMismatchError
from .raster import GrayImage

__all__ = ["INFINITE", "MetricsReport", "mse", "psnr", "ief", "compare"]

INFINITE = math.inf

_PEAK_SQUARED = 255 * 255


@dataclass(frozen=True)
class MetricsReport:
    """MSE and PSNR for one image pair, plus IEF when a noisy image was given."""

    mse: float
    psnr_db: float
    ief: float | None = None


def _require_same_shape(a: GrayImage, b: GrayImage, a_name: str, b_name: str) -> None:
    if (a.width, a.height) != (b.width, b.height):
        raise DimensionMismatchError(
            f"{a_name} is {a.width}x{a.height} but {b_name} is {b.width}x{b.height}"
        )


def _squared_error_sum(a: GrayImage, b: GrayImage) -> int:
    d = a.pixels.astype(np.int64) - b.pixels.astype(np.int64)
    return int((d * d).sum())


def mse(reference: GrayImage, test: GrayImage) -> float:
    """Mean squared error between two same-sized images."""
    _require_same_shape(reference, test, "reference", "test")
    return _squared_error_sum(reference, test) / (reference.width * reference.height)


def psnr(reference: GrayImage, test: GrayImage) -> float:
    """Peak signal-to-noise ratio in dB; INFINITE when the images match."""
    return _psnr_from_mse(mse(reference, test))


def _psnr_from_mse(m: float) -> float:
    if m == 0.0:
        return INFINITE
    return 10.0 * math.log10(_PEAK_SQUARED / m)


def ief(reference: GrayImage, noisy: GrayImage, restored: GrayImage) -> float:
    """Image enhancement factor.

    The total squared error of the noisy image over that of the restored
    image, both against the reference.  INFINITE for a perfect
    restoration of a genuinely noisy image; exactly 1.0 when the filter
    changed nothing.

    Raises:
        DegenerateInputError: all three images are identical, so the
            ratio is 0/0 and undefined.
    """
    _require_same_shape(reference, noisy, "reference", "noisy")
    _require_same_shape(reference, restored, "reference", "restored")
    numerator = _squared_error_sum(reference, noisy)
    denominator = _squared_error_sum(reference, restored)
    if numerator == 0 and denominator == 0:
        raise DegenerateInputError(
            "reference, noisy and restored images are all identical: enhancement is undefined"
        )
    if denominator == 0:
        return INFINITE
    return numerator / denominator


def compare(reference: GrayImage, test: GrayImage, noisy: GrayImage | None = None) -> MetricsReport:
    """Bundle MSE and PSNR (plus IEF when ``noisy`` is given) into one report."""
    m = mse(reference, test)
    e = None if noisy is None else ief(reference, noisy, test)
    return MetricsReport(mse=m, psnr_db=_psnr_from_mse(m), ief=e)
