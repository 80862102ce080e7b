"""Impulse-noise removal filters.

Four kernels share one noise detector (a pixel is noisy iff its value is
exactly 0 or 255):

- ``smf``: standard median filter, replaces every pixel unconditionally.
- ``amf``: adaptive median filter, grows its window until the median is
  not an impulse, then decides whether to keep the center pixel.
- ``mdbutmf``: detector-gated trimmed MEDIAN replacement with an
  all-impulse mean fallback.
- ``rmf``: detector-gated trimmed MEAN replacement with the same
  fallback.

Every filter reads its windows from the input image only, so results are
independent of pixel visitation order and rows may be processed in
parallel without changing the output.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view

from .raster import GrayImage

__all__ = [
    "FILTER_KINDS",
    "FilterConfig",
    "RestoredImage",
    "is_noisy",
    "trimmed_mean_replacement",
    "trimmed_median_replacement",
    "apply_smf",
    "apply_amf",
    "apply_mdbutmf",
    "apply_rmf",
    "apply_filter",
]

FILTER_KINDS = ("smf", "amf", "mdbutmf", "rmf")


@dataclass(frozen=True)
class FilterConfig:
    """Filter identity plus window parameters.

    ``window_size`` is the base (and for non-adaptive kinds, the only)
    window.  ``max_window_size`` bounds adaptive growth and is read by the
    ``amf`` kind alone.
    """

    kind: str
    window_size: int = 3
    max_window_size: int = 7

    def __post_init__(self):
        if self.kind not in FILTER_KINDS:
            raise ValueError(
                f"unknown filter kind {self.kind!r}: expected one of {', '.join(FILTER_KINDS)}"
            )
        if self.window_size < 3 or self.window_size % 2 == 0:
            raise ValueError(f"window_size must be an odd integer >= 3, got {self.window_size}")
        if self.max_window_size < self.window_size or self.max_window_size % 2 == 0:
            raise ValueError(
                f"max_window_size must be odd and >= window_size, got {self.max_window_size}"
            )


@dataclass(frozen=True)
class RestoredImage:
    """A filter's output image plus the number of pixels it replaced.

    A pixel counts as replaced when the filter wrote a window statistic in
    its place, even if that statistic happens to equal the original value.
    """

    image: GrayImage
    replaced_count: int


def is_noisy(value: int) -> bool:
    """True iff an intensity is a fixed-valued impulse, i.e. exactly 0 or 255."""
    return value == 0 or value == 255


def _rounded_mean(values: list[int]) -> int:
    # exact integer round-half-up; values are nonnegative, so ties away
    # from zero coincide with rounding up
    s = sum(values)
    n = len(values)
    return min((2 * s + n) // (2 * n), 255)


def trimmed_mean_replacement(values: Iterable[int]) -> int:
    """Replacement value for a noisy pixel under the trimmed-mean rule.

    All 0 and 255 entries are discarded and the survivors' arithmetic
    mean, rounded to nearest with ties away from zero, is returned.  When
    every entry is an impulse the mean of the full window is used instead.
    A singleton survivor set degenerates to that value exactly.
    """
    vals = [int(v) for v in values]
    kept = [v for v in vals if not is_noisy(v)]
    return _rounded_mean(kept if kept else vals)


def trimmed_median_replacement(values: Iterable[int]) -> int:
    """Replacement value for a noisy pixel under the trimmed-median rule.

    The median of the non-impulse entries, taking the lower of the two
    middle elements for even counts; all-impulse windows fall back to the
    rounded mean of the full window.
    """
    vals = [int(v) for v in values]
    kept = sorted(v for v in vals if not is_noisy(v))
    if not kept:
        return _rounded_mean(vals)
    return kept[(len(kept) - 1) // 2]


def _windows(a: np.ndarray, size: int) -> np.ndarray:
    """All size x size replicate-padded neighborhoods, shape (H, W, size*size)."""
    pad = size // 2
    padded = np.pad(a, pad, mode="edge")
    view = sliding_window_view(padded, (size, size))
    return view.reshape(a.shape[0], a.shape[1], size * size)


def _window_median(win: np.ndarray) -> np.ndarray:
    # window sizes are odd, so size^2 is odd and the median is the exact
    # middle order statistic -- no averaging, stays integer-valued
    mid = win.shape[2] // 2
    return np.partition(win, mid, axis=2)[:, :, mid]


def _expect_kind(config: FilterConfig, kind: str) -> None:
    if config.kind != kind:
        raise ValueError(f"config.kind is {config.kind!r}, expected {kind!r}")


def apply_smf(image: GrayImage, config: FilterConfig) -> RestoredImage:
    """Standard median filter: every pixel becomes its window median.

    Filtering is unconditional, which is exactly what makes this baseline
    blur detail and collapse once impulses dominate the window.
    """
    _expect_kind(config, "smf")
    win = _windows(image.pixels, config.window_size)
    out = _window_median(win)
    return RestoredImage(GrayImage(out), image.width * image.height)


def apply_amf(image: GrayImage, config: FilterConfig) -> RestoredImage:
    """Adaptive median filter with a growing window.

    Per pixel: with Zmin/Zmed/Zmax over the current window, if
    Zmin < Zmed < Zmax the window is trusted and the pixel is kept when
    Zmin < Zxy < Zmax, else replaced by Zmed.  An untrusted window grows
    by 2 per side up to ``max_window_size``; if no size passes, the pixel
    becomes the largest window's median.
    """
    _expect_kind(config, "amf")
    a = image.pixels
    center = a.astype(np.int16)
    out = np.zeros(a.shape, dtype=np.int16)
    decided = np.zeros(a.shape, dtype=bool)
    replaced = np.zeros(a.shape, dtype=bool)
    zmed = center
    for size in range(config.window_size, config.max_window_size + 1, 2):
        win = _windows(a, size)
        zmin = win.min(axis=2).astype(np.int16)
        zmax = win.max(axis=2).astype(np.int16)
        zmed = _window_median(win).astype(np.int16)
        trusted = (zmin < zmed) & (zmed < zmax)
        newly = trusted & ~decided
        keep_center = (zmin < center) & (center < zmax)
        out = np.where(newly, np.where(keep_center, center, zmed), out)
        replaced |= newly & ~keep_center
        decided |= newly
    out = np.where(decided, out, zmed)
    replaced |= ~decided
    return RestoredImage(GrayImage(out.astype(np.uint8)), int(replaced.sum()))


def _apply_gated(image: GrayImage, size: int, statistic: str) -> RestoredImage:
    """Shared detector-gated kernel: trim impulses, replace noisy pixels only."""
    a = image.pixels
    noisy = (a == 0) | (a == 255)
    win = _windows(a, size).astype(np.int64)
    k = win.shape[2]
    impulse = (win == 0) | (win == 255)
    kept_count = (~impulse).sum(axis=2)
    total_all = win.sum(axis=2)
    fallback = (2 * total_all + k) // (2 * k)
    if statistic == "mean":
        kept_total = np.where(impulse, 0, win).sum(axis=2)
        primary = (2 * kept_total + kept_count) // np.maximum(2 * kept_count, 1)
    else:
        shifted = np.where(impulse, 256, win)  # impulses sort past every real value
        ordered = np.sort(shifted, axis=2)
        low_mid = np.maximum(kept_count - 1, 0) // 2
        primary = np.take_along_axis(ordered, low_mid[:, :, None], axis=2)[:, :, 0]
    replacement = np.clip(np.where(kept_count > 0, primary, fallback), 0, 255)
    out = np.where(noisy, replacement, a).astype(np.uint8)
    return RestoredImage(GrayImage(out), int(noisy.sum()))


def apply_mdbutmf(image: GrayImage, config: FilterConfig) -> RestoredImage:
    """Decision-based unsymmetric trimmed MEDIAN filter.

    Noise-free pixels pass through untouched.  A noisy pixel becomes the
    median of its window's non-impulse values (lower middle on even
    counts); when the whole window is impulses it becomes the rounded
    mean of all window values.
    """
    _expect_kind(config, "mdbutmf")
    return _apply_gated(image, config.window_size, "median")


def apply_rmf(image: GrayImage, config: FilterConfig) -> RestoredImage:
    """Detector-gated trimmed MEAN filter, this package's namesake kernel.

    Identical gating and trimming to :func:`apply_mdbutmf`, but a noisy
    pixel is replaced by the rounded mean of the surviving values; the
    all-impulse fallback is the same rounded mean of the full window.
    ``replaced_count`` equals the number of 0/255 pixels in the input.
    """
    _expect_kind(config, "rmf")
    return _apply_gated(image, config.window_size, "mean")


_APPLIERS = {
    "smf": apply_smf,
    "amf": apply_amf,
    "mdbutmf": apply_mdbutmf,
    "rmf": apply_rmf,
}


def apply_filter(image: GrayImage, config: FilterConfig) -> RestoredImage:
    """Apply the filter named by ``config.kind``."""
    return _APPLIERS[config.kind](image, config)
