"""Brute-force reference implementations used only by the tests.

Everything here is written with explicit per-pixel loops, plain Python
lists, and exact Fraction arithmetic.  It deliberately shares no code
with the package under test so the two can disagree: these functions are
the oracle the vectorized kernels are checked against bit-for-bit.
"""

import math
from fractions import Fraction

__all__ = [
    "ref_window",
    "ref_smf",
    "ref_amf",
    "ref_rmf",
    "ref_mdbutmf",
    "ref_mse",
    "ref_psnr",
]


def _round_half_up(q: Fraction) -> int:
    return math.floor(q + Fraction(1, 2))


def _clamp(i: int, n: int) -> int:
    if i < 0:
        return 0
    if i >= n:
        return n - 1
    return i


def _is_extreme(v: int) -> bool:
    return v == 0 or v == 255


def ref_window(pixels: list[list[int]], row: int, col: int, size: int) -> list[int]:
    """Row-major size x size neighborhood with clamped (replicate) indexing."""
    h = len(pixels)
    w = len(pixels[0])
    r = size // 2
    vals = []
    for dr in range(-r, r + 1):
        for dc in range(-r, r + 1):
            vals.append(pixels[_clamp(row + dr, h)][_clamp(col + dc, w)])
    return vals


def _mean_replacement(vals: list[int]) -> int:
    return min(_round_half_up(Fraction(sum(vals), len(vals))), 255)


def _median_odd(vals: list[int]) -> int:
    ordered = sorted(vals)
    return ordered[len(ordered) // 2]


def _coords(h: int, w: int, order: str) -> list[tuple[int, int]]:
    coords = [(r, c) for r in range(h) for c in range(w)]
    if order == "reverse":
        coords.reverse()
    elif order != "forward":
        raise ValueError(f"unknown order {order!r}")
    return coords


def ref_smf(pixels: list[list[int]], size: int = 3) -> list[list[int]]:
    """Unconditional median filter: every pixel becomes its window median."""
    h, w = len(pixels), len(pixels[0])
    out = [row[:] for row in pixels]
    for r, c in _coords(h, w, "forward"):
        out[r][c] = _median_odd(ref_window(pixels, r, c, size))
    return out


def ref_amf(pixels: list[list[int]], size: int = 3, max_size: int = 7) -> list[list[int]]:
    """Adaptive median filter with a window growing from size to max_size."""
    h, w = len(pixels), len(pixels[0])
    out = [row[:] for row in pixels]
    for r, c in _coords(h, w, "forward"):
        s = size
        while True:
            vals = sorted(ref_window(pixels, r, c, s))
            zmin, zmax = vals[0], vals[-1]
            zmed = vals[len(vals) // 2]
            if zmin < zmed < zmax:
                center = pixels[r][c]
                out[r][c] = center if zmin < center < zmax else zmed
                break
            s += 2
            if s > max_size:
                out[r][c] = zmed
                break
    return out


def _gated(pixels, order, replacement):
    h, w = len(pixels), len(pixels[0])
    out = [row[:] for row in pixels]
    for r, c in _coords(h, w, order):
        if not _is_extreme(pixels[r][c]):
            continue
        vals = ref_window(pixels, r, c, 3)
        kept = [v for v in vals if not _is_extreme(v)]
        out[r][c] = replacement(kept) if kept else _mean_replacement(vals)
    return out


def ref_rmf(pixels: list[list[int]], order: str = "forward") -> list[list[int]]:
    """Gated trimmed-mean filter, windows always read from the input."""
    return _gated(pixels, order, _mean_replacement)


def ref_mdbutmf(pixels: list[list[int]], order: str = "forward") -> list[list[int]]:
    """Gated trimmed-median filter (lower middle on even survivor counts)."""

    def lower_median(kept):
        ordered = sorted(kept)
        return ordered[(len(ordered) - 1) // 2]

    return _gated(pixels, order, lower_median)


def ref_mse(a: list[list[int]], b: list[list[int]]) -> Fraction:
    """Exact mean squared error as a Fraction."""
    h, w = len(a), len(a[0])
    total = 0
    for r in range(h):
        for c in range(w):
            d = a[r][c] - b[r][c]
            total += d * d
    return Fraction(total, h * w)


def ref_psnr(m: Fraction) -> float:
    """PSNR in dB for a nonzero MSE."""
    return 10.0 * math.log10(255 * 255 / m)
