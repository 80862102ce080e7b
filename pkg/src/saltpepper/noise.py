"""Fixed-valued impulse (salt-and-pepper) noise injection.

A corrupted pixel takes exactly the maximum (255, "salt") or minimum
(0, "pepper") intensity.  Injection is a pure function of the image and a
:class:`NoiseSpec`, so corrupted test inputs are reproducible forever.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .raster import GrayImage

__all__ = ["NoiseSpec", "inject"]

PEPPER = 0
SALT = 255


@dataclass(frozen=True)
class NoiseSpec:
    """Parameters that fully determine one corruption pass.

    density: fraction of pixels corrupted, in [0, 1].
    salt_fraction: fraction of corrupted pixels set to 255, the rest
        become 0.  Defaults to the conventional even split.
    seed: unsigned 64-bit RNG seed.
    """

    density: float
    salt_fraction: float = 0.5
    seed: int = 0

    def __post_init__(self):
        if not 0.0 <= self.density <= 1.0:
            raise ValueError(f"density must lie in [0, 1], got {self.density}")
        if not 0.0 <= self.salt_fraction <= 1.0:
            raise ValueError(f"salt_fraction must lie in [0, 1], got {self.salt_fraction}")
        if not 0 <= self.seed < 2**64:
            raise ValueError(f"seed must be an unsigned 64-bit integer, got {self.seed}")


def inject(image: GrayImage, spec: NoiseSpec) -> GrayImage:
    """Corrupt an image with salt-and-pepper noise.

    Each pixel is independently selected with probability ``spec.density``;
    a selected pixel becomes 255 with probability ``spec.salt_fraction``
    and 0 otherwise.  Unselected pixels are copied bit-exactly.  A pixel
    that is already 0 or 255 may be "corrupted" to the same value; the
    Bernoulli model is applied uniformly.

    RNG discipline, fixed for the life of the repository: a NumPy PCG64
    generator (``np.random.default_rng``) is seeded with ``spec.seed`` and
    asked for two row-major float64 arrays of the image's shape -- the
    first drives per-pixel selection, the second the salt/pepper choice.
    Each pixel's draws are tied to its position, never to evaluation
    order, so the output depends only on ``(image, spec)``.
    """
    rng = np.random.default_rng(spec.seed)
    shape = image.pixels.shape
    u_select = rng.random(shape)
    u_flip = rng.random(shape)
    impulses = np.where(u_flip < spec.salt_fraction, SALT, PEPPER).astype(np.uint8)
    out = np.where(u_select < spec.density, impulses, image.pixels)
    return GrayImage(out)
