"""
PGM files and window extraction
===============================

Write images to disk as PGM (the only on-disk format), read them back
bit-exactly, and inspect pixel neighborhoods at image borders.
"""

from pathlib import Path

import numpy as np

from saltpepper import GrayImage, read_pgm, window_at, write_pgm

# build a tiny image from a flat row-major list
img = GrayImage.from_flat(3, 3, [10, 20, 30, 40, 50, 60, 70, 80, 90])
print(f"image: {img!r}, pixels:\n{img.pixels}")

# binary P5 is compact; ASCII P2 is human-readable -- both round-trip
# bit-exactly through read_pgm
out_dir = Path(__file__).parent / "output"
out_dir.mkdir(exist_ok=True)

binary_path = out_dir / "tiny.pgm"
binary_path.write_bytes(write_pgm(img, "binary"))

ascii_path = out_dir / "tiny_ascii.pgm"
ascii_path.write_bytes(write_pgm(img, "ascii"))
print(f"\nASCII form of {ascii_path.name}:")
print(ascii_path.read_text(), end="")

back = read_pgm(binary_path.read_bytes())
print(f"binary round-trip identical: {back == img}")

# comments are legal in the header; maxval must be exactly 255
commented = b"P2\n# a 1x2 strip\n2 1\n255\n128 7\n"
print(f"parsed commented PGM: {read_pgm(commented).flat()}")

# window_at extracts a size x size neighborhood; at borders the image is
# replicate-padded (indices clamp to the nearest edge), so no artificial
# 0 or 255 values appear that a noise detector could mistake for impulses
center = window_at(img, 1, 1, 3)
corner = window_at(img, 0, 0, 3)
print(f"\ninterior window values: {center.values}")
print(f"corner window values:   {corner.values}")
print(f"corner center_value:    {corner.center_value}")

# the same clamping serves any odd window size
big = window_at(img, 0, 2, 5)
print(f"5x5 window at the top-right corner has {len(big.values)} values, "
      f"max {max(big.values)}")
