"""
Benchmarking filters across noise densities
===========================================

Sweep all four filters over 10%..90% noise, then export the results as a
CSV table and a dependency-free SVG chart.
"""

from pathlib import Path

from saltpepper import (
    BenchGrid,
    FilterConfig,
    run_grid,
    synthetic_test_image,
    to_csv,
    to_svg,
)

# one grid = one source image x densities x filters; per density the
# image is corrupted once and every filter sees that same noisy input
grid = BenchGrid(
    source=synthetic_test_image(),
    densities=tuple(range(10, 100, 10)),
    filters=tuple(FilterConfig(kind=k) for k in ("smf", "amf", "mdbutmf", "rmf")),
    seed=0,
    image_name="synthetic",
)

rows = run_grid(grid)

# print the PSNR column as a quick text matrix: one row per density
print(f"{'density':<10}" + "".join(f"{f.kind:>10}" for f in grid.filters))
for pct in grid.densities:
    cells = [r for r in rows if r.density_pct == pct]
    print(f"{pct:>6}%   " + "".join(f"{r.psnr_db:>10.2f}" for r in cells))

# metric columns are reproducible from the grid seed; only elapsed_ms
# changes between runs
out_dir = Path(__file__).parent / "output"
out_dir.mkdir(exist_ok=True)

csv_path = out_dir / "sweep.csv"
csv_path.write_bytes(to_csv(rows))
print(f"\nwrote {csv_path} ({len(rows)} rows)")

# the SVG is hand-assembled XML: one polyline per filter, no plotting
# library required -- open it in any browser
svg_path = out_dir / "sweep.svg"
svg_path.write_bytes(to_svg(rows))
print(f"wrote {svg_path}")
