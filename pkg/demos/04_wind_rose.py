"""Direction statistics: 36-sector rose, dominant directions, SVG output.

Run:  python demos/04_wind_rose.py
"""
from pathlib import Path

import numpy as np

from windassess import bin_directions, dominant_directions, rose_plot_data
from windassess.svg import rose_svg

out = Path(__file__).parent / "out"
out.mkdir(exist_ok=True)
rng = np.random.default_rng(4)

# One dominant direction (Thumrait-like) and a tight two-lobed regime.
single = np.degrees(rng.vonmises(np.radians(160), 12.0, 5000)) % 360
bimodal = np.concatenate([
    np.degrees(rng.vonmises(np.radians(220), 40.0, 3000)),
    np.degrees(rng.vonmises(np.radians(40), 40.0, 2000)),
]) % 360
speeds = rng.weibull(2.0, bimodal.size) * 5.0  # some fall below the 0.5 m/s calm limit

for name, dirs, spd in (("single", single, None), ("bimodal", bimodal, speeds)):
    rose = bin_directions(dirs, speeds=spd)
    dom = dominant_directions(rose)
    line = f"{name:8s} primary {dom.primary_sector:5g} deg {dom.compass_label:3s} ({dom.primary_share:.1%})"
    if dom.secondary_sector is not None:
        line += f", secondary {dom.secondary_sector:g} deg ({dom.secondary_share:.1%})"
    line += f"; calm/invalid excluded: {rose.n_calm_or_invalid}"
    print(line)
    (out / f"rose_{name}.svg").write_text(rose_svg(rose_plot_data(rose), title=name))
print(f"wrote SVGs to {out}")
