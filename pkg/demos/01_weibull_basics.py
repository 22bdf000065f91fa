"""Weibull wind-speed model: shape and scale, characteristic speeds.

Run:  python demos/01_weibull_basics.py
Writes demos/out/weibull_shapes.png when matplotlib is available.
"""
from pathlib import Path

import numpy as np

from windassess import WeibullModel
from windassess.weibull import to_kmh

out = Path(__file__).parent / "out"
out.mkdir(exist_ok=True)

# A model is just (k, c). Thumrait's published fit:
m = WeibullModel(k=2.16538, c=6.38352)
s = m.characteristic_speeds()
print("Thumrait")
for name, v in zip(("mode", "median", "mean", "max_energy"), s.as_tuple()):
    print(f"  {name:10s} {v:8.5f} m/s  ({to_kmh(v):6.3f} km/h)")
print(f"  P(v > 6 m/s) = {m.sf(6.0):.4f}")

# The mode is where the density peaks; max_energy is where v^3 f(v) peaks.
v = np.linspace(0, 15, 1501)
print(f"  grid argmax f      -> {v[np.argmax(m.pdf(v))]:.2f}")
print(f"  grid argmax v^3 f  -> {v[np.argmax(v**3 * m.pdf(v))]:.2f}")

# The ordering of mode/median/mean depends on k; only max_energy always comes last.
for k in (1.5, 2.0, 3.0, 3.6):
    sp = WeibullModel(k, 6.0).characteristic_speeds()
    order = sorted(zip(sp.as_tuple(), ("mode", "median", "mean", "maxE")))
    print(f"  k={k}: " + " < ".join(name for _, name in order))

try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    plt = None

if plt is not None:
    fig, (top, bottom) = plt.subplots(2, 1, figsize=(6, 7), sharex=True)
    for k in (1.0, 1.5, 2.0, 3.0, 4.0):
        mk = WeibullModel(k, 6.0)
        top.plot(v[1:], mk.pdf(v[1:]), label=f"k={k}")
        bottom.plot(v, mk.cdf(v), label=f"k={k}")
    top.set_ylabel("f (s/m)")
    bottom.set_ylabel("F")
    bottom.set_xlabel("wind speed (m/s)")
    top.legend()
    fig.savefig(out / "weibull_shapes.png", dpi=120)
    print(f"wrote {out / 'weibull_shapes.png'}")
