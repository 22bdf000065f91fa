"""Fitting a station: observations CSV -> maximum-likelihood Weibull -> validation.

Run:  python demos/02_fit_station.py
"""
from pathlib import Path

import numpy as np

from windassess import WeibullModel, fit_mle, histogram, ingest_observations, validate_fit
from windassess.observations import write_observations
from windassess.svg import histogram_svg

out = Path(__file__).parent / "out"
out.mkdir(exist_ok=True)

# Build a year of hourly synthetic observations from a known model, with some calms.
truth = WeibullModel(2.41716, 5.52679)
rng = np.random.default_rng(7)
speeds = truth.sample(8760, rng=rng)
speeds[rng.random(speeds.size) < 0.03] = 0.0
directions = np.round(rng.vonmises(np.radians(200), 3.0, speeds.size) % (2 * np.pi) * 180 / np.pi / 10) * 10
times = np.datetime64("2021-01-01T00:00:00") + np.arange(speeds.size) * np.timedelta64(1, "h")
csv_path = out / "sur_synthetic.csv"
write_observations(csv_path, "sur", times, speeds, directions)

series = ingest_observations(csv_path)
print(f"rows {series.n_raw}, kept {len(series)}, dropped (calm/invalid) {series.n_dropped}")

fit = fit_mle(series.speeds)
print(f"fitted k = {fit.model.k:.5f} (true {truth.k}), c = {fit.model.c:.5f} (true {truth.c})")
print(f"log-likelihood {fit.log_likelihood:.3f} after {fit.iterations} Newton iterations")

verdict = validate_fit(fit, threshold=0.02)
print(f"distribution mean {fit.distribution_mean:.5f} vs arithmetic mean {fit.arithmetic_mean:.5f}: "
      f"gap {verdict.gap:.3%} -> {'pass' if verdict.passed else 'fail'}")

# Histogram with 0.5 m/s bins, density-normalized so it overlays the PDF.
h = histogram(series.speeds, 0.5)
grid = np.linspace(0, 12, 241)
svg = histogram_svg(h.edges, h.densities, list(zip(grid, fit.model.pdf(grid))), title="Sur (synthetic)")
(out / "sur_histogram.svg").write_text(svg)
print(f"wrote {out / 'sur_histogram.svg'}")
