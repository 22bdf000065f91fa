"""Published Weibull parameters and derived values for the 11 Omani stations.

Used as expected values by :func:`windassess.analysis.reproduce_paper`.
P6 values are stored as fractions (the source prints percentages).
"""

STATION_ORDER = (
    "seeb", "salalah", "buraimi", "masirah", "thumrait",
    "sur", "khasab", "majis", "fahud", "saiq",
)  # fmt: skip

# station: (k, c, distribution mean, arithmetic mean)
PARAMS = {
    "seeb": (3.10993, 3.15723, 2.82395, 2.83633),
    "salalah": (2.71706, 3.6477, 3.24455, 3.25589),
    "buraimi": (3.13507, 3.6188, 3.23801, 3.25946),
    "masirah": (2.36673, 6.06795, 5.37782, 5.36092),
    "thumrait": (2.16538, 6.38352, 5.65326, 5.62417),
    "sur": (2.41716, 5.52679, 4.90007, 4.89146),
    "khasab": (2.44541, 3.24504, 2.87775, 2.87921),
    "majis": (3.51997, 2.95436, 2.65898, 2.68024),
    "fahud": (2.56958, 4.80451, 4.26596, 4.25816),
    "saiq": (2.50194, 3.66984, 3.25618, 3.26445),
}

# station: (mode, median, mean, max_energy), m/s
SPEEDS = {
    "seeb": (2.78696, 2.80623, 2.82395, 3.70385),
    "salalah": (3.0808, 3.1874, 3.24455, 4.46882),
    "buraimi": (3.20147, 3.21953, 3.23801, 4.23565),
    "masirah": (4.81155, 5.19741, 5.37782, 7.86025),
    "thumrait": (4.79514, 5.38953, 5.65326, 8.63516),
    "sur": (4.43139, 4.74921, 4.90007, 7.09246),
    "khasab": (2.6172, 2.79337, 2.87775, 4.14345),
    "majis": (2.68676, 2.66221, 2.65898, 3.35718),
    "fahud": (3.96585, 4.16585, 4.26596, 6.011),
    "saiq": (2.99272, 3.16976, 3.25618, 4.64106),
}

# station: (WPD W/m^2, P6 fraction, NAEP GWh/MWp/yr)
METRICS = {
    "seeb": (18.9981, 0.06328e-2, 0.062554),
    "salalah": (31.1725, 2.095e-2, 0.176887),
    "buraimi": (28.5201, 0.7597e-2, 0.142298),
    "masirah": (156.628, 37.77e-2, 1.41912),
    "thumrait": (196.048, 41.71e-2, 1.72687),
    "sur": (116.562, 29.53e-2, 1.03834),
    "khasab": (23.4041, 1.116e-2, 0.115041),
    "majis": (14.9461, 0.0005519e-2, 0.0280523),
    "fahud": (73.5544, 17.03e-2, 0.601873),
    "saiq": (33.3375, 3.267e-2, 0.203271),
}

# station: (rho kg/m^3, printed sigma, WPD', NAEP')
CORRECTED = {
    "seeb": (1.2241, 0.99905, 18.9835, 0.062506),
    "salalah": (1.2226, 0.99763, 31.1127, 0.176548),
    "buraimi": (1.1902, 0.96506, 27.7104, 0.138258),
    "masirah": (1.2228, 0.99775, 156.3425, 1.416533),
    "thumrait": (1.1710, 0.94586, 187.4080, 1.650765),
    "sur": (1.2234, 0.99834, 116.4054, 1.036945),
    "khasab": (1.2246, 0.99964, 23.3974, 0.115008),
    "majis": (1.2245, 0.99953, 14.9404, 0.028042),
    "fahud": (1.2051, 0.98001, 72.3614, 0.592111),
    "saiq": (1.0315, 0.80872, 28.0719, 0.171165),
}

DUQM = {
    "k": 1.88304,
    "c": 4.97057,
    "mode": 3.32471,
    "median": 4.09144,
    "mean": 4.41202,
    "arithmetic_mean": 4.39541,
    "max_energy": 7.30000,
    "wpd": 106.985,
    "p6": 24.04e-2,
    "naep": 0.92686,
}

# Polynomial fit quality of the standard power curve, kW
CURVE_FIT = {"mad": 3.39, "rmse": 4.51, "max_abs_dev": 11.87, "argmax_speed": 11.0, "p_at_11": 882.80}
