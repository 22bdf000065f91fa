"""Weibull wind-resource assessment: MLE fitting, energy metrics, altitude correction and wind roses."""

__version__ = "0.1.0"

from .analysis import AnalysisConfig, SiteReport, analyze_model, analyze_station, histogram, report_table, reproduce_paper
from .atmosphere import air_density, correct_metrics, density_ratio, pressure_ratio
from .errors import (
    AccuracyError,
    ConvergenceError,
    DegenerateDataError,
    DomainError,
    InsufficientDataError,
    SchemaError,
    UsageError,
    WindAssessError,
)
from .estimation import FitResult, SolverOptions, arithmetic_mean, fit_mle, log_likelihood, validate_fit
from .metrics import (
    SiteMetrics,
    exceedance_probability,
    instantaneous_power_density,
    naep,
    site_metrics,
    wind_power_density,
)
from .observations import ObservationSeries, ingest_observations
from .powercurve import PowerCurve, load_curve_csv, standard_curve
from .special import gamma_fn
from .stations import StationMeta, builtin_registry, load_registry
from .weibull import CharacteristicSpeeds, WeibullModel
from .windrose import WindRose, bin_directions, dominant_directions, rose_plot_data
