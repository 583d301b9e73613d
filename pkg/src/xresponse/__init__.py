"""Cross-responses and trade-sign correlators between stocks."""

from .aggregate import (AverageSeries, Ranking, ResponseMatrix, active_average, average,
                        correlator_average, passive_average, rank_stocks, response_matrix,
                        sector_average, trade_count_correlation)
from .fit import PowerLawFit, fit_power_law, model_eval
from .ingest import SectorMap, Session, TickTable, parse_ticks, read_sector_map
from .response import (EXCLUDE, INCLUDE, LagSpec, ResponseSeries, compute_pairs, cross_response,
                       pair_series, sign_cross_correlator)
from .signs import SecondGrid, build_grid, midpoint_series, second_signs, trade_signs
from .synth import SynthConfig, expected_response, expected_sign_correlation, generate

__version__ = "0.1.0"

__all__ = [
    "AverageSeries", "EXCLUDE", "INCLUDE", "LagSpec", "PowerLawFit", "Ranking",
    "ResponseMatrix", "ResponseSeries", "SecondGrid", "SectorMap", "Session", "SynthConfig",
    "TickTable", "active_average", "average", "build_grid", "compute_pairs",
    "correlator_average", "cross_response", "expected_response", "expected_sign_correlation",
    "fit_power_law", "generate", "midpoint_series", "model_eval", "pair_series",
    "parse_ticks", "passive_average", "rank_stocks", "read_sector_map", "response_matrix",
    "second_signs", "sector_average", "sign_cross_correlator", "trade_count_correlation",
    "trade_signs",
]
