"""Market averages of pairwise series, response matrices, rankings.

The pairwise store used throughout is a mapping ``{(i, j): ResponseSeries}``
holding one kind and one convention.  ``(i, j)`` means "price (or later sign)
of i, sign of j": the passive average of i runs over j, and the active
average of j runs over i.  Self pairs are never averaged.
"""

from __future__ import annotations

import json
import math
import os
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .errors import (DegenerateMax, DegenerateVariance, EmptySector, MissingPairSeries,
                     MissingSeries)
from .ingest import SectorMap
from .response import CORRELATOR, ResponseSeries, convention_name
from .signs import ActivityStats

PASSIVE = "passive"
ACTIVE = "active"
DIRECTIONS = (PASSIVE, ACTIVE)

SeriesStore = Mapping[tuple[str, str], ResponseSeries]


@dataclass(frozen=True)
class AverageSeries:
    direction: str
    anchor: str
    universe: frozenset
    kind: str
    convention: str
    taus: np.ndarray
    values: np.ndarray
    stderr: np.ndarray
    n_pairs: np.ndarray
    label: str = "market"

    def __post_init__(self):
        if self.anchor in self.universe:
            raise ValueError(f"{self.anchor} cannot be averaged with itself")
        object.__setattr__(self, "convention", convention_name(self.convention))
        object.__setattr__(self, "taus", np.asarray(self.taus, dtype=np.int64))
        object.__setattr__(self, "values", np.asarray(self.values, dtype=np.float64))
        object.__setattr__(self, "stderr", np.asarray(self.stderr, dtype=np.float64))
        object.__setattr__(self, "n_pairs", np.asarray(self.n_pairs, dtype=np.int64))

    @property
    def points(self) -> dict[int, tuple[float, float, int]]:
        return {int(t): (float(v), float(s), int(k)) for t, v, s, k in
                zip(self.taus, self.values, self.stderr, self.n_pairs)}

    def value(self, tau: int) -> float:
        hit = np.flatnonzero(self.taus == tau)
        if not len(hit):
            raise KeyError(tau)
        return float(self.values[hit[0]])

    def metadata(self) -> dict:
        return {"direction": self.direction, "anchor": self.anchor, "kind": self.kind,
                "convention": self.convention, "label": self.label,
                "universe": sorted(self.universe)}

    def to_csv(self) -> str:
        rows = ["tau,value,stderr,n_pairs"]
        rows += [f"{t},{v!r},{s!r},{k}" for t, v, s, k in
                 zip(self.taus.tolist(), self.values.tolist(), self.stderr.tolist(),
                     self.n_pairs.tolist())]
        return "\n".join(rows) + "\n"

    def save(self, directory: str | os.PathLike, **extra) -> Path:
        d = Path(directory)
        d.mkdir(parents=True, exist_ok=True)
        stem = self.anchor if self.label == "market" else f"{self.anchor}__{self.label}"
        (d / f"{stem}.csv").write_text(self.to_csv())
        meta = self.metadata()
        meta.update(extra)
        (d / f"{stem}.json").write_text(json.dumps(meta, indent=2, sort_keys=True) + "\n")
        return d / f"{stem}.csv"

    @classmethod
    def load(cls, csv_path: str | os.PathLike) -> "AverageSeries":
        csv_path = Path(csv_path)
        meta = json.loads(csv_path.with_suffix(".json").read_text())
        lines = [ln for ln in csv_path.read_text().splitlines()[1:] if ln.strip()]
        cols = list(zip(*(ln.split(",") for ln in lines))) or [(), (), (), ()]
        return cls(meta["direction"], meta["anchor"], frozenset(meta["universe"]),
                   meta["kind"], meta["convention"],
                   [int(x) for x in cols[0]], [float(x) for x in cols[1]],
                   [float(x) for x in cols[2]], [int(x) for x in cols[3]],
                   meta.get("label", "market"))


def _pair(direction: str, anchor: str, partner: str) -> tuple[str, str]:
    if direction == PASSIVE:
        return anchor, partner
    if direction == ACTIVE:
        return partner, anchor
    raise ValueError(f"direction must be passive or active, not {direction!r}")


def _mean_and_stderr(values: list[float], stderrs: list[float]) -> tuple[float, float]:
    n = len(values)
    mean = math.fsum(values) / n
    if n == 1:
        return mean, stderrs[0]
    var = math.fsum((v - mean) ** 2 for v in values) / (n - 1)
    return mean, math.sqrt(var / n)


def average(anchor: str, partners: Iterable[str], series: SeriesStore,
            direction: str = PASSIVE, label: str = "market") -> AverageSeries:
    """Unweighted mean over partners of the pairwise series, self pair excluded."""
    universe = sorted(set(partners) - {anchor})
    if not universe:
        raise EmptySector(f"no partner of {anchor} to average over")
    keys = [_pair(direction, anchor, p) for p in universe]
    missing = [k for k in keys if k not in series]
    if missing:
        raise MissingPairSeries(missing)
    members = [series[k] for k in keys]
    kinds = {s.kind for s in members}
    convs = {s.convention for s in members}
    if len(convs) != 1 or (CORRELATOR in kinds and len(kinds) > 1):
        raise ValueError(f"mixed series in store: kinds={kinds}, conventions={convs}")

    lookup = [s.points for s in members]
    taus = sorted(set().union(*lookup))
    rows = []
    for tau in taus:
        got = [pts[tau] for pts in lookup if tau in pts]
        mean, se = _mean_and_stderr([g[0] for g in got], [g[1] for g in got])
        rows.append((tau, mean, se, len(got)))
    cols = list(zip(*rows)) if rows else [(), (), (), ()]
    kind = members[0].kind if kinds == {CORRELATOR} else "cross_response"
    return AverageSeries(direction, anchor, frozenset(universe), kind, convs.pop(),
                         *cols, label=label)


def passive_average(i: str, partners: Iterable[str], series: SeriesStore) -> AverageSeries:
    """How stock i is moved by the others: mean of (i, j) over j."""
    return average(i, partners, series, PASSIVE)


def active_average(j: str, partners: Iterable[str], series: SeriesStore) -> AverageSeries:
    """How stock j moves the others: mean of (i, j) over i."""
    return average(j, partners, series, ACTIVE)


def correlator_average(anchor: str, direction: str, partners: Iterable[str],
                       series: SeriesStore) -> AverageSeries:
    """Passive or active average of sign correlators."""
    wrong = {s.kind for s in series.values()} - {CORRELATOR}
    if wrong:
        raise ValueError(f"correlator_average needs sign_correlator series, got {wrong}")
    return average(anchor, partners, series, direction)


def sector_average(anchor: str, direction: str, sector: str, sector_map: SectorMap,
                   series: SeriesStore, symbols: Iterable[str] | None = None) -> AverageSeries:
    """Average restricted to one sector's members (optionally those in ``symbols``)."""
    members = set(sector_map.members(sector))
    if symbols is not None:
        members &= set(symbols)
    members.discard(anchor)
    if not members:
        raise EmptySector(f"sector {sector} has no member other than {anchor}")
    return average(anchor, members, series, direction, label=sector)


@dataclass(frozen=True)
class ResponseMatrix:
    """Pairwise responses at one lag divided by the largest off-diagonal magnitude.

    Rows are impacted stocks i, columns impacting stocks j.  The diagonal of
    ``rho`` is NaN; self values (unnormalized, NaN if unknown) are kept in
    ``diagonal``.
    """

    tau: int
    convention: str
    symbols: tuple[str, ...]
    rho: np.ndarray
    max_abs: float
    diagonal: np.ndarray
    sectors: tuple[str, ...] = ()

    def sector_boundaries(self) -> list[dict]:
        out = []
        for k, sec in enumerate(self.sectors):
            if out and out[-1]["sector"] == sec:
                out[-1]["end"] = k + 1
            else:
                out.append({"sector": sec, "start": k, "end": k + 1})
        return out

    def to_csv(self) -> str:
        rows = ["i\\j," + ",".join(self.symbols)]
        for s, row in zip(self.symbols, self.rho.tolist()):
            rows.append(s + "," + ",".join("" if math.isnan(v) else repr(v) for v in row))
        return "\n".join(rows) + "\n"

    def sidecar(self) -> dict:
        return {"tau": self.tau, "convention": self.convention, "max_abs": self.max_abs,
                "symbols": list(self.symbols),
                "sector_boundaries": self.sector_boundaries(),
                "diagonal": [None if math.isnan(v) else v for v in self.diagonal.tolist()]}


def response_matrix(symbols: Iterable[str], tau: int, series: SeriesStore,
                    sector_map: SectorMap | None = None) -> ResponseMatrix:
    """Normalized cross-response matrix at lag ``tau``.

    With a ``sector_map`` the symbols are first grouped by sector.
    """
    symbols = list(symbols)
    if sector_map is not None:
        symbols = sector_map.order(symbols)
    n = len(symbols)
    raw = np.full((n, n), np.nan)
    missing = []
    for a, si in enumerate(symbols):
        for b, sj in enumerate(symbols):
            s = series.get((si, sj))
            if s is None or tau not in s.points:
                if a != b:
                    missing.append((si, sj))
                continue
            raw[a, b] = s.value(tau)
    if missing:
        raise MissingPairSeries(missing)
    diagonal = raw.diagonal().copy()
    np.fill_diagonal(raw, np.nan)
    off = np.abs(raw[~np.eye(n, dtype=bool)])
    max_abs = float(off.max()) if off.size else 0.0
    if not max_abs > 0:
        raise DegenerateMax(f"all off-diagonal responses are zero at tau={tau}")
    conv = next(iter(series.values())).convention
    sectors = tuple(sector_map[s] for s in symbols) if sector_map is not None else ()
    return ResponseMatrix(tau, conv, tuple(symbols), raw / max_abs, max_abs, diagonal, sectors)


@dataclass(frozen=True)
class Ranking:
    direction: str
    tau: int
    convention: str
    entries: list = field(default_factory=list)
    scale: float = 1.0
    by_abs: bool = False

    @property
    def symbols(self) -> list[str]:
        return [s for s, _ in self.entries]

    def to_csv(self, sector_map: Mapping[str, str] | None = None) -> str:
        rows = ["rank,symbol,value,sector"]
        for r, (sym, v) in enumerate(self.entries, start=1):
            sec = sector_map.get(sym, "") if sector_map is not None else ""
            rows.append(f"{r},{sym},{v!r},{sec}")
        return "\n".join(rows) + "\n"


def rank_stocks(averages: Mapping[str, AverageSeries], tau: int, k: int,
                scale: float = 1.0, by_abs: bool = False) -> Ranking:
    """Top-k stocks by average response at ``tau``, divided by ``scale``.

    ``scale`` is the normalizer of the response matrix at that lag; being
    positive it never changes the order.  Ties go to the lexicographically
    smaller symbol.
    """
    if not scale > 0:
        raise ValueError("scale must be positive")
    vals = {}
    for sym, avg in averages.items():
        if tau not in avg.points:
            raise MissingSeries(f"no average for {sym} at tau={tau}")
        vals[sym] = avg.value(tau) / scale
    key = (lambda s: (-abs(vals[s]), s)) if by_abs else (lambda s: (-vals[s], s))
    order = sorted(vals, key=key)[: max(k, 0)]
    first = next(iter(averages.values()), None)
    return Ranking(first.direction if first else "", tau,
                   first.convention if first else "", [(s, vals[s]) for s in order],
                   scale, by_abs)


def trade_count_correlation(active: Mapping[str, AverageSeries | float],
                            stats: Mapping[str, ActivityStats], tau: int = 60) -> float:
    """Pearson correlation between active average response and daily trade count."""
    symbols = sorted(active)
    if len(symbols) < 3:
        raise ValueError("need at least three symbols")
    missing = [s for s in symbols if s not in stats]
    if missing:
        raise MissingSeries(f"no activity stats for {missing}")
    x = [v.value(tau) if isinstance(v, AverageSeries) else float(v)
         for v in (active[s] for s in symbols)]
    y = [float(stats[s].avg_daily_trades) for s in symbols]
    mx, my = math.fsum(x) / len(x), math.fsum(y) / len(y)
    dx = [a - mx for a in x]
    dy = [b - my for b in y]
    sxx, syy = math.fsum(a * a for a in dx), math.fsum(b * b for b in dy)
    if sxx == 0 or syy == 0:
        raise DegenerateVariance("one of the two variables is constant")
    return math.fsum(a * b for a, b in zip(dx, dy)) / math.sqrt(sxx * syy)
