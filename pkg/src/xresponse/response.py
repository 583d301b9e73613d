"""Pairwise price responses and trade-sign correlators on the one-second grid.

For a pair (i, j) and lag tau the response averages the log midpoint change
of stock i over ``[t, t + tau]`` times the sign of stock j at ``t``; the sign
correlator averages ``eps_i(t + tau) * eps_j(t)``.  Two conventions exist for
seconds where ``eps_j(t) == 0``:

* ``include_zeros`` averages over every valid second,
* ``exclude_zeros`` averages only over seconds where stock j traded.

Both conventions are computed from one pass over the same valid seconds, so
their numerators are the same number and the two values differ exactly by the
fraction of valid seconds with a nonzero sign.

Numerators are accumulated with :func:`math.fsum`, which is exactly rounded and hence
independent of summation order; results do not depend on how work is split.
"""

from __future__ import annotations

import datetime as dt
import json
import math
import os
import re
from collections.abc import Iterable, Mapping
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .errors import NoValidSamples
from .signs import SecondGrid

INCLUDE = "include_zeros"
EXCLUDE = "exclude_zeros"
CONVENTIONS = (INCLUDE, EXCLUDE)
CONVENTION_ALIASES = {"inc0": INCLUDE, "exc0": EXCLUDE, INCLUDE: INCLUDE, EXCLUDE: EXCLUDE}
SHORT_NAMES = {INCLUDE: "inc0", EXCLUDE: "exc0"}

CROSS = "cross_response"
SELF = "self_response"
CORRELATOR = "sign_correlator"
KINDS = (CROSS, SELF, CORRELATOR)

DEFAULT_LAGS = (1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144, 233, 377, 610, 987)


def convention_name(name: str) -> str:
    try:
        return CONVENTION_ALIASES[name]
    except KeyError:
        raise ValueError(f"unknown convention {name!r}") from None


@dataclass(frozen=True)
class LagSpec:
    """Strictly increasing lags in seconds.

    Lag 0 is only meaningful for sign correlators and must be allowed
    explicitly.
    """

    lags: tuple[int, ...] = DEFAULT_LAGS
    allow_zero: bool = False
    max_lag: int = 22200

    def __post_init__(self):
        lags = tuple(int(x) for x in self.lags)
        object.__setattr__(self, "lags", lags)
        if not lags:
            raise ValueError("empty lag set")
        if any(b <= a for a, b in zip(lags, lags[1:])):
            raise ValueError(f"lags must be strictly increasing: {lags}")
        lo = 0 if self.allow_zero else 1
        if lags[0] < lo:
            raise ValueError(f"lags must be >= {lo}: {lags}")
        if lags[-1] >= self.max_lag:
            raise ValueError(f"lag {lags[-1]} does not fit in a {self.max_lag}-second day")

    def __iter__(self):
        return iter(self.lags)

    def __len__(self):
        return len(self.lags)

    @classmethod
    def parse(cls, expr: str, **kw) -> "LagSpec":
        """Parse ``"1,2,60,300"``, ``"a:b"``, ``"a:b:step"`` or ``"a:b:log[N]"``.

        ``a:b:logN`` gives the distinct rounded values of N log-spaced points
        between a and b (N defaults to 15); ``a == 0`` adds lag 0 in front of a
        log grid starting at 1.
        """
        expr = expr.strip()
        if ":" not in expr:
            return cls(tuple(sorted({int(x) for x in expr.split(",") if x.strip()})), **kw)
        parts = expr.split(":")
        if len(parts) not in (2, 3):
            raise ValueError(f"bad lag expression {expr!r}")
        a, b = int(parts[0]), int(parts[1])
        if len(parts) == 2:
            return cls(tuple(range(a, b + 1)), **kw)
        m = re.fullmatch(r"log(\d*)", parts[2])
        if m:
            num = int(m.group(1) or 15)
            if a < 0 or b < max(a, 1):
                raise ValueError(f"bad log lag range {a}:{b}")
            vals = np.unique(np.rint(np.geomspace(max(a, 1), b, num)).astype(int)).tolist()
            return cls(tuple([0] * (a == 0) + vals), **kw)
        return cls(tuple(range(a, b + 1, int(parts[2]))), **kw)

    def __str__(self) -> str:
        return ",".join(map(str, self.lags))


@dataclass(frozen=True)
class ResponseSeries:
    """One response or correlator: per lag the value, standard error and sample count."""

    kind: str
    convention: str
    i: str
    j: str
    taus: np.ndarray
    values: np.ndarray
    stderr: np.ndarray
    n: np.ndarray
    days: tuple[str, ...] = ()
    extra: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown kind {self.kind!r}")
        object.__setattr__(self, "convention", convention_name(self.convention))
        object.__setattr__(self, "taus", np.asarray(self.taus, dtype=np.int64))
        object.__setattr__(self, "values", np.asarray(self.values, dtype=np.float64))
        object.__setattr__(self, "stderr", np.asarray(self.stderr, dtype=np.float64))
        object.__setattr__(self, "n", np.asarray(self.n, dtype=np.int64))

    @property
    def points(self) -> dict[int, tuple[float, float, int]]:
        return {int(t): (float(v), float(s), int(k)) for t, v, s, k in
                zip(self.taus, self.values, self.stderr, self.n)}

    def value(self, tau: int) -> float:
        hit = np.flatnonzero(self.taus == tau)
        if not len(hit):
            raise KeyError(tau)
        return float(self.values[hit[0]])

    def metadata(self) -> dict:
        return {"kind": self.kind, "convention": self.convention, "i": self.i, "j": self.j,
                "days": list(self.days)}

    def to_csv(self) -> str:
        rows = ["tau,value,stderr,n"]
        rows += [f"{t},{v!r},{s!r},{k}" for t, v, s, k in
                 zip(self.taus.tolist(), self.values.tolist(), self.stderr.tolist(),
                     self.n.tolist())]
        return "\n".join(rows) + "\n"

    def to_json(self, **extra) -> str:
        doc = self.metadata()
        doc["points"] = [[t, v, s, k] for t, v, s, k in
                         zip(self.taus.tolist(), self.values.tolist(), self.stderr.tolist(),
                             self.n.tolist())]
        doc.update(extra)
        return json.dumps(doc, indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_csv(cls, text: str, kind: str, convention: str, i: str, j: str,
                 days: Iterable[str] = ()) -> "ResponseSeries":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if not lines or lines[0].strip() != "tau,value,stderr,n":
            raise ValueError("expected header tau,value,stderr,n")
        cols = list(zip(*(ln.split(",") for ln in lines[1:]))) or [(), (), (), ()]
        return cls(kind, convention, i, j,
                   [int(x) for x in cols[0]], [float(x) for x in cols[1]],
                   [float(x) for x in cols[2]], [int(x) for x in cols[3]], tuple(days))

    def save(self, directory: str | os.PathLike, **extra) -> Path:
        """Write ``<i>__<j>.csv`` plus a JSON sidecar into ``directory``."""
        d = Path(directory)
        d.mkdir(parents=True, exist_ok=True)
        stem = f"{self.i}__{self.j}"
        (d / f"{stem}.csv").write_text(self.to_csv())
        meta = self.metadata()
        meta.update(extra)
        (d / f"{stem}.json").write_text(json.dumps(meta, indent=2, sort_keys=True) + "\n")
        return d / f"{stem}.csv"

    @classmethod
    def load(cls, csv_path: str | os.PathLike) -> "ResponseSeries":
        csv_path = Path(csv_path)
        meta = json.loads(csv_path.with_suffix(".json").read_text())
        return cls.from_csv(csv_path.read_text(), meta["kind"], meta["convention"],
                            meta["i"], meta["j"], meta.get("days", ()))


def log_return(grid: SecondGrid, t: int, tau: int) -> float | None:
    """``log(m(t + tau) / m(t))`` on one day's grid, ``None`` if a midpoint is absent."""
    if not (0 <= t and 0 <= tau and t + tau < grid.n_seconds):
        raise IndexError(f"t={t}, tau={tau} outside the {grid.n_seconds}-second day")
    a, b = grid.mid[t], grid.mid[t + tau]
    if np.isnan(a) or np.isnan(b):
        return None
    return math.log(b / a)


def _day_terms(gi: SecondGrid, gj: SecondGrid, tau: int, correlator: bool):
    """Products at valid seconds of one day.

    Returns ``(n_valid, products_where_sign_nonzero)``.
    """
    n = gi.n_seconds
    if gj.n_seconds != n:
        raise ValueError(f"{gi.symbol}/{gj.symbol} {gi.day}: grids differ in length")
    if tau >= n:
        return 0, np.empty(0)
    sj = gj.eps[: n - tau]
    if correlator:
        nz = sj != 0
        return n - tau, gi.eps[tau:][nz] * sj[nz].astype(np.float64)
    a, b = gi.mid[: n - tau], gi.mid[tau:]
    valid = ~(np.isnan(a) | np.isnan(b))
    nz = valid & (sj != 0)
    # libm log, so results do not depend on numpy's vectorized log kernels
    x = np.fromiter(map(math.log, (b[nz] / a[nz]).tolist()), np.float64, np.count_nonzero(nz))
    return int(np.count_nonzero(valid)), x * sj[nz]


def _check_days(grids_i: Mapping[dt.date, SecondGrid], grids_j: Mapping[dt.date, SecondGrid]):
    if set(grids_i) != set(grids_j):
        raise ValueError("grid_i and grid_j must cover identical days "
                         "(restrict both to their common days first)")
    return sorted(grids_i)


def _as_day_map(grids) -> dict[dt.date, SecondGrid]:
    if isinstance(grids, SecondGrid):
        return {grids.day: grids}
    if isinstance(grids, Mapping):
        return dict(grids)
    return {g.day: g for g in grids}


def pair_series(grids_i, grids_j, lags: LagSpec | Iterable[int] = DEFAULT_LAGS,
                correlator: bool = False) -> dict[str, ResponseSeries]:
    """Both conventions of one pair from a single pass over the data.

    ``grids_i``/``grids_j`` are per-day grids (a mapping day -> grid, an
    iterable of grids, or a single grid) covering the same days.  Lags with
    no valid sample are left out of the result.
    """
    gi, gj = _as_day_map(grids_i), _as_day_map(grids_j)
    days = _check_days(gi, gj)
    if not days:
        raise NoValidSamples("no common days")
    i, j = gi[days[0]].symbol, gj[days[0]].symbol
    kind = CORRELATOR if correlator else (SELF if i == j else CROSS)
    lags = list(lags.lags if isinstance(lags, LagSpec) else lags)

    rows = {INCLUDE: [], EXCLUDE: []}
    window = []
    for tau in lags:
        n_valid = 0
        chunks = []
        for d in days:
            nv, x = _day_terms(gi[d], gj[d], tau, correlator)
            n_valid += nv
            chunks.append(x)
        x = np.concatenate(chunks)
        n_nz = len(x)
        if n_valid == 0:
            continue
        total = math.fsum(x.tolist())
        window.append((tau, n_nz, n_valid))
        for conv, n in ((INCLUDE, n_valid), (EXCLUDE, n_nz)):
            if n == 0:
                continue
            mean = total / n
            # centered terms, so numpy's pairwise sum is accurate enough here;
            # seconds with a zero sign contribute (0 - mean)^2 each
            ss = float(np.sum((x - mean) ** 2)) + (n - n_nz) * mean * mean
            se = math.sqrt(ss / (n - 1) / n) if n > 1 else 0.0
            rows[conv].append((tau, mean, se, n))

    if not window:
        raise NoValidSamples(f"({i},{j}): no lag has a valid sample")
    day_names = tuple(d.isoformat() for d in days)
    out = {}
    for conv, r in rows.items():
        cols = list(zip(*r)) if r else [(), (), (), ()]
        out[conv] = ResponseSeries(kind, conv, i, j, *cols, days=day_names)
    return out


def cross_response(grids_i, grids_j, lags=DEFAULT_LAGS, convention: str = INCLUDE) -> ResponseSeries:
    """Response of stock i's midpoint to stock j's trade signs.

    With ``grids_i is grids_j`` (same stock) this is the self-response.
    """
    return pair_series(grids_i, grids_j, lags)[convention_name(convention)]


def sign_cross_correlator(grids_i, grids_j, lags=DEFAULT_LAGS,
                          convention: str = INCLUDE) -> ResponseSeries:
    """Time average of ``eps_i(t + tau) * eps_j(t)``."""
    return pair_series(grids_i, grids_j, lags, correlator=True)[convention_name(convention)]


def windowed_frequency(grids_j, tau: int, grids_i=None, correlator: bool = False) -> float:
    """Share of valid seconds at lag ``tau`` where stock j's sign is nonzero.

    This is the factor linking the two conventions for one pair and lag.
    ``grids_i`` decides which seconds are valid for responses (its midpoint
    must exist at both ends); omit it for correlators.
    """
    gj = _as_day_map(grids_j)
    gi = gj if grids_i is None else _as_day_map(grids_i)
    nz = valid = 0
    for d in _check_days(gi, gj):
        nv, x = _day_terms(gi[d], gj[d], tau, correlator or grids_i is None)
        valid += nv
        nz += len(x)
    return nz / valid


def restrict_common(grids: Mapping[str, Mapping[dt.date, SecondGrid]], i: str, j: str):
    """Both stocks' grids restricted to the days they share."""
    days = set(grids[i]) & set(grids[j])
    return ({d: grids[i][d] for d in days}, {d: grids[j][d] for d in days})


def compute_pairs(grids: Mapping[str, Mapping[dt.date, SecondGrid]],
                  pairs: Iterable[tuple[str, str]], lags=DEFAULT_LAGS,
                  correlator: bool = False, jobs: int = 1):
    """``pair_series`` for many pairs, each on its own common days.

    Returns ``{(i, j): {convention: series}}`` in input order.  Pairs without
    common days or valid samples are skipped.  ``jobs`` only changes speed.
    """
    pairs = list(pairs)

    def work(pair):
        try:
            return pair_series(*restrict_common(grids, *pair), lags, correlator)
        except NoValidSamples:
            return None

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(work, pairs))
    else:
        results = [work(p) for p in pairs]
    return {p: r for p, r in zip(pairs, results) if r is not None}
