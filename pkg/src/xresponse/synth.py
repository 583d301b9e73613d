"""Synthetic multi-stock trades and quotes with a closed-form response.

Per stock j and second t a trade happens with probability ``trade_prob[j]``.
Its sign repeats the sign of the stock's previous trade that day with
probability ``persist_prob[j]`` and is flipped otherwise; the first trade of a
day is a fair coin.  The log midpoint of stock i moves between seconds t and
t + 1 by ``sum_j impact[i][j] * eps_j(t)`` plus Gaussian noise, so a trade
prices against the quotes of its own second and moves them from the next one
on.  Buys fill at the ask and sells at the bid.

The derivation of :func:`expected_response` is in ``docs/synthetic_oracle.md``.
"""

from __future__ import annotations

import datetime as dt
import hashlib
import json
import math
import os
import sys
from dataclasses import asdict, dataclass, field, fields
from pathlib import Path

import numpy as np

from .errors import InvalidConfig
from .ingest import QUOTES_HEADER, SECTOR_ORDER, TRADES_HEADER, SectorMap, Session, format_time
from .response import EXCLUDE, INCLUDE, convention_name
from .signs import SecondGrid

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

FIRST_DAY = dt.date(2008, 1, 2)


def _default_trade_prob(n: int) -> tuple[float, ...]:
    return tuple(round(float(x), 6) for x in np.linspace(0.6, 0.3, n)) if n > 1 else (0.5,)


def _default_impact(n: int) -> tuple[tuple[float, ...], ...]:
    # strong self impact, weak heterogeneous cross impact
    return tuple(tuple(1e-4 if i == j else 1e-6 * (1 + (i + 2 * j) % 3) for j in range(n))
                 for i in range(n))


@dataclass(frozen=True)
class SynthConfig:
    """Generator parameters; scalar probabilities apply to every stock."""

    n_stocks: int = 4
    n_days: int = 5
    seed: int = 42
    trade_prob: tuple | float | None = None
    persist_prob: tuple | float = 0.8
    impact: tuple | None = None
    noise_sigma: float = 1e-5
    base_price: float = 100.0
    spread: float = 0.05
    symbols: tuple | None = None

    def __post_init__(self):
        n = self.n_stocks
        if not isinstance(n, int) or n < 1:
            raise InvalidConfig("n_stocks must be a positive integer")
        if not isinstance(self.n_days, int) or self.n_days < 1:
            raise InvalidConfig("n_days must be a positive integer")
        if not 0 <= int(self.seed) < 2**64:
            raise InvalidConfig("seed must fit in 64 bits")

        def per_stock(v, name):
            v = tuple(float(x) for x in (v if isinstance(v, (list, tuple)) else [v] * n))
            if len(v) != n:
                raise InvalidConfig(f"{name} needs {n} entries, got {len(v)}")
            if not all(0 <= x <= 1 for x in v):
                raise InvalidConfig(f"{name} entries must lie in [0, 1]")
            return v

        tp = _default_trade_prob(n) if self.trade_prob is None else self.trade_prob
        object.__setattr__(self, "trade_prob", per_stock(tp, "trade_prob"))
        object.__setattr__(self, "persist_prob", per_stock(self.persist_prob, "persist_prob"))
        imp = _default_impact(n) if self.impact is None else self.impact
        try:
            imp = tuple(tuple(float(x) for x in row) for row in imp)
        except TypeError:
            raise InvalidConfig("impact must be an n_stocks x n_stocks matrix") from None
        if len(imp) != n or any(len(r) != n for r in imp):
            raise InvalidConfig("impact must be an n_stocks x n_stocks matrix")
        if not all(math.isfinite(x) for r in imp for x in r):
            raise InvalidConfig("impact entries must be finite")
        object.__setattr__(self, "impact", imp)
        syms = self.symbols or tuple(f"S{k:02d}" for k in range(n))
        if len(syms) != n or len(set(syms)) != n:
            raise InvalidConfig("symbols must be n_stocks distinct names")
        object.__setattr__(self, "symbols", tuple(syms))
        if not (math.isfinite(self.noise_sigma) and self.noise_sigma >= 0):
            raise InvalidConfig("noise_sigma must be >= 0")
        if not self.base_price > 0:
            raise InvalidConfig("base_price must be positive")
        if not self.spread > 0:
            raise InvalidConfig("spread must be positive")
        if self.spread / 2 >= self.base_price:
            raise InvalidConfig("spread too wide for base_price")

    def to_dict(self) -> dict:
        d = asdict(self)
        d["trade_prob"] = list(self.trade_prob)
        d["persist_prob"] = list(self.persist_prob)
        d["impact"] = [list(r) for r in self.impact]
        d["symbols"] = list(self.symbols)
        return d

    def config_hash(self) -> str:
        canon = json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(canon.encode()).hexdigest()

    def index(self, symbol) -> int:
        return symbol if isinstance(symbol, int) else self.symbols.index(symbol)

    def sector_map(self) -> SectorMap:
        return SectorMap((s, SECTOR_ORDER[k % len(SECTOR_ORDER)])
                         for k, s in enumerate(self.symbols))


def load_config(path: str | os.PathLike | None = None, **overrides) -> SynthConfig:
    """Read a TOML key-value file (or nothing) and apply non-None overrides."""
    data = {}
    if path is not None:
        try:
            data = tomllib.loads(Path(path).read_text())
        except (OSError, tomllib.TOMLDecodeError) as exc:
            raise InvalidConfig(f"cannot read synth config {path}: {exc}") from exc
        data = data.get("synth", data)
    known = {f.name for f in fields(SynthConfig)}
    unknown = set(data) - known
    if unknown:
        raise InvalidConfig(f"unknown synth config keys: {sorted(unknown)}")
    data.update({k: v for k, v in overrides.items() if v is not None})
    for key in ("trade_prob", "persist_prob", "impact", "symbols"):
        if isinstance(data.get(key), list):
            data[key] = tuple(tuple(x) if isinstance(x, list) else x for x in data[key])
    try:
        return SynthConfig(**data)
    except TypeError as exc:
        raise InvalidConfig(str(exc)) from exc


def business_days(n: int, start: dt.date = FIRST_DAY) -> list[dt.date]:
    days, d = [], start
    while len(days) < n:
        if d.weekday() < 5:
            days.append(d)
        d += dt.timedelta(days=1)
    return days


@dataclass
class SynthDay:
    """Generated data of one stock on one day (arrays indexed by second)."""

    eps: np.ndarray
    mid: np.ndarray
    bid: np.ndarray
    ask: np.ndarray
    trade_time: np.ndarray
    trade_sign: np.ndarray
    trade_price: np.ndarray
    trade_volume: np.ndarray


@dataclass
class SynthMarket:
    config: SynthConfig
    session: Session
    days: list
    data: dict = field(default_factory=dict)  # {symbol: {day: SynthDay}}

    def true_grids(self) -> dict[str, dict[dt.date, SecondGrid]]:
        """Grids built from the generated signs and midpoints, bypassing CSV and classification."""
        return {s: {d: SecondGrid(s, d, day.eps, day.mid, np.abs(day.eps))
                    for d, day in per.items()}
                for s, per in self.data.items()}

    def write(self, data_dir: str | os.PathLike) -> dict:
        """Write CSV files, ``sectors.csv`` and ``manifest.json``; returns the manifest."""
        root = Path(data_dir)
        root.mkdir(parents=True, exist_ok=True)
        clock = [format_time(self.session.start + t) for t in range(self.session.length)]
        files = []
        for sym, per in self.data.items():
            (root / sym).mkdir(exist_ok=True)
            for d, day in per.items():
                tpath = root / sym / f"{d.isoformat()}.trades.csv"
                qpath = root / sym / f"{d.isoformat()}.quotes.csv"
                lines = [",".join(TRADES_HEADER)]
                lines += [f"{clock[t]},{p:.6f},{v}" for t, p, v in
                          zip(day.trade_time.tolist(), day.trade_price.tolist(),
                              day.trade_volume.tolist())]
                tpath.write_text("\n".join(lines) + "\n")
                lines = [",".join(QUOTES_HEADER)]
                lines += [f"{c},{b:.6f},{a:.6f}" for c, b, a in
                          zip(clock, day.bid.tolist(), day.ask.tolist())]
                qpath.write_text("\n".join(lines) + "\n")
                files += [tpath.relative_to(root).as_posix(), qpath.relative_to(root).as_posix()]
        (root / "sectors.csv").write_text(self.config.sector_map().to_csv())
        manifest = {
            "seed": self.config.seed,
            "config": self.config.to_dict(),
            "config_hash": self.config.config_hash(),
            "session": str(self.session),
            "files": sorted(files),
        }
        (root / "manifest.json").write_text(json.dumps(manifest, indent=2, sort_keys=True) + "\n")
        return manifest


def _sign_chain(rng: np.random.Generator, n: int, persist: float) -> np.ndarray:
    u = rng.random(n)
    if n == 0:
        return np.zeros(0, dtype=np.int8)
    flips = np.zeros(n, dtype=np.int64)
    flips[1:] = u[1:] >= persist
    first = 1 if u[0] < 0.5 else -1
    return (first * (1 - 2 * (np.cumsum(flips) % 2))).astype(np.int8)


def generate(config: SynthConfig | None = None, session: Session | None = None) -> SynthMarket:
    """Deterministic synthetic market for ``config.seed``."""
    config = config or SynthConfig()
    session = session or Session.from_env()
    T = session.length
    n = config.n_stocks
    rng = np.random.default_rng(config.seed)
    impact = np.asarray(config.impact)
    half = config.spread / 2
    days = business_days(config.n_days)
    market = SynthMarket(config, session, days, {s: {} for s in config.symbols})
    logmid = np.full(n, math.log(config.base_price))

    for d in days:
        eps = np.zeros((n, T), dtype=np.int8)
        trade_times, trade_signs = [], []
        for j in range(n):
            times = np.flatnonzero(rng.random(T) < config.trade_prob[j])
            signs = _sign_chain(rng, len(times), config.persist_prob[j])
            eps[j, times] = signs
            trade_times.append(times)
            trade_signs.append(signs)
        noise = rng.normal(0.0, 1.0, size=(n, T)) * config.noise_sigma
        step = impact @ eps.astype(np.float64) + noise
        # x(0) is the previous close; x(t + 1) = x(t) + step(t)
        x = logmid[:, None] + np.concatenate([np.zeros((n, 1)), np.cumsum(step[:, :-1], axis=1)],
                                             axis=1)
        logmid = x[:, -1] + step[:, -1]
        mid = np.exp(x)
        if np.any(mid <= half):
            raise InvalidConfig("a bid price went non-positive; reduce impact or noise")
        for j, sym in enumerate(config.symbols):
            times, signs = trade_times[j], trade_signs[j]
            bid, ask = mid[j] - half, mid[j] + half
            price = np.where(signs > 0, ask[times], bid[times])
            volume = rng.integers(1, 11, size=len(times)) * 100
            market.data[sym][d] = SynthDay(eps[j].copy(), mid[j].copy(), bid, ask,
                                           times, signs, price, volume)
    return market


def expected_sign_correlation(config: SynthConfig, j, s: int) -> float:
    """``E[eps_j(t + s) eps_j(t)]`` on the one-second grid, ``s >= 0``."""
    k = config.index(j)
    p = config.trade_prob[k]
    rho = 2 * config.persist_prob[k] - 1
    if s == 0:
        return p
    return p * p * rho * (1 - p * (1 - rho)) ** (s - 1)


def expected_response(config: SynthConfig, i, j, tau: int, convention: str = INCLUDE) -> float:
    """Closed-form expectation of the (i, j) response at lag ``tau``.

    ``impact[i][j] * sum_{s=0}^{tau-1} E[eps_j(t + s) eps_j(t)]`` for the
    include-zeros convention; the exclude-zeros value divides by
    ``trade_prob[j]``.  Other stocks' signs are independent of j's and drop out.
    """
    if tau < 0:
        raise InvalidConfig("tau must be >= 0")
    a, b = config.index(i), config.index(j)
    lam = config.impact[a][b]
    p = config.trade_prob[b]
    rho = 2 * config.persist_prob[b] - 1
    decay = 1 - p * (1 - rho)
    if tau == 0:
        total = 0.0
    elif decay == 1.0:
        total = p + p * p * rho * (tau - 1)
    else:
        total = p + p * p * rho * (1 - decay ** (tau - 1)) / (1 - decay)
    value = lam * total
    if convention_name(convention) == EXCLUDE:
        return value / p if p > 0 else math.nan
    return value
