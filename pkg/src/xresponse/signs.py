"""Trade signs, one-second aggregation and the midpoint grid.

A trade is signed by its price change relative to the preceding trade of the
same day; an unchanged price inherits the previous sign.  Trades before the
first price change of the day have no predecessor to inherit from and get
sign 0.  Per second, the signs are summed and the sign of the sum is the
second's sign; seconds without trades (or with balanced buys and sells) get 0.
"""

from __future__ import annotations

import datetime as dt
import os
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import NoQuotes
from .ingest import TickTable, TradeRecord

GRID_MAGIC = b"XRSPGRID0001"
GRID_HEADER = GRID_MAGIC + b"\x00\x00\x00\x00"
_BYTES_PER_SECOND = 1 + 8 + 2


def trade_signs(trades: Sequence[TradeRecord] | np.ndarray) -> np.ndarray:
    """Sign every trade of one day from consecutive price differences.

    ``trades`` is either the ordered trade records or just their prices.
    Returns an int8 array in {-1, 0, +1}; 0 only for the leading run of
    trades that precede the first price change.
    """
    if len(trades) and isinstance(trades[0], TradeRecord):
        prices = np.fromiter((t.price for t in trades), dtype=np.float64, count=len(trades))
    else:
        prices = np.asarray(trades, dtype=np.float64)
    n = len(prices)
    if n == 0:
        return np.zeros(0, dtype=np.int8)
    step = np.zeros(n, dtype=np.int8)
    step[1:] = np.sign(np.diff(prices))
    # carry forward the most recent nonzero price-change sign
    idx = np.where(step != 0, np.arange(n), 0)
    np.maximum.accumulate(idx, out=idx)
    return step[idx]


def second_signs(times: np.ndarray, signs: np.ndarray, n_seconds: int):
    """Aggregate per-trade signs to per-second signs.

    Returns ``(eps, n_trades)``; ``eps[t] = sgn(sum of signs in second t)``.
    Sign-0 trades still count in ``n_trades``.
    """
    times = np.asarray(times, dtype=np.int64)
    n_trades = np.bincount(times, minlength=n_seconds)[:n_seconds]
    total = np.bincount(times, weights=np.asarray(signs, dtype=np.float64),
                        minlength=n_seconds)[:n_seconds]
    return np.sign(total).astype(np.int8), n_trades.astype(np.int64)


def midpoint_series(quote_times: np.ndarray, bid: np.ndarray, ask: np.ndarray,
                    n_seconds: int) -> np.ndarray:
    """Prevailing midpoint at every second; NaN before the first quote.

    Quotes must be ordered by (timestamp, sequence): the last quote of a
    second is the one that prevails.
    """
    quote_times = np.asarray(quote_times, dtype=np.int64)
    if len(quote_times) == 0:
        raise NoQuotes("no quotes for this day")
    mids = (np.asarray(bid, dtype=np.float64) + np.asarray(ask, dtype=np.float64)) / 2
    last = np.r_[quote_times[1:] != quote_times[:-1], True]
    out = np.full(n_seconds, np.nan)
    out[quote_times[last]] = mids[last]
    idx = np.where(np.isnan(out), 0, np.arange(n_seconds))
    np.maximum.accumulate(idx, out=idx)
    filled = out[idx]
    filled[: quote_times[0]] = np.nan
    return filled


@dataclass(frozen=True)
class SecondGrid:
    """Per-second sign, midpoint and trade count of one stock on one day."""

    symbol: str
    day: dt.date
    eps: np.ndarray
    mid: np.ndarray
    n_trades: np.ndarray

    def __post_init__(self):
        n = len(self.eps)
        if len(self.mid) != n or len(self.n_trades) != n:
            raise ValueError("eps, mid and n_trades must share one length")
        object.__setattr__(self, "eps", np.ascontiguousarray(self.eps, dtype=np.int8))
        object.__setattr__(self, "mid", np.ascontiguousarray(self.mid, dtype=np.float64))
        object.__setattr__(self, "n_trades", np.ascontiguousarray(self.n_trades, dtype=np.int64))
        for a in (self.eps, self.mid, self.n_trades):
            a.setflags(write=False)

    @property
    def n_seconds(self) -> int:
        return len(self.eps)

    def to_bytes(self) -> bytes:
        if self.n_trades.max(initial=0) > np.iinfo(np.uint16).max:
            raise ValueError(f"{self.symbol} {self.day}: more than 65535 trades in one second")
        return b"".join([
            GRID_HEADER,
            self.eps.astype("<i1").tobytes(),
            self.mid.astype("<f8").tobytes(),
            self.n_trades.astype("<u2").tobytes(),
        ])

    @classmethod
    def from_bytes(cls, data: bytes, symbol: str, day: dt.date) -> "SecondGrid":
        if data[:12] != GRID_MAGIC:
            raise ValueError("not a grid cache file (bad magic)")
        body = len(data) - len(GRID_HEADER)
        if body % _BYTES_PER_SECOND:
            raise ValueError("truncated grid cache file")
        n = body // _BYTES_PER_SECOND
        o = len(GRID_HEADER)
        eps = np.frombuffer(data, "<i1", n, o)
        mid = np.frombuffer(data, "<f8", n, o + n)
        cnt = np.frombuffer(data, "<u2", n, o + 9 * n)
        return cls(symbol, day, eps.copy(), mid.copy(), cnt.astype(np.int64))


def build_grid(table: TickTable) -> SecondGrid:
    """SecondGrid from one day's parsed ticks; sign state starts fresh each day."""
    n = table.n_seconds
    signs = trade_signs(table.trade_price)
    eps, n_trades = second_signs(table.trade_time, signs, n)
    mid = midpoint_series(table.quote_time, table.bid, table.ask, n)
    return SecondGrid(table.symbol, table.day, eps, mid, n_trades)


def grid_path(cache_dir: str | os.PathLike, symbol: str, day: dt.date) -> Path:
    return Path(cache_dir) / symbol / f"{day.isoformat()}.grid"


def write_grid(cache_dir: str | os.PathLike, grid: SecondGrid) -> Path:
    path = grid_path(cache_dir, grid.symbol, grid.day)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_bytes(grid.to_bytes())
    return path


def read_grid(path: str | os.PathLike, symbol: str | None = None,
              day: dt.date | None = None) -> SecondGrid:
    path = Path(path)
    symbol = symbol or path.parent.name
    day = day or dt.date.fromisoformat(path.name.split(".")[0])
    return SecondGrid.from_bytes(path.read_bytes(), symbol, day)


def load_grids(cache_dir: str | os.PathLike,
               symbols: Iterable[str] | None = None) -> dict[str, dict[dt.date, SecondGrid]]:
    """All cached grids, ``{symbol: {day: grid}}``."""
    root = Path(cache_dir)
    if not root.is_dir():
        raise FileNotFoundError(f"cache directory not found: {root}")
    wanted = None if symbols is None else set(symbols)
    out: dict[str, dict[dt.date, SecondGrid]] = {}
    for sym_dir in sorted(p for p in root.iterdir() if p.is_dir()):
        if wanted is not None and sym_dir.name not in wanted:
            continue
        grids = {}
        for f in sorted(sym_dir.glob("*.grid")):
            g = read_grid(f, sym_dir.name)
            grids[g.day] = g
        if grids:
            out[sym_dir.name] = grids
    if wanted is not None and wanted - out.keys():
        raise FileNotFoundError(f"no cached grids for {sorted(wanted - out.keys())}")
    return out


@dataclass(frozen=True)
class ActivityStats:
    """Trading activity of one stock on the one-second grid.

    ``f`` is the relative trading frequency: the share of seconds with a
    nonzero sign.  ``avg_daily_trades`` counts at most one trade per second.
    """

    symbol: str
    f: float
    avg_daily_trades: float
    T_trading: int
    T_quiet: int
    n_days: int


def activity_stats(grids: Iterable[SecondGrid]) -> ActivityStats:
    grids = list(grids)
    if not grids:
        raise ValueError("activity_stats needs at least one day")
    symbols = {g.symbol for g in grids}
    if len(symbols) != 1:
        raise ValueError(f"grids from several symbols: {sorted(symbols)}")
    traded = [int(np.count_nonzero(g.eps)) for g in grids]
    total = sum(g.n_seconds for g in grids)
    t_trading = sum(traded)
    return ActivityStats(
        symbol=grids[0].symbol,
        f=t_trading / total,
        avg_daily_trades=t_trading / len(grids),
        T_trading=t_trading,
        T_quiet=total - t_trading,
        n_days=len(grids),
    )
