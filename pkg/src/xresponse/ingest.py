"""Trades/quotes CSV ingestion, session filtering and calendar rules.

Trades files carry the header ``time,price,volume`` and quotes files the
header ``time,bid,ask``.  Times are wall-clock ``HH:MM:SS`` with an optional
fractional part which is truncated to the containing second.  Only records
inside the half-open session window (default 09:40:00-15:50:00) are kept;
their timestamps are stored as integer seconds since session open.

On disk a data directory is laid out as::

    <data_dir>/<SYMBOL>/<YYYY-MM-DD>.trades.csv
    <data_dir>/<SYMBOL>/<YYYY-MM-DD>.quotes.csv
"""

from __future__ import annotations

import datetime as dt
import io
import math
import os
import re
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import BinaryIO, NamedTuple, Union

import numpy as np

from .errors import EmptyFile, NonMonotonicTimestamps, NoTrades, UnparseableHeader

SESSION_ENV = "XRESPONSE_SESSION"
DEFAULT_SESSION = "09:40:00-15:50:00"

TRADES_HEADER = ("time", "price", "volume")
QUOTES_HEADER = ("time", "bid", "ask")

# Fig. 3.1 ordering of the ten economic sectors.
SECTOR_ORDER = ("I", "HC", "CD", "IT", "U", "F", "M", "E", "CS", "TS")
SECTOR_NAMES = {
    "I": "Industrials",
    "HC": "Health Care",
    "CD": "Consumer Discretionary",
    "IT": "Information Technology",
    "U": "Utilities",
    "F": "Financials",
    "M": "Materials",
    "E": "Energy",
    "CS": "Consumer Staples",
    "TS": "Telecommunications Services",
}

Source = Union[str, os.PathLike, bytes, BinaryIO]

_TIME_RE = re.compile(r"^(\d{1,2}):(\d{2}):(\d{2})(?:\.(\d+))?$")


class TradeRecord(NamedTuple):
    timestamp: int
    sequence: int
    price: float
    volume: int


class QuoteRecord(NamedTuple):
    timestamp: int
    sequence: int
    bid: float
    ask: float


@dataclass(frozen=True)
class Session:
    """Trading window as seconds since midnight, half-open ``[start, end)``."""

    start: int
    end: int

    def __post_init__(self):
        if not 0 <= self.start < self.end <= 24 * 3600:
            raise ValueError(f"invalid session window {self.start}-{self.end}")

    @property
    def length(self) -> int:
        return self.end - self.start

    @classmethod
    def parse(cls, text: str) -> "Session":
        try:
            lo, hi = text.strip().split("-")
            return cls(parse_time(lo), parse_time(hi))
        except ValueError as exc:
            raise ValueError(f"session must look like HH:MM:SS-HH:MM:SS, got {text!r}") from exc

    @classmethod
    def from_env(cls) -> "Session":
        return cls.parse(os.environ.get(SESSION_ENV) or DEFAULT_SESSION)

    def __str__(self) -> str:
        return f"{format_time(self.start)}-{format_time(self.end)}"


def parse_time(text: str) -> int:
    """Wall-clock ``HH:MM:SS[.ffffff]`` to whole seconds since midnight (truncating)."""
    m = _TIME_RE.match(text.strip())
    if m is None:
        raise ValueError(f"bad time {text!r}")
    h, mi, s = int(m.group(1)), int(m.group(2)), int(m.group(3))
    if h > 24 or mi > 59 or s > 59 or (h == 24 and (mi or s)):
        raise ValueError(f"bad time {text!r}")
    return h * 3600 + mi * 60 + s


def format_time(seconds: int) -> str:
    h, rem = divmod(int(seconds), 3600)
    return f"{h:02d}:{rem // 60:02d}:{rem % 60:02d}"


@dataclass(frozen=True)
class ParseReport:
    """Record-count bookkeeping for one input file.

    ``lines_in == retained + dropped_window + malformed`` always holds.
    """

    kind: str
    lines_in: int = 0
    retained: int = 0
    dropped_window: int = 0
    malformed: int = 0
    malformed_lines: tuple[int, ...] = ()

    @property
    def conserved(self) -> bool:
        return self.lines_in == self.retained + self.dropped_window + self.malformed


def _frozen(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


@dataclass(frozen=True)
class TickTable:
    """Session-filtered trades and quotes for one stock on one day.

    Stored column-wise; ``trades`` and ``quotes`` give record views.
    Arrays are read-only.
    """

    symbol: str
    day: dt.date
    trade_time: np.ndarray
    trade_seq: np.ndarray
    trade_price: np.ndarray
    trade_volume: np.ndarray
    quote_time: np.ndarray
    quote_seq: np.ndarray
    bid: np.ndarray
    ask: np.ndarray
    session: Session = field(default_factory=Session.from_env)
    trades_report: ParseReport = ParseReport("trades")
    quotes_report: ParseReport = ParseReport("quotes")

    def __post_init__(self):
        for name in ("trade_time", "trade_seq", "trade_price", "trade_volume",
                     "quote_time", "quote_seq", "bid", "ask"):
            _frozen(getattr(self, name))

    @property
    def n_seconds(self) -> int:
        return self.session.length

    @property
    def trades(self) -> list[TradeRecord]:
        return [TradeRecord(int(t), int(s), float(p), int(v)) for t, s, p, v in
                zip(self.trade_time, self.trade_seq, self.trade_price, self.trade_volume)]

    @property
    def quotes(self) -> list[QuoteRecord]:
        return [QuoteRecord(int(t), int(s), float(b), float(a)) for t, s, b, a in
                zip(self.quote_time, self.quote_seq, self.bid, self.ask)]

    @property
    def crossed(self) -> np.ndarray:
        """Flags for locked or crossed quotes (bid >= ask); they are kept."""
        return self.bid >= self.ask


def _read_bytes(src: Source) -> bytes:
    if isinstance(src, (bytes, bytearray)):
        return bytes(src)
    if isinstance(src, (str, os.PathLike)):
        return Path(src).read_bytes()
    return src.read()


def _within_second_order(times: np.ndarray, kind: str) -> tuple[np.ndarray, np.ndarray]:
    """Stable sort by timestamp; sequence is file order inside each second.

    A second whose records are split across non-adjacent parts of the file has
    no usable intra-second order, so that is rejected.
    """
    seen = set()
    prev = None
    for t in times.tolist():
        if t != prev:
            if t in seen:
                raise NonMonotonicTimestamps(
                    f"{kind}: records for second {t} are not contiguous in the file")
            seen.add(t)
            prev = t
    order = np.argsort(times, kind="stable")
    st = times[order]
    seq = np.zeros(len(st), dtype=np.int32)
    if len(st):
        starts = np.r_[True, st[1:] != st[:-1]]
        idx = np.arange(len(st))
        group_start = np.maximum.accumulate(np.where(starts, idx, 0))
        seq = (idx - group_start).astype(np.int32)
    return order, seq


def _parse_csv(data: bytes, header: tuple[str, str, str], session: Session, kind: str):
    if not data:
        raise EmptyFile(f"{kind} file is empty (no header)")
    text = data.decode("utf-8-sig")
    lines = text.splitlines()
    head = [h.strip().lower() for h in lines[0].split(",")]
    if tuple(head) != header:
        raise UnparseableHeader(f"{kind}: expected header {','.join(header)!r}, got {lines[0]!r}")

    times, col_a, col_b = [], [], []
    lines_in = dropped = 0
    bad = []
    integer_b = kind == "trades"
    for lineno, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        lines_in += 1
        parts = line.split(",")
        try:
            if len(parts) != 3:
                raise ValueError
            t = parse_time(parts[0])
            a = float(parts[1])
            b = int(parts[2]) if integer_b else float(parts[2])
            if not (math.isfinite(a) and a > 0 and math.isfinite(b) and b > 0):
                raise ValueError
        except ValueError:
            bad.append(lineno)
            continue
        if not session.start <= t < session.end:
            dropped += 1
            continue
        times.append(t - session.start)
        col_a.append(a)
        col_b.append(b)

    times = np.asarray(times, dtype=np.int32)
    order, seq = _within_second_order(times, kind)
    report = ParseReport(kind, lines_in, len(times), dropped, len(bad), tuple(bad))
    a = np.asarray(col_a, dtype=np.float64)[order]
    b = np.asarray(col_b, dtype=np.int64 if integer_b else np.float64)[order]
    return times[order], seq, a, b, report


def parse_ticks(trades_file: Source, quotes_file: Source, symbol: str,
                day: dt.date | str, session: Session | None = None) -> TickTable:
    """Parse one (symbol, day) pair of trades and quotes files.

    Malformed data lines (wrong field count, bad time, non-positive or
    non-numeric values) are skipped and counted in the attached reports.
    A header-only file is valid and yields no records; a zero-byte file
    raises :class:`EmptyFile`.
    """
    session = session or Session.from_env()
    if isinstance(day, str):
        day = dt.date.fromisoformat(day)
    tt, ts, tp, tv, trep = _parse_csv(_read_bytes(trades_file), TRADES_HEADER, session, "trades")
    qt, qs, qb, qa, qrep = _parse_csv(_read_bytes(quotes_file), QUOTES_HEADER, session, "quotes")
    return TickTable(symbol, day, tt, ts, tp, tv, qt, qs, qb, qa, session, trep, qrep)


def serialize_ticks(table: TickTable) -> tuple[bytes, bytes]:
    """Inverse of :func:`parse_ticks` for the retained records."""
    off = table.session.start
    trades = io.StringIO()
    trades.write(",".join(TRADES_HEADER) + "\n")
    for t, p, v in zip(table.trade_time.tolist(), table.trade_price.tolist(),
                       table.trade_volume.tolist()):
        trades.write(f"{format_time(t + off)},{p!r},{v}\n")
    quotes = io.StringIO()
    quotes.write(",".join(QUOTES_HEADER) + "\n")
    for t, b, a in zip(table.quote_time.tolist(), table.bid.tolist(), table.ask.tolist()):
        quotes.write(f"{format_time(t + off)},{b!r},{a!r}\n")
    return trades.getvalue().encode(), quotes.getvalue().encode()


def common_days(calendars: Mapping[str, Iterable[dt.date]],
                symbols: Iterable[str] | None = None) -> set[dt.date]:
    """Days on which every one of ``symbols`` traded."""
    symbols = list(calendars if symbols is None else symbols)
    if not symbols:
        raise ValueError("common_days needs at least one symbol")
    days = set(calendars[symbols[0]])
    for s in symbols[1:]:
        days &= set(calendars[s])
    return days


def trading_calendar(tables: Iterable[TickTable]) -> set[dt.date]:
    """Days with at least one in-session trade."""
    return {t.day for t in tables if len(t.trade_time)}


def average_market_cap(trades) -> float:
    """Mean of price x volume over every trade.

    Accepts a sequence of :class:`TradeRecord` or of :class:`TickTable`.
    """
    prices, volumes = [], []
    for item in trades:
        if isinstance(item, TickTable):
            prices.extend(item.trade_price.tolist())
            volumes.extend(item.trade_volume.tolist())
        else:
            prices.append(float(item.price))
            volumes.append(int(item.volume))
    if not prices:
        raise NoTrades("average market capitalization needs at least one trade")
    return math.fsum(p * v for p, v in zip(prices, volumes)) / len(prices)


class SectorMap(Mapping):
    """symbol -> sector label, labels from :data:`SECTOR_ORDER`."""

    def __init__(self, pairs: Iterable[tuple[str, str]]):
        self._map: dict[str, str] = {}
        for sym, sec in pairs:
            if sec not in SECTOR_ORDER:
                raise ValueError(f"unknown sector label {sec!r} for {sym}")
            if self._map.get(sym, sec) != sec:
                raise ValueError(f"{sym} mapped to both {self._map[sym]} and {sec}")
            self._map[sym] = sec

    def __getitem__(self, symbol):
        return self._map[symbol]

    def __iter__(self):
        return iter(self._map)

    def __len__(self):
        return len(self._map)

    def members(self, sector: str) -> list[str]:
        return [s for s, sec in self._map.items() if sec == sector]

    def sectors(self) -> list[str]:
        present = set(self._map.values())
        return [s for s in SECTOR_ORDER if s in present]

    def order(self, symbols: Iterable[str]) -> list[str]:
        """Group ``symbols`` by sector (taxonomy order), file order inside a sector."""
        rank = {s: i for i, s in enumerate(self._map)}
        symbols = list(symbols)
        missing = [s for s in symbols if s not in self._map]
        if missing:
            raise KeyError(f"symbols without a sector: {missing}")
        return sorted(symbols, key=lambda s: (SECTOR_ORDER.index(self._map[s]), rank[s]))

    def to_csv(self) -> str:
        return "symbol,sector\n" + "".join(f"{s},{sec}\n" for s, sec in self._map.items())


def read_sector_map(path: str | os.PathLike | None = None) -> SectorMap:
    """Load a ``symbol,sector`` file; ``None`` loads the bundled 99-stock map."""
    if path is None:
        text = resources.files("xresponse").joinpath("data/sectors_sp500_99.csv").read_text()
    else:
        text = Path(path).read_text()
    pairs = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.lower() == "symbol,sector":
            continue
        sym, sec = (x.strip() for x in line.split(","))
        pairs.append((sym, sec))
    return SectorMap(pairs)


def discover(data_dir: str | os.PathLike) -> dict[str, dict[dt.date, tuple[Path, Path]]]:
    """Find ``<SYMBOL>/<day>.trades.csv`` / ``.quotes.csv`` pairs under ``data_dir``."""
    root = Path(data_dir)
    if not root.is_dir():
        raise FileNotFoundError(f"data directory not found: {root}")
    found: dict[str, dict[dt.date, tuple[Path, Path]]] = {}
    for sym_dir in sorted(p for p in root.iterdir() if p.is_dir()):
        days = {}
        for tf in sorted(sym_dir.glob("*.trades.csv")):
            day = dt.date.fromisoformat(tf.name.split(".")[0])
            days[day] = (tf, tf.with_name(f"{day.isoformat()}.quotes.csv"))
        if days:
            found[sym_dir.name] = days
    return found
