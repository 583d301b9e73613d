"""
From tick files to a market-wide picture
========================================

Write a synthetic universe to CSV, parse it back, and build passive and active
averages, the normalized response matrix and an influence ranking.
"""

import tempfile

from xresponse import aggregate as agg
from xresponse import signs, synth
from xresponse.ingest import Session, discover, parse_ticks
from xresponse.response import INCLUDE, compute_pairs

session = Session.parse("09:40:00-11:40:00")
config = synth.SynthConfig(n_stocks=6, n_days=3)
data_dir = tempfile.mkdtemp()
synth.generate(config, session).write(data_dir)

###############################################################################
# Parse trades and quotes into per-second grids of signs and midpoints.
grids = {}
for sym, days in discover(data_dir).items():
    grids[sym] = {}
    for day, (tfile, qfile) in days.items():
        table = parse_ticks(tfile, qfile, sym, day, session)
        grids[sym][day] = signs.build_grid(table)
symbols = sorted(grids)

###############################################################################
# Every ordered pair, including the self-responses on the diagonal.
pairs = [(i, j) for i in symbols for j in symbols]
series = {p: out[INCLUDE] for p, out in compute_pairs(grids, pairs, [1, 5, 60]).items()}

###############################################################################
# How each stock is moved by the rest (passive) and moves the rest (active).
for s in symbols:
    p = agg.passive_average(s, symbols, series).value(60)
    a = agg.active_average(s, symbols, series).value(60)
    print(f"{s}: passive {p: .2e}  active {a: .2e}")

###############################################################################
# Normalized matrix at 60 s, grouped by the synthetic sector labels.
m = agg.response_matrix(symbols, 60, series, config.sector_map())
print(m.to_csv())

###############################################################################
# The most influential stocks at 60 s.
active = {s: agg.active_average(s, symbols, series) for s in symbols}
print(agg.rank_stocks(active, 60, 3, scale=m.max_abs).to_csv(config.sector_map()))
