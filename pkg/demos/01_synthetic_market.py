"""
A synthetic market with a known answer
======================================

Generate four stocks with persistent trade signs and weak cross impact, then
compare measured cross-responses with their closed form.
"""

import numpy as np

from xresponse import synth
from xresponse.ingest import Session
from xresponse.response import EXCLUDE, INCLUDE, pair_series

###############################################################################
# One-hour days keep this quick; the statistics improve with more days.
session = Session.parse("09:40:00-10:40:00")
config = synth.SynthConfig(n_days=20)
market = synth.generate(config, session)
print("symbols:", config.symbols)
print("trade probabilities:", config.trade_prob)

###############################################################################
# Relative trading frequency and lag-one sign persistence per stock.
for k, sym in enumerate(config.symbols):
    days = market.data[sym].values()
    f = np.mean([np.count_nonzero(d.eps) / len(d.eps) for d in days])
    lag1 = np.concatenate([d.trade_sign[1:] * d.trade_sign[:-1] for d in days]).mean()
    print(f"{sym}: f={f:.3f}  sign persistence={lag1:.3f} "
          f"(expected {2 * config.persist_prob[k] - 1:.3f})")

###############################################################################
# Cross-response of S00 to S01's trades.  The cross impact is a hundredth of
# the self impact, so the price noise dominates; the standard error shows it.
grids = market.true_grids()
lags = [1, 2, 5, 10, 20]
out = pair_series(grids["S00"], grids["S01"], lags)
print("tau   measured +- stderr (inc)    closed form   measured (exc)  closed form")
for tau in lags:
    v, se, _ = out[INCLUDE].points[tau]
    print(f"{tau:3d}  {v: .3e} +- {se:.1e}   "
          f"{synth.expected_response(config, 'S00', 'S01', tau): .3e}   "
          f"{out[EXCLUDE].value(tau): .3e}     "
          f"{synth.expected_response(config, 'S00', 'S01', tau, EXCLUDE): .3e}")

###############################################################################
# The self-response is a hundred times stronger and sits right on its curve.
out = pair_series(grids["S00"], grids["S00"], lags)
for tau in lags:
    print(f"{tau:3d}  self {out[INCLUDE].value(tau):.4e}  "
          f"closed form {synth.expected_response(config, 'S00', 'S00', tau):.4e}")
