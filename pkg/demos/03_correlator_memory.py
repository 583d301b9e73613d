"""
Averaging sign correlators across many stocks
=============================================

Pairwise sign cross-correlators are noisy.  Averaging over many partners
shrinks the noise, and a power-law fit then tells short from long memory.
"""

import numpy as np

from xresponse import aggregate as agg
from xresponse import synth
from xresponse.fit import fit_power_law
from xresponse.ingest import Session
from xresponse.response import INCLUDE, LagSpec, compute_pairs

###############################################################################
# Twenty stocks with persistence ranging from weak to strong.
n = 20
config = synth.SynthConfig(n_stocks=n, n_days=2, trade_prob=0.5,
                           persist_prob=np.linspace(0.55, 0.95, n).round(4).tolist())
grids = synth.generate(config, Session.parse("09:40:00-12:40:00")).true_grids()
symbols = sorted(grids)
lags = LagSpec.parse("1:300:log12")

###############################################################################
# Self correlators carry the geometric decay of the sign chain.
self_corr = compute_pairs(grids, [(s, s) for s in symbols], lags, correlator=True)
for s in (symbols[0], symbols[-1]):
    fit = fit_power_law(self_corr[(s, s)][INCLUDE])
    print(f"{s} self: gamma={fit.gamma:.2f} ({fit.memory_class} memory)")

###############################################################################
# Cross correlators: compare a single pair with the passive average.
pairs = [(i, j) for i in symbols for j in symbols if i != j]
store = {p: out[INCLUDE] for p, out in compute_pairs(grids, pairs, lags, True, jobs=4).items()}
anchor = symbols[0]
avg = agg.passive_average(anchor, symbols, store)
one = store[(anchor, symbols[1])]
print("tau   pair stderr   average stderr")
for tau, se_pair, se_avg in zip(avg.taus, one.stderr, avg.stderr):
    print(f"{tau:4d}  {se_pair:.2e}      {se_avg:.2e}")
