import math
import random

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from scipy import stats as sps

import oracles
from xresponse import aggregate as agg
from xresponse.errors import (DegenerateMax, DegenerateVariance, EmptySector,
                              MissingPairSeries, MissingSeries)
from xresponse.ingest import SectorMap
from xresponse.response import CORRELATOR, CROSS, INCLUDE, ResponseSeries
from xresponse.signs import ActivityStats

TAUS = [1, 2, 60, 300]


def series(i, j, values, kind=CROSS, stderr=None):
    return ResponseSeries(kind, INCLUDE, i, j, TAUS[: len(values)], values,
                          stderr or [0.1] * len(values), [100] * len(values))


def store_from(table, kind=CROSS):
    return {(i, j): series(i, j, v, kind) for (i, j), v in table.items()}


def test_single_partner_equals_pair():
    st_ = {("A", "B"): series("A", "B", [0.3, 0.2], stderr=[0.01, 0.02])}
    avg = agg.passive_average("A", ["A", "B"], st_)
    assert avg.values.tolist() == [0.3, 0.2]
    assert avg.stderr.tolist() == [0.01, 0.02]
    assert avg.universe == {"B"}


def test_opposite_partners_cancel():
    st_ = store_from({("A", "B"): [0.5], ("A", "C"): [-0.5]})
    assert agg.passive_average("A", "ABC", st_).values.tolist() == [0.0]


def test_five_partner_mean_against_summation():
    rng = random.Random(2)
    parts = "BCDEF"
    table = {("A", p): [rng.uniform(-1, 1) for _ in TAUS] for p in parts}
    table.update({(p, "A"): [rng.uniform(-1, 1) for _ in TAUS] for p in parts})
    st_ = store_from(table)
    pas = agg.passive_average("A", "ABCDEF", st_)
    act = agg.active_average("A", "ABCDEF", st_)
    for k, tau in enumerate(TAUS):
        assert pas.value(tau) == oracles.mean([table[("A", p)][k] for p in parts])
        assert act.value(tau) == oracles.mean([table[(p, "A")][k] for p in parts])
        vals = [table[("A", p)][k] for p in parts]
        assert pas.stderr[k] == pytest.approx(np.std(vals, ddof=1) / math.sqrt(5), rel=1e-12)
    assert set(pas.n_pairs.tolist()) == {5}


def test_missing_pair_raises_sorted():
    st_ = store_from({("A", "B"): [1.0]})
    with pytest.raises(MissingPairSeries) as err:
        agg.passive_average("A", "ADBC", st_)
    assert err.value.pairs == [("A", "C"), ("A", "D")]


def test_self_pair_never_averaged():
    st_ = store_from({("A", "A"): [9.0], ("A", "B"): [1.0]})
    assert agg.passive_average("A", "AB", st_).values.tolist() == [1.0]


def test_correlator_average_checks_kind():
    st_ = store_from({("A", "B"): [0.1]}, CORRELATOR)
    assert agg.correlator_average("A", agg.PASSIVE, "AB", st_).kind == CORRELATOR
    with pytest.raises(ValueError):
        agg.correlator_average("A", agg.PASSIVE, "AB", store_from({("A", "B"): [0.1]}))


SMAP = SectorMap([("A", "I"), ("B", "I"), ("C", "HC"), ("D", "HC"), ("E", "E"), ("F", "E")])


def test_sector_examples():
    st_ = store_from({("A", "B"): [0.4], ("A", "C"): [0.1], ("A", "D"): [0.3]})
    with pytest.raises(EmptySector):
        agg.sector_average("A", agg.PASSIVE, "I", SectorMap([("A", "I")]), st_)
    assert agg.sector_average("A", agg.PASSIVE, "I", SMAP, st_, "ABCD").values.tolist() == [0.4]


def test_three_sector_means():
    rng = random.Random(4)
    syms = "ABCDEF"
    table = {(i, j): [rng.uniform(-1, 1)] for i in syms for j in syms if i != j}
    st_ = store_from(table)
    for sec in ("I", "HC", "E"):
        members = [s for s in syms if SMAP[s] == sec and s != "C"]
        got = agg.sector_average("C", agg.ACTIVE, sec, SMAP, st_)
        assert got.value(1) == oracles.mean([table[(m, "C")][0] for m in members])
        assert got.label == sec


def matrix_store(vals):
    return {k: series(*k, [v]) for k, v in vals.items()}


def test_matrix_two_by_two():
    m = agg.response_matrix("AB", 1, matrix_store({("A", "B"): 0.5, ("B", "A"): -1.0}))
    assert m.rho[0, 1] == 0.5 and m.rho[1, 0] == -1.0
    assert np.isnan(m.rho[0, 0])
    assert m.max_abs == 1.0


def test_matrix_constant():
    syms = "ABC"
    m = agg.response_matrix(syms, 1, matrix_store({(i, j): 0.3 for i in syms for j in syms}))
    off = m.rho[~np.eye(3, dtype=bool)]
    assert np.all(off == 1.0)
    assert m.diagonal.tolist() == [0.3] * 3


def test_matrix_four_symbol_oracle():
    rng = random.Random(9)
    syms = ["D", "A", "C", "B"]
    vals = {(i, j): rng.uniform(-2, 2) for i in syms for j in syms}
    m = agg.response_matrix(syms, 1, matrix_store(vals), SectorMap(
        [("A", "HC"), ("B", "I"), ("C", "HC"), ("D", "I")]))
    assert m.symbols == ("B", "D", "A", "C")
    big = max(abs(v) for (i, j), v in vals.items() if i != j)
    for a, i in enumerate(m.symbols):
        for b, j in enumerate(m.symbols):
            if a != b:
                assert m.rho[a, b] == vals[(i, j)] / big
    assert m.sector_boundaries() == [{"sector": "I", "start": 0, "end": 2},
                                     {"sector": "HC", "start": 2, "end": 4}]
    lines = m.to_csv().splitlines()
    assert lines[0] == "i\\j,B,D,A,C"
    assert lines[1].split(",")[1] == ""


def test_matrix_errors():
    with pytest.raises(DegenerateMax):
        agg.response_matrix("AB", 1, matrix_store({("A", "B"): 0.0, ("B", "A"): 0.0}))
    with pytest.raises(MissingPairSeries):
        agg.response_matrix("AB", 1, matrix_store({("A", "B"): 1.0}))


def avgs(values, tau=1):
    return {s: agg.AverageSeries(agg.ACTIVE, s, frozenset({"Z"}), CROSS, INCLUDE, [tau], [v],
                                 [0.0], [1]) for s, v in values.items()}


def test_rank_examples():
    assert agg.rank_stocks(avgs({"A": 0.2, "B": 0.5}), 1, 1).symbols == ["B"]
    assert agg.rank_stocks(avgs({"C": 1.0, "A": 1.0, "B": 1.0}), 1, 3).symbols == ["A", "B", "C"]
    assert agg.rank_stocks(avgs({"A": 0.2, "B": -0.5}), 1, 1, by_abs=True).symbols == ["B"]
    with pytest.raises(MissingSeries):
        agg.rank_stocks(avgs({"A": 0.2}), 2, 1)


@pytest.mark.parametrize("tau", TAUS)
def test_rank_ten_symbols_against_sort(tau):
    rng = random.Random(tau)
    vals = {f"S{k}": round(rng.uniform(-1, 1), 1) for k in range(10)}
    ranking = agg.rank_stocks(avgs(vals, tau), tau, 5, scale=2.0)
    expected = sorted(vals.items(), key=lambda kv: (-kv[1], kv[0]))[:5]
    assert ranking.entries == [(s, v / 2.0) for s, v in expected]
    assert ranking.to_csv().splitlines()[0] == "rank,symbol,value,sector"


@given(st.dictionaries(st.text("ABCDEFGH", min_size=1, max_size=3),
                       st.floats(-1, 1), min_size=1), st.integers(0, 10))
def test_rank_contract(vals, k):
    r = agg.rank_stocks(avgs(vals), 1, k)
    assert len(r.entries) == min(k, len(vals))
    values = [v for _, v in r.entries]
    assert values == sorted(values, reverse=True)


def activity(ns):
    return {s: ActivityStats(s, 0.5, n, 0, 0, 1) for s, n in ns.items()}


def test_corr_examples():
    xs = {"A": 1.0, "B": 2.0, "C": 3.5}
    assert agg.trade_count_correlation(xs, activity({s: 2 * v for s, v in xs.items()})) \
        == pytest.approx(1.0, abs=1e-15)
    with pytest.raises(DegenerateVariance):
        agg.trade_count_correlation(xs, activity({s: 5 for s in xs}))


def test_corr_twenty_symbols_textbook():
    rng = random.Random(20)
    syms = [f"S{k:02d}" for k in range(20)]
    x = {s: rng.gauss(0, 1) for s in syms}
    n = {s: 1000 + 300 * x[s] + rng.gauss(0, 200) for s in syms}
    got = agg.trade_count_correlation(x, activity(n))
    assert got == pytest.approx(oracles.pearson([x[s] for s in syms], [n[s] for s in syms]),
                                abs=1e-14)
    assert got == pytest.approx(sps.pearsonr([x[s] for s in syms],
                                             [n[s] for s in syms])[0], abs=1e-12)


def test_average_csv_round_trip(tmp_path):
    st_ = store_from({("A", "B"): [0.1, 0.2], ("A", "C"): [0.3, 0.4]})
    avg = agg.passive_average("A", "ABC", st_)
    path = avg.save(tmp_path)
    back = agg.AverageSeries.load(path)
    assert back.points == avg.points and back.universe == avg.universe
    assert path.read_text().splitlines()[0] == "tau,value,stderr,n_pairs"
