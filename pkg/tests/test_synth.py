import json

import numpy as np
import pytest

from conftest import SHORT, batch_mean, day_batches
from xresponse import synth
from xresponse.errors import InvalidConfig
from xresponse.ingest import Session, discover, parse_ticks
from xresponse.response import EXCLUDE, INCLUDE
from xresponse.signs import build_grid
from xresponse.synth import SynthConfig, expected_response, expected_sign_correlation


def test_defaults():
    c = SynthConfig()
    assert (c.n_stocks, c.n_days, c.seed) == (4, 5, 42)
    assert c.trade_prob == (0.6, 0.5, 0.4, 0.3)
    assert c.symbols == ("S00", "S01", "S02", "S03")


@pytest.mark.parametrize("bad", [
    dict(n_stocks=0), dict(trade_prob=1.5), dict(persist_prob=(0.5, 0.5)),
    dict(impact=[[0.0]]), dict(noise_sigma=-1.0), dict(spread=0.0), dict(symbols=("A", "A", "B", "C")),
])
def test_invalid_config(bad):
    with pytest.raises(InvalidConfig):
        SynthConfig(**bad)


def test_load_config_toml(tmp_path):
    path = tmp_path / "s.toml"
    path.write_text("[synth]\nn_stocks = 2\nseed = 7\npersist_prob = [0.9, 0.6]\n")
    c = synth.load_config(path, n_days=2)
    assert (c.n_stocks, c.seed, c.n_days, c.persist_prob) == (2, 7, 2, (0.9, 0.6))
    path.write_text("bogus = 1\n")
    with pytest.raises(InvalidConfig):
        synth.load_config(path)


def test_full_persistence_single_stock():
    m = synth.generate(SynthConfig(n_stocks=1, n_days=1, trade_prob=1.0, persist_prob=1.0), SHORT)
    day = next(iter(m.data["S00"].values()))
    assert len(set(day.trade_sign.tolist())) == 1
    assert np.count_nonzero(day.eps) == SHORT.length


def test_no_trading_writes_header_only_trades(tmp_path):
    m = synth.generate(SynthConfig(n_stocks=1, n_days=1, trade_prob=0.0), SHORT)
    m.write(tmp_path)
    tpath = next((tmp_path / "S00").glob("*.trades.csv"))
    assert tpath.read_text() == "time,price,volume\n"
    qpath = tpath.with_name(tpath.name.replace("trades", "quotes"))
    assert len(qpath.read_text().splitlines()) == SHORT.length + 1


def test_default_frequency_and_persistence():
    c = SynthConfig()
    m = synth.generate(c)
    for k, sym in enumerate(c.symbols):
        days = m.data[sym].values()
        f = np.mean([np.count_nonzero(d.eps) / len(d.eps) for d in days])
        assert abs(f - c.trade_prob[k]) <= 0.02
        lag1 = np.concatenate([d.trade_sign[1:] * d.trade_sign[:-1] for d in days]).mean()
        assert abs(lag1 - (2 * c.persist_prob[k] - 1)) <= 0.03


def test_same_seed_same_bytes(tmp_path):
    c = SynthConfig(n_days=1)
    a = synth.generate(c, SHORT).write(tmp_path / "a")
    b = synth.generate(c, SHORT).write(tmp_path / "b")
    assert a == b
    for f in a["files"] + ["manifest.json", "sectors.csv"]:
        assert (tmp_path / "a" / f).read_bytes() == (tmp_path / "b" / f).read_bytes()
    assert json.loads((tmp_path / "a" / "manifest.json").read_text())["config_hash"] \
        == c.config_hash()
    assert synth.generate(SynthConfig(n_days=1, seed=43), SHORT).write(tmp_path / "c") != a


def test_file_counts(tmp_path):
    manifest = synth.generate(SynthConfig(), SHORT).write(tmp_path)
    assert len([f for f in manifest["files"] if f.endswith(".trades.csv")]) == 20
    assert len([f for f in manifest["files"] if f.endswith(".quotes.csv")]) == 20


def test_written_prices_reclassify(tmp_path, small_market):
    small_market.write(tmp_path)
    found = discover(tmp_path)
    for sym, days in found.items():
        for d, (tp, qp) in days.items():
            g = build_grid(parse_ticks(tp, qp, sym, d, SHORT))
            true = small_market.data[sym][d]
            agree = np.mean(g.eps == true.eps)
            assert agree > 0.99
            np.testing.assert_allclose(g.mid, true.mid, rtol=1e-7)


def test_expected_response_trivial_cases():
    c = SynthConfig(impact=np.zeros((4, 4)).tolist())
    assert expected_response(c, 0, 1, 5) == 0.0
    c = SynthConfig(persist_prob=0.5)
    assert expected_response(c, "S00", "S01", 1) == c.impact[0][1] * c.trade_prob[1]
    assert expected_response(c, 0, 1, 1, EXCLUDE) == c.impact[0][1]


def test_sign_correlation_closed_form_matches_simulation():
    c = SynthConfig(n_stocks=1, n_days=40, trade_prob=0.5, persist_prob=0.9)
    m = synth.generate(c, SHORT)
    for s in (0, 1, 3, 10):
        est = [np.mean(d.eps[s:].astype(float) * d.eps[: len(d.eps) - s]) for d in m.data["S00"].values()]
        mean, se = batch_mean(est)
        assert abs(mean - expected_sign_correlation(c, 0, s)) < 4 * se + 1e-12


@pytest.mark.slow
def test_expected_response_monte_carlo():
    # 300 one-hour days: about 10**6 samples per lag
    c = SynthConfig(n_days=300)
    m = synth.generate(c, Session.parse("09:40:00-10:40:00"))
    for i, j in (("S00", "S01"), ("S02", "S00"), ("S01", "S01")):
        for tau in (1, 5, 10):
            for conv, exc in ((INCLUDE, False), (EXCLUDE, True)):
                mean, se = batch_mean(day_batches(m, i, j, tau, exc))
                assert abs(mean - expected_response(c, i, j, tau, conv)) < 3 * se
