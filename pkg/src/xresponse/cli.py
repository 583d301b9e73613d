"""``xresponse`` command-line front end.

Typical run::

    xresponse -o run synth
    xresponse -o run ingest
    xresponse -o run response --all-pairs --self
    xresponse -o run --lags 0:1000:log20 response --all-pairs --kind correlator
    xresponse -o run average --kind response
    xresponse -o run --lags 1,2,60,300 response --all-pairs
    xresponse -o run rank --direction active --tau 60 --k 15
    xresponse -o run validate

Exit codes: 2 parse/config failure, 3 missing input, 4 degenerate
computation, 5 identity violation.
"""

from __future__ import annotations

import json
import math
import sys
from dataclasses import asdict, dataclass, field
from pathlib import Path

import click

from . import aggregate as agg
from . import ingest, signs, synth
from .errors import (DegenerateMax, DegenerateVariance, EmptySector, InvalidConfig,
                     MissingPairSeries, MissingSeries, NoQuotes, ParseError, TooFewPoints)
from .fit import TABLE_HEADER, fit_power_law, table_row
from .response import (CONVENTIONS, CORRELATOR, CROSS, EXCLUDE, INCLUDE, SELF, SHORT_NAMES,
                       LagSpec, ResponseSeries, compute_pairs, convention_name)

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

EXIT_PARSE = 2
EXIT_MISSING = 3
EXIT_DEGENERATE = 4
EXIT_VALIDATION = 5

IDENTITY_TOL = 1e-9


class CommandError(click.ClickException):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.exit_code = code


@dataclass
class RunConfig:
    output_dir: str = "xresponse_out"
    data_dir: str | None = None
    cache_dir: str | None = None
    symbols: list = field(default_factory=list)
    sector_map: str | None = None
    lags: str = ",".join(map(str, LagSpec().lags))
    convention: str = "both"
    jobs: int = 1
    synth: dict = field(default_factory=dict)

    def __post_init__(self):
        self.data_dir = self.data_dir or str(Path(self.output_dir) / "data")
        self.cache_dir = self.cache_dir or str(Path(self.output_dir) / "cache")
        if self.convention not in ("inc0", "exc0", "both"):
            raise click.BadParameter(f"convention must be inc0, exc0 or both, not {self.convention}")
        if self.jobs < 1:
            raise click.BadParameter("jobs must be >= 1")
        LagSpec.parse(self.lags, allow_zero=True)

    @property
    def conventions(self) -> list[str]:
        return list(CONVENTIONS) if self.convention == "both" else [convention_name(self.convention)]

    def lag_spec(self, allow_zero: bool = False) -> LagSpec:
        return LagSpec.parse(self.lags, allow_zero=allow_zero)

    def provenance(self) -> dict:
        """Resolved configuration embedded in outputs; ``jobs`` is a speed hint and left out."""
        d = asdict(self)
        d.pop("jobs")
        d.pop("synth")
        d["lags"] = list(LagSpec.parse(self.lags, allow_zero=True).lags)
        return d

    @property
    def out(self) -> Path:
        return Path(self.output_dir)

    def sectors(self) -> ingest.SectorMap:
        if self.sector_map:
            return ingest.read_sector_map(self.sector_map)
        local = Path(self.data_dir) / "sectors.csv"
        return ingest.read_sector_map(local if local.exists() else None)


def _load_run_config(path, overrides: dict) -> RunConfig:
    data = {}
    if path:
        try:
            data = tomllib.loads(Path(path).read_text())
        except (OSError, tomllib.TOMLDecodeError) as exc:
            raise CommandError(f"cannot read config {path}: {exc}", EXIT_PARSE) from exc
    run = dict(data.get("run", {k: v for k, v in data.items() if k != "synth"}))
    run["synth"] = data.get("synth", {})
    if isinstance(run.get("lags"), list):
        run["lags"] = ",".join(map(str, run["lags"]))
    run.update({k: v for k, v in overrides.items() if v not in (None, ())})
    if isinstance(run.get("symbols"), str):
        run["symbols"] = [s for s in run["symbols"].split(",") if s]
    unknown = set(run) - set(RunConfig.__dataclass_fields__)
    if unknown:
        raise CommandError(f"unknown config keys: {sorted(unknown)}", EXIT_PARSE)
    return RunConfig(**run)


def _dump(path: Path, doc: dict) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(doc, indent=2, sort_keys=True) + "\n")


def _grids(cfg: RunConfig):
    try:
        return signs.load_grids(cfg.cache_dir, cfg.symbols or None)
    except FileNotFoundError as exc:
        raise CommandError(f"{exc} (run `xresponse ingest` first)", EXIT_MISSING) from exc


def _kind_dir(kind: str) -> str:
    return {"response": CROSS, "correlator": CORRELATOR}.get(kind, kind)


def _load_store(cfg: RunConfig, kind: str, convention: str) -> dict:
    d = cfg.out / "series" / _kind_dir(kind) / SHORT_NAMES[convention]
    store = {}
    if d.is_dir():
        for f in sorted(d.glob("*.csv")):
            s = ResponseSeries.load(f)
            store[(s.i, s.j)] = s
    if _kind_dir(kind) == CROSS:
        sd = cfg.out / "series" / SELF / SHORT_NAMES[convention]
        for f in sorted(sd.glob("*.csv")) if sd.is_dir() else []:
            s = ResponseSeries.load(f)
            store[(s.i, s.j)] = s
    if cfg.symbols:
        keep = set(cfg.symbols)
        store = {k: v for k, v in store.items() if k[0] in keep and k[1] in keep}
    if not store:
        raise CommandError(f"no {kind} series under {d} (run `xresponse response` first)",
                           EXIT_MISSING)
    return store


def _symbols_of(store) -> list[str]:
    return sorted({s for pair in store for s in pair})


def _directions(direction: str) -> list[str]:
    return list(agg.DIRECTIONS) if direction == "both" else [direction]


@click.group()
@click.option("--config", "config_path", type=click.Path(dir_okay=False), help="TOML run config.")
@click.option("--jobs", type=int, help="Parallelism hint (results do not depend on it).")
@click.option("--output-dir", "-o", help="Root for data, cache and results.")
@click.option("--data-dir", help="Trades/quotes directory (default <output-dir>/data).")
@click.option("--cache-dir", help="Grid cache directory (default <output-dir>/cache).")
@click.option("--symbols", help="Comma-separated symbol subset.")
@click.option("--sector-map", type=click.Path(dir_okay=False), help="symbol,sector file.")
@click.option("--lags", help='Lag set: "1,2,60" or "a:b", "a:b:step", "a:b:log[N]".')
@click.option("--convention", type=click.Choice(["inc0", "exc0", "both"]))
@click.pass_context
def cli(ctx, config_path, jobs, output_dir, data_dir, cache_dir, symbols, sector_map, lags,
        convention):
    """Price cross-responses and trade-sign correlators from trades-and-quotes data."""
    try:
        ctx.obj = _load_run_config(config_path, dict(
            jobs=jobs, output_dir=output_dir, data_dir=data_dir, cache_dir=cache_dir,
            symbols=symbols, sector_map=sector_map, lags=lags, convention=convention))
        ingest.Session.from_env()
    except ValueError as exc:
        raise CommandError(str(exc), EXIT_PARSE) from exc


@cli.command("synth")
@click.argument("synth_config", required=False, type=click.Path(dir_okay=False))
@click.option("--seed", type=int)
@click.option("--n-stocks", type=int)
@click.option("--n-days", type=int)
@click.option("--noise-sigma", type=float)
@click.pass_obj
def cmd_synth(cfg: RunConfig, synth_config, seed, n_stocks, n_days, noise_sigma):
    """Write a synthetic market into the data directory."""
    overrides = dict(cfg.synth)
    overrides.update({k: v for k, v in dict(seed=seed, n_stocks=n_stocks, n_days=n_days,
                                            noise_sigma=noise_sigma).items() if v is not None})
    try:
        conf = synth.load_config(synth_config, **overrides)
        market = synth.generate(conf)
    except InvalidConfig as exc:
        raise CommandError(f"invalid synth config: {exc}", EXIT_PARSE) from exc
    manifest = market.write(cfg.data_dir)
    click.echo(f"wrote {len(manifest['files'])} files to {cfg.data_dir} "
               f"(seed {manifest['seed']}, config {manifest['config_hash'][:12]})")


@cli.command("ingest")
@click.pass_obj
def cmd_ingest(cfg: RunConfig):
    """Parse trades/quotes files into per-day grid caches."""
    try:
        found = ingest.discover(cfg.data_dir)
    except FileNotFoundError as exc:
        raise CommandError(str(exc), EXIT_PARSE) from exc
    if cfg.symbols:
        found = {s: v for s, v in found.items() if s in set(cfg.symbols)}
    session = ingest.Session.from_env()
    failures = []
    report = {}
    for sym in sorted(found):
        totals = dict(files=0, lines_in=0, retained=0, dropped_window=0, malformed=0)
        skipped = []
        for day, (tpath, qpath) in sorted(found[sym].items()):
            try:
                if not qpath.exists():
                    raise ParseError(f"missing quotes file {qpath}")
                table = ingest.parse_ticks(tpath, qpath, sym, day, session)
                for rep in (table.trades_report, table.quotes_report):
                    totals["files"] += 1
                    for key in ("lines_in", "retained", "dropped_window", "malformed"):
                        totals[key] += getattr(rep, key)
                if not len(table.trade_time):
                    skipped.append((day.isoformat(), "no trades"))
                    continue
                signs.write_grid(cfg.cache_dir, signs.build_grid(table))
            except NoQuotes:
                skipped.append((day.isoformat(), "no quotes"))
            except (ParseError, UnicodeDecodeError) as exc:
                failures.append(f"{tpath.parent.name}/{day}: {type(exc).__name__}: {exc}")
        conserved = totals["lines_in"] == (totals["retained"] + totals["dropped_window"]
                                           + totals["malformed"])
        report[sym] = dict(totals, conserved=conserved, skipped_days=skipped)
        click.echo(f"{sym}: files={totals['files']} lines={totals['lines_in']} "
                   f"retained={totals['retained']} dropped_window={totals['dropped_window']} "
                   f"malformed={totals['malformed']} conserved={'yes' if conserved else 'NO'}"
                   + (f" skipped_days={len(skipped)}" if skipped else ""))
    _dump(Path(cfg.cache_dir) / "ingest_report.json",
          {"symbols": report, "session": str(session), "run_config": cfg.provenance()})
    if failures:
        for f in failures:
            click.echo(f, err=True)
        raise CommandError(f"{len(failures)} file(s) failed to parse", EXIT_PARSE)


def _parse_pairs(text: str) -> list[tuple[str, str]]:
    pairs = []
    for item in text.split(","):
        if item.strip():
            i, _, j = item.strip().partition(":")
            if not j:
                raise click.BadParameter(f"pair {item!r} must look like I:J")
            pairs.append((i, j))
    return pairs


@cli.command("response")
@click.option("--pairs", help="Comma-separated I:J pairs (I impacted, J impacting).")
@click.option("--all-pairs", is_flag=True, help="Every ordered pair of distinct symbols.")
@click.option("--self", "with_self", is_flag=True, help="Also compute (i, i).")
@click.option("--kind", type=click.Choice(["response", "correlator"]), default="response")
@click.pass_obj
def cmd_response(cfg: RunConfig, pairs, all_pairs, with_self, kind):
    """Pairwise responses or sign correlators for the configured lags."""
    grids = _grids(cfg)
    symbols = sorted(grids)
    todo = []
    if pairs:
        todo = _parse_pairs(pairs)
        unknown = {s for p in todo for s in p} - set(symbols)
        if unknown:
            raise CommandError(f"no cached grids for {sorted(unknown)}", EXIT_MISSING)
    if all_pairs:
        todo += [(i, j) for i in symbols for j in symbols if i != j]
    if with_self:
        todo += [(s, s) for s in (symbols if all_pairs or not pairs
                                  else sorted({x for p in todo for x in p}))]
    todo = sorted(set(todo))
    if not todo:
        raise click.UsageError("give --pairs, --all-pairs or --self")
    correlator = kind == "correlator"
    lags = cfg.lag_spec(allow_zero=correlator)
    results = compute_pairs(grids, todo, lags, correlator=correlator, jobs=cfg.jobs)
    written = 0
    for pair in todo:
        if pair not in results:
            click.echo(f"({pair[0]},{pair[1]}): no common days or valid samples", err=True)
            continue
        for conv in cfg.conventions:
            s = results[pair][conv]
            s.save(cfg.out / "series" / s.kind / SHORT_NAMES[conv], run_config=cfg.provenance())
            written += 1
    click.echo(f"wrote {written} series")


@cli.command("average")
@click.option("--kind", type=click.Choice(["response", "correlator"]), default="response")
@click.option("--direction", type=click.Choice(["passive", "active", "both"]), default="both")
@click.option("--anchors", help="Comma-separated anchors (default: every symbol).")
@click.pass_obj
def cmd_average(cfg: RunConfig, kind, direction, anchors):
    """Passive/active averages of pairwise series over the whole universe."""
    for conv in cfg.conventions:
        store = _load_store(cfg, kind, conv)
        universe = _symbols_of(store)
        chosen = anchors.split(",") if anchors else universe
        for d in _directions(direction):
            for a in chosen:
                try:
                    avg = agg.average(a, universe, store, d)
                except MissingPairSeries as exc:
                    raise CommandError(str(exc), EXIT_MISSING) from exc
                avg.save(cfg.out / "averages" / _kind_dir(kind) / SHORT_NAMES[conv] / d,
                         run_config=cfg.provenance())
    click.echo("averages written")


@cli.command("sector")
@click.option("--anchors", required=True, help="Comma-separated anchor symbols.")
@click.option("--direction", type=click.Choice(["passive", "active", "both"]), default="both")
@click.option("--sector", "sectors", multiple=True, help="Sector label(s); default all.")
@click.option("--kind", type=click.Choice(["response", "correlator"]), default="response")
@click.pass_obj
def cmd_sector(cfg: RunConfig, anchors, direction, sectors, kind):
    """Averages restricted to economic sectors."""
    smap = cfg.sectors()
    for conv in cfg.conventions:
        store = _load_store(cfg, kind, conv)
        universe = _symbols_of(store)
        for d in _directions(direction):
            for a in anchors.split(","):
                for sec in sectors or smap.sectors():
                    try:
                        avg = agg.sector_average(a, d, sec, smap, store, universe)
                    except EmptySector as exc:
                        if sectors:
                            raise CommandError(str(exc), EXIT_DEGENERATE) from exc
                        continue
                    except MissingPairSeries as exc:
                        raise CommandError(str(exc), EXIT_MISSING) from exc
                    avg.save(cfg.out / "sectors" / _kind_dir(kind) / SHORT_NAMES[conv] / d,
                             run_config=cfg.provenance())
    click.echo("sector averages written")


def _matrix(cfg, store, tau, smap):
    try:
        return agg.response_matrix(_symbols_of(store), tau, store, smap)
    except MissingPairSeries as exc:
        raise CommandError(str(exc), EXIT_MISSING) from exc
    except DegenerateMax as exc:
        raise CommandError(str(exc), EXIT_DEGENERATE) from exc


def _sector_map_for(cfg, symbols):
    smap = cfg.sectors()
    return smap if all(s in smap for s in symbols) else None


@cli.command("matrix")
@click.option("--tau", type=int, default=60, show_default=True)
@click.pass_obj
def cmd_matrix(cfg: RunConfig, tau):
    """Normalized response matrix at one lag."""
    for conv in cfg.conventions:
        store = _load_store(cfg, "response", conv)
        m = _matrix(cfg, store, tau, _sector_map_for(cfg, _symbols_of(store)))
        path = cfg.out / "matrix" / SHORT_NAMES[conv] / f"tau{tau}.csv"
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(m.to_csv())
        _dump(path.with_suffix(".json"), dict(m.sidecar(), run_config=cfg.provenance()))
        click.echo(f"{path} max_abs={m.max_abs!r}")


@cli.command("rank")
@click.option("--direction", type=click.Choice(["passive", "active", "both"]), default="both")
@click.option("--tau", type=int, default=60, show_default=True)
@click.option("--k", type=int, default=15, show_default=True)
@click.option("--abs", "by_abs", is_flag=True, help="Rank by magnitude instead of signed value.")
@click.pass_obj
def cmd_rank(cfg: RunConfig, direction, tau, k, by_abs):
    """Most influenced (passive) or influencing (active) stocks at one lag."""
    for conv in cfg.conventions:
        store = _load_store(cfg, "response", conv)
        symbols = _symbols_of(store)
        smap = _sector_map_for(cfg, symbols)
        m = _matrix(cfg, store, tau, smap)
        for d in _directions(direction):
            try:
                avgs = {s: agg.average(s, symbols, store, d) for s in symbols}
                ranking = agg.rank_stocks(avgs, tau, k, scale=m.max_abs, by_abs=by_abs)
            except (MissingPairSeries, MissingSeries) as exc:
                raise CommandError(str(exc), EXIT_MISSING) from exc
            path = cfg.out / "rank" / SHORT_NAMES[conv] / f"{d}_tau{tau}.csv"
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(ranking.to_csv(smap))
            _dump(path.with_suffix(".json"),
                  {"direction": d, "tau": tau, "convention": conv, "k": k, "by_abs": by_abs,
                   "scale": m.max_abs, "run_config": cfg.provenance()})
            click.echo(f"{path}: " + " ".join(ranking.symbols))


@cli.command("fit")
@click.option("--pair", help="Fit the pairwise series I:J.")
@click.option("--anchor", help="Fit the market average of this anchor.")
@click.option("--direction", type=click.Choice(["passive", "active"]), default="passive")
@click.option("--kind", type=click.Choice(["response", "correlator"]), default="correlator")
@click.option("--tau-min", type=float, default=1.0, show_default=True)
@click.option("--tau-max", type=float, default=math.inf)
@click.option("--chi2", type=click.Choice(["mean", "sum"]), default="mean", show_default=True)
@click.pass_obj
def cmd_fit(cfg: RunConfig, pair, anchor, direction, kind, tau_min, tau_max, chi2):
    """Power-law fit of a correlator (pairwise or averaged)."""
    if bool(pair) == bool(anchor):
        raise click.UsageError("give exactly one of --pair or --anchor")
    fits = {}
    label = pair.replace(":", "__") if pair else f"{anchor}__{direction}"
    for conv in cfg.conventions:
        store = _load_store(cfg, kind, conv)
        if pair:
            key = tuple(pair.split(":"))
            if key not in store:
                raise CommandError(f"no series for pair {pair}", EXIT_MISSING)
            target = store[key]
        else:
            try:
                target = agg.average(anchor, _symbols_of(store), store, direction)
            except MissingPairSeries as exc:
                raise CommandError(str(exc), EXIT_MISSING) from exc
        try:
            f = fit_power_law(target, (tau_min, tau_max), chi2=chi2)
        except TooFewPoints as exc:
            raise CommandError(str(exc), EXIT_DEGENERATE) from exc
        fits[conv] = f
        path = cfg.out / "fit" / SHORT_NAMES[conv] / f"{label}.json"
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(f.to_json(source=label, kind=_kind_dir(kind), convention=conv,
                                  tau_range=[tau_min, tau_max if math.isfinite(tau_max) else None],
                                  run_config=cfg.provenance()))
        click.echo(f"{path}: theta={f.theta:.4g} tau0={f.tau0:.4g} gamma={f.gamma:.4g} "
                   f"chi2={f.chi2:.3g} {f.memory_class} memory"
                   + ("" if f.converged else " (not converged)"))
    if len(fits) == 2:
        path = cfg.out / "fit" / f"{label}.table.csv"
        path.write_text(TABLE_HEADER + "\n" + table_row(label, fits[INCLUDE], fits[EXCLUDE]) + "\n")


@cli.command("corr")
@click.option("--tau", type=int, default=60, show_default=True)
@click.pass_obj
def cmd_corr(cfg: RunConfig, tau):
    """Correlation of active average response with average daily trades."""
    grids = _grids(cfg)
    stats = {s: signs.activity_stats(g.values()) for s, g in grids.items()}
    for conv in cfg.conventions:
        store = _load_store(cfg, "response", conv)
        symbols = _symbols_of(store)
        try:
            active = {s: agg.active_average(s, symbols, store).value(tau) for s in symbols}
            corr = agg.trade_count_correlation(active, stats, tau)
        except (MissingPairSeries, MissingSeries, KeyError) as exc:
            raise CommandError(f"missing input: {exc}", EXIT_MISSING) from exc
        except (DegenerateVariance, ValueError) as exc:
            raise CommandError(str(exc), EXIT_DEGENERATE) from exc
        path = cfg.out / "corr" / f"{SHORT_NAMES[conv]}_tau{tau}.json"
        _dump(path, {"tau": tau, "convention": conv, "corr": corr,
                     "points": {s: {"active": active[s],
                                    "avg_daily_trades": stats[s].avg_daily_trades}
                                for s in symbols},
                     "run_config": cfg.provenance()})
        click.echo(f"{conv}: corr={corr:.6f}")


def _rel(a: float, b: float) -> float:
    return abs(a - b) / max(abs(a), 1e-15)


def _validate_pairs(cfg, kind):
    """Per pair and lag: include value vs frequency times exclude value."""
    root = cfg.out / "series" / kind
    inc_dir, exc_dir = root / "inc0", root / "exc0"
    worst = (0.0, None)
    checked = 0
    if not (inc_dir.is_dir() and exc_dir.is_dir()):
        return worst, checked
    for f in sorted(inc_dir.glob("*.csv")):
        g = exc_dir / f.name
        if not g.exists():
            continue
        inc, exc = ResponseSeries.load(f), ResponseSeries.load(g)
        ep = exc.points
        for tau, (v_inc, _, n_inc) in inc.points.items():
            if tau not in ep:
                continue
            v_exc, _, n_exc = ep[tau]
            dev = _rel(v_inc, n_exc / n_inc * v_exc)
            checked += 1
            if dev > worst[0]:
                worst = (dev, f"{kind} ({inc.i},{inc.j}) tau={tau}")
    return worst, checked


def _validate_averages(cfg, kind):
    """Stored include-zero averages vs frequency-weighted exclude-zero pairwise means."""
    worst = (0.0, None)
    checked = 0
    root = cfg.out / "averages" / kind / "inc0"
    if kind == SELF or not root.is_dir():
        return worst, checked
    try:
        inc_store = _load_store(cfg, kind, INCLUDE)
        exc_store = _load_store(cfg, kind, EXCLUDE)
    except CommandError:
        return worst, checked
    for f in sorted(root.glob("*/*.csv")):
        avg = agg.AverageSeries.load(f)
        for tau, (value, _, n_pairs) in avg.points.items():
            terms = []
            for partner in sorted(avg.universe):
                key = agg._pair(avg.direction, avg.anchor, partner)
                if key not in inc_store or key not in exc_store:
                    continue
                pi, pe = inc_store[key].points, exc_store[key].points
                if tau in pi and tau in pe:
                    terms.append(pe[tau][2] / pi[tau][2] * pe[tau][0])
            if len(terms) != n_pairs:
                continue
            # scale by the largest term: a mean that cancels to ~0 would
            # otherwise turn last-bit differences into huge relative errors
            ref = math.fsum(terms) / len(terms)
            dev = abs(value - ref) / max(abs(value), max(map(abs, terms)), 1e-15)
            checked += 1
            if dev > worst[0]:
                worst = (dev, f"{avg.direction} average of {avg.anchor} ({kind}) tau={tau}")
    return worst, checked


@cli.command("validate")
@click.pass_obj
def cmd_validate(cfg: RunConfig):
    """Check the include/exclude-zero scaling identities on stored results."""
    worst, total = (0.0, None), 0
    for kind in (CROSS, SELF, CORRELATOR):
        for check in (_validate_pairs, _validate_averages):
            (dev, where), n = check(cfg, kind)
            total += n
            if n:
                click.echo(f"{check.__name__[10:]} {kind}: {n} checks, "
                           f"max relative deviation {dev:.3e}")
            if dev > worst[0] or worst[1] is None and where:
                worst = (dev, where)
    if total == 0:
        click.echo("nothing to validate")
        return
    click.echo(f"max relative deviation {worst[0]:.3e}" + (f" at {worst[1]}" if worst[1] else ""))
    if worst[0] > IDENTITY_TOL:
        raise CommandError(f"identity violated: {worst[1]} deviates by {worst[0]:.3e}",
                           EXIT_VALIDATION)


def main():
    cli(prog_name="xresponse")


if __name__ == "__main__":
    main()
