"""Scenario ingestion, Monte Carlo experiments, sweeps and result serialization.

A scenario file is a YAML document with nested sections (documented in the
README and the shipped configs). Powers are written in dBm and converted to
Watts on load; everything downstream works in SI units. All experiments are
deterministic given (config, seed): trials draw from per-trial substreams,
so results do not depend on execution order.
"""

from __future__ import annotations

import csv
import dataclasses
import io
import json
import math
from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np
import yaml

from . import budget as bdg
from . import channel as chan
from . import optimizer as opt
from . import sensing as sns
from .errors import ConfigError, InfeasibleError


def dbm_to_watts(x: float) -> float:
    return 10.0 ** ((x - 30.0) / 10.0)


def watts_to_dbm(w: float) -> float:
    if w <= 0:
        raise ValueError("only positive powers have a dBm value")
    return 30.0 + 10.0 * math.log10(w)


DEFAULT_GEOMETRY = chan.Geometry(pu_pos=(0.0, 0.0), ris_pos=(100.0, 50.0), su_pos=(500.0, 0.0))
SIMULATE_METHODS = ("wmmse", "mf", "zf", "mmse", "passive-unit", "passive-relaxed")


@dataclass(frozen=True)
class ScenarioConfig:
    """Single source of truth for one experiment (all powers in Watts)."""

    n_antennas: int = 32
    m_h: int = 16
    m_v: int = 1
    geometry: chan.Geometry = DEFAULT_GEOMETRY
    pathloss: chan.PathlossModel = chan.PathlossModel()
    angles: chan.AngleSet | None = None
    p_w: tuple[float, ...] = (1.0,)
    zeta: tuple[float, ...] = (1.0,)
    sigma1_sq_w: float = 1e-11
    sigma2_sq_w: float = 1e-11
    p_c_w: float = 1e-4
    p_dc_w: float = 10 ** (-3.5)
    a_max: float = 10.0
    ris_budget_w: float = 0.01
    t_samples: int = 3200
    alpha: float = 0.1
    pd_target: float = 0.9
    trials: int = 500
    seed: int = 0
    method: str = "wmmse"
    channel_model: str = "rayleigh"
    stop_tol: float = 1e-6
    bisect_p_high: float = 10.0

    def __post_init__(self):
        problems = []
        k = self.geometry.n_interferers
        if len(self.p_w) != k + 1 or len(self.zeta) != k + 1:
            problems.append(f"powers/activities must cover {k + 1} sources "
                            f"(got {len(self.p_w)}/{len(self.zeta)})")
        if self.n_antennas < 1:
            problems.append("n_antennas must be >= 1")
        if self.m_h < 1 or self.m_v < 1:
            problems.append("array dimensions must be >= 1")
        if self.t_samples < 1:
            problems.append("t_samples must be >= 1")
        if not 0 < self.alpha < 1:
            problems.append("alpha must lie in (0, 1)")
        if not 0 < self.pd_target < 1:
            problems.append("pd_target must lie in (0, 1)")
        if self.trials < 1:
            problems.append("trials must be >= 1")
        if self.channel_model not in ("rayleigh", "los"):
            problems.append("channel_model must be 'rayleigh' or 'los'")
        if self.method not in SIMULATE_METHODS:
            problems.append(f"method must be one of {SIMULATE_METHODS}")
        if min(self.sigma1_sq_w, self.p_c_w, self.p_dc_w) < 0 or self.sigma2_sq_w <= 0 \
                or min(self.p_w) < 0 or self.a_max <= 0:
            problems.append("powers must be nonnegative (sigma2 and a_max positive)")
        if problems:
            raise ConfigError("invalid scenario:\n  - " + "\n  - ".join(problems))
        if self.angles is None:
            object.__setattr__(self, "angles", chan.AngleSet.from_geometry(self.geometry))

    @property
    def n_elements(self) -> int:
        return self.m_h * self.m_v

    def detector(self) -> sns.DetectorConfig:
        return sns.DetectorConfig(n_antennas=self.n_antennas, n_samples=self.t_samples,
                                  alpha=self.alpha)

    def sources(self) -> sns.SourceModel:
        return sns.SourceModel(p=np.array(self.p_w), zeta=np.array(self.zeta))

    def noise(self) -> sns.NoiseModel:
        return sns.NoiseModel(sigma1_sq=self.sigma1_sq_w, sigma2_sq=self.sigma2_sq_w)

    def power_model(self) -> bdg.RisPowerModel:
        return bdg.RisPowerModel(p_c=self.p_c_w, p_dc=self.p_dc_w,
                                 p_aris=self.ris_budget_w, p_pris=self.ris_budget_w)

    def build_channels(self, trial: int | None = None) -> chan.ChannelSet:
        if self.channel_model == "los":
            return chan.build_los_channelset(self)
        path = (self.seed,) if trial is None else (self.seed, trial)
        return chan.sample_rayleigh_channelset(self, path)


def _expect_mapping(node, name: str):
    if node is None:
        return {}
    if not isinstance(node, dict):
        raise ConfigError(f"section '{name}' must be a mapping")
    return dict(node)


def _take(section: dict, key: str, default):
    return section.pop(key, default)


def _broadcast(value, k: int, name: str) -> tuple[float, ...]:
    if isinstance(value, (int, float)):
        return tuple(float(value) for _ in range(k + 1))
    vals = [float(v) for v in value]
    if len(vals) == k + 1:
        return tuple(vals)
    if len(vals) == k and k >= 0:
        raise ConfigError(f"'{name}' must list {k + 1} values (source 0 first), got {k}")
    raise ConfigError(f"'{name}' must be a scalar or a list of {k + 1} values")


def load_scenario(path: str) -> ScenarioConfig:
    """Parse and validate a scenario file; dBm fields become Watts."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            raw = yaml.safe_load(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read scenario file {path}: {exc}") from exc
    except yaml.YAMLError as exc:
        raise ConfigError(f"scenario file {path} is not valid YAML: {exc}") from exc
    if raw is None:
        raw = {}
    if not isinstance(raw, dict):
        raise ConfigError("scenario file must be a mapping of sections")
    known = {"scenario", "geometry", "pathloss", "array", "powers", "ris",
             "detector", "planner"}
    unknown = set(raw) - known
    if unknown:
        raise ConfigError(f"unknown sections {sorted(unknown)}; expected {sorted(known)}")

    sc = _expect_mapping(raw.get("scenario"), "scenario")
    geo = _expect_mapping(raw.get("geometry"), "geometry")
    plo = _expect_mapping(raw.get("pathloss"), "pathloss")
    arr = _expect_mapping(raw.get("array"), "array")
    pw = _expect_mapping(raw.get("powers"), "powers")
    ris = _expect_mapping(raw.get("ris"), "ris")
    det = _expect_mapping(raw.get("detector"), "detector")
    pln = _expect_mapping(raw.get("planner"), "planner")

    seed = int(_take(sc, "seed", 0))
    trials = int(_take(sc, "trials", 500))
    full_scale = bool(_take(sc, "full_scale", False))
    channel_model = str(_take(sc, "channel_model", "rayleigh"))
    method = str(_take(sc, "method", "wmmse"))

    pu = tuple(float(v) for v in _take(geo, "pu", (0.0, 0.0)))
    ris_pos = tuple(float(v) for v in _take(geo, "ris", (100.0, 50.0)))
    su = tuple(float(v) for v in _take(geo, "su", (500.0, 0.0)))
    annulus = _take(geo, "annulus", (50.0, 60.0))
    interferers = _take(geo, "interferers", 5)
    if isinstance(interferers, int):
        positions = chan.draw_interferer_positions(ris_pos, interferers,
                                                   float(annulus[0]), float(annulus[1]), seed)
    else:
        positions = tuple((float(x), float(y)) for x, y in interferers)
    geometry = chan.Geometry(pu_pos=pu, ris_pos=ris_pos, su_pos=su, interferer_pos=positions)
    k = geometry.n_interferers

    pathloss = chan.PathlossModel(
        wavelength=float(_take(plo, "wavelength", 0.12)),
        alpha_direct=float(_take(plo, "alpha_direct", 4.0)),
        alpha_incident=float(_take(plo, "alpha_incident", 2.0)),
        alpha_outgoing=float(_take(plo, "alpha_outgoing", 2.0)))

    n_default, t_default = (64, 6400) if full_scale else (32, 3200)
    n_antennas = int(_take(arr, "n_antennas", n_default))
    m_h = int(_take(arr, "m_h", 16))
    m_v = int(_take(arr, "m_v", 1))

    p_w = _broadcast(_take(pw, "p_dbm", 30.0), k, "p_dbm")
    p_w = tuple(dbm_to_watts(v) for v in p_w)
    zeta = _broadcast(_take(pw, "zeta", 1.0), k, "zeta")
    sigma1 = dbm_to_watts(float(_take(pw, "sigma1_dbm", -80.0)))
    sigma2 = dbm_to_watts(float(_take(pw, "sigma2_dbm", -80.0)))

    p_c = dbm_to_watts(float(_take(ris, "p_c_dbm", -10.0)))
    p_dc = dbm_to_watts(float(_take(ris, "p_dc_dbm", -5.0)))
    a_max = float(_take(ris, "a_max", 10.0))
    budget = dbm_to_watts(float(_take(ris, "budget_dbm", 10.0)))

    t_samples = int(_take(det, "t_samples", t_default))
    alpha = float(_take(det, "alpha", 0.1))
    pd_target = float(_take(det, "pd_target", 0.9))

    stop_tol = float(_take(pln, "stop_tol", 1e-6))
    p_high = float(_take(pln, "p_high_w", 10.0))

    leftovers = {name: sect for name, sect in
                 (("scenario", sc), ("geometry", geo), ("pathloss", plo), ("array", arr),
                  ("powers", pw), ("ris", ris), ("detector", det), ("planner", pln))
                 if sect}
    if leftovers:
        details = "; ".join(f"{name}: {sorted(sect)}" for name, sect in leftovers.items())
        raise ConfigError(f"unknown keys in scenario file: {details}")

    return ScenarioConfig(
        n_antennas=n_antennas, m_h=m_h, m_v=m_v, geometry=geometry, pathloss=pathloss,
        p_w=p_w, zeta=tuple(zeta), sigma1_sq_w=sigma1, sigma2_sq_w=sigma2,
        p_c_w=p_c, p_dc_w=p_dc, a_max=a_max, ris_budget_w=budget,
        t_samples=t_samples, alpha=alpha, pd_target=pd_target, trials=trials,
        seed=seed, method=method, channel_model=channel_model,
        stop_tol=stop_tol, bisect_p_high=p_high)


class McResult(NamedTuple):
    rate: float
    stderr: float
    trials: int
    mean_eta: float
    mean_pd_pred: float


def _rcm_for_trial(sc: ScenarioConfig, channels: chan.ChannelSet) -> opt.Rcm:
    sources, noise = sc.sources(), sc.noise()
    power = sc.power_model()
    m = channels.n_elements
    p_out = power.p_out_budget(sc.ris_budget_w, m)
    if sc.method == "wmmse":
        if p_out <= 0:
            raise InfeasibleError(
                f"budget {sc.ris_budget_w} W cannot power {m} active elements")
        return opt.wmmse_active(channels, sources, noise, p_out, sc.a_max,
                                max_iter=200).rcm
    if sc.method in ("passive-unit", "passive-relaxed"):
        return opt.wmmse_passive(channels, sources, noise, mode=sc.method,
                                 max_iter=200).rcm
    # closed forms need the LoS steering structure
    if sc.channel_model != "los":
        raise ConfigError(f"method '{sc.method}' needs channel_model: los")
    if p_out <= 0:
        raise InfeasibleError(f"budget {sc.ris_budget_w} W cannot power {m} active elements")
    ctx = bdg.ClosedFormContext.from_scenario(sc, m)
    p_in = ctx.p_in_bar
    if sc.method == "mf":
        return opt.Rcm(phi=bdg.mf_phi(ctx, sc.a_max, p_out, p_in).phi, mode="active",
                       a_max=sc.a_max, p_out_budget=p_out)
    if sc.method == "zf":
        return opt.Rcm(phi=bdg.zf_phi(ctx, sc.a_max, p_out, p_in).phi, mode="active",
                       a_max=sc.a_max, p_out_budget=p_out)
    rho1 = min(p_out / p_in, m * sc.a_max**2)
    return opt.Rcm(phi=bdg.mmse_phi(ctx, rho1).phi, mode="active",
                   a_max=np.inf, p_out_budget=None)


def run_detection_mc(scenario: ScenarioConfig, rcm: opt.Rcm | None = None,
                     hypothesis: str = "h1", trials: int | None = None,
                     seed: int | None = None) -> McResult:
    """Empirical exceedance rate of the detection pipeline.

    Per trial: draw channels (Rayleigh mode redraws, LoS is fixed), fix or
    optimize the reflecting coefficients, synthesize T snapshots under the
    hypothesis, whiten with the analytic covariance and compare the largest
    sample eigenvalue against the threshold.
    """
    trials = scenario.trials if trials is None else trials
    seed = scenario.seed if seed is None else seed
    cfg = scenario.detector()
    gamma_th = sns.detection_threshold(cfg)
    sources, noise = scenario.sources(), scenario.noise()
    fixed_channels = scenario.build_channels() if scenario.channel_model == "los" else None
    if rcm is None and fixed_channels is not None:
        rcm = _rcm_for_trial(scenario, fixed_channels)  # channels fixed, optimize once
    hits = 0
    etas = np.empty(trials)
    pd_pred = np.empty(trials)
    for t in range(trials):
        channels = fixed_channels if fixed_channels is not None \
            else chan.sample_rayleigh_channelset(scenario, (seed, t))
        rcm_t = rcm if rcm is not None else _rcm_for_trial(scenario, channels)
        r = sns.noise_covariance(channels, rcm_t, sources, noise)
        y = sns.sample_signals(channels, rcm_t, sources, noise, hypothesis,
                               scenario.t_samples, (seed, t, 1))
        lam = sns.max_eig_statistic(sns.whiten(y, r))
        hits += lam > gamma_th
        etas[t] = sns.population_eta(channels, rcm_t, sources, noise)
        pd_pred[t] = sns.predicted_pd(sns.spiked_stats(etas[t], cfg.c, cfg.n_antennas,
                                                       gamma_th=gamma_th, alpha=cfg.alpha))
    rate = hits / trials
    stderr = math.sqrt(max(rate * (1 - rate), 1e-300) / trials)
    return McResult(rate=rate, stderr=stderr, trials=trials,
                    mean_eta=float(etas.mean()), mean_pd_pred=float(pd_pred.mean()))


RESULT_COLUMNS = ("experiment", "sweep_name", "sweep_value", "method", "pd_emp",
                  "pfa_emp", "pd_pred", "eta", "required_budget_w", "trials", "seed",
                  "status", "note")


@dataclass(frozen=True)
class ResultRow:
    """One emitted experiment result (missing metrics stay None)."""

    experiment: str
    sweep_name: str | None = None
    sweep_value: float | None = None
    method: str = ""
    pd_emp: float | None = None
    pfa_emp: float | None = None
    pd_pred: float | None = None
    eta: float | None = None
    required_budget_w: float | None = None
    trials: int | None = None
    seed: int | None = None
    status: str = "ok"
    note: str = ""

    def quantized(self) -> dict:
        """Column dict with floats rounded to 9 significant digits."""
        out = {}
        for name in RESULT_COLUMNS:
            v = getattr(self, name)
            if isinstance(v, float):
                v = float(f"{v:.9g}")
            out[name] = v
        return out


def run_m_sweep(scenario: ScenarioConfig) -> list[ResultRow]:
    """Detection probability versus element count at a fixed budget.

    Scans every affordable active element count with per-trial optimization,
    then appends the passive baseline (all budget spent on circuit power) and
    a summary row recording whether the curve came out unimodal.
    """
    power = scenario.power_model()
    m_top = power.m_max(scenario.ris_budget_w)
    if m_top < 1:
        raise InfeasibleError("budget cannot power a single active element")
    rows = []
    pds = []
    for m in range(1, m_top + 1):
        sc_m = dataclasses.replace(scenario, m_h=m, m_v=1, method="wmmse")
        res = run_detection_mc(sc_m, hypothesis="h1")
        pds.append(res.rate)
        rows.append(ResultRow(experiment="m_sweep", sweep_name="m", sweep_value=m,
                              method="wmmse", pd_emp=res.rate, pd_pred=res.mean_pd_pred,
                              eta=res.mean_eta, trials=res.trials, seed=scenario.seed))
    m_passive = power.passive_m(scenario.ris_budget_w)
    if m_passive >= 1:
        sc_p = dataclasses.replace(scenario, m_h=m_passive, m_v=1, method="passive-unit")
        res = run_detection_mc(sc_p, hypothesis="h1")
        rows.append(ResultRow(experiment="m_sweep", sweep_name="m", sweep_value=m_passive,
                              method="passive", pd_emp=res.rate, pd_pred=res.mean_pd_pred,
                              eta=res.mean_eta, trials=res.trials, seed=scenario.seed))
    peak = int(np.argmax(pds))
    tol = 2.0 * math.sqrt(0.25 / scenario.trials)
    unimodal = all(pds[i + 1] >= pds[i] - tol for i in range(peak)) and \
        all(pds[i + 1] <= pds[i] + tol for i in range(peak, len(pds) - 1))
    rows.append(ResultRow(experiment="m_sweep_summary", sweep_name="m",
                          sweep_value=peak + 1, method="wmmse", trials=scenario.trials,
                          seed=scenario.seed, note=f"unimodal={unimodal}"))
    return rows


SWEEPABLE = ("t", "zeta", "p", "k")


def _swept_scenario(scenario: ScenarioConfig, name: str, value) -> ScenarioConfig:
    if name == "t":
        return dataclasses.replace(scenario, t_samples=int(value))
    if name == "zeta":
        z = (1.0,) + tuple(float(value) for _ in range(scenario.geometry.n_interferers))
        return dataclasses.replace(scenario, zeta=z)
    if name == "p":
        p = (scenario.p_w[0],) + tuple(float(value) for _ in range(scenario.geometry.n_interferers))
        return dataclasses.replace(scenario, p_w=p)
    if name == "k":
        k = int(value)
        positions = chan.draw_interferer_positions(scenario.geometry.ris_pos, k, 50.0, 60.0,
                                                   scenario.seed)
        geometry = dataclasses.replace(scenario.geometry, interferer_pos=positions)
        p = (scenario.p_w[0],) + tuple(scenario.p_w[1] if len(scenario.p_w) > 1
                                       else scenario.p_w[0] for _ in range(k))
        z = (1.0,) + tuple(scenario.zeta[1] if len(scenario.zeta) > 1 else 1.0
                           for _ in range(k))
        return dataclasses.replace(scenario, geometry=geometry, p_w=p, zeta=z, angles=None)
    raise ConfigError(f"sweep must be one of {SWEEPABLE}")


def run_budget_sweep(scenario: ScenarioConfig, sweep_name: str, values: Sequence,
                     methods: Sequence[str]) -> list[ResultRow]:
    """Required power budget per method over a parameter grid.

    Infeasible cells are recorded with an explicit marker instead of aborting
    the sweep.
    """
    if sweep_name not in SWEEPABLE:
        raise ConfigError(f"sweep must be one of {SWEEPABLE}")
    rows = []
    for value in values:
        sc_v = _swept_scenario(scenario, sweep_name, value)
        for method in methods:
            try:
                res = bdg.required_budget(method, sc_v.pd_target, sc_v)
                rows.append(ResultRow(
                    experiment=f"budget_vs_{sweep_name}", sweep_name=sweep_name,
                    sweep_value=float(value), method=method, eta=res.eta_star,
                    required_budget_w=res.required_power, trials=0, seed=sc_v.seed,
                    note=res.note))
            except InfeasibleError as exc:
                rows.append(ResultRow(
                    experiment=f"budget_vs_{sweep_name}", sweep_name=sweep_name,
                    sweep_value=float(value), method=method, trials=0, seed=sc_v.seed,
                    status="infeasible", note=str(exc)))
    return rows


def render_results(rows: Sequence[ResultRow], fmt: str = "csv") -> str:
    """Serialize rows with a stable column order and 9-significant-digit floats."""
    dicts = [r.quantized() for r in rows]
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=RESULT_COLUMNS, lineterminator="\n")
        writer.writeheader()
        for d in dicts:
            writer.writerow({k: ("" if v is None else v) for k, v in d.items()})
        return buf.getvalue()
    if fmt == "json":
        return json.dumps(dicts, indent=2) + "\n"
    raise ConfigError(f"format must be csv or json, got {fmt!r}")


def emit_results(rows: Sequence[ResultRow], path: str, fmt: str = "csv") -> None:
    """Write rows to a file (deterministic bytes for identical rows)."""
    text = render_results(rows, fmt)
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)
