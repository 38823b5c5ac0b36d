"""
Grid sweeps over ``δ = N_B - N_C`` and ``τ`` at fixed ``N_B`` and ``N_th``,
plus separability-time curves, with deterministic CSV/JSON output.
"""

from __future__ import annotations

import csv
import io
import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass

import numpy as np

from .correlations import ORDERED_PAIRS, pair_key, report_from_cm
from .noise import ChannelParams, evolve_cm, lambda_tilde_at, separability_time
from .states import TripartiteParams, build_cm, remaining_mode
from .symplectic import ENTANGLEMENT_MARGIN, VACUUM

__all__ = [
    "CSV_COLUMNS",
    "TAU_SEP_COLUMNS",
    "SweepConfig",
    "SweepRecord",
    "grid",
    "run_sweep",
    "tau_sep_curve",
    "format_number",
    "render_sweep",
    "render_tau_sep",
]

CSV_COLUMNS = (
    "delta", "tau", "pair", "discord", "eof_kj", "s_h", "s_j", "s_hk",
    "delta_residual", "delta_kw_residual", "lambda_tilde_minus", "entangled",
    "tau_sep",
)
TAU_SEP_COLUMNS = ("delta", "pair", "tau_sep", "lambda_tilde_at_tau_sep")

SIG_DIGITS = 12


@dataclass(frozen=True)
class SweepConfig:
    n_b: float = 1.0
    n_th: float = 0.2
    delta_min: float = -3.0
    delta_max: float = 1.0
    delta_steps: int = 161
    tau_min: float = 0.0
    tau_max: float = 3.0
    tau_steps: int = 151
    pairs: tuple[str, ...] = ORDERED_PAIRS
    output_path: str | None = None
    format: str = "csv"
    jobs: int = 1

    def __post_init__(self):
        if not self.n_b > 0:
            raise ValueError("n_b must be positive")
        if self.n_th < 0:
            raise ValueError("n_th must be nonnegative")
        if self.delta_max > self.n_b:
            raise ValueError("delta_max must not exceed n_b (N_C = n_b - delta >= 0)")
        if self.delta_min > self.delta_max or self.tau_min > self.tau_max:
            raise ValueError("grid minimum exceeds maximum")
        if self.delta_steps < 1 or self.tau_steps < 1:
            raise ValueError("grid steps must be >= 1")
        if self.tau_min < 0:
            raise ValueError("tau_min must be nonnegative")
        for p in self.pairs:
            if p not in ORDERED_PAIRS:
                raise ValueError(f"unknown pair {p!r}; choose from {','.join(ORDERED_PAIRS)}")
        if self.format not in ("csv", "json"):
            raise ValueError(f"unknown format {self.format!r}")
        if self.jobs < 1:
            raise ValueError("jobs must be >= 1")


@dataclass(frozen=True)
class SweepRecord:
    delta: float
    tau: float
    pair: str
    discord: float
    eof_kj: float
    s_h: float
    s_j: float
    s_hk: float
    delta_residual: float
    delta_kw_residual: float
    lambda_tilde_minus: float
    entangled: bool
    tau_sep: float


def grid(lo: float, hi: float, steps: int) -> np.ndarray:
    return np.array([lo]) if steps == 1 else np.linspace(lo, hi, steps)


def _params(n_b: float, delta: float) -> TripartiteParams:
    n_c = n_b - delta
    if -1e-12 < n_c < 0:
        n_c = 0.0
    return TripartiteParams(n_b, n_c)


def _row(args) -> list[SweepRecord]:
    cfg, delta = args
    p = _params(cfg.n_b, delta)
    sigma0 = build_cm(p)
    tau_sep = {key: separability_time(p, cfg.n_th, key) for key in {pair_key(*q) for q in cfg.pairs}}
    out = []
    for tau in grid(cfg.tau_min, cfg.tau_max, cfg.tau_steps):
        rep = report_from_cm(evolve_cm(sigma0, ChannelParams(cfg.n_th, float(tau))))
        for pair in cfg.pairs:
            h, k = pair
            j = remaining_mode(h, k)
            hk = pair_key(h, k)
            lt = rep.lambda_tilde_minus[hk]
            out.append(SweepRecord(
                delta=float(delta),
                tau=float(tau),
                pair=pair,
                discord=rep.discord[pair],
                eof_kj=rep.eof[pair_key(k, j)],
                s_h=rep.s_single[h],
                s_j=rep.s_single[j],
                s_hk=rep.s_pair[hk],
                delta_residual=rep.delta[pair],
                delta_kw_residual=rep.delta_kw[pair],
                lambda_tilde_minus=lt,
                entangled=lt < VACUUM - ENTANGLEMENT_MARGIN,
                tau_sep=tau_sep[hk],
            ))
    return out


def _map_rows(fn, items, jobs: int):
    if jobs == 1 or len(items) == 1:
        return [fn(it) for it in items]
    with ProcessPoolExecutor(max_workers=jobs) as ex:
        return list(ex.map(fn, items))


def run_sweep(cfg: SweepConfig) -> list[SweepRecord]:
    """All records, δ outer and τ inner, pairs in the configured order."""
    deltas = grid(cfg.delta_min, cfg.delta_max, cfg.delta_steps)
    rows = _map_rows(_row, [(cfg, float(d)) for d in deltas], cfg.jobs)
    return [rec for row in rows for rec in row]


def _tau_sep_row(args):
    cfg, delta = args
    p = _params(cfg.n_b, delta)
    out = []
    for pair in cfg.pairs:
        ts = separability_time(p, cfg.n_th, pair)
        lt = lambda_tilde_at(p, cfg.n_th, pair, ts) if math.isfinite(ts) else math.nan
        out.append({"delta": float(delta), "pair": pair, "tau_sep": ts,
                    "lambda_tilde_at_tau_sep": lt})
    return out


def tau_sep_curve(cfg: SweepConfig) -> list[dict]:
    """``(δ, τ_sep)`` rows for each requested pair; ``inf`` means entangled at the horizon."""
    deltas = grid(cfg.delta_min, cfg.delta_max, cfg.delta_steps)
    rows = _map_rows(_tau_sep_row, [(cfg, float(d)) for d in deltas], cfg.jobs)
    return [rec for row in rows for rec in row]


def format_number(x) -> str:
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, str):
        return x
    if math.isnan(x):
        return "nan"
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    return f"{x:.{SIG_DIGITS}g}"


def _json_value(x):
    if isinstance(x, (bool, str)) or x is None:
        return x
    if not math.isfinite(x):
        return None
    return float(f"{x:.{SIG_DIGITS}g}")


def _render(rows: list[dict], columns, fmt: str, header: dict) -> str:
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(columns)
        for r in rows:
            w.writerow([format_number(r[c]) for c in columns])
        return buf.getvalue()
    doc = {
        "config": header,
        "records": [{c: _json_value(r[c]) for c in columns} for r in rows],
    }
    return json.dumps(doc, indent=1) + "\n"


def _config_echo(cfg: SweepConfig) -> dict:
    d = asdict(cfg)
    d["pairs"] = list(cfg.pairs)
    # parallelism and destination do not change the content
    d.pop("jobs")
    d.pop("output_path")
    return d


def render_sweep(cfg: SweepConfig, records: list[SweepRecord]) -> str:
    return _render([asdict(r) for r in records], CSV_COLUMNS, cfg.format, _config_echo(cfg))


def render_tau_sep(cfg: SweepConfig, rows: list[dict]) -> str:
    return _render(rows, TAU_SEP_COLUMNS, cfg.format, _config_echo(cfg))
