"""Catalog verification: evaluate each entry numerically and compare it
against its stored closed form.

Statuses
--------
PASS      numeric value and closed form agree within tolerance
FAIL      they disagree and the numeric side has no second opinion backing it
DISPUTED  they disagree, the entry is flagged dispute-eligible, and an
          independent numeric route reproduces the quadrature value, so the
          evidence points at the closed form rather than the evaluation
SKIPPED   the entry could not be evaluated (quadrature failure, domain error)
"""
from __future__ import annotations

import fnmatch
import io
import json
import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

from .catalog import CatalogEntry, build_catalog, rhs_main_theorem
from .quadrature import (
    IntegrationError,
    QuadConfig,
    integrate_reduced_1d,
    integrate_reduced_log_loglog,
)
from .specfun import DomainError

__all__ = [
    "VerificationRecord",
    "RunConfig",
    "verify_entry",
    "run_catalog",
    "render_markdown",
    "render_json",
    "render_csv",
]

REPORT_SCHEMA = "lerchlab-report/1"

# below this closed-form magnitude a relative test is meaningless; fall back
# to an absolute one
_ABS_FALLBACK_SCALE = 1e-8
_ABS_TOL = 1e-10


@dataclass(frozen=True)
class RunConfig:
    rel_tol: float = 1e-6
    entry_filter: str = "*"
    output_format: str = "markdown"   # markdown | json | csv
    seed: int = 0
    workers: int = 1
    perturb_closed_forms: bool = False


@dataclass(frozen=True)
class VerificationRecord:
    entry_id: str
    status: str
    numeric: Optional[complex]
    closed_form: Optional[complex]
    abs_err: Optional[float]
    rel_err: Optional[float]
    err_estimate: Optional[float]
    route: str
    domain: str
    detail: str = ""
    runtime_ms: float = field(default=0.0, compare=False)


def _quad_cfg(run_cfg: RunConfig, tighten: float = 1.0) -> QuadConfig:
    return QuadConfig(rel_tol=max(1e-13, run_cfg.rel_tol * 1e-3 * tighten))


def _integrate(entry: CatalogEntry, cfg: QuadConfig):
    if entry.form == "pair_log_loglog":
        return (
            integrate_reduced_log_loglog(entry.params, entry.second_exponent, cfg),
            "reduced_log_loglog",
        )
    return (
        integrate_reduced_1d(entry.params, cfg,
                             second_exponent=entry.second_exponent),
        "reduced_1d",
    )


def _second_opinion(entry: CatalogEntry, run_cfg: RunConfig) -> Optional[complex]:
    """An independent numeric value, or None if nothing independent exists.

    Single-form entries are recomputed through the Lerch-side identity;
    everything else is re-integrated at a tighter tolerance, which guards
    against a quadrature that converged to the wrong limit.
    """
    try:
        if entry.form == "single":
            return rhs_main_theorem(entry.params)
        res, _ = _integrate(entry, _quad_cfg(run_cfg, tighten=0.05))
        return res.value if res.converged else None
    except (IntegrationError, DomainError):
        return None


def verify_entry(entry: CatalogEntry, run_cfg: RunConfig) -> VerificationRecord:
    t0 = time.perf_counter()

    def done(status, numeric=None, cf=None, abs_err=None, rel_err=None,
             err_est=None, route="", detail=""):
        return VerificationRecord(
            entry_id=entry.id,
            status=status,
            numeric=numeric,
            closed_form=cf,
            abs_err=abs_err,
            rel_err=rel_err,
            err_estimate=err_est,
            route=route,
            domain=entry.domain.value,
            detail=detail,
            runtime_ms=(time.perf_counter() - t0) * 1e3,
        )

    try:
        cf = complex(entry.closed_form())
    except (DomainError, ValueError, ZeroDivisionError) as exc:
        return done("SKIPPED", detail=f"closed form not evaluable: {exc}")
    if run_cfg.perturb_closed_forms:
        cf = cf * (1.0 + 1e-3) + 1e-3

    try:
        res, route = _integrate(entry, _quad_cfg(run_cfg))
    except (IntegrationError, DomainError) as exc:
        return done("SKIPPED", cf=cf, detail=f"quadrature failed: {exc}")
    if not res.converged:
        return done("SKIPPED", numeric=res.value, cf=cf, route=route,
                    detail="quadrature did not converge")

    abs_err = abs(res.value - cf)
    scale = max(abs(cf), abs(res.value))
    rel_err = abs_err / scale if scale > 0 else 0.0

    if abs(cf) < _ABS_FALLBACK_SCALE:
        ok = abs_err <= max(_ABS_TOL, run_cfg.rel_tol * _ABS_FALLBACK_SCALE)
    else:
        ok = rel_err <= run_cfg.rel_tol
    if ok:
        return done("PASS", numeric=res.value, cf=cf, abs_err=abs_err,
                    rel_err=rel_err, err_est=res.err_estimate, route=route)

    if entry.dispute_eligible:
        other = _second_opinion(entry, run_cfg)
        if other is not None:
            consistent = abs(other - res.value) <= run_cfg.rel_tol * max(
                1.0, abs(res.value))
            if consistent:
                return done(
                    "DISPUTED", numeric=res.value, cf=cf, abs_err=abs_err,
                    rel_err=rel_err, err_est=res.err_estimate, route=route,
                    detail="independent numeric route confirms the "
                           "quadrature value; closed form disagrees")
    return done("FAIL", numeric=res.value, cf=cf, abs_err=abs_err,
                rel_err=rel_err, err_est=res.err_estimate, route=route,
                detail=f"relative error {rel_err:.3e} exceeds "
                       f"{run_cfg.rel_tol:.1e}")


def run_catalog(run_cfg: RunConfig | None = None,
                entries=None) -> list[VerificationRecord]:
    run_cfg = run_cfg or RunConfig()
    entries = build_catalog() if entries is None else list(entries)
    selected = [e for e in entries
                if fnmatch.fnmatch(e.id, run_cfg.entry_filter)]
    # the work order is shuffled so timing artefacts cannot hide order
    # dependence; records are re-sorted, so output is order-independent
    random.Random(run_cfg.seed).shuffle(selected)
    workers = max(1, int(run_cfg.workers))
    if workers == 1:
        records = [verify_entry(e, run_cfg) for e in selected]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(lambda e: verify_entry(e, run_cfg),
                                    selected))
    return sorted(records, key=lambda r: r.entry_id)


# ---------------------------------------------------------------------------
# renderers
# ---------------------------------------------------------------------------

def _cpair(z):
    if z is None:
        return None
    z = complex(z)
    return [z.real, z.imag]


def _cstr(z):
    if z is None:
        return ""
    z = complex(z)
    if z.imag == 0:
        return f"{z.real:.12g}"
    return f"{z.real:.12g}{z.imag:+.12g}j"


def render_json(records: list[VerificationRecord],
                run_cfg: RunConfig) -> str:
    doc = {
        "schema": REPORT_SCHEMA,
        "config": {
            "rel_tol": run_cfg.rel_tol,
            "entry_filter": run_cfg.entry_filter,
            "seed": run_cfg.seed,
        },
        "records": [
            {
                "entry_id": r.entry_id,
                "status": r.status,
                "numeric": _cpair(r.numeric),
                "closed_form": _cpair(r.closed_form),
                "abs_err": r.abs_err,
                "rel_err": r.rel_err,
                "err_estimate": r.err_estimate,
                "route": r.route,
                "domain": r.domain,
                "detail": r.detail,
            }
            for r in records
        ],
    }
    return json.dumps(doc, indent=2, sort_keys=True)


def render_markdown(records: list[VerificationRecord],
                    run_cfg: RunConfig) -> str:
    lines = [
        f"# Catalog verification (rel_tol = {run_cfg.rel_tol:g})",
        "",
        "| entry | status | numeric | closed form | rel err | route |",
        "|---|---|---|---|---|---|",
    ]
    for r in records:
        rel = "" if r.rel_err is None else f"{r.rel_err:.2e}"
        lines.append(
            f"| {r.entry_id} | {r.status} | {_cstr(r.numeric)} "
            f"| {_cstr(r.closed_form)} | {rel} | {r.route} |")
    counts = {}
    for r in records:
        counts[r.status] = counts.get(r.status, 0) + 1
    summary = ", ".join(f"{k}: {v}" for k, v in sorted(counts.items()))
    lines += ["", f"Summary: {summary}", ""]
    return "\n".join(lines)


def render_csv(records: list[VerificationRecord],
               run_cfg: RunConfig) -> str:
    import csv

    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["entry_id", "status", "numeric", "closed_form",
                "abs_err", "rel_err", "err_estimate", "route", "domain",
                "detail"])
    for r in records:
        w.writerow([
            r.entry_id, r.status, _cstr(r.numeric), _cstr(r.closed_form),
            "" if r.abs_err is None else repr(r.abs_err),
            "" if r.rel_err is None else repr(r.rel_err),
            "" if r.err_estimate is None else repr(r.err_estimate),
            r.route, r.domain, r.detail,
        ])
    return buf.getvalue()
