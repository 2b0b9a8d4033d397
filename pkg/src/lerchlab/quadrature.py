"""Double-exponential quadrature on (0, inf) and the two integration
routes for the x^m y^(-m-1) e^(-px-qy-x^2/(4y)) log^k(ax/y) family.

The half-line rule is exp-sinh: x = exp((pi/2) sinh t), trapezoid sums
with the step halved per level until two successive levels agree.  The
nested 2D route integrates x inside y (vectorised inner integrand); the
reduced 1D route uses the exact substitution y = x u, which collapses the
double integral to

    int_0^inf 4 u^(-m) log^k(a/u) / (4 q u^2 + 4 p u + 1) du

and serves as the independent oracle, including the k = -1 difference
forms where the 2D ridge at x = y is numerically hostile.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "QuadConfig",
    "QuadratureResult",
    "IntegrationError",
    "NonRemovableError",
    "integrate_halfline",
    "integrate_unit_interval",
    "integrate_split_at_one",
    "integrate_2d_paper",
    "integrate_reduced_1d",
    "integrate_reduced_log_loglog",
    "removable_singularity_guard",
]


class IntegrationError(RuntimeError):
    """Non-finite integrand values or a rejected parameter set."""


class NonRemovableError(IntegrationError):
    """The numerator does not vanish where the log denominator does."""


@dataclass(frozen=True)
class QuadConfig:
    rel_tol: float = 1e-10
    max_level: int = 12
    abs_floor: float = 1e-300

    def __post_init__(self):
        if not self.rel_tol > 0:
            raise ValueError("rel_tol must be positive")
        if not 3 <= self.max_level <= 20:
            raise ValueError("max_level must lie in [3, 20]")


@dataclass(frozen=True)
class QuadratureResult:
    value: complex
    err_estimate: float
    evaluations: int
    converged: bool


_C = math.pi / 2.0
_LOG_CAP = 240.0                      # |log x| reach of the node set
_T_MAX = math.asinh(_LOG_CAP / _C)
_H0 = 0.5


def _levels(eval_nodes, cfg: QuadConfig) -> QuadratureResult:
    """Generic trapezoid level-doubling driver over t in [-T_MAX, T_MAX]."""
    evals = 0
    h = _H0
    kmax = int(_T_MAX / h)
    t = np.arange(-kmax, kmax + 1) * h
    g = eval_nodes(t)
    evals += t.size
    total = h * complex(np.sum(g))
    err = math.inf
    converged = False
    for level in range(1, cfg.max_level + 1):
        h /= 2.0
        kmax = int(_T_MAX / h)
        knew = np.arange(-kmax, kmax + 1)
        tnew = knew[knew % 2 != 0] * h
        gnew = eval_nodes(tnew)
        evals += tnew.size
        new_total = total / 2.0 + h * complex(np.sum(gnew))
        err = abs(new_total - total)
        total = new_total
        if level >= 2 and err <= cfg.rel_tol * max(1.0, abs(total)):
            converged = True
            break
    return QuadratureResult(total, err, evals, converged)


def _check_finite(g: np.ndarray):
    if not np.all(np.isfinite(g)):
        raise IntegrationError("non-finite integrand value on the quadrature grid")
    return g


def integrate_halfline(f, cfg: QuadConfig | None = None) -> QuadratureResult:
    """Integrate f over (0, inf).

    f must accept a 1-D numpy array of abscissae and return values of the
    same shape.  Endpoint singularities x^sigma with Re(sigma) > -1 and
    exponential or algebraic decay at infinity are handled by the
    exp-sinh transform.
    """
    cfg = cfg or QuadConfig()

    def eval_nodes(t):
        with np.errstate(over="ignore", under="ignore", invalid="ignore", divide="ignore"):
            x = np.exp(_C * np.sinh(t))
            w = _C * np.cosh(t) * x
            g = np.zeros(t.shape, dtype=complex)
            # nodes whose weight underflowed contribute nothing; skip them so
            # f is never probed at abscissae it cannot represent
            ok = (w > 0.0) & np.isfinite(x)
            if np.any(ok):
                g[ok] = np.asarray(f(x[ok]), dtype=complex) * w[ok]
        return _check_finite(g)

    return _levels(eval_nodes, cfg)


def integrate_unit_interval(f, cfg: QuadConfig | None = None) -> QuadratureResult:
    """Integrate f over (0, 1) by tanh-sinh.

    Integrable singularities at x = 0 are handled to full accuracy; at
    x = 1 only mild (logarithmic) singularities keep full accuracy, since
    1 - x near that endpoint is limited by double rounding of the abscissa.
    """
    cfg = cfg or QuadConfig()

    def eval_nodes(t):
        with np.errstate(over="ignore", under="ignore", invalid="ignore", divide="ignore"):
            u = _C * np.sinh(t)
            x = 1.0 / (1.0 + np.exp(-2.0 * u))
            w = _C * np.cosh(t) / (2.0 * np.cosh(u) ** 2)
            g = np.zeros(t.shape, dtype=complex)
            ok = (w > 0.0) & (x > 0.0) & (x < 1.0)
            if np.any(ok):
                g[ok] = np.asarray(f(x[ok]), dtype=complex) * w[ok]
        return _check_finite(g)

    return _levels(eval_nodes, cfg)


def integrate_split_at_one(f, cfg: QuadConfig | None = None) -> QuadratureResult:
    """Integrate f over (0, inf) split at u = 1, for integrands that are
    not analytic across that point; the upper piece is mapped by u -> 1/w."""
    cfg = cfg or QuadConfig()
    lower = integrate_unit_interval(f, cfg)

    def upper_f(w):
        w = np.asarray(w)
        val = np.asarray(f(1.0 / w), dtype=complex)
        out = np.zeros(w.shape, dtype=complex)
        # where f already vanished (far tail) avoid dividing by an
        # underflowed w**2
        nz = val != 0
        out[nz] = val[nz] / w[nz] ** 2
        return out

    upper = integrate_unit_interval(upper_f, cfg)
    return QuadratureResult(
        lower.value + upper.value,
        lower.err_estimate + upper.err_estimate,
        lower.evaluations + upper.evaluations,
        lower.converged and upper.converged,
    )


# ---------------------------------------------------------------------------
# the catalog integrand family
# ---------------------------------------------------------------------------

def _log_power(lg: np.ndarray, k: complex) -> np.ndarray:
    """lg**k with the principal branch when k is not an integer."""
    if k.imag == 0 and k.real == round(k.real):
        n = int(round(k.real))
        if n == 0:
            return np.ones_like(lg, dtype=complex)
        return lg.astype(complex) ** n
    return np.exp(k * np.log(lg.astype(complex)))


def _is_int(k: complex) -> bool:
    return k.imag == 0 and k.real == round(k.real)


def integrate_2d_paper(params, cfg: QuadConfig | None = None, order: str = "xy",
                       drop_gaussian_coupling: bool = False) -> QuadratureResult:
    """The double integral, outer/inner per `order` ("xy" = inner x, outer y).

    `params` provides m, k, a, p, q.  `drop_gaussian_coupling` removes the
    x^2/(4y) factor; it exists only so plumbing tests can exercise the
    nesting against separable product integrals.
    """
    cfg = cfg or QuadConfig()
    m = complex(params.m)
    k = complex(params.k)
    a = complex(params.a)
    p = complex(params.p)
    q = complex(params.q)
    la = cmath.log(a)
    inner_cfg = QuadConfig(
        rel_tol=max(1e-13, cfg.rel_tol * 0.1),
        max_level=cfg.max_level,
        abs_floor=cfg.abs_floor,
    )

    state = {"evals": 0, "max_inner_rel": 0.0, "inner_ok": True}

    if order == "xy":
        exp_out, exp_in = -m - 1, m
        coef_out, coef_in = q, p
    elif order == "yx":
        exp_out, exp_in = m, -m - 1
        coef_out, coef_in = p, q
    else:
        raise ValueError("order must be 'xy' or 'yx'")

    def inner_at(outer_val, outer_arg):
        log_outer = math.log(outer_val)

        def f(s):
            s = np.asarray(s)
            with np.errstate(over="ignore", under="ignore", invalid="ignore",
                             divide="ignore"):
                ls = np.log(s)
                # x^2/(4y) with (inner, outer) = (x, y) or (y, x)
                if order == "xy":
                    gauss = (s * s) / (4.0 * outer_val)
                    lg = la + ls - log_outer
                else:
                    gauss = (outer_val * outer_val) / (4.0 * s)
                    lg = la + log_outer - ls
                # the outer node's prefactor is folded into the exponent so
                # the inner convergence test sees the contribution at its
                # true scale; otherwise tiny inner values pass the tolerance
                # with O(1) relative error and the prefactor amplifies it
                expo = outer_arg + exp_in * ls - coef_in * s
                if not drop_gaussian_coupling:
                    expo = expo - gauss
                out = np.exp(expo) * _log_power(lg, k)
                bad = ~np.isfinite(out)
                if np.any(bad):
                    # exp of a -inf real part is an exact zero; anything else
                    # is a genuine error
                    if np.any(np.real(np.asarray(expo)[bad]) > -745.0):
                        raise IntegrationError("non-finite inner integrand")
                    out[bad] = 0.0
            return out

        return integrate_halfline(f, inner_cfg)

    def outer_f(vals):
        vals = np.asarray(vals)
        out = np.empty(vals.shape, dtype=complex)
        for i, ov in enumerate(vals):
            ov = float(ov)
            arg = exp_out * math.log(ov) - coef_out * ov
            if arg.real <= -745.0:
                out[i] = 0.0
                continue
            res = inner_at(ov, arg)
            state["evals"] += res.evaluations
            scale = max(1.0, abs(res.value))
            state["max_inner_rel"] = max(state["max_inner_rel"],
                                         res.err_estimate / scale)
            state["inner_ok"] = state["inner_ok"] and res.converged
            out[i] = res.value
        return out

    outer = integrate_halfline(outer_f, cfg)
    return QuadratureResult(
        outer.value,
        outer.err_estimate
        + state["max_inner_rel"] * max(1.0, abs(outer.value)),
        outer.evaluations + state["evals"],
        outer.converged and state["inner_ok"],
    )


def _check_denominator(p: complex, q: complex):
    # roots of 4 q u^2 + 4 p u + 1 must stay off (0, inf)
    disc = cmath.sqrt(p * p - q)
    for root in ((-p + disc) / (2 * q), (-p - disc) / (2 * q)):
        if abs(root.imag) < 1e-12 and root.real > 0:
            raise IntegrationError(
                f"denominator root {root} lies on the integration path"
            )


def removable_singularity_guard(alpha, beta, u, eps: float = 1e-4, coeff=1.0):
    """(u^alpha - coeff*u^beta) / log(1/u), finite across u = 1.

    Near u = 1 the quotient is replaced by its 4-term Taylor expansion in
    w = log u; elsewhere it is evaluated directly.  The singularity is
    removable only when the numerator vanishes at u = 1, i.e. coeff = 1.
    """
    if complex(coeff) != 1.0 + 0.0j:
        raise NonRemovableError(
            "numerator does not vanish at the log zero; singularity is a pole"
        )
    alpha = complex(alpha)
    beta = complex(beta)
    u = np.asarray(u, dtype=float)
    w = np.log(u)
    out = np.empty(u.shape, dtype=complex)
    small = np.abs(w) < eps
    ws = w[small]
    out[small] = -(
        (alpha - beta)
        + (alpha ** 2 - beta ** 2) * ws / 2.0
        + (alpha ** 3 - beta ** 3) * ws ** 2 / 6.0
        + (alpha ** 4 - beta ** 4) * ws ** 3 / 24.0
    )
    wl = w[~small]
    with np.errstate(over="ignore", under="ignore"):
        out[~small] = -(np.exp(alpha * wl) - np.exp(beta * wl)) / wl
    return out


def _reduced_integrand(params, second_exponent):
    """Build the reduced 1D integrand for a single or difference entry."""
    m = complex(params.m)
    k = complex(params.k)
    a = complex(params.a)
    p = complex(params.p)
    q = complex(params.q)
    la = cmath.log(a)
    pair = second_exponent is not None
    t = complex(second_exponent) if pair else None
    k_is_minus_one = _is_int(k) and round(k.real) == -1

    if k_is_minus_one and not pair:
        raise IntegrationError(
            "k = -1 needs a difference-form numerator; the single form has a pole"
        )
    if k_is_minus_one and a != 1:
        raise IntegrationError("k = -1 entries are only supported at a = 1")

    def f(u):
        u = np.asarray(u)
        # the far tail decays at least like u^(-1-eps); beyond the cap it is
        # below 1e-19 in total and u*u would overflow complex arithmetic
        safe = u < 1e80
        us = u[safe]
        out = np.zeros(u.shape, dtype=complex)
        with np.errstate(over="ignore", under="ignore", invalid="ignore",
                         divide="ignore"):
            den = 4.0 * q * us * us + 4.0 * p * us + 1.0
            if k_is_minus_one:
                num = removable_singularity_guard(-t, -m, us)
            else:
                lu = np.log(us)
                if pair:
                    num = np.exp(-t * lu) - np.exp(-m * lu)
                else:
                    num = np.exp(-m * lu)
                num = num * _log_power(la - lu, k)
            out[safe] = 4.0 * num / den
        return out

    return f


def integrate_reduced_1d(params, cfg: QuadConfig | None = None,
                         second_exponent=None) -> QuadratureResult:
    """Exact 1D reduction of the double integral (substitution y = x u).

    With `second_exponent` t the integrand becomes the difference form
    4 (u^-t - u^-m) log^k(a/u) / (4qu^2+4pu+1), which covers the k = -1
    entries through the removable-singularity guard.
    """
    cfg = cfg or QuadConfig()
    _check_denominator(complex(params.p), complex(params.q))
    f = _reduced_integrand(params, second_exponent)
    k = complex(params.k)
    if not _is_int(k):
        # principal branch of log^k is taken piecewise on u < a and u > a
        if complex(params.a) != 1:
            raise IntegrationError("piecewise non-integer k supported only at a = 1")
        return integrate_split_at_one(f, cfg)
    return integrate_halfline(f, cfg)


def integrate_reduced_log_loglog(params, second_exponent,
                                 cfg: QuadConfig | None = None) -> QuadratureResult:
    """Reduced route for the log * log(log) difference entry.

    The kernel is L * Log(L) with L = log(a/u); for u > a it is complex on
    the principal branch, so the path is split at u = a (= 1 here).
    """
    cfg = cfg or QuadConfig()
    m = complex(params.m)
    t = complex(second_exponent)
    a = complex(params.a)
    p = complex(params.p)
    q = complex(params.q)
    if a != 1:
        raise IntegrationError("log*log(log) entries are only supported at a = 1")
    _check_denominator(p, q)

    def f(u):
        u = np.asarray(u)
        safe = u < 1e80
        us = u[safe]
        out = np.zeros(u.shape, dtype=complex)
        with np.errstate(over="ignore", under="ignore", invalid="ignore",
                         divide="ignore"):
            lu = np.log(us)
            big_l = -lu
            kernel = np.zeros(us.shape, dtype=complex)
            nz = big_l != 0
            kernel[nz] = big_l[nz] * np.log(big_l[nz].astype(complex))
            num = (np.exp(-t * lu) - np.exp(-m * lu)) * kernel
            den = 4.0 * q * us * us + 4.0 * p * us + 1.0
            out[safe] = 4.0 * num / den
        return out

    return integrate_split_at_one(f, cfg)
