"""Complex special functions on principal branches.

Everything here is a pure function of its arguments.  The Lerch
transcendent is the workhorse: it is evaluated by one of four strategies
(exact rational form at nonpositive integer order, direct series,
root-of-unity reduction to Hurwitz zetas, or the half-line integral
representation), with an explicit error whenever no strategy applies.
Hurwitz zeta and its order-derivative use a fixed Euler-Maclaurin scheme
tuned for double precision at moderate |s|.
"""
from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np
from scipy import special as sc

from .quadrature import QuadConfig, integrate_halfline

__all__ = [
    "DomainError",
    "PoleError",
    "UnsupportedRegionError",
    "LerchStrategy",
    "RationalAngle",
    "principal_log",
    "principal_power",
    "acosh_principal",
    "lerch_phi",
    "lerch_phi_neg_int_s",
    "lerch_root_of_unity",
    "hurwitz_zeta",
    "hurwitz_zeta_sderiv",
    "riemann_zeta",
    "gauss_2f1_a1",
    "bessel_k",
    "glaisher_constant",
    "direct_series",
    "accelerated_series_sum",
]


class DomainError(ValueError):
    """Argument outside the function's domain."""


class PoleError(DomainError):
    """Evaluation requested exactly at a pole."""


class UnsupportedRegionError(ValueError):
    """No evaluation strategy covers the requested parameters."""


_TWO_PI = 2.0 * math.pi


def _cx(z) -> complex:
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise DomainError(f"non-finite argument {z!r}")
    return z


def principal_log(z) -> complex:
    """Principal branch of log: imaginary part in (-pi, pi]."""
    z = _cx(z)
    if z == 0:
        raise DomainError("log(0) is undefined")
    return cmath.log(z)


def principal_power(w, s) -> complex:
    """w**s as exp(s*principal_log(w)); the one power convention used everywhere."""
    s = _cx(s)
    if s == 0:
        return 1.0 + 0.0j
    return cmath.exp(s * principal_log(w))


def acosh_principal(z) -> complex:
    """Principal inverse cosh: real part >= 0, cut along (-inf, 1)."""
    return cmath.acosh(_cx(z))


# ---------------------------------------------------------------------------
# Hurwitz zeta by Euler-Maclaurin
# ---------------------------------------------------------------------------

_EM_CORRECTIONS = 12    # Bernoulli correction terms; saturates doubles for |s| <= 20
_BERN = sc.bernoulli(2 * _EM_CORRECTIONS)
_BERN_OVER_FACT = [
    _BERN[2 * j] / math.factorial(2 * j) for j in range(1, _EM_CORRECTIONS + 1)
]


def _check_hurwitz_args(s, v):
    s = _cx(s)
    v = _cx(v)
    if s == 1:
        raise PoleError("hurwitz zeta has a pole at s=1")
    if v.real <= 0:
        raise DomainError(f"hurwitz zeta needs Re(v) > 0, got v={v}")
    return s, v


def _em_shift(s: complex) -> int:
    # A larger shift sharpens the asymptotic tail but amplifies head
    # cancellation at Re(s) < 0, so it grows only as |s| does.
    return max(8, math.ceil(1.2 * abs(s)))


def _fsum_complex(terms) -> complex:
    return complex(
        math.fsum(t.real for t in terms), math.fsum(t.imag for t in terms)
    )


def _hurwitz_reflection(s: complex, v: complex) -> complex:
    """Hurwitz's formula for Re(s) < 0 and real v; avoids the head
    cancellation that ruins Euler-Maclaurin in doubles at very negative s."""
    x = v.real
    head = []
    while x > 1:
        x -= 1
        head.append(-(x ** (-s)))
    # zeta(s, x) for x in (0, 1]
    pref = 2 * complex(sc.gamma(1 - s)) * cmath.exp((s - 1) * math.log(_TWO_PI))
    sin_part = cmath.sin(0.5 * math.pi * s)
    cos_part = cmath.cos(0.5 * math.pi * s)
    n_max = max(16, math.ceil(math.exp(-40.0 / (s.real - 1.0))))
    n = np.arange(1, n_max + 1)
    npow = n ** (s - 1)
    c = complex(np.sum(np.cos(_TWO_PI * n * x) * npow))
    d = complex(np.sum(np.sin(_TWO_PI * n * x) * npow))
    terms = head + [pref * (sin_part * c + cos_part * d)]
    return _fsum_complex(terms)


def hurwitz_zeta(s, v) -> complex:
    """zeta(s, v) for complex s != 1 and Re(v) > 0, by Euler-Maclaurin
    (reflection via Hurwitz's formula at very negative Re(s), real v)."""
    s, v = _check_hurwitz_args(s, v)
    if s.real <= -3 and v.imag == 0:
        return _hurwitz_reflection(s, v)
    shift = _em_shift(s)
    terms = [(v + n) ** (-s) for n in range(shift)]
    w = v + shift
    lw = cmath.log(w)
    winv2 = cmath.exp(-2 * lw)
    terms.append(cmath.exp((1 - s) * lw) / (s - 1))
    terms.append(0.5 * cmath.exp(-s * lw))
    # correction terms B_{2j}/(2j)! * (s)_{2j-1} * w^{-s-2j+1}
    rising = s
    wpow = cmath.exp((-s - 1) * lw)
    for j in range(1, _EM_CORRECTIONS + 1):
        terms.append(_BERN_OVER_FACT[j - 1] * rising * wpow)
        rising *= (s + 2 * j - 1) * (s + 2 * j)
        wpow *= winv2
    return _fsum_complex(terms)


def hurwitz_zeta_sderiv(s, v) -> complex:
    """d/ds zeta(s, v), by term-by-term differentiated Euler-Maclaurin."""
    s, v = _check_hurwitz_args(s, v)
    shift = _em_shift(s)
    terms = []
    for n in range(shift):
        b = v + n
        terms.append(-cmath.log(b) * b ** (-s))
    w = v + shift
    lw = cmath.log(w)
    winv2 = cmath.exp(-2 * lw)
    w1s = cmath.exp((1 - s) * lw)
    terms.append(-lw * w1s / (s - 1))
    terms.append(-w1s / (s - 1) ** 2)
    terms.append(-0.5 * lw * cmath.exp(-s * lw))
    rising = s
    drising = 1.0 + 0.0j
    wpow = cmath.exp((-s - 1) * lw)
    for j in range(1, _EM_CORRECTIONS + 1):
        terms.append(_BERN_OVER_FACT[j - 1] * (drising - rising * lw) * wpow)
        for f in (s + 2 * j - 1, s + 2 * j):
            drising = drising * f + rising
            rising = rising * f
        wpow *= winv2
    return _fsum_complex(terms)


def riemann_zeta(s) -> complex:
    return hurwitz_zeta(s, 1.0)


@lru_cache(maxsize=1)
def glaisher_constant() -> complex:
    """Glaisher's A = exp(1/12 - zeta'(-1)), computed, not hard-coded."""
    return cmath.exp(1.0 / 12.0 - hurwitz_zeta_sderiv(-1.0, 1.0))


# ---------------------------------------------------------------------------
# Lerch transcendent
# ---------------------------------------------------------------------------

class LerchStrategy(enum.Enum):
    """Evaluation routes for the Lerch transcendent, in dispatch order."""

    NEGATIVE_INTEGER_S = "negative_integer_s"
    DIRECT_SERIES = "direct_series"
    ROOT_OF_UNITY_HURWITZ = "root_of_unity_hurwitz"
    INTEGRAL_REP = "integral_rep"

    def applies(self, z: complex, s: complex, v: complex) -> bool:
        if self is LerchStrategy.NEGATIVE_INTEGER_S:
            return _as_nonneg_int_order(s) is not None and z != 1
        if self is LerchStrategy.DIRECT_SERIES:
            return abs(z) <= 0.9 and not _is_nonpositive_integer(v)
        if self is LerchStrategy.ROOT_OF_UNITY_HURWITZ:
            return (
                v.real > 0
                and abs(abs(z) - 1.0) <= 1e-12
                and RationalAngle.from_complex(z) is not None
            )
        if self is LerchStrategy.INTEGRAL_REP:
            on_cut = z.imag == 0 and z.real >= 1
            return v.real > 0 and s.real > 0 and not on_cut
        raise AssertionError(self)


def _as_nonneg_int_order(s: complex):
    """If s is a nonpositive integer, return k >= 0 with s = -k, else None."""
    if abs(s.imag) > 1e-12:
        return None
    n = round(s.real)
    if abs(s.real - n) > 1e-12 or n > 0:
        return None
    return -n


def _is_nonpositive_integer(v: complex) -> bool:
    if abs(v.imag) > 1e-12:
        return False
    n = round(v.real)
    return abs(v.real - n) <= 1e-12 and n <= 0


@dataclass(frozen=True)
class RationalAngle:
    """A reduced fraction num/den representing z = exp(2*pi*i*num/den)."""

    num: int
    den: int

    def __post_init__(self):
        if self.den <= 0:
            raise DomainError("denominator must be positive")
        if math.gcd(self.num, self.den) != 1 and not (self.num == 0 and self.den == 1):
            raise DomainError(f"{self.num}/{self.den} is not reduced")

    @classmethod
    def from_fraction(cls, fr: Fraction) -> "RationalAngle":
        fr = Fraction(fr)
        return cls(fr.numerator, fr.denominator)

    @classmethod
    def from_complex(cls, z: complex, max_den: int = 64, tol: float = 1e-12):
        """Snap z on the unit circle to a small-denominator rational angle."""
        if abs(abs(z) - 1.0) > tol:
            return None
        fr = Fraction(cmath.phase(z) / _TWO_PI).limit_denominator(max_den)
        angle = cls.from_fraction(fr)
        if abs(z - angle.value()) > 1e-9:
            return None
        return angle

    def value(self) -> complex:
        return cmath.exp(2j * math.pi * self.num / self.den)


def lerch_phi_neg_int_s(z, kk: int, v) -> complex:
    """Phi(z, -kk, v) for integer kk >= 0, exact for every z != 1.

    Built from Phi(z, -j, v) = ((v + z d/dz))^j applied to the geometric
    series, giving a polynomial over (1-z)^(kk+1).
    """
    z = _cx(z)
    v = _cx(v)
    kk = int(kk)
    if kk < 0:
        raise DomainError("kk must be a nonnegative integer")
    if z == 1:
        raise PoleError("Phi(1, -k, v) diverges")
    # coefficients of P_j(z); P_0 = 1
    coeffs = [1.0 + 0.0j]
    for j in range(1, kk + 1):
        prev = coeffs
        coeffs = []
        for i in range(j + 1):
            c = 0.0 + 0.0j
            if i < len(prev):
                c += (v + i) * prev[i]
            if 0 <= i - 1 < len(prev):
                c += (j - i + 1 - v) * prev[i - 1]
            coeffs.append(c)
    poly = 0.0 + 0.0j
    for c in reversed(coeffs):
        poly = poly * z + c
    return poly / (1 - z) ** (kk + 1)


def lerch_root_of_unity(angle: RationalAngle, s, v) -> complex:
    """Phi(e^{2 pi i num/den}, s, v) split into Hurwitz zetas by residue class.

    At s = 1 (and z != 1) the zeta poles cancel across residue classes,
    leaving the finite digamma part.
    """
    s = _cx(s)
    v = _cx(v)
    if v.real <= 0:
        raise DomainError(f"root-of-unity reduction needs Re(v) > 0, got {v}")
    q = angle.den
    p = angle.num
    if s == 1:
        if p % q == 0:
            raise PoleError("Phi(1, 1, v) diverges")
        total = 0.0 + 0.0j
        for r in range(q):
            w = cmath.exp(2j * math.pi * p * r / q)
            total += w * complex(sc.digamma(complex((v + r) / q)))
        return -total / q
    total = 0.0 + 0.0j
    for r in range(q):
        w = cmath.exp(2j * math.pi * p * r / q)
        total += w * hurwitz_zeta(s, (v + r) / q)
    return principal_power(q, -s) * total


def direct_series(z, s, v, tol: float = 1e-13, max_terms: int = 500_000) -> complex:
    """Brute-force partial sums of sum z^n (v+n)^(-s); needs |z| < 1."""
    z = _cx(z)
    s = _cx(s)
    v = _cx(v)
    if z == 0:
        return principal_power(v, -s)
    r = abs(z)
    if r >= 1:
        raise DomainError("direct series needs |z| < 1")
    block = 256
    total = 0.0 + 0.0j
    n0 = 0
    min_terms = 16 + int(4 * (abs(s) + abs(v)))
    while n0 < max_terms:
        n = np.arange(n0, n0 + block)
        base = v + n
        if np.any(base == 0):
            raise DomainError("v must not be a nonpositive integer")
        terms = z ** n * base ** (-s)
        total += complex(np.sum(terms))
        n0 += block
        tail = np.max(np.abs(terms)) * r / (1 - r)
        if n0 > min_terms and tail <= tol * max(1.0, abs(total)):
            return total
    raise UnsupportedRegionError("direct series failed to converge")


def accelerated_series_sum(terms, passes: int = 64) -> complex:
    """Cesaro/Euler style acceleration: iterated averaging of partial sums.

    Sums conditionally convergent series such as sum z^n/(v+n) on |z| = 1,
    z != 1.
    """
    partial = np.cumsum(np.asarray(terms, dtype=complex))
    for _ in range(passes):
        if partial.size < 2:
            break
        partial = 0.5 * (partial[:-1] + partial[1:])
    return complex(partial[-1])


def _lerch_integral_rep(z, s, v) -> complex:
    # Phi = 1/Gamma(s) * int_0^inf t^(s-1) e^(-v t) / (1 - z e^(-t)) dt
    def f(t):
        t = np.asarray(t)
        num = np.exp((s - 1) * np.log(t.astype(complex)) - v * t)
        return num / (1 - z * np.exp(-t))

    res = integrate_halfline(f, QuadConfig(rel_tol=1e-13, max_level=12))
    if not res.converged:
        raise UnsupportedRegionError(
            f"integral representation failed to converge at z={z}, s={s}, v={v}"
        )
    return res.value / complex(sc.gamma(s))


_DISPATCH_ORDER = (
    LerchStrategy.NEGATIVE_INTEGER_S,
    LerchStrategy.DIRECT_SERIES,
    LerchStrategy.ROOT_OF_UNITY_HURWITZ,
    LerchStrategy.INTEGRAL_REP,
)


def lerch_phi(z, s, v, strategy: LerchStrategy | None = None) -> complex:
    """Lerch transcendent Phi(z, s, v).

    Dispatches over the strategies in `LerchStrategy` order unless one is
    forced explicitly.  Raises UnsupportedRegionError instead of returning
    a value from an inapplicable continuation.
    """
    z = _cx(z)
    s = _cx(s)
    v = _cx(v)
    if _is_nonpositive_integer(v) and not _is_nonpositive_integer(s):
        raise PoleError(f"v={v} sits on a pole of Phi for this s")
    if strategy is None:
        for cand in _DISPATCH_ORDER:
            if cand.applies(z, s, v):
                strategy = cand
                break
        else:
            raise UnsupportedRegionError(
                f"no Lerch strategy applies at z={z}, s={s}, v={v}"
            )
    elif not strategy.applies(z, s, v):
        raise UnsupportedRegionError(
            f"strategy {strategy.name} does not apply at z={z}, s={s}, v={v}"
        )
    if strategy is LerchStrategy.NEGATIVE_INTEGER_S:
        return lerch_phi_neg_int_s(z, _as_nonneg_int_order(s), v)
    if strategy is LerchStrategy.DIRECT_SERIES:
        return direct_series(z, s, v)
    if strategy is LerchStrategy.ROOT_OF_UNITY_HURWITZ:
        return lerch_root_of_unity(RationalAngle.from_complex(z), s, v)
    return _lerch_integral_rep(z, s, v)


# ---------------------------------------------------------------------------
# 2F1(a, 1; a+1; z) and modified Bessel K
# ---------------------------------------------------------------------------

def gauss_2f1_a1(a, z) -> complex:
    """2F1(a, 1; a+1; z) via the exact identity 2F1 = a * Phi(z, 1, a)."""
    a = _cx(a)
    z = _cx(z)
    if z.imag == 0 and z.real >= 1:
        raise DomainError("2F1(a,1;a+1;z) is evaluated off the cut [1, inf)")
    return a * lerch_phi(z, 1.0, a)


def bessel_k(nu, z, cfg: QuadConfig | None = None) -> complex:
    """K_nu(z) = int_0^inf e^(-z cosh t) cosh(nu t) dt, for Re(z) > 0."""
    nu = _cx(nu)
    z = _cx(z)
    if z.real <= 0:
        raise DomainError("bessel_k needs Re(z) > 0")
    # beyond t_cap the e^(-z cosh t) factor underflows to exactly zero
    t_cap = math.acosh(max(2.0, 746.0 / z.real))

    def f(t):
        t = np.asarray(t)
        out = np.zeros(t.shape, dtype=complex)
        mask = t < t_cap
        tm = t[mask]
        ch = np.cosh(tm)
        out[mask] = 0.5 * (np.exp(-z * ch + nu * tm) + np.exp(-z * ch - nu * tm))
        return out

    res = integrate_halfline(f, cfg or QuadConfig(rel_tol=1e-13, max_level=12))
    return res.value
