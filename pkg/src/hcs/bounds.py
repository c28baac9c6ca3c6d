"""Edge-count bound functions and inequality certification.

Everything rational is computed exactly with Fractions; irrational
constants (square roots) are carried as certified rational enclosures,
and every PASS verdict is required to hold at the unfavorable end of
each enclosure. Quadratic inequalities on an interval are certified by
endpoint evaluation plus concavity, with a dense grid as a fallback.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Sequence

import numpy as np

from .enclosure import (
    Enclosure,
    as_enclosure,
    is_exact,
    sqrt_enclosure,
    upper_bound,
)
from .extractor import SEPARABLE, extract
from .graphs import AnticliqueProfile, SimpleGraph, two_graph_counts

TOL_ENCLOSED = Fraction(1, 10**9)  # for obligations involving irrational constants
TOL_EXACT = Fraction(0)


# --- parameter alternatives ----------------------------------------------------

@dataclass(frozen=True)
class ParameterAlternative:
    """One admissible constant tuple (sigma, gamma, rho, delta).

    sigma scales the guaranteed subgraph size (more than (1+sigma)k
    vertices), delta the average-degree threshold (delta*k - 1); rho is
    the lower bound for the per-graph weight r(G) used in the proofs.
    """

    id: int
    sigma: Fraction | Enclosure
    gamma: Fraction | Enclosure
    rho: Fraction
    delta: Fraction | Enclosure

    def __post_init__(self) -> None:
        # delta >= 1 + gamma is what turns the edge bound into the
        # average-degree statement; certify it on construction.
        d = as_enclosure(self.delta)
        if not d.certainly_ge(as_enclosure(self.gamma) + 1):
            raise ValueError("delta >= 1 + gamma must hold")

    @property
    def label(self) -> str:
        return f"alt{self.id}"


def alternative_1(sigma=None) -> ParameterAlternative:
    """Family with sigma >= (sqrt(2)+1)/sqrt(3); defaults to the boundary value."""
    smin = (sqrt_enclosure(2) + 1) / sqrt_enclosure(3)
    if sigma is None:
        s: Fraction | Enclosure = smin
    else:
        s = Fraction(sigma)
        if not as_enclosure(s).certainly_ge(smin):
            raise ValueError("alternative 1 needs sigma >= (sqrt(2)+1)/sqrt(3)")
    gamma = 1 / (3 * as_enclosure(s)) if isinstance(s, Enclosure) else Fraction(1, 3) / s
    delta = 2 + s + gamma
    return ParameterAlternative(1, s, gamma, Fraction(1), delta)


def alternative_2() -> ParameterAlternative:
    sqrt10 = sqrt_enclosure(10)
    sigma = sqrt10 / 6
    gamma = sqrt10 / 3
    delta = 2 + Fraction(11, 3) / sqrt10
    return ParameterAlternative(2, sigma, gamma, Fraction(2), delta)


def alternative_3() -> ParameterAlternative:
    return ParameterAlternative(
        3, Fraction(1, 5), Fraction(6, 5), Fraction(3), Fraction(3109, 1000)
    )


def get_alternative(alt_id: int) -> ParameterAlternative:
    builders = {1: alternative_1, 2: alternative_2, 3: alternative_3}
    if alt_id not in builders:
        raise ValueError(f"unknown alternative id {alt_id}")
    return builders[alt_id]()


def density_threshold(alt: ParameterAlternative, k: int) -> tuple[Fraction, Fraction]:
    """Certified bounds on the average-degree threshold delta*k - 1."""
    t = as_enclosure(alt.delta) * k - 1
    return t.lo, t.hi


# --- elementary inequalities -----------------------------------------------------

def square_ratio_gap(x, y, r, s):
    """x^2/r + y^2/s - (x+y)^2/(r+s); non-negative, zero exactly when x/r = y/s."""
    if r <= 0 or s <= 0:
        raise ValueError("r and s must be positive")
    if x < 0 or y < 0:
        raise ValueError("x and y must be non-negative")
    if all(isinstance(v, (int, Fraction)) for v in (x, y, r, s)):
        x, y, r, s = Fraction(x), Fraction(y), Fraction(r), Fraction(s)
    return x * x / r + y * y / s - (x + y) * (x + y) / (r + s)


@dataclass(frozen=True)
class OptimizationInstance:
    """Split a total z against a vector of masses zs, with floor tau on the cut."""

    z: float
    zs: tuple[float, ...]
    tau: float

    def __post_init__(self) -> None:
        if not self.z > 0:
            raise ValueError("z must be positive")
        if any(zi < 0 for zi in self.zs):
            raise ValueError("mass components must be non-negative")
        if sum(zi * zi for zi in self.zs) > self.z * self.z:
            raise ValueError("the mass vector must have norm at most z")
        if not (0 <= self.tau <= self.z / 2):
            raise ValueError("tau must lie in [0, z/2]")


def split_objective(inst: OptimizationInstance, x: float, xs: Sequence[float]) -> float:
    q = sum(v * v for v in xs)
    qz = sum((zi - v) * (zi - v) for zi, v in zip(inst.zs, xs))
    return x * x - q + (inst.z - x) * (inst.z - x) - qz


def split_is_feasible(inst: OptimizationInstance, x: float, xs: Sequence[float], slack: float = 1e-12) -> bool:
    if not (inst.tau - slack <= x <= inst.z / 2 + slack):
        return False
    if math.sqrt(sum(v * v for v in xs)) > x + slack:
        return False
    if math.sqrt(sum((z - v) ** 2 for z, v in zip(inst.zs, xs))) > inst.z - x + slack:
        return False
    return True


def split_maximum(inst: OptimizationInstance) -> tuple[float, tuple[float, ...], float]:
    """Closed-form maximizer of the split objective.

    The maximum sits at x = tau; the vector part is zero when zs is zero
    and min(1/2, tau/||zs||) * zs otherwise.
    """
    norm = math.sqrt(sum(zi * zi for zi in inst.zs))
    x = inst.tau
    if norm == 0:
        xs: tuple[float, ...] = tuple(0.0 for _ in inst.zs)
    else:
        alpha = min(0.5, inst.tau / norm)
        xs = tuple(alpha * zi for zi in inst.zs)
    return x, xs, split_objective(inst, x, xs)


def split_maximum_grid(inst: OptimizationInstance, resolution=Fraction(1, 64)) -> float:
    """Grid brute force over the feasible region (independent oracle).

    Refuses vectors longer than 3 and resolutions finer than 1/256.
    Returns -inf when no grid point is feasible.
    """
    step = float(Fraction(resolution))
    if step < 1 / 256:
        raise ValueError("grid resolution must be at least 1/256")
    if len(inst.zs) > 3:
        raise ValueError("grid oracle limited to mass vectors of length 3")
    z, zs, tau = inst.z, inst.zs, inst.tau

    def axis(lo: float, hi: float) -> np.ndarray:
        if hi < lo:
            return np.empty(0)
        count = int(math.floor((hi - lo) / step + 1e-9))
        pts = lo + step * np.arange(count + 1)
        if pts.size == 0 or pts[-1] < hi - 1e-12:
            pts = np.append(pts, hi)
        return pts

    x_axis = axis(tau, z / 2)
    if not zs:
        vals = x_axis * x_axis + (z - x_axis) ** 2
        return float(vals.max()) if vals.size else -math.inf
    mesh = np.meshgrid(*(axis(0.0, zi) for zi in zs), indexing="ij")
    sq = sum(m * m for m in mesh)
    sqz = sum((zi - m) ** 2 for zi, m in zip(zs, mesh))
    best = -math.inf
    for x in x_axis:
        feasible = (sq <= x * x) & (sqz <= (z - x) ** 2)
        if feasible.any():
            vals = x * x - sq + (z - x) ** 2 - sqz
            best = max(best, float(vals[feasible].max()))
    return best


# --- edge bounds for separable views ---------------------------------------------

def basic_edge_bound(g, sigma):
    """Edge bound 2g + 1 + sigma^2 + (g - sigma)^2 for a separable view."""
    if upper_bound(g) < 0:
        raise ValueError("g must be non-negative")
    if upper_bound(sigma) <= 0:
        raise ValueError("sigma must be positive")
    return 2 * g + 1 + sigma * sigma + (g - sigma) * (g - sigma)


def small_sides_edge_bound(g, sigma, profile: AnticliqueProfile, b: Sequence) -> Fraction:
    """Edge bound when both separation sides are small, with anticlique discounts.

    Each b_i in [0, size_i] and sum b_i^2 <= (g - sigma)^2 are required.
    """
    g = Fraction(g)
    sigma = Fraction(sigma)
    if g <= sigma:
        raise ValueError("needs g > sigma")
    bs = [Fraction(x) for x in b]
    if len(bs) != len(profile.sizes):
        raise ValueError("one b value per anticlique is required")
    for bi, size in zip(bs, profile.sizes):
        if not (0 <= bi <= size):
            raise ValueError(f"b value {bi} outside [0, {size}]")
    if sum(bi * bi for bi in bs) > (g - sigma) ** 2:
        raise ValueError("sum of b_i^2 exceeds (g - sigma)^2")
    discount = sum(
        (bi * bi + (size - bi) ** 2 for bi, size in zip(bs, profile.sizes)),
        Fraction(0),
    )
    return 2 * g + 1 + sigma * sigma + (g - sigma) ** 2 - discount


def halving_depth(g: Fraction, sigma: Fraction) -> int:
    """Smallest m >= 1 with g/2^m <= sigma (exactly ceil(log2(g/sigma)) for g > sigma)."""
    if sigma <= 0:
        raise ValueError("sigma must be positive")
    m = 1
    while sigma * 2**m < g:
        m += 1
    return m


def iterated_edge_bound(g, sigma, r, profile: AnticliqueProfile) -> Fraction:
    """Edge bound obtained by repeatedly splitting off the smaller side.

    Valid for g >= sigma and r in (0, 1]; the anticlique discount comes
    with weight 1/(m + r) where m is the halving depth.
    """
    g = Fraction(g)
    sigma = Fraction(sigma)
    r = Fraction(r)
    if g < sigma:
        raise ValueError("needs g >= sigma")
    if not (0 < r <= 1):
        raise ValueError("r must lie in (0, 1]")
    m = halving_depth(g, sigma)
    total = 2 * g + 1 + sigma * sigma
    for j in range(1, m):
        total += (g / 2**j) ** 2
    total += (g / 2 ** (m - 1) - sigma) ** 2 / r
    total -= profile.square_sum / (m + r)
    return total


def core_side_edge_bound(b, r, profile: AnticliqueProfile) -> Fraction:
    """Edge bound for the separation side that carries the unit core anticlique."""
    b = Fraction(b)
    r = Fraction(r)
    if not (0 < r <= 1):
        raise ValueError("r must lie in (0, 1]")
    if b < 0:
        raise ValueError("b must be non-negative")
    return 2 * b + (r + b * b - profile.square_sum) / (r + 1)


# --- certification -----------------------------------------------------------------

Poly = Sequence  # coefficients (c0, c1, c2), low degree first


def _poly_eval(coeffs: Poly, x) -> Enclosure:
    xe = as_enclosure(x)
    out = as_enclosure(0)
    for c in reversed(list(coeffs)):
        out = out * xe + as_enclosure(c)
    return out


def _poly_sub(lhs: Poly, rhs: Poly) -> list:
    n = max(len(lhs), len(rhs))
    out = []
    for i in range(n):
        a = lhs[i] if i < len(lhs) else 0
        b = rhs[i] if i < len(rhs) else 0
        out.append(as_enclosure(a) - as_enclosure(b))
    return out


@dataclass(frozen=True)
class CertificateResult:
    passed: bool
    margin: Fraction           # certified lower bound of the minimum of q
    at_point: Fraction         # where the minimum margin was observed
    method: str                # "endpoints+concavity" or "grid"


def certify_nonnegative_on_interval(
    coeffs: Poly,
    lo,
    hi,
    *,
    tolerance: Fraction = TOL_EXACT,
    grid_step: Optional[Fraction] = None,
) -> CertificateResult:
    """Certify q(x) >= 0 on [lo, hi] for a quadratic q.

    Endpoint checks suffice when q is concave (the feasible set of
    q >= 0 is then an interval); otherwise a dense grid scan is used as
    a safety net. Records the minimum margin either way.
    """
    if len(list(coeffs)) > 3:
        raise ValueError("only polynomials of degree at most 2 are supported")
    lo_e, hi_e = as_enclosure(lo), as_enclosure(hi)
    if hi_e.hi < lo_e.lo:
        raise ValueError("degenerate interval: lo > hi")
    m_lo = _poly_eval(coeffs, lo_e).lo
    m_hi = _poly_eval(coeffs, hi_e).lo
    if m_lo <= m_hi:
        margin, at = m_lo, lo_e.midpoint
    else:
        margin, at = m_hi, hi_e.midpoint
    c2 = as_enclosure(list(coeffs)[2]) if len(list(coeffs)) > 2 else as_enclosure(0)
    concave = c2.hi <= 0
    if concave:
        return CertificateResult(margin >= -tolerance, margin, at, "endpoints+concavity")
    # grid fallback over the midpoint representation of the interval
    a, b = lo_e.midpoint, hi_e.midpoint
    step = Fraction(grid_step) if grid_step is not None else (b - a) / 10**4
    if step <= 0:
        step = Fraction(1)
    x = a
    while x < b:
        v = _poly_eval(coeffs, x).lo
        if v < margin:
            margin, at = v, x
        x += step
    return CertificateResult(margin >= -tolerance, margin, at, "grid")


@dataclass(frozen=True)
class BoundReport:
    """An evaluated proof obligation with its certified margin."""

    obligation_id: str
    params: dict
    lhs: str
    rhs: str
    margin: Fraction
    tolerance: Fraction
    verdict: str  # PASS | FAIL | NOT_APPLICABLE

    @property
    def passed(self) -> bool:
        return self.verdict != "FAIL"


def _fmt(x) -> str:
    if isinstance(x, Enclosure):
        return f"{float(x.midpoint):.12g}"
    return f"{float(x):.12g}"


def _verdict(margin: Fraction, tolerance: Fraction) -> str:
    return "PASS" if margin >= -tolerance else "FAIL"


def _interval_report(
    oid: str,
    params: dict,
    lhs_poly: Poly,
    rhs_poly: Poly,
    lo,
    hi,
    tolerance: Fraction,
    grid_step=None,
) -> BoundReport:
    q = _poly_sub(rhs_poly, lhs_poly)
    cert = certify_nonnegative_on_interval(q, lo, hi, tolerance=tolerance, grid_step=grid_step)
    lhs_at = _poly_eval(lhs_poly, cert.at_point)
    rhs_at = _poly_eval(rhs_poly, cert.at_point)
    return BoundReport(
        oid, params, _fmt(lhs_at), _fmt(rhs_at), cert.margin, tolerance,
        _verdict(cert.margin, tolerance),
    )


def _point_report(oid: str, params: dict, lhs, rhs, tolerance: Fraction) -> BoundReport:
    margin = (as_enclosure(rhs) - as_enclosure(lhs)).lo
    return BoundReport(
        oid, params, _fmt(as_enclosure(lhs)), _fmt(as_enclosure(rhs)), margin,
        tolerance, _verdict(margin, tolerance),
    )


def _identity_report(
    oid: str,
    params: dict,
    f1: Callable,
    f2: Callable,
    samples: Sequence[Fraction],
    allowed: Fraction,
) -> BoundReport:
    worst = Fraction(0)
    for x in samples:
        dev = as_enclosure(f1(x)) - as_enclosure(f2(x))
        bound = max(abs(dev.lo), abs(dev.hi))
        worst = max(worst, bound)
    margin = allowed - worst
    return BoundReport(
        oid, params, _fmt(worst), _fmt(allowed), margin, TOL_EXACT,
        _verdict(margin, TOL_EXACT),
    )


# --- obligation tables ---------------------------------------------------------------

def _half(x):
    return x / 2 if isinstance(x, Enclosure) else Fraction(x) / 2


def _basic_obligations_for(sigma, label: str, tolerance: Fraction) -> list[BoundReport]:
    s = sigma
    delta = 2 + s + 1 / (2 * as_enclosure(s)) if isinstance(s, Enclosure) else 2 + s + Fraction(1, 2) / s
    b1 = delta - 2  # sigma + 1/(2 sigma)
    s2 = as_enclosure(s) * as_enclosure(s)
    reports = [
        # 2g + 1 + s^2 + (g-s)^2 <= delta*g on [s + 1/(2s), 2s]
        _interval_report(
            f"basic[s={label}]/base-range",
            {"sigma": label, "interval": "[s+1/(2s), 2s]"},
            (1 + 2 * s2, 2 - 2 * as_enclosure(s), 1),
            (0, delta, 0),
            b1,
            2 * as_enclosure(s),
            tolerance,
        ),
        # 2g + 1 + s^2 + (g/2 - s)^2 + (g/2)^2 <= delta*g on [2s, 2s + 1/s]
        _interval_report(
            f"basic[s={label}]/mid-range",
            {"sigma": label, "interval": "[2s, 2s+1/s]"},
            (1 + 2 * s2, 2 - as_enclosure(s), Fraction(1, 2)),
            (0, delta, 0),
            2 * as_enclosure(s),
            2 * as_enclosure(s) + 1 / as_enclosure(s),
            tolerance,
        ),
        # (2 + b) b <= delta*b for the small side b <= s + 1/(2s)
        _interval_report(
            f"basic[s={label}]/small-side",
            {"sigma": label, "interval": "[0, s+1/(2s)]"},
            (0, 2, 1),
            (0, delta, 0),
            0,
            b1,
            tolerance,
        ),
    ]
    return reports


def verify_basic_bounds() -> list[BoundReport]:
    """Certify basic_edge_bound <= delta*g at the sharp sigma and at sigma = 1."""
    sharp = 1 / sqrt_enclosure(2)
    out = _basic_obligations_for(sharp, "1/sqrt2", TOL_ENCLOSED)
    out += _basic_obligations_for(Fraction(1), "1", TOL_EXACT)
    return out


def _alt1_obligations(alt: ParameterAlternative, grid_step) -> list[BoundReport]:
    s, gamma, delta = alt.sigma, alt.gamma, alt.delta
    tol = TOL_EXACT if is_exact(s) else TOL_ENCLOSED
    d2 = delta - 2 if isinstance(delta, Enclosure) else Fraction(delta) - 2
    samples = [Fraction(i, 250) for i in range(1000)]

    def lhs_identity(g: Fraction):
        return -(g * g) + d2 * g - Fraction(1, 3)

    def rhs_identity(g: Fraction):
        return (g - gamma) * (as_enclosure(s) - g if isinstance(s, Enclosure) else s - g)

    sqrt23 = sqrt_enclosure(Fraction(2, 3))
    sqrt32 = sqrt_enclosure(Fraction(3, 2))
    return [
        _identity_report(
            "alt1/base/identity",
            {"samples": "1000 on [0,4)"},
            lhs_identity,
            rhs_identity,
            samples,
            Fraction(1, 10**9),
        ),
        # (g+1)^2 <= delta*g + 2/3 on [gamma, sigma]
        _interval_report(
            "alt1/base/nonneg",
            {"interval": "[1/(3s), s]", "r(G)": "1"},
            (1, 2, 1),
            (Fraction(2, 3), delta, 0),
            gamma,
            s,
            tol,
            grid_step,
        ),
        # sqrt(2/3) b + sqrt(2/3) b <= (delta - 2) b, per unit b
        _point_report(
            "alt1/induction/small-side",
            {"r(B)": "sqrt(3/2) b", "r(A)": ">=1"},
            2 * sqrt23,
            d2,
            TOL_ENCLOSED,  # the left side stays irrational for every sigma
        ),
        # witness validity: r(B) = sqrt(3/2) b stays in (0,1] for b <= 1/(3s)
        _point_report(
            "alt1/induction/small-side-witness",
            {"b": "<= 1/(3s)"},
            sqrt32 * gamma,
            1,
            TOL_ENCLOSED,
        ),
    ]


def _alt2_obligations(alt: ParameterAlternative, grid_step) -> list[BoundReport]:
    s, gamma, delta = alt.sigma, alt.gamma, alt.delta
    tol = TOL_ENCLOSED
    d2 = delta - 2
    s2 = as_enclosure(s) * as_enclosure(s)
    up = 2 * sqrt_enclosure(Fraction(2, 5))
    sqrt23 = sqrt_enclosure(Fraction(2, 3))
    return [
        # 1 + 2 (g/2)^2 <= (delta-2) g + 1/3 on [gamma, 2 sqrt(2/5)], r(G) = 2
        _interval_report(
            "alt2/base/low",
            {"interval": "[gamma, 2*sqrt(2/5)]", "r(G)": "2"},
            (1, 0, Fraction(1, 2)),
            (Fraction(1, 3), d2, 0),
            gamma,
            up,
            tol,
            grid_step,
        ),
        # 1 + (g/2)^2 + (g/2 - s)^2 + s^2 <= (delta-2) g + 2/9 on [2 sqrt(2/5), 2 gamma]
        _interval_report(
            "alt2/base/high",
            {"interval": "[2*sqrt(2/5), 2*gamma]", "r(G)": "3"},
            (1 + 2 * s2, -as_enclosure(s), Fraction(1, 2)),
            (Fraction(2, 9), d2, 0),
            up,
            2 * as_enclosure(gamma),
            tol,
            grid_step,
        ),
        # sqrt(2/3) (1/4 + 1) b <= (delta - 2) b, per unit b
        _point_report(
            "alt2/induction/small-side",
            {"r(B)": "sqrt(3/2) b", "r(A)": ">=2"},
            Fraction(5, 4) * sqrt23,
            d2,
            tol,
        ),
        # r(B) = sqrt(3/2) b <= 1 for b <= sqrt(2/3)
        _point_report(
            "alt2/induction/small-side-witness",
            {"b": "<= sqrt(2/3)"},
            sqrt_enclosure(Fraction(3, 2)) * sqrt23,
            1,
            tol,
        ),
        # 1/9 + b^2 <= (delta-2) b on [sqrt(2/3), gamma]
        _interval_report(
            "alt2/induction/medium-side",
            {"interval": "[sqrt(2/3), gamma]", "r(B)": "1"},
            (Fraction(1, 9), 0, 1),
            (0, d2, 0),
            sqrt23,
            gamma,
            tol,
            grid_step,
        ),
    ]


def _alt3_obligations(alt: ParameterAlternative, grid_step) -> list[BoundReport]:
    d2 = Fraction(alt.delta) - 2  # 1109/1000
    tol = TOL_EXACT
    # weight (10/3)(g/8 - 1/5)^2 expands to (5/96) g^2 - g/6 + 2/15
    tail_c2, tail_c1, tail_c0 = Fraction(5, 96), Fraction(-1, 6), Fraction(2, 15)
    reports = [
        _interval_report(
            "alt3/base/g[1.2,1.6]",
            {"interval": "[1.2, 1.6]", "r(G)": "3"},
            (Fraction(7, 9), 0, Fraction(3, 8)),
            (0, d2, 0),
            Fraction(6, 5),
            Fraction(8, 5),
            tol,
            grid_step,
        ),
        _interval_report(
            "alt3/base/g[1.6,2.04]",
            {"interval": "[1.6, 2.04]", "r": "0.3", "r(G)": "4.3"},
            (
                1 + Fraction(1, 25) + tail_c0 - Fraction(2, 3) / Fraction(43, 10),
                tail_c1,
                Fraction(1, 4) + Fraction(1, 16) + Fraction(1, 64) + tail_c2,
            ),
            (0, d2, 0),
            Fraction(8, 5),
            Fraction(51, 25),
            tol,
            grid_step,
        ),
        _interval_report(
            "alt3/base/g[2.04,2.08]",
            {"interval": "[2.04, 2.08]", "s": "0.4", "r(G)": "4.7"},
            (
                1 + Fraction(2, 7) + Fraction(1, 25) + tail_c0 - Fraction(2, 3) / Fraction(47, 10),
                tail_c1,
                Fraction(5, 28) + Fraction(1, 16) + Fraction(1, 64) + tail_c2,
            ),
            (0, d2, 0),
            Fraction(51, 25),
            Fraction(52, 25),
            tol,
            grid_step,
        ),
        _interval_report(
            "alt3/base/g[2.08,2.4]",
            {"interval": "[2.08, 2.4]", "s": "0.7", "r(G)": "5"},
            (
                1 + Fraction(7, 17) + Fraction(1, 25) + tail_c0 - Fraction(2, 15),
                tail_c1,
                Fraction(5, 34) + Fraction(1, 16) + Fraction(1, 64) + tail_c2,
            ),
            (0, d2, 0),
            Fraction(52, 25),
            Fraction(12, 5),
            tol,
            grid_step,
        ),
        # derivative of the combined bound in a is negative on the worst corner,
        # so the maximum sits at a = g/2
        _point_report(
            "alt3/base/derivative-sign",
            {"s": "0.7", "g": "2.04", "a": "1.2"},
            -Fraction(10, 17) * Fraction(21, 25)
            + Fraction(1, 2) * Fraction(3, 5)
            + Fraction(1, 4) * Fraction(3, 10)
            + Fraction(10, 3) * Fraction(1, 4) * (Fraction(3, 10) - Fraction(1, 5)),
            0,
            tol,
        ),
        # (2/27 + 1) b <= (delta-2) b, per unit b
        _point_report(
            "alt3/induction/small-side",
            {"r(B)": "b", "r(A)": ">=3"},
            Fraction(2, 27) + 1,
            d2,
            tol,
        ),
        # 4/45 + (1 + b^2)/2 <= (delta-2) b on [1, 1.2]
        _interval_report(
            "alt3/induction/medium-side",
            {"interval": "[1, 1.2]", "r": "1"},
            (Fraction(4, 45) + Fraction(1, 2), 0, Fraction(1, 2)),
            (0, d2, 0),
            1,
            Fraction(6, 5),
            tol,
            grid_step,
        ),
        _point_report(
            "alt3/induction/medium-side@b=1",
            {"b": "1"},
            Fraction(4, 45) + Fraction(1, 2) + Fraction(1, 2),
            d2,
            tol,
        ),
        _point_report(
            "alt3/induction/medium-side@b=1.2",
            {"b": "1.2"},
            Fraction(4, 45) + (1 + Fraction(6, 5) ** 2) / 2,
            d2 * Fraction(6, 5),
            tol,
        ),
    ]
    return reports


def verify_alternative(alt: ParameterAlternative, *, grid_step=None) -> list[BoundReport]:
    """Certify every inequality instance backing the given alternative."""
    if alt.id == 1:
        return _alt1_obligations(alt, grid_step)
    if alt.id == 2:
        return _alt2_obligations(alt, grid_step)
    if alt.id == 3:
        return _alt3_obligations(alt, grid_step)
    raise ValueError(f"unknown alternative id {alt.id}")


def verify_all_bounds(*, grid_step=None) -> list[BoundReport]:
    out = verify_basic_bounds()
    for alt_id in (1, 2, 3):
        out += verify_alternative(get_alternative(alt_id), grid_step=grid_step)
    return out


# --- consequence check on concrete graphs --------------------------------------------

def separable_density_check(
    g: SimpleGraph, k: int, alt: ParameterAlternative, *, budget: int = 10**6
) -> BoundReport:
    """Check ebar <= delta*g + 2/3 on a graph whose extraction is SEPARABLE.

    Reports NOT_APPLICABLE when g < gamma cannot be certified or when the
    extractor finds a large highly connected subgraph instead.
    """
    oid = "separable-density"
    params = {"n": str(g.n), "e": str(g.edge_count), "k": str(k), "alt": alt.label}
    if g.n == 0:
        return BoundReport(oid, params, "-", "-", Fraction(0), TOL_EXACT, "NOT_APPLICABLE")
    view = two_graph_counts(g, k)
    gg = view.vbar - 1
    if not as_enclosure(gg).certainly_ge(alt.gamma):
        return BoundReport(oid, params, "-", "-", Fraction(0), TOL_EXACT, "NOT_APPLICABLE")
    result = extract(g, k, alt.sigma, budget=budget)
    if result.outcome != SEPARABLE:
        return BoundReport(oid, params, "-", "-", Fraction(0), TOL_EXACT, "NOT_APPLICABLE")
    bound = as_enclosure(alt.delta) * gg + Fraction(2, 3)
    tol = TOL_EXACT if is_exact(alt.delta) else TOL_ENCLOSED
    margin = (bound - as_enclosure(view.ebar)).lo
    return BoundReport(
        oid, params, _fmt(view.ebar), _fmt(bound), margin, tol, _verdict(margin, tol)
    )


# --- serialization --------------------------------------------------------------------

def reports_to_csv(reports: Sequence[BoundReport]) -> str:
    lines = ["obligation_id,params,lhs,rhs,margin,verdict"]
    for r in reports:
        params = json.dumps(r.params, sort_keys=True).replace('"', "'")
        lines.append(
            f'{r.obligation_id},"{params}",{r.lhs},{r.rhs},{float(r.margin):.6g},{r.verdict}'
        )
    return "\n".join(lines) + "\n"


def reports_to_json(reports: Sequence[BoundReport]) -> list[dict]:
    return [
        {
            "obligation_id": r.obligation_id,
            "params": r.params,
            "lhs": r.lhs,
            "rhs": r.rhs,
            "margin": float(r.margin),
            "margin_exact": str(r.margin),
            "tolerance": str(r.tolerance),
            "verdict": r.verdict,
        }
        for r in reports
    ]
