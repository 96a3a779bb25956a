"""The central binomial series h_n(v) = sum (-1)^k (2v)^(2k+1) / ((2k+1)^n C(2k,k))
and its closed forms in terms of polylogarithms at r = v/(1 + sqrt(1+v^2)).

h_1 and h_2 reduce to elementary/dilogarithmic values, h_3 to trilogarithms
(two independent routes), and h_4 to multiple polylogarithms.  All closed
forms analytically continue the series beyond its radius |v| < 1.
"""

from __future__ import annotations

import cmath
import math

from trigmahler.multipolylog import f_211, f21_closed, f_jk
from trigmahler.polylog import PI, ZETA3, f_odd, li2, li3

__all__ = [
    "h_series",
    "h1_closed",
    "h2_closed",
    "h3_closed",
    "h3_batir",
    "h4_multipolylog",
    "root_integral",
    "hyper_4f3_check",
    "hyper_4f3_partial_sums",
    "central_binom_sum",
]


def _half_secant(v: float) -> float:
    """r = v/(1 + sqrt(1+v^2)); |r| < 1 for every finite real v."""
    return v / (1.0 + math.hypot(1.0, v))


def _check_real(v: float, name: str = "v") -> float:
    v = float(v)
    if not math.isfinite(v):
        raise ValueError(f"non-finite {name}: {v!r}")
    return v


def h_series(n: int, v: float, terms: int = 4000) -> float:
    """Direct summation of h_n(v); requires |v| < 1 (radius of convergence).

    Stops at `terms` or when a geometric tail bound drops below 1e-16 of the
    partial sum, whichever comes first.  Central binomial coefficients enter
    through an incremental term ratio, never a factorial.
    """
    if n not in (1, 2, 3, 4):
        raise ValueError(f"n must be in 1..4, got {n}")
    v = _check_real(v)
    if abs(v) >= 1.0:
        raise ValueError(f"series diverges at |v| >= 1 (got {v}); use a closed form")
    if v == 0.0:
        return 0.0
    total = 0.0
    term = 2.0 * v
    for k in range(terms):
        total += term
        # t_{k+1}/t_k = -2 v^2 (k+1) (2k+1)^(n-1) / (2k+3)^n
        ratio = -2.0 * v * v * (k + 1) * (2 * k + 1) ** (n - 1) / (2 * k + 3) ** n
        term *= ratio
        if abs(term) < 1e-16 * (1.0 + abs(total)) and k > 4:
            break
    return total


def h1_closed(v: float) -> float:
    """h_1(v) = 2 log(v + sqrt(1+v^2)) / sqrt(1+v^2) = 2 asinh(v)/sqrt(1+v^2)."""
    v = _check_real(v)
    return 2.0 * math.asinh(v) / math.hypot(1.0, v)


def h2_closed(v: float) -> float:
    """h_2(v) = 2 Li_2(r) - 2 Li_2(-r)."""
    v = _check_real(v)
    if v == 0.0:
        return 0.0
    r = _half_secant(v)
    return 4.0 * f_odd(2, r).real


def h3_closed(v: float) -> float:
    """h_3(v) = Li_3(r^2)/2 + 4 Li_3(1-r) + 4 Li_3(r/(1+r)) - 4 zeta(3)
    - log((1+r)/(1-r)) Li_2(r^2) - (2 pi^2/3) log(1-r) - (2/3) log^3(1+r)
    + 2 log(r) log^2(1-r), with r = v/(1+sqrt(1+v^2)).

    Negative arguments go through the odd symmetry (log(r) would otherwise
    pick up a branch term); v = 0 returns the limit value 0.
    """
    v = _check_real(v)
    if v == 0.0:
        return 0.0
    if v < 0.0:
        return -h3_closed(-v)
    r = _half_secant(v)
    lp, lm = math.log1p(r), math.log1p(-r)
    val = (0.5 * li3(r * r).real + 4.0 * li3(1.0 - r).real + 4.0 * li3(r / (1.0 + r)).real
           - 4.0 * ZETA3
           - (lp - lm) * li2(r * r).real
           - 2.0 * PI * PI / 3.0 * lm
           - 2.0 / 3.0 * lp**3
           + 2.0 * math.log(r) * lm * lm)
    return val


def h3_batir(v: float) -> float:
    """Alternative route: h_3(v) = (pi^2/2) log((1+r)/(1-r)) + 4 Li_3(r)
    - Li_3(r^2)/2 - 8 F_{2,1}(1, r)."""
    v = _check_real(v)
    if v == 0.0:
        return 0.0
    if v < 0.0:
        return -h3_batir(-v)
    r = _half_secant(v)
    return (0.5 * PI * PI * (math.log1p(r) - math.log1p(-r))
            + 4.0 * li3(r).real - 0.5 * li3(r * r).real
            - 8.0 * f21_closed(r).real)


def _f4_series(r: float) -> float:
    # weight-4 odd series sum r^(2n+1)/(2n+1)^4, |r| < 1
    total = 0.0
    rp = r
    n = 0
    while True:
        term = rp / (2 * n + 1) ** 4
        total += term
        if abs(term) < 1e-19:
            return total
        n += 1
        rp *= r * r


def h4_multipolylog(v: float) -> float:
    """h_4(v) through multiple polylogarithms:

    h_4 = (pi^2/4) [log(1-r^2) log((1-r)/(1+r)) + 2 Li_2((1-r)/2) - 2 Li_2((1+r)/2)]
          + pi^2 F_2(r) + 4 F_4(r) - 8 F_{3,1}(1,r) - 8 F_{2,2}(1,r)
          + 16 F_{2,1,1}(1,1,r) - (pi^2/2) log(2) log((1+r)/(1-r)).

    Derivation: integrate h_3(u)/u du through the r-substitution; each nested
    piece splits into a lambda-constant times an odd polylog plus a
    geometrically convergent tail sum, which regroups into exactly the terms
    above.  (A common typographic variant of this identity writes F_3 for the
    weight-4 series F_4 and omits the final elementary term; that combination
    is weight inhomogeneous and fails numerically.)
    """
    v = _check_real(v)
    if v == 0.0:
        return 0.0
    r = _half_secant(v)
    lm, lp = math.log1p(-r), math.log1p(r)
    head = PI * PI / 4.0 * ((lm + lp) * (lm - lp)
                            + 2.0 * li2(0.5 * (1.0 - r)).real
                            - 2.0 * li2(0.5 * (1.0 + r)).real)
    return (head + PI * PI * f_odd(2, r).real + 4.0 * _f4_series(r)
            - 8.0 * f_jk(3, 1, 1, r).real - 8.0 * f_jk(2, 2, 1, r).real
            + 16.0 * f_211(1, 1, r).real
            - 0.5 * PI * PI * math.log(2.0) * (lp - lm))


def root_integral(j: int, v: float) -> float:
    """int_0^v (u/(1+sqrt(1+u^2)))^(2j+1) du/u in closed form:
    log((1+r)/(1-r)) + r^(2j+1)/(2j+1) - 2 sum_{k=0}^{j} r^(2k+1)/(2k+1)."""
    if j < 0 or j != int(j):
        raise ValueError(f"j must be a nonnegative integer, got {j}")
    v = _check_real(v)
    if v == 0.0:
        return 0.0
    r = _half_secant(v)
    tail = sum(r ** (2 * k + 1) / (2 * k + 1) for k in range(j + 1))
    return (math.log1p(r) - math.log1p(-r)) + r ** (2 * j + 1) / (2 * j + 1) - 2.0 * tail


def hyper_4f3_check() -> float:
    """|4F3[1,1,1/2,1/2; 3/2,3/2,3/2 | -4] - (7/10) zeta(3)|.

    The hypergeometric series itself diverges at -4 (terms grow like 4^k);
    its value there is the analytic continuation, which term-by-term algebra
    identifies with h_3(2)/4.  We evaluate that via the trilogarithm closed
    form, so the check is h_3(2)/4 against (7/10) zeta(3).
    """
    return abs(h3_closed(2.0) / 4.0 - 0.7 * ZETA3)


def hyper_4f3_partial_sums(count: int) -> list[float]:
    """First `count` partial sums of the defining (asymptotic) series at -4:
    terms (-1)^k 4^(2k) / ((2k+1)^3 C(2k,k)).  Useful only to observe the
    initial alternating bracketing; the series does not converge."""
    sums = []
    total = 0.0
    term = 1.0
    for k in range(count):
        total += term
        sums.append(total)
        term *= -16.0 * (k + 1) * (2 * k + 1) ** 2 / (2.0 * (2 * k + 3) ** 3)
    return sums


def central_binom_sum() -> float:
    """sum_{n>=1} 1/(n^3 C(2n,n)), summed with incremental term ratios.

    Term ratio is n^3/((n+1)(2n+1)(2n+2)) < 1/4, so 25 terms leave a tail
    below 1e-15.
    """
    total = 0.0
    term = 0.5  # n = 1: 1/(1 * C(2,1)) = 1/2
    n = 1
    while term > 1e-18:
        total += term
        term *= n**3 / ((n + 1.0) * (2 * n + 1.0) * (2 * n + 2.0))
        n += 1
    return total
