"""Complex dilogarithm and trilogarithm, the Bloch-Wigner function, and the
odd-index polylogarithms F_j(x) = sum x^(2n+1)/(2n+1)^j.

All functions use the principal branch with the cut along [1, oo).  Points
exactly on the cut are evaluated as limits from below (Im z -> 0-), so real
arguments > 1 produce Im Li_2(x) = -pi*log(x).

Everything here is a pure function of ``complex`` scalars; target accuracy is
about 1e-14 relative in double precision.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

PI = math.pi
ZETA2 = PI * PI / 6.0
ZETA3 = 1.2020569031595942854
CATALAN = 0.9159655941772190151


@dataclass(frozen=True)
class Constants:
    zeta3: float = ZETA3
    catalan: float = CATALAN
    pi: float = PI


CONSTANTS = Constants()

_SERIES_RADIUS = 0.5   # direct power series inside, inversion outside 1/radius
_N_EXP_COEFFS = 72     # terms of the log-argument expansion on the annulus


def _bernoulli_numbers(n: int) -> list[Fraction]:
    """B_0..B_n with the B_1 = -1/2 convention, exact."""
    out = [Fraction(1)]
    for m in range(1, n + 1):
        acc = Fraction(0)
        binom = 1
        for j in range(m):
            acc += binom * out[j]
            binom = binom * (m + 1 - j) // (j + 1)
        out.append(-acc / (m + 1))
    return out


def _zeta_int(m: int, bern: list[Fraction]) -> float:
    # zeta at integers m <= 0 and m in {2, 3}; enough for the expansions below.
    if m == 2:
        return ZETA2
    if m == 3:
        return ZETA3
    if m == 0:
        return -0.5
    if m < 0:
        n = -m
        return float(-bern[n + 1] / (n + 1))
    raise ValueError(f"unsupported zeta argument {m}")


def _exp_arg_coeffs(weight: int) -> list[float]:
    # c_k = zeta(weight - k)/k! for the Li_weight(e^mu) expansion; the
    # k = weight-1 slot (the log term) is left as 0 and handled separately.
    bern = _bernoulli_numbers(_N_EXP_COEFFS + 4)
    coeffs = []
    fact = 1.0
    for k in range(_N_EXP_COEFFS):
        if k > 0:
            fact *= k
        if k == weight - 1:
            coeffs.append(0.0)
        else:
            coeffs.append(_zeta_int(weight - k, bern) / fact)
    return coeffs


_LI2_MU_COEFFS = _exp_arg_coeffs(2)
_LI3_MU_COEFFS = _exp_arg_coeffs(3)
_HARMONIC = [0.0, 1.0, 1.5]  # H_0, H_1, H_2


def _check_finite(z: complex) -> complex:
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ValueError(f"non-finite argument {z!r}")
    return z


def _log_neg(w: complex) -> complex:
    """log(-w) with the limit-from-below convention on the positive real axis."""
    if w.imag == 0.0 and w.real > 0.0:
        return complex(math.log(w.real), PI)
    return cmath.log(-w)


def _series(z: complex, weight: int) -> complex:
    # direct defining series; caller guarantees |z| <= ~0.5
    total = 0.0 + 0.0j
    term = z
    n = 1
    while True:
        total += term / n**weight
        n += 1
        term *= z
        if abs(term) <= 1e-18 * (1.0 + abs(total)):
            return total
        if n > 200:  # |z| <= 0.5 needs ~60 terms; this is never hit
            return total


def _from_log_expansion(mu: complex, weight: int, coeffs: list[float]) -> complex:
    # Li_w(e^mu) = sum_{k != w-1} zeta(w-k) mu^k / k!
    #             + mu^(w-1)/(w-1)! * (H_{w-1} - log(-mu)),  valid |mu| < 2*pi
    total = 0.0 + 0.0j
    mupow = 1.0 + 0.0j
    for c in coeffs:
        total += c * mupow
        mupow *= mu
    fact = math.factorial(weight - 1)
    total += mu ** (weight - 1) / fact * (_HARMONIC[weight - 1] - _log_neg(mu))
    return total


def li2(z: complex) -> complex:
    """Dilogarithm Li_2(z), principal branch, cut [1, oo) taken from below."""
    z = _check_finite(z)
    if z == 0:
        return 0.0 + 0.0j
    if z == 1:
        return complex(ZETA2)
    az = abs(z)
    if az <= _SERIES_RADIUS:
        return _series(z, 2)
    if az >= 1.0 / _SERIES_RADIUS:
        # Li2(z) + Li2(1/z) = -pi^2/6 - log(-z)^2/2
        lz = _log_neg(z)
        return -_series(1.0 / z, 2) - ZETA2 - 0.5 * lz * lz
    mu = cmath.log(z)
    if z.imag == 0.0 and z.real > 1.0:
        mu = complex(mu.real, 0.0)  # treat as the boundary value from below
    return _from_log_expansion(mu, 2, _LI2_MU_COEFFS)


def li3(z: complex) -> complex:
    """Trilogarithm Li_3(z), principal branch, cut [1, oo) taken from below."""
    z = _check_finite(z)
    if z == 0:
        return 0.0 + 0.0j
    if z == 1:
        return complex(ZETA3)
    az = abs(z)
    if az <= _SERIES_RADIUS:
        return _series(z, 3)
    if az >= 1.0 / _SERIES_RADIUS:
        # Li3(z) = Li3(1/z) - log(-z)^3/6 - pi^2/6 * log(-z)
        lz = _log_neg(z)
        return _series(1.0 / z, 3) - lz**3 / 6.0 - ZETA2 * lz
    mu = cmath.log(z)
    if z.imag == 0.0 and z.real > 1.0:
        mu = complex(mu.real, 0.0)
    return _from_log_expansion(mu, 3, _LI3_MU_COEFFS)


def bloch_wigner(z: complex) -> float:
    """Bloch-Wigner function D(z) = Im Li_2(z) + log|z| * arg(1 - z).

    D extends continuously by 0 at z = 0 and z = 1; those points return 0
    rather than raising.  D is real valued and vanishes on the real axis.
    """
    z = _check_finite(z)
    if z == 0 or z == 1:
        return 0.0
    w = 1.0 - z
    if z.imag == 0.0 and z.real > 1.0:
        # keep arg(1-z) on the same (from below) side as the Li_2 cut value
        w = complex(w.real, +0.0)
    return li2(z).imag + math.log(abs(z)) * cmath.phase(w)


def f_odd(j: int, x: complex) -> complex:
    """Odd polylogarithm F_j(x) = sum_{n>=0} x^(2n+1)/(2n+1)^j, j in 1..3.

    Equals (Li_j(x) - Li_j(-x))/2; F_1 is atanh.  For j = 1 real arguments
    with |x| >= 1 sit on the logarithmic cut and are rejected.
    """
    x = _check_finite(x)
    if j == 1:
        if x.imag == 0.0 and abs(x.real) >= 1.0:
            raise ValueError(f"F_1 is singular on the real axis at |x| >= 1 (got {x.real})")
        return cmath.atanh(x)
    if j == 2:
        return 0.5 * (li2(x) - li2(-x))
    if j == 3:
        return 0.5 * (li3(x) - li3(-x))
    raise ValueError(f"weight j must be 1, 2 or 3, got {j}")
