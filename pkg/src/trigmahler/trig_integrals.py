"""The arctangent integral Ti(w) = int_0^w atan(u)/u du and the arcsine
integral As(v) = int_0^v asin(u)/u du, in closed form via the dilogarithm.
"""

from __future__ import annotations

import cmath
import math

from trigmahler.polylog import li2

__all__ = ["ti", "asin_int"]


def ti(w: float) -> float:
    """Arctangent integral int_0^w atan(u)/u du for real w.

    Equals Im Li_2(i*w) on [0, 1]; larger arguments go through the
    functional equation Ti(w) = (pi/2) log(w) + Ti(1/w).  Negative w uses
    the odd extension Ti(-w) = -Ti(w).
    """
    if not math.isfinite(w):
        raise ValueError(f"non-finite argument {w!r}")
    if w < 0:
        return -ti(-w)
    if w == 0:
        return 0.0
    if w <= 1:
        return li2(1j * w).imag
    return 0.5 * math.pi * math.log(w) + li2(1j / w).imag


def asin_int(v: float) -> float:
    """Arcsine integral int_0^v asin(u)/u du for 0 <= v <= 1.

    Uses (1/2) Im Li_2(e^{2i asin v}) + asin(v) log(2v); the v = 0 limit is 0
    (the log blows up but its cofactor vanishes faster).
    """
    if not math.isfinite(v):
        raise ValueError(f"non-finite argument {v!r}")
    if not 0.0 <= v <= 1.0:
        raise ValueError(f"asin_int requires 0 <= v <= 1, got {v}")
    if v == 0.0:
        return 0.0
    th = math.asin(v)
    return 0.5 * li2(cmath.exp(2j * th)).imag + th * math.log(2.0 * v)
