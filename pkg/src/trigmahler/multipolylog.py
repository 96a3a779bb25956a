"""Multiple polylogarithms over odd indices and their closed forms.

F_{j,k}(x,y)   = sum_{n>=0} x^(2n+1)/(2n+1)^j * sum_{m=0}^{n} y^(2m+1)/(2m+1)^k
F_{j,k,l}      = one more nested odd layer (only (2,1,1) at x1 = x2 = 1 is used)

Evaluation strategy:

- interior |x| < 1: direct double series (geometric outer decay);
- boundary x = 1, j >= 2, |y| < 1: the inner sum is written as
  F_k(y) - tail(n), which splits the value into lambda(j) * F_k(y) minus a
  geometrically convergent correction, so no polynomially slow sums appear;
- closed forms (four-dilog F_{1,1}, the trilogarithm form of F_{2,1}(1,x),
  and the Lewin-integral route to F_{1,2}) are independent of the series and
  are cross-checked against it in the test suite.
"""

from __future__ import annotations

import cmath
import math

from trigmahler.polylog import PI, ZETA2, ZETA3, f_odd, li2, li3

__all__ = [
    "f_jk",
    "f_211",
    "f11_closed",
    "f21_closed",
    "f12_closed",
    "lewin_integral",
]

_LAMBDA = {2: PI * PI / 8.0, 3: 7.0 * ZETA3 / 8.0}
# F_{2,1}(1,1) = sum H_odd(n)/(2n+1)^2: a classical odd Euler sum.
_F21_AT_ONE_ONE = 7.0 * ZETA3 / 16.0 + PI * PI * math.log(2.0) / 8.0
_TOL = 1e-15
_MAX_TERMS = 120_000


def _check(z) -> complex:
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ValueError(f"non-finite argument {z!r}")
    return z


def _inner_tails(y: complex, k: int) -> list[complex]:
    """tails[n] = sum_{m>n} y^(2m+1)/(2m+1)^k, for n = -1..N of a |y|<1 series."""
    ay = abs(y)
    if ay >= 1.0:
        raise ValueError("inner tail decomposition needs |y| < 1")
    terms = []
    t = y
    m = 0
    while True:
        val = t / (2 * m + 1) ** k
        terms.append(val)
        if abs(val) < 1e-19 * max(1.0, ay) and m > 4:
            break
        m += 1
        t *= y * y
        if m > _MAX_TERMS:
            raise ValueError(f"|y| = {ay} too close to 1 for the boundary path")
    tails = [0.0 + 0.0j] * (len(terms) + 1)
    for i in range(len(terms) - 1, -1, -1):
        tails[i] = tails[i + 1] + terms[i]
    # tails[i] = sum_{m >= i}; shift so result[n] = sum_{m > n} with n from -1
    return tails


def _f_jk_boundary(j: int, k: int, y: complex) -> complex:
    # F_{j,k}(1,y) = lambda(j) F_k(y) - sum_n tail_k(n;y) / (2n+1)^j
    if j not in _LAMBDA:
        raise ValueError("boundary path needs outer weight j >= 2")
    tails = _inner_tails(y, k)  # tails[i] = sum_{m>=i}
    fk = tails[0]
    corr = 0.0 + 0.0j
    for n in range(len(tails) - 1):
        corr += tails[n + 1] / (2 * n + 1) ** j
    return _LAMBDA[j] * fk - corr


def f_jk(j: int, k: int, x: complex, y: complex) -> complex:
    """Double odd polylogarithm F_{j,k}(x, y), weights in 1..3.

    Convergent cases: |x| < 1 with |y| <= 1 (direct series), and x = 1 with
    j >= 2, |y| < 1 (accelerated boundary evaluation).  Anything else raises.
    """
    if j not in (1, 2, 3) or k not in (1, 2, 3):
        raise ValueError(f"weights must be in 1..3, got ({j}, {k})")
    x = _check(x)
    y = _check(y)
    ax, ay = abs(x), abs(y)
    if ay > 1.0 + 1e-14:
        raise ValueError(f"|y| = {ay} > 1 diverges")
    if ax > 1.0 + 1e-14:
        raise ValueError(f"|x| = {ax} > 1 diverges")
    if x == 0 or y == 0:
        return 0.0 + 0.0j
    if abs(ax - 1.0) <= 1e-14:
        if x == 1 and ay < 1.0 and j >= 2:
            return _f_jk_boundary(j, k, y)
        raise ValueError(
            "x on the unit circle is only supported at x = 1 with j >= 2 and |y| < 1")
    total = 0.0 + 0.0j
    inner = 0.0 + 0.0j
    xp = x          # x^(2n+1)
    yp = y          # y^(2n+1)
    geo = ax * ax
    n = 0
    while True:
        inner += yp / (2 * n + 1) ** k
        term = xp * inner / (2 * n + 1) ** j
        total += term
        # geometric majorant for the outer tail; the +2 slack covers the
        # (at most logarithmic) growth of a k=1 inner sum on the boundary
        tail_bound = ax ** (2 * n + 3) * (abs(inner) + 2.0) / max(1.0 - geo, 1e-12)
        if n > 8 and abs(term) < _TOL * (1.0 + abs(total)) and tail_bound < _TOL * (1.0 + abs(total)):
            return total
        n += 1
        xp *= x * x
        yp *= y * y
        if n > _MAX_TERMS:
            raise ValueError(f"series did not reach tolerance (|x| = {ax})")


def f_211(x1: complex, x2: complex, y: complex) -> complex:
    """Triple odd polylogarithm F_{2,1,1}(x1, x2, y) at x1 = x2 = 1, |y| < 1.

    Only the instantiation with both leading arguments equal to 1 is
    supported; the nested sums are peeled into closed constants plus
    geometrically convergent corrections:

      F_{2,1,1}(1,1,y) = F_1(y) F_{2,1}(1,1) - C lambda(2)
                         + sum_n c(n)/(2n+1)^2,
      c(n) = sum_{m>n} tail_1(m; y)/(2m+1),   C = c(-1).
    """
    if complex(x1) != 1 or complex(x2) != 1:
        raise ValueError("only F_{2,1,1}(1, 1, y) is supported")
    y = _check(y)
    if y == 0:
        return 0.0 + 0.0j
    if abs(y) >= 1.0:
        raise ValueError(f"need |y| < 1, got {abs(y)}")
    tails = _inner_tails(y, 1)          # tails[i] = sum_{m>=i} y^(2m+1)/(2m+1)
    f1 = tails[0]
    n_len = len(tails) - 1
    c = [0.0 + 0.0j] * (n_len + 1)      # c[i] = sum_{m>=i} tails[m+1-1]... built below
    # c_from[i] = sum_{m >= i} tail(m)/(2m+1) where tail(m) = tails[m+1]
    for i in range(n_len - 1, -1, -1):
        c[i] = c[i + 1] + tails[i + 1] / (2 * i + 1)
    big_c = c[0]
    corr = 0.0 + 0.0j
    for n in range(n_len):
        corr += c[n + 1] / (2 * n + 1) ** 2
    return f1 * _F21_AT_ONE_ONE - big_c * _LAMBDA[2] + corr


def _cut_check(z: complex, label: str) -> complex:
    if z.imag == 0.0 and z.real > 1.0 + 1e-15:
        raise ValueError(f"dilogarithm argument {label} = {z.real} lies on the cut [1, oo)")
    return z


def f11_closed(x: complex, y: complex) -> complex:
    """Closed form 4 F_{1,1}(x,y) = Li2(x(1+y)/(1+x)) - Li2(x(1-y)/(1+x))
    - Li2(-x(1+y)/(1-x)) + Li2(-x(1-y)/(1-x)), divided back by 4."""
    x = _check(x)
    y = _check(y)
    if x == 0 or y == 0:
        return 0.0 + 0.0j
    if x == 1 or x == -1:
        raise ValueError("x = +-1 is outside the closed form's domain")
    a1 = _cut_check(x * (1 + y) / (1 + x), "x(1+y)/(1+x)")
    a2 = _cut_check(x * (1 - y) / (1 + x), "x(1-y)/(1+x)")
    a3 = _cut_check(-x * (1 + y) / (1 - x), "-x(1+y)/(1-x)")
    a4 = _cut_check(-x * (1 - y) / (1 - x), "-x(1-y)/(1-x)")
    return 0.25 * (li2(a1) - li2(a2) - li2(a3) + li2(a4))


def f21_closed(x: complex) -> complex:
    """Closed form of F_{2,1}(1, x) for |x| < 1.

    Negative real x is routed through the odd symmetry
    F_{2,1}(1,-x) = -F_{2,1}(1,x), which keeps Li3(1-x) and log(x) single
    valued; elsewhere principal branches agree with the series.
    """
    x = _check(x)
    if x == 0:
        return 0.0 + 0.0j
    if abs(x) >= 1.0:
        raise ValueError(f"need |x| < 1, got {abs(x)}")
    if x.imag == 0.0 and x.real < 0.0:
        return -f21_closed(-x)
    lp = cmath.log(1 + x)
    lm = cmath.log(1 - x)
    val = (4 * li3(x) - li3(x * x) - 4 * li3(1 - x) - 4 * li3(x / (1 + x)) + 4 * ZETA3
           + (lp - lm) * li2(x * x)
           + 0.5 * PI * PI * lp + PI * PI / 6.0 * lm
           + 2.0 / 3.0 * lp**3 - 2.0 * cmath.log(x) * lm * lm)
    return val / 8.0


def lewin_integral(x: complex, c: complex) -> complex:
    """Closed form of int_0^x log(1-z) log(1-cz) dz/z (weight-3 polylogs).

    For real x < 1 and real c with c*x < 1 the value is the (real) integral;
    branch crossings of individual terms only contribute to the imaginary
    part there, so the real part is always the integral and any imaginary
    residue is an artifact of the principal-branch convention.  Complex
    arguments are accepted when no trilogarithm argument lands on [1, oo).
    """
    x = _check(x)
    c = _check(c)
    if x == 0 or c == 0:
        return 0.0 + 0.0j
    real_inputs = x.imag == 0.0 and c.imag == 0.0
    if real_inputs:
        if x.real >= 1.0:
            raise ValueError(f"need x < 1, got {x.real}")
        if (c * x).real >= 1.0:
            raise ValueError(f"need c*x < 1, got {(c * x).real}")
    args = {
        "(1-cx)/(1-x)": (1 - c * x) / (1 - x),
        "1/c": 1 / c,
        "1-cx": 1 - c * x,
        "1-x": 1 - x,
        "(1-cx)/(c(1-x))": (1 - c * x) / (c * (1 - x)),
    }
    if not real_inputs:
        for label, z in args.items():
            if z.imag == 0.0 and z.real > 1.0 + 1e-15:
                raise ValueError(f"branch collision: {label} = {z.real} on the cut")
    val = (li3(args["(1-cx)/(1-x)"]) + li3(args["1/c"]) + ZETA3
           - li3(args["1-cx"]) - li3(args["1-x"]) - li3(args["(1-cx)/(c(1-x))"])
           + cmath.log(1 - c * x) * (li2(args["1/c"]) - li2(x))
           + cmath.log(1 - x) * (li2(args["1-cx"]) - li2(args["1/c"]) + ZETA2)
           + 0.5 * cmath.log(c) * cmath.log(1 - x) ** 2)
    return val


def f12_closed(x: float, y: float) -> complex:
    """F_{1,2}(x, y) for real x, y with |x| < 1, |y| <= 1, via
    F_3(xy) - (1/2) log(1-x^2) F_2(xy) plus a quarter of the residual
    integral, the latter expanded into four Lewin integrals.

    The four-term expansion plants some trilogarithm arguments exactly on
    [1, oo); for real x and y every branch crossing is purely imaginary, so
    the real combination below is exact and the imaginary residue is
    discarded.  Non-real arguments are rejected (the double series f_jk
    covers the complex bidisk).
    """
    xc, yc = _check(x), _check(y)
    if xc.imag != 0.0 or yc.imag != 0.0:
        raise ValueError("f12_closed handles real arguments; use f_jk for complex ones")
    x, y = xc.real, yc.real
    if abs(x) >= 1.0:
        raise ValueError(f"need |x| < 1, got {x}")
    if abs(y) > 1.0:
        raise ValueError(f"need |y| <= 1, got {y}")
    if x == 0.0 or y == 0.0:
        return 0.0 + 0.0j
    resid = (lewin_integral(x, -y) - lewin_integral(x, y)
             + lewin_integral(-x, y) - lewin_integral(-x, -y))
    head = f_odd(3, x * y) - 0.5 * cmath.log(1 - x * x) * f_odd(2, x * y)
    return complex((head + 0.25 * resid).real)
