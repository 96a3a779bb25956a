"""Inverse trigonometric integrals, polylogarithms, Jacobian elliptic
integrals, q-series, and multi-variable Mahler measures, cross-checked
against independent numerical oracles.

The subpackage layout mirrors the mathematical layers:

- polylog:        Li_2, Li_3, Bloch-Wigner D, odd polylogarithms F_j
- quadrature:     tanh-sinh integration, periodic trapezoid, Monte Carlo
- multipolylog:   F_{j,k}, F_{2,1,1}, their closed forms, Lewin's integral
- trig_integrals: arctangent and arcsine integrals Ti(w), As(v)
- tsst:           the bivariate integrals T(v,w), S(v,w), TS(v,w)
- binomial:       central binomial sums h_n(v) and their closed forms
- elliptic:       AGM, Jacobi am/sn/cn/dn, nome inversion, am-integral table
- qseries:        double q-series expansions of the dilogarithm
- mahler:         Laurent polynomials, parsing, and Mahler measure evaluation
- registry:       the identity catalog binding closed forms to oracles
- cli:            `trigmahler` command line front end
"""

from trigmahler.polylog import CATALAN, PI, ZETA2, ZETA3

__all__ = ["CATALAN", "PI", "ZETA2", "ZETA3"]
__version__ = "0.1.0"
