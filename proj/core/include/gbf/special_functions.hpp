#pragma once

namespace gbf::special {

// ln Gamma(x) for x > 0. Relative accuracy ~1e-14 over [1e-3, 1e6].
double log_gamma(double x);

// psi(x) = Gamma'(x)/Gamma(x) for x > 0.
double digamma(double x);

// Lower incomplete gamma: int_0^x e^-t t^(lambda-1) dt, lambda > 0, x >= 0.
double lower_incomplete_gamma(double lambda, double x);

// Regularized P(y, z) = gamma(y, z)/Gamma(y) in [0,1]; a CDF in z.
double regularized_gamma_p(double y, double z);

// Incomplete beta B(a1, a2; x) = int_0^x t^(a1-1) (1-t)^(a2-1) dt for
// x in [0,1), a1 > 0 and *any real* a2 (the integrand is finite on [0,x]).
double incomplete_beta(double a1, double a2, double x);

// Pochhammer symbol (lambda)_k = lambda (lambda+1) ... (lambda+k-1).
double pochhammer(double lambda, int k);

// Hurwitz zeta zeta(s, a) = sum_{k>=0} (k+a)^-s, continued in s; s != 1.
// Euler-Maclaurin with 12 explicit terms and Bernoulli corrections to order 8,
// tuned for s in [-1, 4].
double hurwitz_zeta(double s, double a);

} // namespace gbf::special
