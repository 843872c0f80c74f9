#pragma once

namespace gbf::glambda {

// g_lambda(x) = x^lambda Gamma(x) / Gamma(lambda + x); tends to 1 at infinity,
// strictly decreasing for lambda < 1 and strictly increasing for lambda > 1.
double g_lambda(double lambda, double x);

// sigma_lambda(x) = lambda/x + psi(x) - psi(x + lambda); identically 0 at
// lambda = 1. This is (log g_lambda)'.
double sigma_lambda(double lambda, double x);

// g_lambda'(x) = g_lambda(x) * sigma_lambda(x).
double g_lambda_derivative(double lambda, double x);

// Phi(u) = (1 - e^(-lambda u)) / (1 - e^(-u)) - lambda for lambda in (0,1);
// the Laplace density of -(log g_lambda)'. Limits: 0 at u=0+, 1-lambda at inf.
double phi_u(double lambda, double u);

// 1-periodic piecewise-linear density: (1-lambda) xi on [0, lambda),
// lambda (1 - xi) on [lambda, 1). Non-negative; lambda in (0,1).
double phi_periodic(double lambda, double xi);

// phi_sigma(xi) = sum_k [(xi-k)^sigma - chi(xi >= k+lambda) (xi-k-lambda)^sigma]
//               - lambda xi^sigma, lambda in (0,1), sigma in (0,1).
// Sign facts: phi_sigma(1) < 0 and phi_sigma(lambda) > 0.
double phi_sigma(double lambda, double sigma, double xi);

// The lambda > 1 counterpart:
// varphi(xi) = lambda xi^sigma
//            - sum_k [(xi-k)^sigma - chi(xi >= k+lambda) (xi-k-lambda)^sigma].
// Non-negative everywhere when sigma = 1; negative in the tail when
// sigma in (0,1) and lambda is not an integer.
double varphi_neg(double lambda, double sigma, double xi);

// Partial sum S_n(N) = (N+alpha)(n+alpha)^sigma - sum_{k=0}^n (k+alpha)^sigma
//                    + sum_{k=0}^{n-N} k^sigma, evaluated so that
// s_n_partial(N, alpha, sigma, n) == varphi_neg(N+alpha, sigma, n+alpha)
// bit-for-bit whenever alpha is exactly representable.
double s_n_partial(int integer_part, double alpha, double sigma, int n);

struct SnLimit {
    double s_at_n;   // S_n itself
    double estimate; // Richardson extrapolation from S_n and S_{n/10}
};

// The sequence converges like n^(sigma-1); extrapolate with that exponent
// from the last two decades. The limit equals zeta(-sigma,1) - zeta(-sigma,alpha).
SnLimit s_n_limit_estimate(int integer_part, double alpha, double sigma, int n);

// phi(s) = sum_k [k chi(s>=k)(s-k) - (k+lambda) chi(s>=k+lambda)(s-k-lambda)],
// lambda > 1. Vanishes on [0,1], non-negative everywhere.
double xsigma_density(double lambda, double s);

// The increments in the recurrences phi(s+1) = phi(s) + phi1(s) and
// phi1(s+1) = phi1(s) + phi2(s).
double xsigma_phi1(double lambda, double s);
double xsigma_phi2(double lambda, double s);

// Xi(t) = -(1/t^2) d/dt [(1 - e^(-lambda t)) / (1 - e^(-t))], lambda > 1;
// the Laplace transform of xsigma_density.
double xi_function(double lambda, double t);

struct IntegerClosedForms {
    double g;              // prod_{k=1}^{N-1} x/(x+k)
    double neg_log_g;      // sum log(1 + k/x)
    double sigma;          // sum k / (x (x+k))
    double x_sigma;        // sum k / (x+k)
    double deriv_weighted; // x^(2-N) g_N'(x)
};

// Closed forms for integer order N >= 2; each agrees with the corresponding
// general routine.
IntegerClosedForms g_integer_closed_forms(int n_order, double x);

} // namespace gbf::glambda
