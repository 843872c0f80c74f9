#pragma once

#include <vector>

#include "gbf/cm_probe.hpp"
#include "gbf/measures.hpp"
#include "gbf/quadrature.hpp"

namespace gbf::asym {

// Bounded, complete representation f(x) = b + int_0^inf P(lambda, x t) phi(t) dt
// with P the regularized lower incomplete gamma, so that f(inf) = b + int phi.
struct ExpansionSpec {
    double lambda = 1.0;          // > 0
    double b = 0.0;               // >= 0
    measures::Density phi;        // completely monotonic, integrable
    int n = 2;                    // truncation order >= 1
};

// One-sided derivative phi^(k)(0+); analytic for the named densities,
// Richardson extrapolation for tables (ill-conditioned above k = 3).
double phi_derivative_at_zero(const measures::Density& phi, int k);

// c_0 = b + int phi;  c_{k+1} = -(lambda)_{k+1} / (k+1)! * phi^(k)(0+).
std::vector<double> expansion_coefficients(const ExpansionSpec& spec);

// f(x) itself, by quadrature.
double bounded_gbf_value(const ExpansionSpec& spec, double x,
                         double tol = quad::kDefaultTol);

// F_lambda(x) = int_0^inf P(lambda, x t) (1+t)^-2 dt, the randomized Lomax CDF.
double lomax_cdf(double lambda, double x, double tol = quad::kDefaultTol);

// sum_{k=0}^{n-1} c_k / x^k.
double expansion_partial_sum(const ExpansionSpec& spec, double x);

// Q_n(x) = (-1)^n (f(x) - partial_sum_n(x)); completely monotonic of order
// n - lambda, in particular positive.
double remainder(const ExpansionSpec& spec, double x, double tol = 1e-12);

// cm_order_probe applied to Q_n with alpha = n - lambda. The probe's noise
// floor is tied to the quadrature tolerance used for Q_n.
cm::ProbeReport remainder_cm_order_check(const ExpansionSpec& spec, int n,
                                         const cm::ProbeConfig& cfg);

} // namespace gbf::asym
