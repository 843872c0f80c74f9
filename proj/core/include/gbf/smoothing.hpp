#pragma once

#include <functional>

#include "gbf/measures.hpp"
#include "gbf/quadrature.hpp"

namespace gbf::smoothing {

// P_{y,x}(t) = P(y, y t / x): gamma CDF with shape y and scale x/y.
double gamma_cdf(double y, double x, double t);

// int_0^inf f(t) dP_{y,x}(t) for bounded measurable f. The density is
// evaluated in log space; for y > 500 the integral is restricted to the
// 20-sigma mass window around x.
double smooth(const std::function<double(double)>& f, double y, double x,
              double tol = quad::kDefaultTol);

struct IdentitySides {
    double lhs = 0.0;
    double rhs = 0.0;
    double residual() const { return lhs - rhs; }
};

// Gamma(lambda+y)/Gamma(y) B(lambda, y; x/(x+y))
//   = Gamma(lambda) - x^lambda int_0^inf P(y, y t) t^(lambda-1) e^(-x t) dt,
// each side evaluated independently (incomplete beta vs quadrature).
IdentitySides bg1_sides(double lambda, double x, double y,
                        double tol = quad::kDefaultTol);
double bg1_residual(double lambda, double x, double y,
                    double tol = quad::kDefaultTol);

// Both routes to Gamma(lambda+y)/Gamma(y) B(lambda, y; z/(z+y)): the
// smoothing operator applied to gamma(lambda, z t) at x = 1 versus the
// incomplete beta closed form.
IdentitySides bg2_sides(double lambda, double z, double y,
                        double tol = quad::kDefaultTol);

// int_0^1 P(y,yt) t^(lambda-1) dt + int_1^inf (P(y,yt)-1) t^(lambda-1) dt
//   = (1/lambda)(1 - 1/g_lambda(y)).
IdentitySides gg1_sides(double lambda, double y, double tol = quad::kDefaultTol);
double gg1_residual(double lambda, double y, double tol = quad::kDefaultTol);

// Integrand factor of the Thorin-Bernstein approximant:
// Gamma(lambda+n)/Gamma(n) B(lambda, n; x/(x + n/t)) t^(-lambda).
double thorin_term(double lambda, int n, double x, double t);

// f_n(x) = a x^lambda + b + int thorin_term dmu(t); converges to f(x).
double approx_fn(const measures::GbfRep& rep, int n, double x,
                 double tol = quad::kDefaultTol);

} // namespace gbf::smoothing
