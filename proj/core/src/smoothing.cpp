#include "gbf/smoothing.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gbf/errors.hpp"
#include "gbf/glambda.hpp"
#include "gbf/special_functions.hpp"
#include "special_detail.hpp"

namespace gbf::smoothing {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::domain_error(msg);
}

// Gamma(lambda + y) / Gamma(y) without overflow.
double gamma_ratio(double lambda, double y) {
    return std::exp(special::log_gamma(lambda + y) - special::log_gamma(y));
}

} // namespace

double gamma_cdf(double y, double x, double t) {
    require(y > 0.0, "gamma_cdf: shape y must be > 0");
    require(x > 0.0, "gamma_cdf: x must be > 0");
    require(t >= 0.0, "gamma_cdf: t must be >= 0");
    return special::regularized_gamma_p(y, y * t / x);
}

double smooth(const std::function<double(double)>& f, double y, double x, double tol) {
    require(y > 0.0, "smooth: shape y must be > 0");
    require(x > 0.0, "smooth: x must be > 0");
    const double log_norm = y * std::log(y / x) - special::log_gamma(y);
    auto weighted = [&](double t) {
        double lw = log_norm + (y - 1.0) * std::log(t) - t * y / x;
        return f(t) * std::exp(lw);
    };
    if (y > 500.0) {
        // Gamma(y, x/y) mass concentrates around x with sd x/sqrt(y); a
        // 20-sigma window carries all but ~1e-80 of it.
        double half_width = 20.0 / std::sqrt(y);
        double lo = std::max(x * (1.0 - half_width), 0.0);
        double hi = x * (1.0 + half_width);
        return quad::integrate_finite(weighted, lo, hi, tol).value;
    }
    return quad::integrate_semi_infinite(weighted, 0.0, tol).value;
}

IdentitySides bg1_sides(double lambda, double x, double y, double tol) {
    require(lambda > 0.0, "bg1_sides: lambda must be > 0");
    require(x > 0.0 && y > 0.0, "bg1_sides: x, y must be > 0");
    IdentitySides s;
    s.lhs = gamma_ratio(lambda, y) * special::incomplete_beta(lambda, y, x / (x + y));
    auto integrand = [&](double t) {
        return special::regularized_gamma_p(y, y * t) * std::pow(t, lambda - 1.0) *
               std::exp(-x * t);
    };
    double integral = quad::integrate_semi_infinite(integrand, 0.0, tol).value;
    s.rhs = std::exp(special::log_gamma(lambda)) - std::pow(x, lambda) * integral;
    return s;
}

double bg1_residual(double lambda, double x, double y, double tol) {
    return bg1_sides(lambda, x, y, tol).residual();
}

IdentitySides bg2_sides(double lambda, double z, double y, double tol) {
    require(lambda > 0.0, "bg2_sides: lambda must be > 0");
    require(z > 0.0 && y > 0.0, "bg2_sides: z, y must be > 0");
    IdentitySides s;
    s.lhs = smooth([&](double t) { return special::lower_incomplete_gamma(lambda, z * t); },
                   y, 1.0, tol);
    s.rhs = gamma_ratio(lambda, y) * special::incomplete_beta(lambda, y, z / (z + y));
    return s;
}

IdentitySides gg1_sides(double lambda, double y, double tol) {
    require(lambda > 0.0, "gg1_sides: lambda must be > 0");
    require(y > 0.0, "gg1_sides: y must be > 0");
    IdentitySides s;
    double head = quad::integrate_finite(
                      [&](double t) {
                          return special::regularized_gamma_p(y, y * t) *
                                 std::pow(t, lambda - 1.0);
                      },
                      0.0, 1.0, tol / 2.0)
                      .value;
    double tail = quad::integrate_semi_infinite(
                      [&](double t) {
                          return -special::detail::regularized_gamma_q(y, y * t) *
                                 std::pow(t, lambda - 1.0);
                      },
                      1.0, tol / 2.0)
                      .value;
    s.lhs = head + tail;
    s.rhs = (1.0 - 1.0 / glambda::g_lambda(lambda, y)) / lambda;
    return s;
}

double gg1_residual(double lambda, double y, double tol) {
    return gg1_sides(lambda, y, tol).residual();
}

double thorin_term(double lambda, int n, double x, double t) {
    require(lambda > 0.0, "thorin_term: lambda must be > 0");
    require(n >= 1, "thorin_term: n must be >= 1");
    require(x > 0.0 && t > 0.0, "thorin_term: x, t must be > 0");
    double z = x * t / (x * t + n); // x / (x + n/t), computed without dividing by t
    return gamma_ratio(lambda, n) * special::incomplete_beta(lambda, n, z) *
           std::pow(t, -lambda);
}

double approx_fn(const measures::GbfRep& rep, int n, double x, double tol) {
    require(n >= 1, "approx_fn: n must be >= 1");
    require(x > 0.0, "approx_fn: x must be > 0");
    const double lambda = rep.lambda();
    double v = rep.a() * std::pow(x, lambda) + rep.b();
    for (const measures::Atom& atom : rep.measure().atoms) {
        double term = thorin_term(lambda, n, x, atom.location);
        if (rep.kernel_form() == measures::KernelForm::density)
            term *= std::pow(atom.location, lambda); // dmu = t^lambda phi-atoms
        v += atom.weight * term;
    }
    if (rep.measure().density.has_value()) {
        const measures::Density& rho = *rep.measure().density;
        auto integrand = [&](double t) {
            double term = thorin_term(lambda, n, x, t);
            if (rep.kernel_form() == measures::KernelForm::density)
                term *= std::pow(t, lambda); // Prop. extended to density form
            return term * rho(t);
        };
        v += quad::integrate_semi_infinite(integrand, 0.0, tol).value;
    }
    return v;
}

} // namespace gbf::smoothing
