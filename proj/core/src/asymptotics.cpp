#include "gbf/asymptotics.hpp"

#include <cmath>
#include <stdexcept>

#include "gbf/errors.hpp"
#include "gbf/special_functions.hpp"

namespace gbf::asym {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::domain_error(msg);
}

void validate(const ExpansionSpec& spec) {
    require(spec.lambda > 0.0, "ExpansionSpec: lambda must be > 0");
    require(spec.b >= 0.0, "ExpansionSpec: b must be >= 0");
    require(spec.n >= 1, "ExpansionSpec: n must be >= 1");
}

double factorial(int k) {
    double r = 1.0;
    for (int i = 2; i <= k; ++i) r *= i;
    return r;
}

} // namespace

double phi_derivative_at_zero(const measures::Density& phi, int k) {
    require(k >= 0, "phi_derivative_at_zero: k must be >= 0");
    using Kind = measures::Density::Kind;
    switch (phi.kind()) {
        case Kind::lomax2:
            // d^k/dt^k (1+t)^-2 = (-1)^k (k+1)! (1+t)^-(k+2)
            return (k % 2 == 0 ? 1.0 : -1.0) * factorial(k + 1);
        case Kind::expneg:
            return std::pow(-phi.param_c(), k);
        case Kind::powerexp: {
            // t^p e^(-c t): finite one-sided derivatives at 0 only for integer p.
            double p = phi.param_p();
            int ip = static_cast<int>(std::lround(p));
            if (std::fabs(p - ip) > 1e-12)
                throw std::domain_error(
                    "phi_derivative_at_zero: powerexp with non-integer p has no finite "
                    "one-sided derivatives at 0");
            if (k < ip) return 0.0;
            // C(k, p) p! (-c)^(k-p)
            double binom = 1.0;
            for (int j = 0; j < ip; ++j) binom = binom * (k - j) / (j + 1);
            return binom * factorial(ip) * std::pow(-phi.param_c(), k - ip);
        }
        case Kind::custom_table: {
            // One-sided Richardson extrapolation from forward differences.
            // Ill-conditioned beyond k = 3; callers get whatever the table
            // supports, with no warranty past that.
            double h = phi.table_t().front();
            auto fd = [&](double step) {
                double acc = 0.0;
                double binom = 1.0;
                for (int j = 0; j <= k; ++j) {
                    acc += ((k - j) % 2 == 0 ? binom : -binom) * phi(j * step + 1e-300);
                    binom = binom * (k - j) / (j + 1);
                }
                return acc / std::pow(step, k);
            };
            double d1 = fd(h);
            double d2 = fd(h / 2.0);
            return 2.0 * d2 - d1;
        }
    }
    throw std::domain_error("phi_derivative_at_zero: unknown density kind");
}

std::vector<double> expansion_coefficients(const ExpansionSpec& spec) {
    validate(spec);
    std::vector<double> c(spec.n);
    c[0] = spec.b + spec.phi.total_mass();
    for (int k = 0; k + 1 < spec.n; ++k) {
        c[k + 1] = -special::pochhammer(spec.lambda, k + 1) / factorial(k + 1) *
                   phi_derivative_at_zero(spec.phi, k);
    }
    return c;
}

double bounded_gbf_value(const ExpansionSpec& spec, double x, double tol) {
    validate(spec);
    require(x > 0.0, "bounded_gbf_value: x must be > 0");
    const measures::Density& phi = spec.phi;
    auto integrand = [&](double t) {
        return special::regularized_gamma_p(spec.lambda, x * t) * phi(t);
    };
    // Split where the regularized gamma saturates; transform the tail.
    double head = quad::integrate_finite(integrand, 0.0, 1.0, tol / 2.0).value;
    double tail = quad::integrate_semi_infinite(integrand, 1.0, tol / 2.0).value;
    return spec.b + head + tail;
}

double lomax_cdf(double lambda, double x, double tol) {
    require(lambda > 0.0, "lomax_cdf: lambda must be > 0");
    require(x > 0.0, "lomax_cdf: x must be > 0");
    ExpansionSpec spec{lambda, 0.0, measures::Density::lomax2(), 1};
    return bounded_gbf_value(spec, x, tol);
}

double expansion_partial_sum(const ExpansionSpec& spec, double x) {
    require(x > 0.0, "expansion_partial_sum: x must be > 0");
    std::vector<double> c = expansion_coefficients(spec);
    double xk = 1.0;
    double s = 0.0;
    for (int k = 0; k < spec.n; ++k) {
        s += c[k] / xk;
        xk *= x;
    }
    return s;
}

double remainder(const ExpansionSpec& spec, double x, double tol) {
    double f = bounded_gbf_value(spec, x, tol);
    double p = expansion_partial_sum(spec, x);
    return (spec.n % 2 == 0 ? 1.0 : -1.0) * (f - p);
}

cm::ProbeReport remainder_cm_order_check(const ExpansionSpec& spec, int n,
                                         const cm::ProbeConfig& cfg) {
    require(n >= 1, "remainder_cm_order_check: n must be >= 1");
    ExpansionSpec probe_spec = spec;
    probe_spec.n = n;
    const double quad_tol = 1e-12;
    double alpha = n - spec.lambda;
    // Quadrature noise in Q_n enters every stencil point of x^alpha Q_n.
    auto noise = [alpha, quad_tol](double x) {
        return 16.0 * quad_tol * std::max(1.0, std::pow(1.1 * x, alpha));
    };
    return cm::cm_order_probe(
        [&probe_spec, quad_tol](double x) { return remainder(probe_spec, x, quad_tol); },
        alpha, cfg, noise);
}

} // namespace gbf::asym
