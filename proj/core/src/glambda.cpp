#include "gbf/glambda.hpp"

#include <cmath>
#include <stdexcept>

#include "gbf/special_functions.hpp"

namespace gbf::glambda {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::domain_error(msg);
}

// Stirling tail S(x): lgamma(x) = (x-1/2) ln x - x + ln sqrt(2 pi) + S(x).
double stirling_tail(double x) {
    static const double c[6] = {1.0 / 12.0,   -1.0 / 360.0,   1.0 / 1260.0,
                                -1.0 / 1680.0, 1.0 / 1188.0,   -691.0 / 360360.0};
    double inv = 1.0 / x;
    double inv2 = inv * inv;
    double s = 0.0, p = inv;
    for (int k = 0; k < 6; ++k) {
        s += c[k] * p;
        p *= inv2;
    }
    return s;
}

// h - log1p(h) without cancellation for small h.
double h_minus_log1p(double h) {
    if (h >= 0.5) return h - std::log1p(h);
    // sum_{k>=2} (-1)^k h^k / k
    double term = h * h / 2.0;
    double sum = term;
    double hk = h * h;
    for (int k = 3; k < 200; ++k) {
        hk *= -h;
        term = hk / k;
        sum += term;
        if (std::fabs(term) < 1e-18 * std::fabs(sum)) break;
    }
    return sum;
}

// Bernoulli tail of psi: psi(x) = ln x - 1/(2x) - T(x).
double psi_tail(double x) {
    static const double c[6] = {1.0 / 12.0,  -1.0 / 120.0, 1.0 / 252.0,
                                -1.0 / 240.0, 1.0 / 132.0,  -691.0 / 32760.0};
    double inv2 = 1.0 / (x * x);
    double s = 0.0, p = inv2;
    for (int k = 0; k < 6; ++k) {
        s += c[k] * p;
        p *= inv2;
    }
    return s;
}

} // namespace

double g_lambda(double lambda, double x) {
    require(lambda > 0.0, "g_lambda: lambda must be > 0");
    require(x > 0.0, "g_lambda: x must be > 0");
    if (x >= 16.0) {
        // log g = lambda - (x + lambda - 1/2) log1p(lambda/x) - [S(x+lambda) - S(x)];
        // avoids the large-argument cancellation of lgamma differences.
        double h = lambda / x;
        double lg = lambda - (x + lambda - 0.5) * std::log1p(h) -
                    (stirling_tail(x + lambda) - stirling_tail(x));
        return std::exp(lg);
    }
    return std::exp(lambda * std::log(x) + special::log_gamma(x) -
                    special::log_gamma(lambda + x));
}

double sigma_lambda(double lambda, double x) {
    require(lambda > 0.0, "sigma_lambda: lambda must be > 0");
    require(x > 0.0, "sigma_lambda: x must be > 0");
    if (x >= 16.0) {
        // lambda/x + psi(x) - psi(x+lambda), regrouped to avoid cancellation:
        // [h - log1p(h)] - lambda/(2x(x+lambda)) + [T(x+lambda) - T(x)].
        double h = lambda / x;
        return h_minus_log1p(h) - lambda / (2.0 * x * (x + lambda)) +
               (psi_tail(x + lambda) - psi_tail(x));
    }
    return lambda / x + special::digamma(x) - special::digamma(x + lambda);
}

double g_lambda_derivative(double lambda, double x) {
    return g_lambda(lambda, x) * sigma_lambda(lambda, x);
}

double phi_u(double lambda, double u) {
    require(lambda > 0.0 && lambda < 1.0, "phi_u: lambda must be in (0,1)");
    require(u > 0.0, "phi_u: u must be > 0");
    if (u < 1e-4) {
        // Phi(u) = lambda (c1 u + c2 u^2 + c3 u^3) + O(u^4)
        double c1 = (1.0 - lambda) / 2.0;
        double c2 = (2.0 * lambda - 1.0) * (lambda - 1.0) / 12.0;
        double c3 = -lambda * (lambda - 1.0) * (lambda - 1.0) / 24.0;
        return lambda * u * (c1 + u * (c2 + u * c3));
    }
    return std::expm1(-lambda * u) / std::expm1(-u) - lambda;
}

double phi_periodic(double lambda, double xi) {
    require(lambda > 0.0 && lambda < 1.0, "phi_periodic: lambda must be in (0,1)");
    require(xi >= 0.0, "phi_periodic: xi must be >= 0");
    double r = xi - std::floor(xi);
    return r < lambda ? (1.0 - lambda) * r : lambda * (1.0 - r);
}

double phi_sigma(double lambda, double sigma, double xi) {
    require(lambda > 0.0 && lambda < 1.0, "phi_sigma: lambda must be in (0,1)");
    require(sigma > 0.0 && sigma < 1.0, "phi_sigma: sigma must be in (0,1)");
    require(xi >= 0.0, "phi_sigma: xi must be >= 0");
    double acc = 0.0;
    int kmax = static_cast<int>(std::floor(xi));
    for (int k = 0; k <= kmax; ++k) {
        acc += std::pow(xi - k, sigma);
        double d = xi - k - lambda;
        if (d >= 0.0) acc -= std::pow(d, sigma);
    }
    return acc - lambda * std::pow(xi, sigma);
}

double varphi_neg(double lambda, double sigma, double xi) {
    require(lambda > 1.0, "varphi_neg: lambda must be > 1");
    require(sigma > 0.0 && sigma <= 1.0, "varphi_neg: sigma must be in (0,1]");
    require(xi >= 0.0, "varphi_neg: xi must be >= 0");
    double acc = 0.0;
    int kmax = static_cast<int>(std::floor(xi));
    for (int k = 0; k <= kmax; ++k) {
        acc += std::pow(xi - k, sigma);
        double d = xi - k - lambda;
        if (d >= 0.0) acc -= std::pow(d, sigma);
    }
    return lambda * std::pow(xi, sigma) - acc;
}

double s_n_partial(int integer_part, double alpha, double sigma, int n) {
    require(integer_part >= 1, "s_n_partial: N must be a positive integer");
    require(alpha > 0.0 && alpha < 1.0, "s_n_partial: alpha must be in (0,1)");
    require(sigma > 0.0 && sigma < 1.0, "s_n_partial: sigma must be in (0,1)");
    require(n >= integer_part, "s_n_partial: n must be >= N");
    require(n <= 200000000, "s_n_partial: n too large");
    // Summation runs j = n..0 and pairs (j+alpha)^sigma with (j-N)^sigma, the
    // exact term order of varphi_neg(N+alpha, sigma, n+alpha).
    double acc = 0.0;
    for (int j = n; j >= 0; --j) {
        acc += std::pow(j + alpha, sigma);
        if (j >= integer_part) acc -= std::pow(static_cast<double>(j - integer_part), sigma);
    }
    return (integer_part + alpha) * std::pow(n + alpha, sigma) - acc;
}

SnLimit s_n_limit_estimate(int integer_part, double alpha, double sigma, int n) {
    require(n >= 100, "s_n_limit_estimate: n must be >= 100");
    double s1 = s_n_partial(integer_part, alpha, sigma, n);
    double s0 = s_n_partial(integer_part, alpha, sigma, n / 10);
    double q = std::pow(10.0, sigma - 1.0); // error ratio across one decade
    return SnLimit{s1, (s1 - q * s0) / (1.0 - q)};
}

double xsigma_density(double lambda, double s) {
    require(lambda > 1.0, "xsigma_density: lambda must be > 1");
    require(s >= 0.0, "xsigma_density: s must be >= 0");
    double acc = 0.0;
    int kmax = static_cast<int>(std::floor(s));
    for (int k = 0; k <= kmax; ++k) {
        acc += k * (s - k);
        double d = s - k - lambda;
        if (d >= 0.0) acc -= (k + lambda) * d;
    }
    return acc;
}

double xsigma_phi1(double lambda, double s) {
    require(lambda > 1.0, "xsigma_phi1: lambda must be > 1");
    require(s >= 0.0, "xsigma_phi1: s must be >= 0");
    double acc = 0.0;
    int kmax = static_cast<int>(std::floor(s));
    for (int k = 0; k <= kmax; ++k) {
        acc += s - k;
        double d = s - k - lambda;
        if (d >= 0.0) acc -= d;
    }
    if (s >= lambda - 1.0) acc -= lambda * (s + 1.0 - lambda);
    return acc;
}

double xsigma_phi2(double lambda, double s) {
    require(lambda > 1.0, "xsigma_phi2: lambda must be > 1");
    require(s >= 0.0, "xsigma_phi2: s must be >= 0");
    // phi2(s) = s+1 + (lambda-1) chi(s >= lambda-1) (s+1-lambda)
    //         - lambda chi(s >= lambda-2) (s+2-lambda);
    // the lambda weight on the last term makes phi1(s+1) = phi1(s) + phi2(s)
    // an identity (shift k -> k-1 in the defining sums).
    double acc = s + 1.0;
    if (s >= lambda - 1.0) acc += (lambda - 1.0) * (s + 1.0 - lambda);
    if (s >= lambda - 2.0) acc -= lambda * (s + 2.0 - lambda);
    return acc;
}

double xi_function(double lambda, double t) {
    require(lambda > 1.0, "xi_function: lambda must be > 1");
    require(t > 0.0, "xi_function: t must be > 0");
    if (t < 1e-4) {
        // r(t) = (1-e^(-lambda t))/(1-e^(-t)) = lambda (1 + c1 t + ... );
        // Xi = -r'/t^2 from the series.
        double c1 = (1.0 - lambda) / 2.0;
        double c2 = (2.0 * lambda - 1.0) * (lambda - 1.0) / 12.0;
        double c3 = -lambda * (lambda - 1.0) * (lambda - 1.0) / 24.0;
        double c4 = std::pow(lambda, 4) / 120.0 - std::pow(lambda, 3) / 48.0 +
                    lambda * lambda / 72.0 - 1.0 / 720.0;
        double rp = lambda * (c1 + t * (2.0 * c2 + t * (3.0 * c3 + t * 4.0 * c4)));
        return -rp / (t * t);
    }
    double em1 = std::expm1(-t);
    double em1l = std::expm1(-lambda * t);
    double num = -lambda * std::exp(-lambda * t) * em1 + em1l * std::exp(-t);
    return -num / (em1 * em1 * t * t);
}

IntegerClosedForms g_integer_closed_forms(int n_order, double x) {
    require(n_order >= 2, "g_integer_closed_forms: N must be >= 2");
    require(x > 0.0, "g_integer_closed_forms: x must be > 0");
    IntegerClosedForms r{1.0, 0.0, 0.0, 0.0, 0.0};
    double inv_prod = 1.0;
    for (int k = 1; k <= n_order - 1; ++k) {
        r.g *= x / (x + k);
        r.neg_log_g += std::log1p(k / x);
        r.sigma += k / (x * (x + k));
        r.x_sigma += k / (x + k);
        inv_prod /= x + k;
    }
    r.deriv_weighted = inv_prod * r.x_sigma;
    return r;
}

} // namespace gbf::glambda
