#include "gbf/cm_probe.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "gbf/errors.hpp"

namespace gbf::cm {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Signed forward difference (-1)^k Delta_h^k f(x) = sum_j (-1)^j C(k,j) f(x+jh),
// evaluated from a precomputed stencil f(x), f(x+h), ..., f(x+kh).
double signed_difference(const std::vector<double>& fv, int k) {
    double acc = 0.0;
    double binom = 1.0;
    for (int j = 0; j <= k; ++j) {
        acc += (j % 2 == 0 ? binom : -binom) * fv[j];
        binom = binom * (k - j) / (j + 1);
    }
    return acc;
}

ProbeReport run_probe(const Fn& f, const ProbeConfig& cfg,
                      const std::function<double(double)>& extra_noise) {
    cfg.validate();
    ProbeReport rep;
    rep.max_order = cfg.max_order;
    rep.x_min = cfg.x_min;
    rep.x_max = cfg.x_max;
    rep.grid_count = cfg.grid_count;
    rep.h_policy = cfg.h > 0.0 ? "fixed" : "x/100";
    rep.pass = true;
    double worst_slack = std::numeric_limits<double>::infinity();
    for (double x : cfg.grid()) {
        double h = cfg.step_at(x);
        std::vector<double> fv(cfg.max_order + 1);
        for (int j = 0; j <= cfg.max_order; ++j) {
            fv[j] = f(x + j * h);
            if (!std::isfinite(fv[j]))
                throw numerical_error("cm_probe: function not finite at x = " +
                                      std::to_string(x + j * h));
        }
        double scale = std::fabs(fv[0]);
        for (int k = 0; k <= cfg.max_order; ++k) {
            double v = signed_difference(fv, k);
            // Allowance: relative tolerance plus binomial rounding noise plus
            // any caller-declared evaluation noise.
            double allow = cfg.rel_tolerance * scale + cfg.abs_floor +
                           std::ldexp(kEps * scale, k) +
                           (extra_noise ? std::ldexp(extra_noise(x), k) : 0.0);
            double slack = v + allow;
            if (slack < worst_slack) {
                worst_slack = slack;
                rep.worst = ProbeWorst{k, x, v};
            }
            if (v < -allow) rep.pass = false;
        }
    }
    return rep;
}

} // namespace

void ProbeConfig::validate() const {
    if (max_order < 1 || max_order > 10)
        throw std::domain_error("ProbeConfig: max_order must be in [1,10]");
    if (!(x_min > 0.0) || !(x_max >= x_min))
        throw std::domain_error("ProbeConfig: need 0 < x_min <= x_max");
    if (grid_count < 1) throw std::domain_error("ProbeConfig: grid_count must be >= 1");
    if (h > 0.0 && h > x_min / (2.0 * max_order))
        throw std::domain_error("ProbeConfig: h must be <= x_min / (2 max_order)");
    if (rel_tolerance < 0.0 || abs_floor < 0.0)
        throw std::domain_error("ProbeConfig: tolerances must be >= 0");
}

std::vector<double> ProbeConfig::grid() const {
    std::vector<double> g;
    g.reserve(grid_count);
    if (grid_count == 1) {
        g.push_back(x_min);
        return g;
    }
    double lmin = std::log(x_min), lmax = std::log(x_max);
    for (int i = 0; i < grid_count; ++i)
        g.push_back(std::exp(lmin + (lmax - lmin) * i / (grid_count - 1)));
    return g;
}

ProbeReport cm_probe(const Fn& f, const ProbeConfig& cfg, const Fn& eval_noise) {
    return run_probe(f, cfg, eval_noise);
}

ProbeReport cm_order_probe(const Fn& f, double alpha, const ProbeConfig& cfg,
                           const Fn& eval_noise) {
    return run_probe([&, alpha](double x) { return std::pow(x, alpha) * f(x); }, cfg,
                     eval_noise);
}

// Central-difference step. The noise floors below budget 32 eps of relative
// error per f evaluation: callers hand in special-function compositions whose
// intermediate lgamma/exp magnitudes cost well above 1 ulp.
constexpr double kDiffStep = 1e-4;

ProbeReport log_cm_probe(const Fn& f, const ProbeConfig& cfg) {
    auto neg_log_deriv = [&](double x) {
        double d = x * kDiffStep;
        double f_lo = f(x - d);
        double f_hi = f(x + d);
        if (!(f_lo > 0.0) || !(f_hi > 0.0))
            throw std::domain_error("log_cm_probe: f must be positive on the grid");
        return -(std::log(f_hi) - std::log(f_lo)) / (2.0 * d);
    };
    auto noise = [&](double x) {
        double d = x * kDiffStep;
        double lf = std::fabs(std::log(std::max(f(x), 1e-300)));
        return 32.0 * kEps * (1.0 + lf) / (2.0 * d);
    };
    return run_probe(neg_log_deriv, cfg, noise);
}

ProbeReport bernstein_order_probe(const Fn& f, double lambda, const ProbeConfig& cfg) {
    auto weighted_deriv = [&, lambda](double x) {
        double d = x * kDiffStep;
        return std::pow(x, 1.0 - lambda) * (f(x + d) - f(x - d)) / (2.0 * d);
    };
    auto noise = [&, lambda](double x) {
        double d = x * kDiffStep;
        return std::pow(x, 1.0 - lambda) * 32.0 * kEps * std::fabs(f(x)) / (2.0 * d);
    };
    return run_probe(weighted_deriv, cfg, noise);
}

ProbeReport bernstein_order_probe_deriv(const Fn& f_prime, double lambda,
                                        const ProbeConfig& cfg) {
    return run_probe(
        [&, lambda](double x) { return std::pow(x, 1.0 - lambda) * f_prime(x); }, cfg,
        nullptr);
}

namespace {
std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}
} // namespace

std::string ProbeReport::to_json() const {
    std::ostringstream out;
    out << "{\n"
        << "  \"pass\": " << (pass ? "true" : "false") << ",\n"
        << "  \"max_order\": " << max_order << ",\n"
        << "  \"worst\": {\"order\": " << worst.order << ", \"x\": " << fmt(worst.x)
        << ", \"value\": " << fmt(worst.value) << "},\n"
        << "  \"grid\": {\"x_min\": " << fmt(x_min) << ", \"x_max\": " << fmt(x_max)
        << ", \"count\": " << grid_count << "},\n"
        << "  \"h_policy\": \"" << h_policy << "\"\n"
        << "}\n";
    return out.str();
}

} // namespace gbf::cm
