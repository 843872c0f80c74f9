#pragma once

#include <functional>
#include <string>
#include <vector>

namespace gbf::cm {

using Fn = std::function<double(double)>;

// Finite-difference necessary-condition probe for complete monotonicity:
// (-1)^k Delta_h^k f(x) >= -tolerance for k = 0..max_order over a log grid.
// A pass means "consistent with CM up to max_order", never "is CM".
struct ProbeConfig {
    int max_order = 8;       // in [1, 10]
    double x_min = 0.1;
    double x_max = 50.0;
    int grid_count = 40;     // log-spaced points
    double h = 0.0;          // forward difference step; 0 -> per-point x/100
    double rel_tolerance = 1e-9; // allowance scale, times |f(x)|
    double abs_floor = 0.0;  // flat absolute allowance (noise floor)

    void validate() const;
    std::vector<double> grid() const;
    double step_at(double x) const { return h > 0.0 ? h : x / 100.0; }
};

struct ProbeWorst {
    int order = 0;
    double x = 0.0;
    double value = 0.0; // signed difference (-1)^k Delta_h^k f(x)
};

struct ProbeReport {
    bool pass = false;
    int max_order = 0;
    ProbeWorst worst; // entry with the smallest slack against its allowance
    double x_min = 0.0, x_max = 0.0;
    int grid_count = 0;
    std::string h_policy;

    std::string to_json() const;
};

// Optional eval_noise(x): caller-declared absolute evaluation noise of the
// probed function at x (e.g. quadrature tolerance); it widens the allowance
// by 2^k at order k, the worst-case binomial amplification.
ProbeReport cm_probe(const Fn& f, const ProbeConfig& cfg, const Fn& eval_noise = {});

// CM of order alpha: probe x^alpha f(x).
ProbeReport cm_order_probe(const Fn& f, double alpha, const ProbeConfig& cfg,
                           const Fn& eval_noise = {});

// Logarithmic complete monotonicity: probe -(log f)' via central differences
// of log f (f must be positive on the widened grid).
ProbeReport log_cm_probe(const Fn& f, const ProbeConfig& cfg);

// Generalized Bernstein order lambda: probe x^(1-lambda) f'(x).
// First overload differentiates f numerically; second takes f' directly.
ProbeReport bernstein_order_probe(const Fn& f, double lambda, const ProbeConfig& cfg);
ProbeReport bernstein_order_probe_deriv(const Fn& f_prime, double lambda,
                                        const ProbeConfig& cfg);

} // namespace gbf::cm
