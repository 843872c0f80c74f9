#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gbf/quadrature.hpp"

namespace gbf::measures {

struct Atom {
    double location = 0.0; // > 0
    double weight = 0.0;   // > 0
};

// A named non-negative density on (0, inf). Supported names:
//   "lomax2"       (1+t)^-2
//   "expneg"       e^(-c t),           params: c > 0
//   "powerexp"     t^p e^(-c t),       params: p >= 0, c > 0
//   "custom-table" tabulated values, linear interpolation between nodes,
//                  exponential tail extrapolation beyond the last node
class Density {
  public:
    enum class Kind { lomax2, expneg, powerexp, custom_table };

    static Density lomax2();
    static Density expneg(double c);
    static Density powerexp(double p, double c);
    static Density custom_table(std::vector<double> t, std::vector<double> value);

    double operator()(double t) const;
    Kind kind() const { return kind_; }
    const std::string& name() const { return name_; }
    double param_c() const { return c_; }
    double param_p() const { return p_; }
    const std::vector<double>& table_t() const { return table_t_; }
    const std::vector<double>& table_v() const { return table_v_; }

    // Total mass int_0^inf density; closed form for the named densities,
    // quadrature for tables.
    double total_mass() const;

  private:
    Density() = default;
    Kind kind_ = Kind::lomax2;
    std::string name_;
    double c_ = 0.0, p_ = 0.0;
    std::vector<double> table_t_, table_v_;
    double tail_rate_ = 0.0; // custom-table decay rate past the last node
};

// Positive measure on (0, inf): discrete atoms plus an optional density part.
struct MeasureSpec {
    std::vector<Atom> atoms;
    std::optional<Density> density;

    MeasureSpec() = default;
    MeasureSpec(std::vector<Atom> atoms_in, std::optional<Density> density_in);

    bool empty() const { return atoms.empty() && !density.has_value(); }
};

enum class KernelForm {
    measure, // integrand gamma(lambda, x t) t^-lambda dmu(t)
    density, // integrand gamma(lambda, x t) dmu(t)
};

// Generalized Bernstein function f(x) = a x^lambda + b + kernel integral.
// Construction probes the defining integral at x = 1 and rejects
// representations whose integral diverges.
class GbfRep {
  public:
    GbfRep(double lambda, double a, double b, KernelForm form, MeasureSpec measure);

    double lambda() const { return lambda_; }
    double a() const { return a_; }
    double b() const { return b_; }
    KernelForm kernel_form() const { return form_; }
    const MeasureSpec& measure() const { return measure_; }

  private:
    double lambda_, a_, b_;
    KernelForm form_;
    MeasureSpec measure_;
};

// L(mu)(x) = sum_i w_i e^(-x t_i) + int e^(-x t) density(t) dt.
double laplace_transform(const MeasureSpec& mu, double x,
                         double tol = quad::kDefaultTol);

// f(x) for a representation; kernel integral evaluated to `tol`.
double evaluate_gbf(const GbfRep& rep, double x, double tol = quad::kDefaultTol);

// JSON (de)serialization. Schema:
//   MeasureSpec: {"atoms":[{"location":..,"weight":..},...],
//                 "density":{"name":"lomax2"|"expneg"|"powerexp"|"custom-table",
//                            "params":{...}}}
//   GbfRep:      {"lambda":..,"a":..,"b":..,
//                 "kernel_form":"measure"|"density",
//                 "measure_or_density":<MeasureSpec>}
MeasureSpec measure_from_json(const std::string& text);
std::string measure_to_json(const MeasureSpec& mu);
GbfRep gbf_from_json(const std::string& text);
GbfRep gbf_from_json_file(const std::string& path);
std::string gbf_to_json(const GbfRep& rep);

} // namespace gbf::measures
