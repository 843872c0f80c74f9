#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gbf/measures.hpp"
#include "gbf/quadrature.hpp"

namespace gbf::ineq {

struct GridAxis {
    double min = 0.0;
    double max = 0.0;
    int count = 1;
    enum class Spacing { log, linear } spacing = Spacing::log;

    std::vector<double> points() const;
    void validate() const; // min > 0, count >= 1, max >= min
};

struct GridSpec {
    std::vector<double> lambda_values;
    GridAxis x_grid;
    GridAxis y_grid;
};

enum class Which { I, II, III, IV, cor_cm, cor_bdd_cm };

std::string which_name(Which w);

struct MarginEntry {
    double lambda = 0.0, x = 0.0, y = 0.0;
    double lhs = 0.0, rhs = 0.0;
    double margin = 0.0;
    double rel_margin = 0.0; // margin / rhs
    enum class Status { ok, fail, error } status = Status::ok;
    std::string message; // set for Status::error
};

struct MarginReport {
    Which which = Which::I;
    std::vector<MarginEntry> entries;
    double min_margin = 0.0;
    std::size_t argmin = 0; // index into entries
    double margin_floor = 0.0;
    bool pass = false;

    std::string summary_json() const;
};

// Margins (RHS - LHS or as oriented by the inequality); hypothesis violations
// are rejected with std::domain_error rather than silently evaluated.
double margin_ineq_I(double lambda, double x, double y);  // lambda in (0,1)
double margin_ineq_II(double lambda, double x, double y); // lambda > 1

// Theorem margins for bounded non-constant representations.
double margin_thm_III(const measures::GbfRep& rep, double x, double y,
                      double tol = quad::kDefaultTol); // rep.lambda <= 1
double margin_thm_IV(const measures::GbfRep& rep, double x, double y,
                     double tol = quad::kDefaultTol); // rep.lambda > 1

// The remark after the theorem widens the lambda <= 1 case to any bounded,
// positive, increasing f with t^(1-lambda) f'(t) strictly decreasing; the
// hypothesis is probed numerically on a grid and reported alongside.
struct GeneralMargin {
    double margin = 0.0;
    bool hypothesis_ok = false;
};
GeneralMargin margin_thm_III_general(const std::function<double(double)>& f,
                                     double lambda, double x, double y,
                                     double tol = quad::kDefaultTol);

// Corollary margins: L(omega)(x) minus the branch-specific lower bound.
double margin_cor_cm(double lambda, const measures::MeasureSpec& omega, double x,
                     double y, double tol = quad::kDefaultTol);
double margin_cor_bdd_cm(const std::function<double(double)>& g, double x, double y,
                         double tol = quad::kDefaultTol);

struct SweepFixtures {
    std::optional<measures::GbfRep> rep;          // III / IV
    std::optional<measures::MeasureSpec> omega;   // cor_cm
    std::function<double(double)> g;              // cor_bdd_cm
    double tol = quad::kDefaultTol;
    double margin_floor = 0.0;
    bool check_hypothesis = true;
};

// Full grid sweep; per-point failures are flagged entries, not aborts.
// Entries are emitted in (lambda, x, y) lexicographic grid order.
MarginReport sweep(Which which, const GridSpec& grid, const SweepFixtures& fixtures);

// CSV with header "ineq,lambda,x,y,lhs,rhs,margin,rel_margin,status".
std::string report_csv(const MarginReport& report);

} // namespace gbf::ineq
