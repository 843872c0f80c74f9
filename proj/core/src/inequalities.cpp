#include "gbf/inequalities.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "gbf/errors.hpp"
#include "gbf/glambda.hpp"
#include "gbf/smoothing.hpp"
#include "gbf/special_functions.hpp"

namespace gbf::ineq {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::domain_error(msg);
}

double beta_side(double lambda, double x, double y) {
    return special::incomplete_beta(lambda, y, x / (x + y));
}

// f must be bounded for the theorem margins: a = 0 and, when a density part
// is present, integrable kernel mass int t^-lambda rho(t) dt (measure form).
bool is_bounded(const measures::GbfRep& rep) {
    if (rep.a() != 0.0) return false;
    if (!rep.measure().density.has_value()) return true;
    const measures::Density& rho = *rep.measure().density;
    double lambda = rep.lambda();
    try {
        if (rep.kernel_form() == measures::KernelForm::measure) {
            quad::integrate_semi_infinite(
                [&](double t) { return std::pow(t, -lambda) * rho(t); }, 0.0, 1e-6);
        } else {
            quad::integrate_semi_infinite([&](double t) { return rho(t); }, 0.0, 1e-6);
        }
        return true;
    } catch (const numerical_error&) {
        return false;
    }
}

bool is_constant(const measures::GbfRep& rep) {
    return rep.a() == 0.0 && rep.measure().empty();
}

struct OrientedSides {
    double lhs; // the side the inequality bounds above
    double rhs; // the dominating side
};

OrientedSides sides_I(double lambda, double x, double y) {
    double lhs = std::exp(special::log_gamma(lambda + y) - special::log_gamma(y)) *
                 beta_side(lambda, x, y);
    double rhs = special::lower_incomplete_gamma(lambda, x);
    return {lhs, rhs};
}

OrientedSides sides_II(double lambda, double x, double y) {
    double lhs = std::exp(lambda * std::log(y)) * beta_side(lambda, x, y);
    double rhs = special::lower_incomplete_gamma(lambda, x);
    return {lhs, rhs};
}

} // namespace

std::vector<double> GridAxis::points() const {
    validate();
    std::vector<double> p;
    p.reserve(count);
    if (count == 1) {
        p.push_back(min);
        return p;
    }
    if (spacing == Spacing::log) {
        double lmin = std::log(min), lmax = std::log(max);
        for (int i = 0; i < count; ++i)
            p.push_back(std::exp(lmin + (lmax - lmin) * i / (count - 1)));
    } else {
        for (int i = 0; i < count; ++i)
            p.push_back(min + (max - min) * i / (count - 1));
    }
    return p;
}

void GridAxis::validate() const {
    require(min > 0.0, "GridAxis: min must be > 0");
    require(max >= min, "GridAxis: max must be >= min");
    require(count >= 1, "GridAxis: count must be >= 1");
}

std::string which_name(Which w) {
    switch (w) {
        case Which::I: return "I";
        case Which::II: return "II";
        case Which::III: return "III";
        case Which::IV: return "IV";
        case Which::cor_cm: return "cor_cm";
        case Which::cor_bdd_cm: return "cor_bdd_cm";
    }
    return "?";
}

double margin_ineq_I(double lambda, double x, double y) {
    require(lambda > 0.0 && lambda < 1.0, "margin_ineq_I: requires lambda in (0,1)");
    require(x > 0.0 && y > 0.0, "margin_ineq_I: x, y must be > 0");
    auto s = sides_I(lambda, x, y);
    return s.rhs - s.lhs;
}

double margin_ineq_II(double lambda, double x, double y) {
    require(lambda > 1.0, "margin_ineq_II: requires lambda > 1");
    require(x > 0.0 && y > 0.0, "margin_ineq_II: x, y must be > 0");
    auto s = sides_II(lambda, x, y);
    return s.rhs - s.lhs;
}

double margin_thm_III(const measures::GbfRep& rep, double x, double y, double tol) {
    require(rep.lambda() <= 1.0, "margin_thm_III: requires rep.lambda <= 1");
    require(is_bounded(rep), "margin_thm_III: representation must be bounded (a = 0)");
    require(!is_constant(rep), "margin_thm_III: representation must be non-constant");
    require(x > 0.0 && y > 0.0, "margin_thm_III: x, y must be > 0");
    auto f = [&](double t) { return measures::evaluate_gbf(rep, t, tol); };
    return f(x) - smoothing::smooth(f, y, x, tol);
}

double margin_thm_IV(const measures::GbfRep& rep, double x, double y, double tol) {
    require(rep.lambda() > 1.0, "margin_thm_IV: requires rep.lambda > 1");
    require(is_bounded(rep), "margin_thm_IV: representation must be bounded (a = 0)");
    require(!is_constant(rep), "margin_thm_IV: representation must be non-constant");
    require(x > 0.0 && y > 0.0, "margin_thm_IV: x, y must be > 0");
    auto f = [&](double t) { return measures::evaluate_gbf(rep, t, tol); };
    return f(x) - glambda::g_lambda(rep.lambda(), y) * smoothing::smooth(f, y, x, tol);
}

GeneralMargin margin_thm_III_general(const std::function<double(double)>& f,
                                     double lambda, double x, double y, double tol) {
    require(lambda > 0.0 && lambda <= 1.0, "margin_thm_III_general: lambda in (0,1]");
    require(x > 0.0 && y > 0.0, "margin_thm_III_general: x, y must be > 0");
    GeneralMargin r;
    // Probe: t^(1-lambda) f'(t) strictly decreasing on a log grid (central
    // differences for f'). Increases are flagged beyond a rounding floor tied
    // to the largest value seen, and the endpoints must drop strictly.
    std::vector<double> v(24);
    double vmax = 0.0;
    for (int i = 0; i < 24; ++i) {
        double t = std::exp(std::log(1e-2) + (std::log(1e2) - std::log(1e-2)) * i / 23.0);
        double d = t * 1e-6;
        double fp = (f(t + d) - f(t - d)) / (2.0 * d);
        v[i] = std::pow(t, 1.0 - lambda) * fp;
        vmax = std::max(vmax, std::fabs(v[i]));
    }
    r.hypothesis_ok = v.front() > v.back() + 1e-9 * vmax;
    for (int i = 1; i < 24; ++i)
        if (v[i] > v[i - 1] + 1e-12 * vmax) r.hypothesis_ok = false;
    r.margin = f(x) - smoothing::smooth(f, y, x, tol);
    return r;
}

double margin_cor_cm(double lambda, const measures::MeasureSpec& omega, double x,
                     double y, double tol) {
    require(lambda > 0.0, "margin_cor_cm: lambda must be > 0");
    require(x > 0.0 && y > 0.0, "margin_cor_cm: x, y must be > 0");
    // log-space prefactor: branch (i) y^y Gamma(lambda+y)/Gamma(y), lambda <= 1;
    // branch (ii) y^(lambda+y), lambda > 1.
    double log_pref;
    if (lambda <= 1.0)
        log_pref = y * std::log(y) + special::log_gamma(lambda + y) - special::log_gamma(y);
    else
        log_pref = (lambda + y) * std::log(y);
    double lhs = 0.0;
    for (const measures::Atom& a : omega.atoms)
        lhs += a.weight * std::exp(log_pref - (lambda + y) * std::log(y + x * a.location));
    if (omega.density.has_value()) {
        const measures::Density& rho = *omega.density;
        lhs += quad::integrate_semi_infinite(
                   [&](double s) {
                       return std::exp(log_pref - (lambda + y) * std::log(y + x * s)) * rho(s);
                   },
                   0.0, tol)
                   .value;
    }
    return measures::laplace_transform(omega, x, tol) - lhs;
}

double margin_cor_bdd_cm(const std::function<double(double)>& g, double x, double y,
                         double tol) {
    require(x > 0.0 && y > 0.0, "margin_cor_bdd_cm: x, y must be > 0");
    return smoothing::smooth(g, y, x, tol) - g(x);
}

MarginReport sweep(Which which, const GridSpec& grid, const SweepFixtures& fixtures) {
    MarginReport rep;
    rep.which = which;
    rep.margin_floor = fixtures.margin_floor;
    std::vector<double> xs = grid.x_grid.points();
    std::vector<double> ys = grid.y_grid.points();
    require(!grid.lambda_values.empty(), "sweep: lambda_values must be non-empty");
    for (double lambda : grid.lambda_values) {
        for (double x : xs) {
            for (double y : ys) {
                MarginEntry e;
                e.lambda = lambda;
                e.x = x;
                e.y = y;
                try {
                    switch (which) {
                        case Which::I: {
                            if (fixtures.check_hypothesis)
                                require(lambda > 0.0 && lambda < 1.0,
                                        "sweep(I): lambda outside (0,1)");
                            auto s = sides_I(lambda, x, y);
                            e.lhs = s.lhs;
                            e.rhs = s.rhs;
                            break;
                        }
                        case Which::II: {
                            if (fixtures.check_hypothesis)
                                require(lambda > 1.0, "sweep(II): lambda must be > 1");
                            auto s = sides_II(lambda, x, y);
                            e.lhs = s.lhs;
                            e.rhs = s.rhs;
                            break;
                        }
                        case Which::III: {
                            require(fixtures.rep.has_value(), "sweep(III): needs rep fixture");
                            auto f = [&](double t) {
                                return measures::evaluate_gbf(*fixtures.rep, t, fixtures.tol);
                            };
                            e.rhs = f(x);
                            e.lhs = smoothing::smooth(f, y, x, fixtures.tol);
                            if (fixtures.check_hypothesis)
                                require(fixtures.rep->lambda() <= 1.0,
                                        "sweep(III): rep.lambda must be <= 1");
                            break;
                        }
                        case Which::IV: {
                            require(fixtures.rep.has_value(), "sweep(IV): needs rep fixture");
                            auto f = [&](double t) {
                                return measures::evaluate_gbf(*fixtures.rep, t, fixtures.tol);
                            };
                            e.rhs = f(x);
                            e.lhs = glambda::g_lambda(fixtures.rep->lambda(), y) *
                                    smoothing::smooth(f, y, x, fixtures.tol);
                            if (fixtures.check_hypothesis)
                                require(fixtures.rep->lambda() > 1.0,
                                        "sweep(IV): rep.lambda must be > 1");
                            break;
                        }
                        case Which::cor_cm: {
                            require(fixtures.omega.has_value(),
                                    "sweep(cor_cm): needs omega fixture");
                            double margin =
                                margin_cor_cm(lambda, *fixtures.omega, x, y, fixtures.tol);
                            double rhs =
                                measures::laplace_transform(*fixtures.omega, x, fixtures.tol);
                            e.rhs = rhs;
                            e.lhs = rhs - margin;
                            break;
                        }
                        case Which::cor_bdd_cm: {
                            require(static_cast<bool>(fixtures.g),
                                    "sweep(cor_bdd_cm): needs g fixture");
                            e.rhs = smoothing::smooth(fixtures.g, y, x, fixtures.tol);
                            e.lhs = fixtures.g(x);
                            break;
                        }
                    }
                    e.margin = e.rhs - e.lhs;
                    e.rel_margin = e.rhs != 0.0 ? e.margin / e.rhs : 0.0;
                    // Strict positivity with a rounding guard scaled by the RHS.
                    double guard = 1e-13 * std::fabs(e.rhs);
                    e.status = e.margin > fixtures.margin_floor - guard
                                   ? MarginEntry::Status::ok
                                   : MarginEntry::Status::fail;
                } catch (const std::exception& ex) {
                    e.status = MarginEntry::Status::error;
                    e.message = ex.what();
                }
                rep.entries.push_back(std::move(e));
            }
        }
    }
    rep.pass = true;
    bool first = true;
    for (std::size_t i = 0; i < rep.entries.size(); ++i) {
        const MarginEntry& e = rep.entries[i];
        if (e.status != MarginEntry::Status::ok) rep.pass = false;
        if (e.status == MarginEntry::Status::error) continue;
        if (first || e.margin < rep.min_margin) {
            rep.min_margin = e.margin;
            rep.argmin = i;
            first = false;
        }
    }
    return rep;
}

namespace {
std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}
} // namespace

std::string report_csv(const MarginReport& report) {
    std::ostringstream out;
    out << "ineq,lambda,x,y,lhs,rhs,margin,rel_margin,status\n";
    for (const MarginEntry& e : report.entries) {
        out << which_name(report.which) << ',' << fmt(e.lambda) << ',' << fmt(e.x) << ','
            << fmt(e.y) << ',' << fmt(e.lhs) << ',' << fmt(e.rhs) << ',' << fmt(e.margin)
            << ',' << fmt(e.rel_margin) << ','
            << (e.status == MarginEntry::Status::ok
                    ? "ok"
                    : (e.status == MarginEntry::Status::fail ? "fail" : "error"))
            << '\n';
    }
    return out.str();
}

std::string MarginReport::summary_json() const {
    std::ostringstream out;
    const MarginEntry* am = entries.empty() ? nullptr : &entries[argmin];
    out << "{\n  \"min_margin\": " << fmt(min_margin) << ",\n  \"argmin\": ";
    if (am) {
        out << "{\"lambda\": " << fmt(am->lambda) << ", \"x\": " << fmt(am->x)
            << ", \"y\": " << fmt(am->y) << "}";
    } else {
        out << "null";
    }
    out << ",\n  \"verdict\": \"" << (pass ? "pass" : "fail") << "\"\n}\n";
    return out.str();
}

} // namespace gbf::ineq
