#include "gbf/measures.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "gbf/errors.hpp"
#include "gbf/special_functions.hpp"

namespace gbf::measures {

Density Density::lomax2() {
    Density d;
    d.kind_ = Kind::lomax2;
    d.name_ = "lomax2";
    return d;
}

Density Density::expneg(double c) {
    if (!(c > 0.0)) throw std::domain_error("Density::expneg: c must be > 0");
    Density d;
    d.kind_ = Kind::expneg;
    d.name_ = "expneg";
    d.c_ = c;
    return d;
}

Density Density::powerexp(double p, double c) {
    if (!(p >= 0.0)) throw std::domain_error("Density::powerexp: p must be >= 0");
    if (!(c > 0.0)) throw std::domain_error("Density::powerexp: c must be > 0");
    Density d;
    d.kind_ = Kind::powerexp;
    d.name_ = "powerexp";
    d.p_ = p;
    d.c_ = c;
    return d;
}

Density Density::custom_table(std::vector<double> t, std::vector<double> value) {
    if (t.size() != value.size() || t.size() < 2)
        throw std::domain_error("Density::custom_table: need >= 2 matching nodes");
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (!(t[i] > 0.0)) throw std::domain_error("Density::custom_table: nodes must be > 0");
        if (i > 0 && !(t[i] > t[i - 1]))
            throw std::domain_error("Density::custom_table: nodes must be strictly increasing");
        if (!(value[i] >= 0.0))
            throw std::domain_error("Density::custom_table: values must be >= 0");
    }
    Density d;
    d.kind_ = Kind::custom_table;
    d.name_ = "custom-table";
    // Tail decay rate from the last two nodes; flat-zero tail if the last
    // value vanishes or the table is not decaying there.
    std::size_t n = t.size();
    if (value[n - 1] > 0.0 && value[n - 2] > value[n - 1])
        d.tail_rate_ = std::log(value[n - 2] / value[n - 1]) / (t[n - 1] - t[n - 2]);
    else
        d.tail_rate_ = -1.0; // sentinel: no exponential tail
    d.table_t_ = std::move(t);
    d.table_v_ = std::move(value);
    return d;
}

double Density::operator()(double t) const {
    if (!(t > 0.0)) return 0.0;
    switch (kind_) {
        case Kind::lomax2: {
            double u = 1.0 + t;
            return 1.0 / (u * u);
        }
        case Kind::expneg:
            return std::exp(-c_ * t);
        case Kind::powerexp:
            return std::pow(t, p_) * std::exp(-c_ * t);
        case Kind::custom_table: {
            if (t <= table_t_.front()) return table_v_.front();
            if (t >= table_t_.back()) {
                if (tail_rate_ < 0.0) return 0.0;
                return table_v_.back() * std::exp(-tail_rate_ * (t - table_t_.back()));
            }
            auto it = std::upper_bound(table_t_.begin(), table_t_.end(), t);
            std::size_t i = static_cast<std::size_t>(it - table_t_.begin());
            double t0 = table_t_[i - 1], t1 = table_t_[i];
            double v0 = table_v_[i - 1], v1 = table_v_[i];
            return v0 + (v1 - v0) * (t - t0) / (t1 - t0);
        }
    }
    return 0.0;
}

double Density::total_mass() const {
    switch (kind_) {
        case Kind::lomax2:
            return 1.0;
        case Kind::expneg:
            return 1.0 / c_;
        case Kind::powerexp:
            return std::exp(special::log_gamma(p_ + 1.0) - (p_ + 1.0) * std::log(c_));
        case Kind::custom_table:
            return quad::integrate_semi_infinite([this](double t) { return (*this)(t); },
                                                 0.0, 1e-10)
                .value;
    }
    return 0.0;
}

MeasureSpec::MeasureSpec(std::vector<Atom> atoms_in, std::optional<Density> density_in)
    : atoms(std::move(atoms_in)), density(std::move(density_in)) {
    for (const Atom& a : atoms) {
        if (!(a.location > 0.0))
            throw std::domain_error("MeasureSpec: atom locations must be > 0");
        if (!(a.weight > 0.0))
            throw std::domain_error("MeasureSpec: atom weights must be > 0");
    }
}

namespace {

// Kernel integrand against the density part of mu, at a given x.
double kernel_integrand(const GbfRep& rep, double x, double t) {
    const Density& rho = *rep.measure().density;
    double g = special::lower_incomplete_gamma(rep.lambda(), x * t);
    if (rep.kernel_form() == KernelForm::measure)
        return g * std::pow(t, -rep.lambda()) * rho(t);
    return g * rho(t);
}

double kernel_atoms(const GbfRep& rep, double x) {
    double s = 0.0;
    for (const Atom& a : rep.measure().atoms) {
        double g = special::lower_incomplete_gamma(rep.lambda(), x * a.location);
        if (rep.kernel_form() == KernelForm::measure)
            g *= std::pow(a.location, -rep.lambda());
        s += a.weight * g;
    }
    return s;
}

} // namespace

GbfRep::GbfRep(double lambda, double a, double b, KernelForm form, MeasureSpec measure)
    : lambda_(lambda), a_(a), b_(b), form_(form), measure_(std::move(measure)) {
    if (!(lambda_ > 0.0)) throw std::domain_error("GbfRep: lambda must be > 0");
    if (!(a_ >= 0.0) || !(b_ >= 0.0)) throw std::domain_error("GbfRep: a, b must be >= 0");
    if (measure_.density.has_value()) {
        // Certify convergence of the defining integral at x = 1: probe the
        // integrand on the decades 1e-8..1e-1 (finite everywhere, log-log
        // slope toward 0 above -1 for integrability), then run the integral.
        double probe[8];
        for (int d = 0; d < 8; ++d) {
            probe[d] = kernel_integrand(*this, 1.0, std::pow(10.0, d - 8.0));
            if (!std::isfinite(probe[d]))
                throw numerical_error("GbfRep: kernel integrand not finite near t = 0");
        }
        if (probe[0] > 1e-300 && probe[1] > 1e-300) {
            double slope = std::log10(probe[1] / probe[0]); // one decade apart
            if (slope <= -0.99)
                throw numerical_error(
                    "GbfRep: kernel integrand grows like t^-1 or worse near t = 0; "
                    "representation integral diverges");
        }
        quad::integrate_semi_infinite(
            [this](double t) { return kernel_integrand(*this, 1.0, t); }, 0.0, 1e-8);
    }
}

double laplace_transform(const MeasureSpec& mu, double x, double tol) {
    if (!(x > 0.0)) throw std::domain_error("laplace_transform: x must be > 0");
    double s = 0.0;
    for (const Atom& a : mu.atoms) s += a.weight * std::exp(-x * a.location);
    if (mu.density.has_value()) {
        const Density& rho = *mu.density;
        s += quad::integrate_semi_infinite(
                 [&](double t) { return std::exp(-x * t) * rho(t); }, 0.0, tol)
                 .value;
    }
    return s;
}

double evaluate_gbf(const GbfRep& rep, double x, double tol) {
    if (!(x > 0.0)) throw std::domain_error("evaluate_gbf: x must be > 0");
    double v = rep.a() * std::pow(x, rep.lambda()) + rep.b();
    v += kernel_atoms(rep, x);
    if (rep.measure().density.has_value()) {
        v += quad::integrate_semi_infinite(
                 [&](double t) { return kernel_integrand(rep, x, t); }, 0.0, tol)
                 .value;
    }
    return v;
}

} // namespace gbf::measures
