#include "gbf/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

#include "gbf/errors.hpp"

namespace gbf::quad {

namespace {

// 15-point Kronrod nodes (all interior) and weights, with the embedded
// 7-point Gauss weights on the odd-indexed nodes. QUADPACK dqk15 constants.
const double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
const double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
const double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    double a, b;
    double value;
    double err;
};

struct PanelOrder {
    bool operator()(const Panel& p, const Panel& q) const {
        if (p.err != q.err) return p.err < q.err; // max-heap on error
        return p.a < q.a;                         // deterministic tie-break
    }
};

Panel evaluate_panel(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double fv[15];
    double fc = f(c);
    double resk = kWgk[7] * fc;
    double resg = kWg[3] * fc;
    double resabs = kWgk[7] * std::fabs(fc);
    fv[14] = fc;
    for (int j = 0; j < 7; ++j) {
        double x = h * kXgk[j];
        double f1 = f(c - x);
        double f2 = f(c + x);
        fv[2 * j] = f1;
        fv[2 * j + 1] = f2;
        double fsum = f1 + f2;
        resk += kWgk[j] * fsum;
        resabs += kWgk[j] * (std::fabs(f1) + std::fabs(f2));
        if (j % 2 == 1) resg += kWg[j / 2] * fsum;
    }
    if (!std::isfinite(resk))
        throw numerical_error("quadrature: integrand not finite inside panel");
    const double reskh = resk * 0.5;
    double resasc = kWgk[7] * std::fabs(fc - reskh);
    for (int j = 0; j < 7; ++j)
        resasc += kWgk[j] * (std::fabs(fv[2 * j] - reskh) + std::fabs(fv[2 * j + 1] - reskh));
    double value = resk * h;
    resabs *= h;
    resasc *= h;
    double err = std::fabs((resk - resg) * h);
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    const double uflow = std::numeric_limits<double>::min();
    const double epmach = std::numeric_limits<double>::epsilon();
    if (resabs > uflow / (50.0 * epmach)) err = std::max(epmach * 50.0 * resabs, err);
    return Panel{a, b, value, err};
}

double pairwise_sum(const std::vector<double>& v, std::size_t lo, std::size_t hi) {
    if (hi - lo <= 8) {
        double s = 0.0;
        for (std::size_t i = lo; i < hi; ++i) s += v[i];
        return s;
    }
    std::size_t mid = lo + (hi - lo) / 2;
    return pairwise_sum(v, lo, mid) + pairwise_sum(v, mid, hi);
}

IntegralResult adapt(const std::function<double(double)>& f, double a, double b,
                     double tol, int max_panels) {
    std::priority_queue<Panel, std::vector<Panel>, PanelOrder> heap;
    std::vector<Panel> done; // panels whose error no longer matters individually
    heap.push(evaluate_panel(f, a, b));
    double err_sum = heap.top().err;
    double value_scale = std::fabs(heap.top().value);
    int panels = 1;
    int since_rescan = 0;
    while (err_sum > tol && !heap.empty()) {
        if (panels >= max_panels)
            throw numerical_error("quadrature: panel budget exhausted before reaching tolerance");
        Panel worst = heap.top();
        heap.pop();
        // A panel squeezed to rounding width cannot be refined further.
        double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) {
            done.push_back(worst);
            err_sum -= worst.err;
            continue;
        }
        Panel left = evaluate_panel(f, worst.a, mid);
        Panel right = evaluate_panel(f, mid, worst.b);
        err_sum += left.err + right.err - worst.err;
        heap.push(left);
        heap.push(right);
        ++panels;
        value_scale = std::max(value_scale, std::fabs(left.value) + std::fabs(right.value));
        if (value_scale > 1e100)
            throw numerical_error("quadrature: panel sums grow without bound (divergent integral?)");
        // Kill accumulated drift in the incremental error total. Panels
        // parked in `done` are excluded: they cannot be refined further.
        if (++since_rescan == 256) {
            since_rescan = 0;
            auto copy = heap;
            err_sum = 0.0;
            while (!copy.empty()) {
                err_sum += copy.top().err;
                copy.pop();
            }
        }
    }
    std::vector<Panel> all = std::move(done);
    while (!heap.empty()) {
        all.push_back(heap.top());
        heap.pop();
    }
    std::sort(all.begin(), all.end(),
              [](const Panel& p, const Panel& q) { return p.a < q.a; });
    std::vector<double> values(all.size());
    double err = 0.0;
    for (std::size_t i = 0; i < all.size(); ++i) {
        values[i] = all[i].value;
        err += all[i].err;
    }
    IntegralResult r;
    r.value = pairwise_sum(values, 0, values.size());
    r.abs_error_estimate = err;
    r.subdivisions = static_cast<int>(all.size());
    if (r.abs_error_estimate > tol)
        throw numerical_error("quadrature: tolerance not met");
    return r;
}

} // namespace

IntegralResult integrate_finite(const std::function<double(double)>& f, double a,
                                double b, double tol, int max_panels) {
    if (!(a <= b)) throw std::domain_error("integrate_finite: requires a <= b");
    if (!(tol > 0.0)) throw std::domain_error("integrate_finite: tol must be > 0");
    if (a == b) return IntegralResult{0.0, 0.0, 1};
    return adapt(f, a, b, tol, max_panels);
}

IntegralResult integrate_semi_infinite(const std::function<double(double)>& f,
                                       double a, double tol, int max_panels) {
    if (!(tol > 0.0)) throw std::domain_error("integrate_semi_infinite: tol must be > 0");
    auto g = [&f, a](double u) {
        double om = 1.0 - u;
        if (om <= std::numeric_limits<double>::min() * 4.0) return 0.0;
        double t = a + u / om;
        return f(t) / (om * om);
    };
    return adapt(g, 0.0, 1.0, tol, max_panels);
}

} // namespace gbf::quad
