#include <cmath>
#include <stdexcept>

#include <doctest.h>

#include "gbf/glambda.hpp"
#include "gbf/measures.hpp"
#include "gbf/smoothing.hpp"
#include "gbf/special_functions.hpp"
#include "oracles.hpp"

using namespace gbf::smoothing;
using gbf::measures::Atom;
using gbf::measures::GbfRep;
using gbf::measures::KernelForm;
using gbf::measures::MeasureSpec;

TEST_CASE("gamma_cdf") {
    CHECK(gamma_cdf(1.0, 1.0, 1.0) == doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-13));
    CHECK(gamma_cdf(3.0, 2.0, 0.0) == 0.0);
    // concentration: dP_{y,x} -> eps_x as y -> inf
    CHECK(gamma_cdf(2000.0, 1.0, 0.9) < 1e-3);
    CHECK(gamma_cdf(2000.0, 1.0, 1.1) > 0.999);
    // CDF in t
    double prev = 0.0;
    for (double t = 0.0; t < 10.0; t += 0.25) {
        double v = gamma_cdf(1.7, 2.0, t);
        CHECK(v >= prev);
        CHECK(v <= 1.0);
        prev = v;
    }
}

TEST_CASE("smooth: probability measure and closed forms") {
    CHECK(smooth([](double) { return 3.25; }, 2.0, 1.5, 1e-11) ==
          doctest::Approx(3.25).epsilon(1e-10));
    // E[1 - e^-T] for T ~ Gamma(y, x/y) = 1 - (1 + x/y)^-y
    CHECK(smooth([](double t) { return -std::expm1(-t); }, 2.0, 1.0, 1e-12) ==
          doctest::Approx(1.0 - std::pow(1.5, -2.0)).epsilon(1e-11));
    for (double y : {0.1, 7.0, 2000.0})
        CHECK(smooth([](double t) { return std::exp(-t); }, y, 2.0, 1e-11) ==
              doctest::Approx(std::pow(1.0 + 2.0 / y, -y)).epsilon(1e-9));
}

TEST_CASE("smooth converges to f(x) as y grows") {
    auto f = [](double t) { return -std::expm1(-t); };
    double target = f(1.0);
    double prev_err = 1.0;
    for (double y : {10.0, 100.0, 1000.0}) {
        double err = std::fabs(smooth(f, y, 1.0, 1e-11) - target);
        CHECK(err < prev_err);
        prev_err = err;
    }
    CHECK(prev_err < 1e-2);
}

TEST_CASE("BG2: smoothing route equals incomplete-beta route") {
    for (double lambda : {0.5, 1.0, 2.5})
        for (double z : {0.1, 1.0, 10.0})
            for (double y : {0.1, 1.0, 10.0}) {
                auto sides = bg2_sides(lambda, z, y, 1e-11);
                CHECK(sides.lhs == doctest::Approx(sides.rhs).epsilon(1e-8));
            }
}

TEST_CASE("BG1 residuals") {
    CHECK(std::fabs(bg1_residual(1.0, 1.0, 1.0)) < 1e-10);
    CHECK(std::fabs(bg1_residual(0.5, 2.0, 3.0)) < 1e-8);
    CHECK(std::fabs(bg1_residual(2.5, 0.1, 10.0)) < 1e-8);
}

TEST_CASE("GG1 residuals") {
    // lambda = 1: RHS is identically 0
    for (double y : {0.5, 2.0, 10.0}) {
        auto sides = gg1_sides(1.0, y, 1e-10);
        CHECK(std::fabs(sides.rhs) <= 1e-14);
        CHECK(std::fabs(sides.residual()) < 1e-9);
    }
    CHECK(std::fabs(gg1_residual(0.5, 2.0)) < 1e-8);
    CHECK(std::fabs(gg1_residual(3.0, 0.5)) < 1e-8);
}

TEST_CASE("thorin_term") {
    // lambda = 1, t = 1: Gamma(1+n)/Gamma(n) B(1,n;x/(x+n)) = 1 - (1+x/n)^-n
    CHECK(thorin_term(1.0, 4, 1.0, 1.0) == doctest::Approx(0.5904).epsilon(1e-12));
    CHECK(std::fabs(thorin_term(1.0, 4, 1e-12, 1.0)) <= 1e-10);
    // n -> infinity limit is gamma(lambda, x t)/t^lambda (sharpness)
    double target = oracles::lower_gamma_series(0.5, 1.0);
    double prev_gap = 1.0;
    for (int n : {8, 64, 512, 4096}) {
        double gap = std::fabs(thorin_term(0.5, n, 1.0, 1.0) - target);
        CHECK(gap < prev_gap);
        prev_gap = gap;
    }
    CHECK(prev_gap < 1e-3);
    // argument stays in (0,1): huge t
    CHECK(std::isfinite(thorin_term(2.0, 3, 5.0, 1e8)));
}

TEST_CASE("approx_fn: lambda = 1 closed form and monotone convergence") {
    GbfRep rep(1.0, 0.0, 0.0, KernelForm::measure,
               MeasureSpec({Atom{1.0, 1.0}}, std::nullopt));
    double prev = 0.0;
    for (int n : {1, 2, 4, 8, 16, 32}) {
        double fn = approx_fn(rep, n, 1.0);
        CHECK(fn == doctest::Approx(1.0 - std::pow(1.0 + 1.0 / n, -n)).epsilon(1e-10));
        CHECK(fn > prev); // monotone increase toward gamma(1,1)
        prev = fn;
    }
    double target = 1.0 - std::exp(-1.0);
    CHECK(std::fabs(approx_fn(rep, 64, 1.0) - target) < 6e-3);
}

TEST_CASE("approx_fn under and toward f per the sharp inequalities") {
    // lambda = 0.5: f_n(1) < gamma(0.5, 1) for every n (eq. I route)
    GbfRep rep05(0.5, 0.0, 0.0, KernelForm::measure,
                 MeasureSpec({Atom{1.0, 1.0}}, std::nullopt));
    double f05 = gbf::special::lower_incomplete_gamma(0.5, 1.0);
    double prev_err = 1.0;
    for (int n : {1, 2, 8, 64, 512}) {
        double fn = approx_fn(rep05, n, 1.0);
        CHECK(fn < f05);
        double err = f05 - fn;
        CHECK(err < prev_err);
        prev_err = err;
    }
    CHECK(prev_err < 1e-2);
    // lambda = 2.5: the eq. II bound g_lambda(n) f_n(1) < f(1) at every n,
    // and f_n -> f
    GbfRep rep25(2.5, 0.0, 0.0, KernelForm::measure,
                 MeasureSpec({Atom{1.0, 1.0}}, std::nullopt));
    double f25 = gbf::special::lower_incomplete_gamma(2.5, 1.0);
    for (int n : {1, 2, 8, 64, 512}) {
        double fn = approx_fn(rep25, n, 1.0);
        CHECK(gbf::glambda::g_lambda(2.5, n) * fn < f25);
    }
    CHECK(std::fabs(approx_fn(rep25, 512, 1.0) - f25) < 1e-2);
}

TEST_CASE("approx_fn on a density-form representation") {
    GbfRep rep(0.5, 0.0, 0.0, KernelForm::density,
               MeasureSpec({}, gbf::measures::Density::lomax2()));
    double f = gbf::measures::evaluate_gbf(rep, 1.0, 1e-11);
    double prev_gap = 1e9;
    for (int n : {4, 32, 256}) {
        double gap = std::fabs(approx_fn(rep, n, 1.0, 1e-10) - f);
        CHECK(gap < prev_gap);
        prev_gap = gap;
    }
    CHECK(prev_gap < 1e-2);
}
