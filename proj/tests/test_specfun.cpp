#include "wco/specfun.hpp"

#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "wco/random.hpp"

using namespace wco;

TEST_SUITE_BEGIN("specfun");

TEST_CASE("gamma: exact and half-integer values") {
    CHECK(gamma_fn(1.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(gamma_fn(5.0) == doctest::Approx(24.0).epsilon(1e-14));
    CHECK(gamma_fn(0.5) == doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-14));
    // value frozen from the extended-precision reference
    CHECK(gamma_fn(1.5) == doctest::Approx(0.88622692545275801).epsilon(1e-13));
    CHECK_THROWS_AS(gamma_fn(0.0), std::domain_error);
    CHECK_THROWS_AS(gamma_fn(-3.0), std::domain_error);
}

TEST_CASE("gamma: relative accuracy against the reference on (0, 50)") {
    for (double x = 0.05; x < 50.0; x += 0.173) {
        const long double ref = oracles::gamma_ref(x);
        CHECK(std::abs(gamma_fn(x) - static_cast<double>(ref)) <=
              1e-12 * std::abs(static_cast<double>(ref)));
    }
}

TEST_CASE("gamma: recurrence and reflection properties") {
    Rng rng(17);
    for (int i = 0; i < 200; ++i) {
        const double x = rng.uniform(0.1, 30.0);
        CHECK(gamma_fn(x + 1.0) == doctest::Approx(x * gamma_fn(x)).epsilon(1e-12));
    }
    for (int i = 0; i < 100; ++i) {
        const double x = rng.uniform(0.05, 0.95);
        const double lhs = gamma_fn(x) * gamma_fn(1.0 - x);
        const double rhs = std::numbers::pi / std::sin(std::numbers::pi * x);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
    }
}

TEST_CASE("log_abs_gamma: signs on the negative axis") {
    int s = 0;
    log_abs_gamma(-0.5, &s);
    CHECK(s == -1);  // Gamma(-0.5) = -2 sqrt(pi)
    log_abs_gamma(-1.5, &s);
    CHECK(s == 1);
    log_abs_gamma(3.2, &s);
    CHECK(s == 1);
    CHECK(std::exp(log_abs_gamma(-0.5, &s)) == doctest::Approx(2.0 * std::sqrt(std::numbers::pi)));
}

TEST_CASE("hyp2f1: trivial parameter cases") {
    CHECK(hyp2f1({0.7, 2.1, 3.3, 0.0}) == 1.0);
    CHECK(hyp2f1({0.0, 2.1, 3.3, 0.77}) == 1.0);
    CHECK(hyp2f1({0.7, 0.0, 3.3, 0.5}) == 1.0);
}

TEST_CASE("hyp2f1: closed forms") {
    // 2F1(0.5, 1; 1.5; z^2) = atanh(z)/z with z = 0.5 gives ln 3
    CHECK(hyp2f1({0.5, 1.0, 1.5, 0.25}) == doctest::Approx(1.0986122886681098).epsilon(1e-12));
    // 2F1(a, 1; a; z) = (1-z)^{-1}
    CHECK(hyp2f1({2.0, 1.0, 2.0, 0.36}) == doctest::Approx(1.5625).epsilon(1e-12));
    // geometric series
    CHECK(hyp2f1({1.0, 1.0, 1.0, 0.5}) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("hyp2f1: terminating series summed exactly") {
    // b = -1 truncates after the linear term: 1 + (ab/c) z
    CHECK(hyp2f1({-1.5, -1.0, 1.5, 0.25}) == doctest::Approx(1.25).epsilon(1e-15));
    // a = -2: quadratic polynomial 1 - 2bz/c + b(b+1)/(c(c+1)) z^2 ... compare to reference
    const double v = hyp2f1({-2.0, 0.7, 1.9, 0.6});
    const long double ref = oracles::hyp2f1_ref(-2.0L, 0.7L, 1.9L, 0.6L, 3);
    CHECK(v == doctest::Approx(static_cast<double>(ref)).epsilon(1e-14));
}

TEST_CASE("hyp2f1: agrees with the brute-force series across [0, 0.95]") {
    Rng rng(99);
    for (int i = 0; i < 300; ++i) {
        const double a = rng.uniform(-3.0, 3.0);
        const double b = rng.uniform(-3.0, 3.0);
        const double c = rng.uniform(0.3, 4.0);
        const double z = rng.uniform(0.0, 0.95);
        const double got = hyp2f1({a, b, c, z});
        const double ref = static_cast<double>(oracles::hyp2f1_ref(a, b, c, z, 20000));
        CHECK(std::abs(got - ref) <= 1e-10 * std::max(1.0, std::abs(ref)));
    }
}

TEST_CASE("hyp2f1: Euler transformation consistency (property)") {
    Rng rng(7);
    int tested = 0;
    while (tested < 500) {
        const double a = rng.uniform(-2.5, 2.5);
        const double b = rng.uniform(-2.5, 2.5);
        const double c = rng.uniform(0.5, 4.0);
        const double z = rng.uniform(0.0, 0.95);
        const double direct = hyp2f1_series(a, b, c, z);
        const double transformed =
            std::pow(1.0 - z, c - a - b) * hyp2f1_series(c - a, c - b, c, z);
        CHECK(std::abs(direct - transformed) <= 1e-9 * std::max(1.0, std::abs(direct)));
        ++tested;
    }
}

TEST_CASE("gauss_at_one: gamma closed form") {
    CHECK(gauss_at_one(0.0, 1.3, 2.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(gauss_at_one(0.5, 0.5, 2.0) == doctest::Approx(1.2732395447351628).epsilon(1e-13));
    CHECK_THROWS_AS(gauss_at_one(1.0, 1.0, 1.5), std::domain_error);
}

TEST_CASE("gauss_at_one: matches the series limit near z = 1 (property)") {
    Rng rng(21);
    int done = 0;
    while (done < 100) {
        const double c = rng.uniform(0.5, 4.0);
        const double a = rng.uniform(-2.0, 2.0);
        const double bmax = c - a - 0.5;  // keep c-a-b > 0.5
        const double b = bmax - rng.uniform(0.0, 2.0);
        const double s = c - a - b;
        const double w = 1e-8;
        const double lim = gauss_at_one(a, b, c);
        const double val = hyp2f1({a, b, c, 1.0 - w});
        // F(1-w) - F(1) itself is of size |G2| w^s, which for s barely above
        // 1/2 dwarfs 1e-5; allow exactly that much beyond the 1e-5 budget
        int sg[4];
        const double g2 = log_abs_gamma(c, &sg[0]) + log_abs_gamma(-s, &sg[1]) -
                          log_abs_gamma(a, &sg[2]) - log_abs_gamma(b, &sg[3]);
        const double gap = std::exp(g2) * std::pow(w, s);
        CHECK(std::abs(val - lim) < 1e-5 * std::max(1.0, std::abs(lim)) + 3.0 * gap);
        if (s > 1.5) CHECK(std::abs(val - lim) < 1e-5 * std::max(1.0, std::abs(lim)));
        ++done;
    }
}

TEST_CASE("hyp2f1: divergence and domain guards") {
    CHECK_THROWS_AS(hyp2f1({1.0, 1.0, 1.5, 1.0}), std::domain_error);  // c-a-b < 0 at z=1
    CHECK_THROWS_AS(hyp2f1({0.5, 0.5, -2.0, 0.5}), std::domain_error);  // c non-positive integer
    CHECK_THROWS_AS(hyp2f1({0.5, 0.5, 1.5, 1.5}), std::domain_error);  // z out of range
}

TEST_CASE("phi_p: pinned values") {
    CHECK(phi_p({1.0, 3, 0.37}) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(phi_p({1.0, 4, 0.9}) == doctest::Approx(1.0).epsilon(1e-14));
    // r = |y|^2 = 0.25: (1 + 0.5)^3, reproducing sup |P_y| after the
    // (1-|y|^2)^{1-n} factor
    CHECK(phi_p({p_infinity, 3, 0.25}) == doctest::Approx(3.375).epsilon(1e-14));
    CHECK(phi_p({2.0, 3, 0.0}) == doctest::Approx(1.0).epsilon(1e-14));
    // terminating case: Phi_2(r)^2 = 1 + r for n = 3
    CHECK(phi_p({2.0, 3, 0.25}) == doctest::Approx(std::sqrt(1.25)).epsilon(1e-14));
    // frozen from the extended-precision series
    CHECK(phi_p({1.5, 3, 0.5}) == doctest::Approx(1.0421073298742371).epsilon(1e-11));
}

TEST_CASE("phi_p_limit: pinned values and series limit") {
    CHECK(phi_p_limit(1.0, 3) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(phi_p_limit(1.0, 5) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(phi_p_limit(p_infinity, 3) == doctest::Approx(8.0).epsilon(1e-14));
    CHECK(phi_p_limit(2.0, 3) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-13));
    CHECK(phi_p_limit(1.5, 3) == doctest::Approx(1.0857670466379626).epsilon(1e-12));

    for (int n : {2, 3, 4}) {
        for (double p : {1.25, 2.0, 3.5}) {
            const double at_grid = phi_p({p, n, 1.0 - 1e-7});
            CHECK(std::abs(at_grid - phi_p_limit(p, n)) < 1e-4);
        }
    }
}

TEST_CASE("phi_p: the p = infinity branch is the large-p limit of the finite branch") {
    // the finite-p factor approaches (1+sqrt(r))^n from below as p grows
    // (p capped so that Phi_p^p stays inside double range)
    for (int n : {2, 3}) {
        for (double r : {0.09, 0.25}) {
            const double inf_branch = phi_p({p_infinity, n, r});
            double prev_gap = 1e300;
            for (double p : {25.0, 50.0, 100.0, 200.0}) {
                const double gap = std::abs(phi_p({p, n, r}) - inf_branch);
                CHECK(gap < prev_gap);
                prev_gap = gap;
            }
            CHECK(prev_gap < 0.10 * inf_branch);
        }
    }
}

TEST_CASE("phi_p: monotone for p = infinity, continuous over a p-grid") {
    double prev = 0.0;
    for (double r = 0.0; r <= 1.0 + 1e-12; r += 0.05) {
        const double v = phi_p({p_infinity, 3, std::min(r, 1.0)});
        CHECK(v > prev);
        prev = v;
    }
    for (int n : {2, 3, 5}) {
        for (double p = 1.0; p <= 8.0 + 1e-9; p += 0.25) {
            for (double r : {0.0, 0.3, 0.9, 1.0}) {
                const double v = phi_p({p, n, r});
                CHECK(std::isfinite(v));
                CHECK(v > 0.0);
            }
        }
    }
}

TEST_SUITE_END();
