#include "wco/specfun.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace wco {

namespace {

bool is_nonpositive_integer(double v, long* m = nullptr) {
    const double r = std::round(v);
    if (r <= 0.0 && std::abs(v - r) < 1e-9) {
        if (m) *m = static_cast<long>(-r);
        return true;
    }
    return false;
}

}  // namespace

double gamma_fn(double x) {
    if (x <= 0.0 && x == std::floor(x))
        throw std::domain_error("gamma_fn: pole at non-positive integer " + std::to_string(x));
    return std::tgamma(x);
}

double log_abs_gamma(double x, int* sign) {
    if (x == std::round(x) && x <= 0.0)
        throw std::domain_error("log_abs_gamma: pole at non-positive integer");
    int s = 1;
    if (x < 0.0) {
        // Gamma alternates sign on the unit intervals left of 0
        const double fl = std::floor(x);
        if (std::fmod(fl, 2.0) != 0.0) s = -1;
    }
    if (sign) *sign = s;
    return std::lgamma(x);
}

void Hyp2F1Params::validate() const {
    if (c <= 0.0 && c == std::floor(c))
        throw std::domain_error("hyp2f1: c must not be a non-positive integer");
    if (!(z >= 0.0 && z <= 1.0))
        throw std::domain_error("hyp2f1: z must lie in [0, 1]");
    if (z == 1.0 && c - a - b <= 0.0)
        throw std::domain_error("hyp2f1: series not summable at z = 1 (c-a-b <= 0)");
}

double hyp2f1_series(double a, double b, double c, double z) {
    if (c <= 0.0 && c == std::floor(c))
        throw std::domain_error("hyp2f1_series: c must not be a non-positive integer");
    if (z == 0.0) return 1.0;

    long ma = 0, mb = 0;
    const bool ta = is_nonpositive_integer(a, &ma);
    const bool tb = is_nonpositive_integer(b, &mb);
    if (ta || tb) {
        // terminating polynomial; summing exactly avoids cancellation issues
        long terms = ta && tb ? std::min(ma, mb) : (ta ? ma : mb);
        double sum = 1.0, term = 1.0;
        for (long k = 0; k < terms; ++k) {
            term *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * z;
            sum += term;
        }
        return sum;
    }

    const long max_terms = 10000;
    double sum = 1.0, term = 1.0;
    int small_streak = 0;
    for (long k = 0; k < max_terms; ++k) {
        term *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * z;
        sum += term;
        if (std::abs(term) < 1e-16 * std::abs(sum)) {
            if (++small_streak >= 2) return sum;
        } else {
            small_streak = 0;
        }
    }
    throw std::runtime_error("hyp2f1_series: not converged within 10000 terms");
}

double gauss_at_one(double a, double b, double c) {
    if (c - a - b <= 0.0)
        throw std::domain_error("gauss_at_one: divergent, requires c-a-b > 0");
    // lgamma-based evaluation; a pole of Gamma in the denominator gives the
    // correct limit 0 through exp(-inf)
    int s1 = 1, s2 = 1, s3 = 1, s4 = 1;
    const double num = log_abs_gamma(c, &s1) + log_abs_gamma(c - a - b, &s2);
    double den = 0.0;
    const double ca = c - a, cb = c - b;
    if (ca == std::round(ca) && ca <= 0.0) return 0.0;
    if (cb == std::round(cb) && cb <= 0.0) return 0.0;
    den = log_abs_gamma(ca, &s3) + log_abs_gamma(cb, &s4);
    return s1 * s2 * s3 * s4 * std::exp(num - den);
}

namespace {

// For integer s = c-a-b >= 1 and w = 1-z small, the connection expansion
// truncated before the index k = s approximates F with error O(w^s log w);
// everything from k = s on is absorbed by the logarithmic branch, which is
// w^s-suppressed.
double hyp2f1_near_one_integer(double a, double b, double c, double z, long s) {
    const double w = 1.0 - z;
    int sg[4];
    const double g1 = log_abs_gamma(c, &sg[0]) + log_abs_gamma(static_cast<double>(s), &sg[1]) -
                      log_abs_gamma(c - a, &sg[2]) - log_abs_gamma(c - b, &sg[3]);
    const double front = sg[0] * sg[1] * sg[2] * sg[3] * std::exp(g1);
    double sum = 1.0, term = 1.0;
    const double cc = a + b - c + 1.0;  // equals 1 - s
    for (long k = 0; k + 1 < s; ++k) {
        term *= (a + k) * (b + k) / ((cc + k) * (k + 1.0)) * w;
        sum += term;
    }
    return front * sum;
}

// z -> 1-z connection formula, usable when c-a-b is not an integer.
// Both series run in w = 1-z, which is tiny here, so they converge in a
// handful of terms.
double hyp2f1_near_one(double a, double b, double c, double z) {
    const double s = c - a - b;
    const double w = 1.0 - z;
    int sg[6];
    const double g1 = log_abs_gamma(c, &sg[0]) + log_abs_gamma(s, &sg[1]) -
                      log_abs_gamma(c - a, &sg[2]) - log_abs_gamma(c - b, &sg[3]);
    const double f1 = sg[0] * sg[1] * sg[2] * sg[3] * std::exp(g1) *
                      hyp2f1_series(a, b, a + b - c + 1.0, w);
    const double g2 = log_abs_gamma(c, &sg[0]) + log_abs_gamma(-s, &sg[1]) -
                      log_abs_gamma(a, &sg[4]) - log_abs_gamma(b, &sg[5]);
    const double f2 = sg[0] * sg[1] * sg[4] * sg[5] * std::exp(g2) * std::pow(w, s) *
                      hyp2f1_series(c - a, c - b, s + 1.0, w);
    return f1 + f2;
}

}  // namespace

double hyp2f1(const Hyp2F1Params& p) {
    p.validate();
    const double a = p.a, b = p.b, c = p.c, z = p.z;
    if (z == 0.0 || a == 0.0 || b == 0.0) return 1.0;
    if (z == 1.0) return gauss_at_one(a, b, c);

    if (is_nonpositive_integer(a) || is_nonpositive_integer(b))
        return hyp2f1_series(a, b, c, z);

    const double s = c - a - b;
    if (z > 0.99) {
        if (std::abs(s - std::round(s)) > 1e-8) return hyp2f1_near_one(a, b, c, z);
        const long si = static_cast<long>(std::llround(s));
        if (si >= 1 && 1.0 - z < 1e-4) return hyp2f1_near_one_integer(a, b, c, z, si);
    }
    if (z > 0.7)
        return std::pow(1.0 - z, s) * hyp2f1_series(c - a, c - b, c, z);
    return hyp2f1_series(a, b, c, z);
}

void PhiSpec::validate() const {
    if (n < 2) throw std::domain_error("phi_p: dimension must be >= 2");
    if (!(p >= 1.0)) throw std::domain_error("phi_p: p must be in [1, inf]");
    if (!(r >= 0.0 && r <= 1.0)) throw std::domain_error("phi_p: r must lie in [0, 1]");
}

double phi_p(const PhiSpec& s) {
    s.validate();
    // p = inf: (1+sqrt(r))^n, the p -> inf limit of the finite-p branch and
    // the value that reproduces sup |P_y| = (1+|y|)/(1-|y|)^{n-1} at r = |y|^2
    if (s.p == p_infinity) return std::pow(1.0 + std::sqrt(s.r), s.n);
    const double n = s.n;
    Hyp2F1Params h{n * (1.0 - s.p) / 2.0, (2.0 * n - 2.0 - n * s.p) / 2.0, n / 2.0, s.r};
    // c-a-b = n(p-1)+1 > 0 for p >= 1, so z = 1 stays summable; guard anyway
    const double f = hyp2f1(h);
    if (!(f > 0.0)) throw std::runtime_error("phi_p: hypergeometric factor not positive");
    return std::pow(f, 1.0 / s.p);
}

double phi_p_limit(double p, int n) {
    if (n < 2) throw std::domain_error("phi_p_limit: dimension must be >= 2");
    if (p == p_infinity) return std::pow(2.0, n);
    if (!(p >= 1.0)) throw std::domain_error("phi_p_limit: p must be in [1, inf]");
    const double nd = n;
    // all four arguments are positive for p >= 1
    const double lg = std::lgamma(nd / 2.0) + std::lgamma(nd * p + 1.0 - nd) -
                      std::lgamma(nd * p / 2.0) - std::lgamma((nd * p + 2.0 - nd) / 2.0);
    return std::exp(lg / p);
}

}  // namespace wco
