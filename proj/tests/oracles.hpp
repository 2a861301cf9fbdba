// Test-only reference implementations, independent of the library code paths
// they are used to check.
#pragma once

#include <cmath>
#include <stdexcept>

namespace oracles {

// Gamma reference in extended precision: upward recurrence into y >= 12,
// then the Stirling series with Bernoulli corrections. Truncation error is
// below 1e-19 relative there, far under what the tests assert.
inline long double gamma_ref(long double z) {
    const long double pi = 3.141592653589793238462643383279503L;
    if (z < 0.5L) return pi / (std::sin(pi * z) * gamma_ref(1.0L - z));

    long double shift = 1.0L;
    while (z < 12.0L) {
        shift *= z;
        z += 1.0L;
    }
    // B_{2k} / (2k (2k-1)) for 2k = 2..16
    static const long double coef[] = {
        1.0L / 12.0L,           -1.0L / 360.0L,         1.0L / 1260.0L,
        -1.0L / 1680.0L,        1.0L / 1188.0L,         -691.0L / 360360.0L,
        1.0L / 156.0L,          -3617.0L / 122400.0L};
    long double lg = (z - 0.5L) * std::log(z) - z + 0.5L * std::log(2.0L * pi);
    long double zp = z;
    for (const long double c : coef) {
        lg += c / zp;
        zp *= z * z;
    }
    return std::exp(lg) / shift;
}

// Brute-force power series for 2F1 in extended precision. Caller is
// responsible for staying in the convergent regime.
inline long double hyp2f1_ref(long double a, long double b, long double c, long double z,
                              int max_terms = 4000) {
    long double sum = 1.0L, term = 1.0L;
    for (int k = 0; k < max_terms; ++k) {
        term *= (a + k) * (b + k) / ((c + k) * (k + 1.0L)) * z;
        sum += term;
        if (std::abs(term) < 1e-22L * std::abs(sum) && k > 4) return sum;
    }
    return sum;
}

// Exact moments of the normalized surface measure on S^{n-1}:
//   int zeta_1^2 = 1/n,  int zeta_1^4 = 3/(n(n+2)),  int zeta_1^2 zeta_2^2 = 1/(n(n+2)).
inline double moment_sq(int n) { return 1.0 / n; }
inline double moment_fourth(int n) { return 3.0 / (n * (n + 2.0)); }
inline double moment_sq_sq(int n) { return 1.0 / (n * (n + 2.0)); }

}  // namespace oracles
