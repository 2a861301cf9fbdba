#pragma once

#include "wco/types.hpp"

namespace wco {

// Gamma function on the real line, poles at the non-positive integers.
// Relative accuracy better than 1e-12 on (0, 50).
double gamma_fn(double x);

// log|Gamma(x)|; *sign receives the sign of Gamma(x). Throws on poles.
double log_abs_gamma(double x, int* sign);

struct Hyp2F1Params {
    double a = 0.0;
    double b = 0.0;
    double c = 1.0;
    double z = 0.0;  // in [0, 1]

    void validate() const;
};

// Plain power series for 2F1(a,b;c;z). Detects terminating series (a or b a
// non-positive integer) and sums the finite polynomial exactly. Stops when
// the term magnitude drops below 1e-16 of the partial sum; throws if 10000
// terms are not enough.
double hyp2f1_series(double a, double b, double c, double z);

// Gauss hypergeometric function on [0,1]. For z > 0.7 the Euler
// transformation (1-z)^{c-a-b} 2F1(c-a,c-b;c;z) is applied first; very close
// to z = 1 a connection formula in 1-z takes over (when c-a-b is not an
// integer). z = 1 requires c-a-b > 0 and is evaluated in closed form.
double hyp2f1(const Hyp2F1Params& p);

// 2F1(a,b;c;1) = Gamma(c)Gamma(c-a-b) / (Gamma(c-a)Gamma(c-b)); needs c-a-b > 0.
double gauss_at_one(double a, double b, double c);

struct PhiSpec {
    double p = 2.0;   // in [1, inf]
    int n = 3;        // dimension, >= 2
    double r = 0.0;   // in [0, 1]

    void validate() const;
};

// The hypergeometric factor of the kernel-norm formula:
//   Phi_p(r) = { 2F1(n(1-p)/2, (2n-2-np)/2; n/2; r) }^{1/p}  for finite p,
//   Phi_inf(r) = (1+r)^n.
double phi_p(const PhiSpec& s);

// Limit of Phi_p(r) as r -> 1^-:
//   { Gamma(n/2) Gamma(np+1-n) / (Gamma(np/2) Gamma((np+2-n)/2)) }^{1/p},
// and 2^n for p = inf.
double phi_p_limit(double p, int n);

}  // namespace wco
