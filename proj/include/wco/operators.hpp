#pragma once

#include <functional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "wco/geometry.hpp"
#include "wco/hardy.hpp"
#include "wco/types.hpp"

namespace wco {

// Weight symbol of the operator. JacobianPower is the matched weight
// C |Dphi|^{(n-2)/2}; Custom is any C^2 function for building
// counterexamples.
struct Weight {
    struct JacobianPower {
        double C = 1.0;
    };
    struct Custom {
        std::function<cplx(const Vec&)> fn;
    };
    std::variant<JacobianPower, Custom> form;

    static Weight jacobian_power(double C = 1.0) { return Weight{JacobianPower{C}}; }
    static Weight custom(std::function<cplx(const Vec&)> f) { return Weight{Custom{std::move(f)}}; }
};

// W f = psi . (f o phi) with phi mapping the ball into the closed ball and
// Jacobian of constant sign. phi is a ball Moebius map, a canonical-form
// Moebius map, or an arbitrary smooth map (for negative witnesses).
struct WcoOperator {
    std::variant<BallMoebius, CanonicalMoebius, MapFn> phi;
    Weight psi;
    int n = 0;

    static WcoOperator moebius(BallMoebius m, double C = 1.0);
    static WcoOperator canonical(CanonicalMoebius m, double C = 1.0);
    static WcoOperator custom(MapFn f, int dim, std::function<cplx(const Vec&)> weight);

    Vec map(const Vec& x) const;
    Vec phi_zero() const;
    cplx weight(const Vec& x) const;
    // |Dphi(x)|: closed form for Moebius maps, finite differences otherwise
    double conformal_scale(const Vec& x) const;
    bool has_moebius_phi() const;
    bool has_matched_weight() const;
    double weight_constant() const;  // C of JacobianPower; throws for Custom

    // sampled standing assumptions: phi(ball) inside the closed ball
    // (1000 points) and sign(det Dphi) constant (100 points)
    void validate(std::uint64_t seed = 20240601) const;
};

cplx apply(const WcoOperator& W, const HarmonicFn& f, const Vec& x);

// second-order central-difference Laplacian
cplx laplacian_fd(const std::function<cplx(const Vec&)>& g, const Vec& x, double h = 1e-3);

// Residuals of the harmonicity-preservation system at x:
//   psi_harmonic:  |Delta psi|
//   coupling:      max_i |psi Delta phi_i + 2 (Dphi grad psi)_i|
//   conformal:     max-entry |Dphi Dphi^t - |Dphi|^2 I|
// First derivatives use step h1, Laplacians h2.
struct PdeResiduals {
    double psi_harmonic = 0.0;
    double coupling = 0.0;
    double conformal = 0.0;

    double max() const;
};
PdeResiduals pde_conditions_check(const WcoOperator& W, const Vec& x, double h1 = 1e-4,
                                  double h2 = 1e-3);

// max over the points of the FD Laplacian of W f, normalized by the local
// magnitude of the stencil values (thresholds scale with function size).
double harmonicity_preservation_check(const WcoOperator& W, const HarmonicFn& f,
                                      std::span<const Vec> points, double h = 1e-3);

// Closed-form derivatives of the reflection in S(a,r) and of its matched
// weight psi = (r/|x-a|)^{n-2}:
//   Delta phi = 2(2-n) r^2 (x-a)/|x-a|^4
//   grad psi  = (2-n) r^{n-2} (x-a)/|x-a|^n
//   Dphi      = r^2/|x-a|^2 (I - 2 Q(x-a)),  Q(v) = v v^t / |v|^2
struct SphereReflectionDerivs {
    Vec laplacian_phi;
    Vec grad_psi;
    Mat dphi;
};
SphereReflectionDerivs sphere_reflection_derivatives(const Vec& a, double r, const Vec& x);

// LHS: quadrature of P(phi(r zeta), eta) |Dphi(r zeta)|^{(n-2)/2} over zeta.
// RHS: (1+|phi(0)|)/(1-|phi(0)|)^{n-1} |Dphi(0)|^{(n-2)/2}.
std::pair<double, double> poisson_sup_inequality_check(const WcoOperator& W,
                                                       const SphericalRule& rule, double r,
                                                       const Vec& eta);

// ||W||_{h^p -> h^p} = ((1+|phi(0)|)/(1-|phi(0)|))^{|(n-1)/p - (n-2)/2|}
// for phi in Moeb(B) with the matched weight (C = 1).
double norm_formula(const BallMoebius& m, double p, int n);

// (ratio, bound): quadrature estimate of ||W P[mu]||_{h^1} / ||mu|| against
// the closed bound (1+|phi(0)|)/(1-|phi(0)|)^{n-1} |psi(0)|.
std::pair<double, double> upper_bound_h1(const WcoOperator& W, const DiscreteMeasure& mu,
                                         const SphericalRule& rule, std::span<const double> radii);

// (ratio, bound) for 1 < p < inf: quadrature ||W f|| / ||f|| against
// {(1+|phi(0)|)/(1-|phi(0)|)^{n-1} |psi(0)|}^{1/p} ||psi||_inf^{1-1/p}.
std::pair<double, double> upper_bound_hp(const WcoOperator& W, const HarmonicFn& f, double p,
                                         const SphericalRule& rule, std::span<const double> radii);

// W* P_y = psi(y) P_{phi(y)}
HarmonicFn adjoint_on_kernel(const WcoOperator& W, const Vec& y);

// explicit adjoint: (W* f)(y) = int f*(zeta)
//   {(1-|phi^{-1}(0)|^2)/|phi^{-1}(0)-zeta|^2}^{(n-2)/2}
//   (1-|y|^2)/|y - phi(zeta)|^n  dsigma(zeta)      (times the weight constant)
cplx adjoint_integral(const WcoOperator& W, const BoundaryFn& fstar, const Vec& y,
                      const SphericalRule& rule);

// Fully analytic curve  ||W* P_y|| / ||P_y|| on h^{p'}:
//   Phi_{p'}(|phi(y)|^2)/Phi_{p'}(|y|^2) |Dphi(y)|^{(n-2)/2 - (n-1)/p}.
double ratio_curve(const BallMoebius& m, double p, const Vec& y);

// Equals norm_formula for 1 < p < inf; p = 1 and p = inf are out of scope
// and rejected.
double essential_norm_formula(const BallMoebius& m, double p, int n);

// sup_{|x| <= compact_radius} |k_y^{(p)}(x)| for |y| over the given radii;
// decreasing toward 0 as |y| -> 1.
std::vector<double> weak_null_probe(double p, int n, std::span<const double> radii,
                                    double compact_radius);

// declarative text record (dimension, phi parameters, weight form, constant)
std::string to_record(const WcoOperator& W);
WcoOperator operator_from_record(const std::string& text);

}  // namespace wco
