#pragma once

#include <functional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "wco/geometry.hpp"
#include "wco/quadrature.hpp"
#include "wco/types.hpp"

namespace wco {

// boundary function on S^{n-1}
using BoundaryFn = std::function<cplx(const Vec&)>;

// finite atomic surrogate for a complex Borel measure on the sphere
struct DiscreteMeasure {
    std::vector<std::pair<Vec, cplx>> atoms;  // (unit vector, complex weight)

    double total_variation() const;
    void validate() const;
};

// P(x, zeta) = (1 - |x|^2) / |x - zeta|^n,  |x| < 1, zeta on the sphere
double poisson_kernel(const Vec& x, const Vec& zeta);

// P_y(x) = (1 - |x|^2 |y|^2) / (1 - 2 x.y + |x|^2 |y|^2)^{n/2}; harmonic in x
// with boundary values P(y, .).
double extended_poisson(const Vec& y, const Vec& x);

cplx poisson_integral(const BoundaryFn& f, const Vec& x, const SphericalRule& rule);
cplx poisson_integral(const DiscreteMeasure& mu, const Vec& x);

// Tagged union of the harmonic test functions: extended Poisson kernels,
// Poisson integrals of boundary data / atomic measures, and the low-degree
// harmonic polynomials.
struct HarmonicFn {
    struct ExtendedPoissonBody {
        Vec y;
    };
    struct PoissonOfBoundaryBody {
        BoundaryFn data;
        SphericalRule rule;
    };
    struct PoissonOfMeasureBody {
        DiscreteMeasure mu;
    };
    struct PolynomialBody {
        enum class Kind { constant, coordinate, product, square_diff };
        Kind kind = Kind::constant;
        int i = 0;
        int j = 1;
    };

    std::variant<ExtendedPoissonBody, PoissonOfBoundaryBody, PoissonOfMeasureBody, PolynomialBody>
        body;
    cplx scale{1.0, 0.0};

    cplx operator()(const Vec& x) const;

    static HarmonicFn extended_poisson_fn(Vec y);
    static HarmonicFn poisson_of_boundary(BoundaryFn f, SphericalRule rule);
    static HarmonicFn poisson_of_measure(DiscreteMeasure mu);
    static HarmonicFn constant();
    static HarmonicFn coordinate(int i);
    static HarmonicFn product(int i, int j);
    static HarmonicFn square_diff(int i, int j);
};

// Default radius grid for norm estimation: 1 - 2^{-k}, k = 0..10, capped at
// 0.999. The sup over r is approached from below, so estimates are lower
// bounds of the true norm.
std::vector<double> default_radius_grid();

// max over the supplied radii of the quadrature L^p mean of f on r S^{n-1};
// p = inf takes the max of |f| over the largest-radius node set.
double hp_norm_estimate(const std::function<cplx(const Vec&)>& f, double p,
                        std::span<const double> radii, const SphericalRule& rule);
double hp_norm_estimate(const HarmonicFn& f, double p, std::span<const double> radii,
                        const SphericalRule& rule);

// Closed-form kernel norm  ||P_y||_{h^p} = Phi_p(|y|^2) (1-|y|^2)^{(1-n)/p'}.
double hp_norm_py_closed(const Vec& y, double p, int n);

// | int f(phi(zeta)) dsigma - int f(zeta) |Dphi^{-1}(zeta)|^{n-1} dsigma |,
// both sides with the same rule.
double change_of_variables_check(const BallMoebius& m, const BoundaryFn& f,
                                 const SphericalRule& rule);

// k_y^{(p)} = P_y / ||P_y||_{h^p}
HarmonicFn normalized_kernel(const Vec& y, double p, int n);

// Tiny expression language for boundary data: numeric constants, coordinate
// monomials z1..zn, Poisson kernels P(y1,...,yn), combined with + - and
// scalar multiples, e.g. "1 + 0.5*z1 - 2*P(0.3,0,0)".
BoundaryFn parse_boundary_expr(const std::string& text, int dim);

}  // namespace wco
