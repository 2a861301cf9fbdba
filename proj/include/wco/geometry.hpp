#pragma once

#include <functional>
#include <tuple>
#include <vector>

#include "wco/types.hpp"

namespace wco {

using MapFn = std::function<Vec(const Vec&)>;

// Reflection in the sphere of center a and radius r:  a + r^2 (x-a)/|x-a|^2.
// Throws if x == a (the image would be the point at infinity).
Vec reflect_sphere(const Vec& a, double r, const Vec& x);

// Reflection in the hyperplane {x : x.a = t}, a a unit vector.
Vec reflect_hyperplane(const Vec& a, double t, const Vec& x);

// [x,a] = (1 - 2 x.a + |x|^2 |a|^2)^{1/2}
double bracket(const Vec& x, const Vec& a);
double bracket_squared(const Vec& x, const Vec& a);

// The involutive ball automorphism swapping 0 and a (|a| < 1):
//   phi_a(x) = (|x-a|^2 a - (1-|a|^2)(x-a)) / [x,a]^2
Vec moebius_phi_a(const Vec& a, const Vec& x);

// Liouville canonical form  phi(x) = b + alpha A (x-a)/|x-a|^epsilon,
// with A orthogonal and epsilon in {0, 2}.
struct CanonicalMoebius {
    Vec b;
    double alpha = 1.0;
    Mat A;
    Vec a;
    int epsilon = 0;

    CanonicalMoebius(Vec b_, double alpha_, Mat A_, Vec a_, int epsilon_);

    int dim() const { return static_cast<int>(a.size()); }
    Vec operator()(const Vec& x) const;
    // conformal scale factor |Dphi| = |alpha| / |x-a|^epsilon
    double conformal_scale(const Vec& x) const;
};

// Moebius automorphism of the ball in the form phi = A o phi_a,
// A orthogonal, |a| < 1. phi^{-1}(0) = a and phi(0) = A a.
struct BallMoebius {
    Mat A;
    Vec a;

    BallMoebius(Mat A_, Vec a_);
    static BallMoebius identity(int n);
    static BallMoebius from_center(Vec a_);  // A = I

    int dim() const { return static_cast<int>(a.size()); }
    Vec operator()(const Vec& x) const;
    Vec image_of_zero() const { return A * a; }
    // (A o phi_a)^{-1} = phi_a o A^t, renormalized to the pair form A' o phi_{a'}
    BallMoebius inverse() const;
    // |Dphi(x)| = (1 - |a|^2) / [x,a]^2
    double conformal_scale(const Vec& x) const;
};

// Nontangential approach region with vertex zeta and aperture delta > 1:
// x is inside iff |x - zeta| < (delta/2)(1 - |x|^2).
struct Cone {
    Vec vertex;
    double aperture;

    Cone(Vec vertex_, double aperture_);
    bool contains(const Vec& x) const;
};

// Aperture delta~ = (1+|phi(0)|)/(1-|phi(0)|) * delta such that
// phi(Gamma_delta(zeta)) is contained in Gamma_{delta~}(phi(zeta)).
double cone_image_aperture(const BallMoebius& m, double delta);

// Central-difference Jacobian matrix, entry (i,j) ~ d phi^(i) / d x_j.
Mat jacobian_matrix_fd(const MapFn& phi, const Vec& x, double h = 1e-4);

// |det D phi|^{1/n} from the finite-difference Jacobian.
double fd_conformal_scale(const MapFn& phi, const Vec& x, double h = 1e-4);

// Max-entry residual of Dphi (Dphi)^t - |Dphi|^2 I, with Dphi by finite
// differences; zero (up to FD error) exactly for conformal maps.
double cr_residual(const MapFn& phi, const Vec& x, double h = 1e-4);

// Orthogonal matrix built as a product of Givens rotations (plane i<j, angle).
Mat rotation_from_givens(int n, const std::vector<std::tuple<int, int, double>>& planes);

}  // namespace wco
