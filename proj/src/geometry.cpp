#include "wco/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace wco {

namespace {

void check_orthogonal(const Mat& A, const char* who) {
    if (A.rows() != A.cols()) throw std::invalid_argument(std::string(who) + ": A must be square");
    const Mat r = A * A.transpose() - Mat::Identity(A.rows(), A.cols());
    if (r.cwiseAbs().maxCoeff() > 1e-12)
        throw std::invalid_argument(std::string(who) + ": A is not orthogonal (1e-12 entrywise)");
}

}  // namespace

Vec reflect_sphere(const Vec& a, double r, const Vec& x) {
    if (!(r > 0.0)) throw std::invalid_argument("reflect_sphere: radius must be positive");
    const Vec d = x - a;
    const double n2 = d.squaredNorm();
    if (n2 == 0.0) throw std::domain_error("reflect_sphere: pole at x = a");
    return a + (r * r / n2) * d;
}

Vec reflect_hyperplane(const Vec& a, double t, const Vec& x) {
    if (std::abs(a.norm() - 1.0) > 1e-12)
        throw std::invalid_argument("reflect_hyperplane: normal must be a unit vector");
    return x - 2.0 * (x.dot(a) - t) * a;
}

double bracket_squared(const Vec& x, const Vec& a) {
    const double v = 1.0 - 2.0 * x.dot(a) + x.squaredNorm() * a.squaredNorm();
    if (v < 0.0) {
        if (v > -1e-12) return 0.0;
        throw std::domain_error("bracket: negative radicand");
    }
    return v;
}

double bracket(const Vec& x, const Vec& a) { return std::sqrt(bracket_squared(x, a)); }

Vec moebius_phi_a(const Vec& a, const Vec& x) {
    if (!(a.norm() < 1.0)) throw std::invalid_argument("moebius_phi_a: |a| must be < 1");
    const Vec d = x - a;
    const double br2 = bracket_squared(x, a);
    return (d.squaredNorm() * a - (1.0 - a.squaredNorm()) * d) / br2;
}

CanonicalMoebius::CanonicalMoebius(Vec b_, double alpha_, Mat A_, Vec a_, int epsilon_)
    : b(std::move(b_)), alpha(alpha_), A(std::move(A_)), a(std::move(a_)), epsilon(epsilon_) {
    if (epsilon != 0 && epsilon != 2)
        throw std::invalid_argument("CanonicalMoebius: epsilon must be 0 or 2");
    if (alpha == 0.0) throw std::invalid_argument("CanonicalMoebius: alpha must be nonzero");
    check_orthogonal(A, "CanonicalMoebius");
    if (A.rows() != a.size() || b.size() != a.size())
        throw std::invalid_argument("CanonicalMoebius: dimension mismatch");
}

Vec CanonicalMoebius::operator()(const Vec& x) const {
    const Vec d = x - a;
    if (epsilon == 0) return b + alpha * (A * d);
    const double n2 = d.squaredNorm();
    if (n2 == 0.0) throw std::domain_error("CanonicalMoebius: pole at x = a");
    return b + (alpha / n2) * (A * d);
}

double CanonicalMoebius::conformal_scale(const Vec& x) const {
    if (epsilon == 0) return std::abs(alpha);
    const double n2 = (x - a).squaredNorm();
    if (n2 == 0.0) throw std::domain_error("CanonicalMoebius: pole at x = a");
    return std::abs(alpha) / n2;
}

BallMoebius::BallMoebius(Mat A_, Vec a_) : A(std::move(A_)), a(std::move(a_)) {
    check_orthogonal(A, "BallMoebius");
    if (A.rows() != a.size()) throw std::invalid_argument("BallMoebius: dimension mismatch");
    if (!(a.norm() < 1.0)) throw std::invalid_argument("BallMoebius: |a| must be < 1");
}

BallMoebius BallMoebius::identity(int n) {
    // phi_0 = -id, so the identity map is (-I) o phi_0
    return BallMoebius(-Mat::Identity(n, n), Vec::Zero(n));
}

BallMoebius BallMoebius::from_center(Vec a_) {
    const int n = static_cast<int>(a_.size());
    return BallMoebius(Mat::Identity(n, n), std::move(a_));
}

Vec BallMoebius::operator()(const Vec& x) const { return A * moebius_phi_a(a, x); }

BallMoebius BallMoebius::inverse() const {
    // phi_a o A^t equals A^t o phi_{A a}
    return BallMoebius(A.transpose(), A * a);
}

double BallMoebius::conformal_scale(const Vec& x) const {
    return (1.0 - a.squaredNorm()) / bracket_squared(x, a);
}

Cone::Cone(Vec vertex_, double aperture_) : vertex(std::move(vertex_)), aperture(aperture_) {
    if (!(aperture > 1.0)) throw std::invalid_argument("Cone: aperture must exceed 1");
    if (std::abs(vertex.norm() - 1.0) > 1e-12)
        throw std::invalid_argument("Cone: vertex must lie on the unit sphere");
}

bool Cone::contains(const Vec& x) const {
    return (x - vertex).norm() < 0.5 * aperture * (1.0 - x.squaredNorm());
}

double cone_image_aperture(const BallMoebius& m, double delta) {
    if (!(delta > 1.0)) throw std::invalid_argument("cone_image_aperture: delta must exceed 1");
    const double u = m.a.norm();  // |phi(0)| = |a|
    return (1.0 + u) / (1.0 - u) * delta;
}

Mat jacobian_matrix_fd(const MapFn& phi, const Vec& x, double h) {
    if (!(h > 0.0)) throw std::invalid_argument("jacobian_matrix_fd: h must be positive");
    const int n = static_cast<int>(x.size());
    Mat J(n, n);
    Vec xp = x, xm = x;
    for (int j = 0; j < n; ++j) {
        xp[j] = x[j] + h;
        xm[j] = x[j] - h;
        J.col(j) = (phi(xp) - phi(xm)) / (2.0 * h);
        xp[j] = x[j];
        xm[j] = x[j];
    }
    return J;
}

double fd_conformal_scale(const MapFn& phi, const Vec& x, double h) {
    const Mat J = jacobian_matrix_fd(phi, x, h);
    const int n = static_cast<int>(x.size());
    return std::pow(std::abs(J.determinant()), 1.0 / n);
}

double cr_residual(const MapFn& phi, const Vec& x, double h) {
    const Mat J = jacobian_matrix_fd(phi, x, h);
    const int n = static_cast<int>(x.size());
    const double s2 = std::pow(std::abs(J.determinant()), 2.0 / n);
    const Mat r = J * J.transpose() - s2 * Mat::Identity(n, n);
    return r.cwiseAbs().maxCoeff();
}

Mat rotation_from_givens(int n, const std::vector<std::tuple<int, int, double>>& planes) {
    Mat A = Mat::Identity(n, n);
    for (const auto& [i, j, theta] : planes) {
        if (i < 0 || j < 0 || i >= n || j >= n || i == j)
            throw std::invalid_argument("rotation_from_givens: bad plane indices");
        Mat G = Mat::Identity(n, n);
        const double c = std::cos(theta), s = std::sin(theta);
        G(i, i) = c;
        G(j, j) = c;
        G(i, j) = -s;
        G(j, i) = s;
        A = G * A;
    }
    return A;
}

}  // namespace wco
