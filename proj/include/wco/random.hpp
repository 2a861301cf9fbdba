#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "wco/types.hpp"

namespace wco {

// Seeded random source for sampling points and rotations.
//
// Built on std::mt19937_64 (a fully specified generator) with the
// uniform/gaussian mappings written out by hand, so that a given seed
// produces the same stream on every platform. std::uniform_real_distribution
// and friends are implementation-defined and would break bit-reproducibility.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    // uniform in (0,1), never exactly 0 or 1
    double u01() { return (static_cast<double>(gen_() >> 11) + 0.5) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * u01(); }

    // standard normal via Box-Muller
    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = u01();
        const double u2 = u01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double t = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(t);
        have_spare_ = true;
        return r * std::cos(t);
    }

    Vec gaussian_vec(int n) {
        Vec v(n);
        for (int i = 0; i < n; ++i) v[i] = gaussian();
        return v;
    }

    // uniform on the unit sphere S^{n-1}
    Vec on_sphere(int n) {
        for (;;) {
            Vec v = gaussian_vec(n);
            const double norm = v.norm();
            if (norm > 1e-12) return v / norm;
        }
    }

    // uniform in the ball of the given radius
    Vec in_ball(int n, double radius = 1.0) {
        const double r = radius * std::pow(u01(), 1.0 / n);
        return r * on_sphere(n);
    }

    // Haar-ish random orthogonal matrix (QR of a gaussian matrix with the
    // sign convention fixed by the diagonal of R)
    Mat rotation(int n) {
        Mat g(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) g(i, j) = gaussian();
        Eigen::HouseholderQR<Mat> qr(g);
        Mat q = qr.householderQ();
        Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
        for (int j = 0; j < n; ++j)
            if (r(j, j) < 0) q.col(j) = -q.col(j);
        return q;
    }

  private:
    std::mt19937_64 gen_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace wco
