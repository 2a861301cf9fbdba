#pragma once

#include <Eigen/Dense>
#include <complex>
#include <limits>

namespace wco {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;
using cplx = std::complex<double>;

inline constexpr double p_infinity = std::numeric_limits<double>::infinity();

// Conjugate Hoelder exponent: 1 <-> inf, otherwise p/(p-1).
inline double conjugate_exponent(double p) {
    if (p == 1.0) return p_infinity;
    if (p == p_infinity) return 1.0;
    return p / (p - 1.0);
}

inline Vec unit_vector(int n, int axis = 0) {
    Vec e = Vec::Zero(n);
    e[axis] = 1.0;
    return e;
}

}  // namespace wco
