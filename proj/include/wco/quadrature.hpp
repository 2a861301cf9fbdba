#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "wco/types.hpp"

namespace wco {

// Quadrature rule on the unit sphere S^{n-1} against the normalized surface
// measure (total mass 1). Nodes are unit vectors, weights sum to 1.
struct SphericalRule {
    int dim = 0;
    std::vector<Vec> nodes;
    std::vector<double> weights;
    std::string kind;

    std::size_t size() const { return nodes.size(); }
    void validate() const;  // sum w = 1 within 1e-12, |node| = 1 within 1e-14
};

// i.i.d. uniform nodes (normalized isotropic gaussians), weights 1/count.
// Reproducible: the node set is a pure function of (n, count, seed).
SphericalRule monte_carlo_rule(int n, std::size_t count, std::uint64_t seed);

// Deterministic tensor-product rule for n in {2,3,4,5}: Gauss nodes in the
// polar cosines (Legendre or Chebyshev-U depending on the sine-power of the
// surface measure factor) times a uniform azimuth grid of 2*order points.
// Exact for spherical polynomials of total degree up to order.
SphericalRule product_rule(int n, int order);

// sum_i w_i f(zeta_i); throws if f is not finite at some node.
template <class F>
cplx integrate(F&& f, const SphericalRule& rule) {
    cplx acc(0.0, 0.0);
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const cplx v = f(rule.nodes[i]);
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw std::runtime_error("integrate: integrand not finite at node " + std::to_string(i));
        acc += rule.weights[i] * v;
    }
    return acc;
}

template <class F>
double integrate_real(F&& f, const SphericalRule& rule) {
    double acc = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double v = f(rule.nodes[i]);
        if (!std::isfinite(v))
            throw std::runtime_error("integrate: integrand not finite at node " + std::to_string(i));
        acc += rule.weights[i] * v;
    }
    return acc;
}

// | quadrature of |x zeta1 - zeta|^{-2s} - 2F1(s, s-n/2+1; n/2; |x|^2) |,
// the bridge between sphere quadrature and the hypergeometric closed form.
double riesz_integral_check(int n, double s, double xnorm, const SphericalRule& rule);

// columnar text format: node components then weight, one node per line
void write_rule(std::ostream& os, const SphericalRule& rule);
SphericalRule read_rule(std::istream& is);

// Gauss-Legendre nodes/weights on [-1,1] (Newton on the Legendre recurrence).
void gauss_legendre(int m, std::vector<double>& nodes, std::vector<double>& weights);

}  // namespace wco
