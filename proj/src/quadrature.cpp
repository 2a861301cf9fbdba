#include "wco/quadrature.hpp"

#include <cmath>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>

#include "wco/random.hpp"
#include "wco/specfun.hpp"

namespace wco {

void SphericalRule::validate() const {
    if (dim < 2) throw std::invalid_argument("SphericalRule: dimension must be >= 2");
    if (nodes.size() != weights.size() || nodes.empty())
        throw std::invalid_argument("SphericalRule: node/weight mismatch");
    double sum = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (std::abs(nodes[i].norm() - 1.0) > 1e-14)
            throw std::invalid_argument("SphericalRule: node off the unit sphere");
        if (!(weights[i] > 0.0)) throw std::invalid_argument("SphericalRule: weights must be positive");
        sum += weights[i];
    }
    if (std::abs(sum - 1.0) > 1e-12)
        throw std::invalid_argument("SphericalRule: weights do not sum to 1");
}

SphericalRule monte_carlo_rule(int n, std::size_t count, std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("monte_carlo_rule: dimension must be >= 2");
    if (count == 0) throw std::invalid_argument("monte_carlo_rule: count must be >= 1");
    SphericalRule rule;
    rule.dim = n;
    rule.kind = "monte_carlo(seed=" + std::to_string(seed) + ",count=" + std::to_string(count) + ")";
    rule.nodes.reserve(count);
    rule.weights.assign(count, 1.0 / static_cast<double>(count));
    Rng rng(seed);
    for (std::size_t i = 0; i < count; ++i) rule.nodes.push_back(rng.on_sphere(n));
    return rule;
}

void gauss_legendre(int m, std::vector<double>& nodes, std::vector<double>& weights) {
    nodes.assign(m, 0.0);
    weights.assign(m, 0.0);
    const int half = (m + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (m + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = 0.0;
            for (int k = 0; k < m; ++k) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * k + 1.0) * x * p1 - k * p2) / (k + 1.0);
            }
            pp = m * (x * p0 - p1) / (x * x - 1.0);
            const double dx = p0 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        nodes[i] = -x;
        nodes[m - 1 - i] = x;
        weights[i] = weights[m - 1 - i] = 2.0 / ((1.0 - x * x) * pp * pp);
    }
}

namespace {

struct Rule1D {
    std::vector<double> t;  // cosines of the polar angle
    std::vector<double> w;
};

// 1-D rule for int_{-1}^{1} f(t) (1-t^2)^{(k-1)/2} dt, k = sine power in the
// surface measure factor sin^k(theta).
Rule1D polar_rule(int order, int k) {
    Rule1D r;
    if (k % 2 == 1) {
        // polynomial weight: fold (1-t^2)^{(k-1)/2} into Gauss-Legendre weights
        gauss_legendre(order, r.t, r.w);
        for (int i = 0; i < order; ++i) r.w[i] *= std::pow(1.0 - r.t[i] * r.t[i], (k - 1) / 2);
    } else {
        // Chebyshev (2nd kind) handles the sqrt factor; the rest is polynomial
        r.t.resize(order);
        r.w.resize(order);
        for (int i = 1; i <= order; ++i) {
            const double th = i * std::numbers::pi / (order + 1.0);
            r.t[i - 1] = std::cos(th);
            double w = std::numbers::pi / (order + 1.0) * std::sin(th) * std::sin(th);
            w *= std::pow(1.0 - r.t[i - 1] * r.t[i - 1], (k - 2) / 2);
            r.w[i - 1] = w;
        }
    }
    return r;
}

}  // namespace

SphericalRule product_rule(int n, int order) {
    if (n < 2 || n > 5)
        throw std::invalid_argument("product_rule: supported dimensions are 2..5 (use monte_carlo_rule)");
    if (order < 2) throw std::invalid_argument("product_rule: order must be >= 2");

    SphericalRule rule;
    rule.dim = n;
    rule.kind = "product(order=" + std::to_string(order) + ")";

    const int m_az = 2 * order;
    std::vector<double> az(m_az);
    for (int l = 0; l < m_az; ++l) az[l] = 2.0 * std::numbers::pi * (l + 0.5) / m_az;

    if (n == 2) {
        rule.nodes.reserve(m_az);
        rule.weights.assign(m_az, 1.0 / m_az);
        for (int l = 0; l < m_az; ++l) {
            Vec v(2);
            v << std::cos(az[l]), std::sin(az[l]);
            rule.nodes.push_back(v);
        }
        return rule;
    }

    std::vector<Rule1D> polar;
    for (int i = 1; i <= n - 2; ++i) polar.push_back(polar_rule(order, n - 1 - i));

    // tensor the polar cosines with the azimuth circle
    std::vector<int> idx(n - 2, 0);
    double total = 0.0;
    for (;;) {
        double wpol = 1.0;
        for (int i = 0; i < n - 2; ++i) wpol *= polar[i].w[idx[i]];
        for (int l = 0; l < m_az; ++l) {
            Vec v(n);
            double sines = 1.0;
            for (int i = 0; i < n - 2; ++i) {
                const double t = polar[i].t[idx[i]];
                v[i] = sines * t;
                sines *= std::sqrt(std::max(0.0, 1.0 - t * t));
            }
            v[n - 2] = sines * std::cos(az[l]);
            v[n - 1] = sines * std::sin(az[l]);
            v /= v.norm();
            rule.nodes.push_back(v);
            rule.weights.push_back(wpol);
            total += wpol;
        }
        int i = n - 3;
        for (; i >= 0; --i) {
            if (++idx[i] < static_cast<int>(polar[i].t.size())) break;
            idx[i] = 0;
        }
        if (i < 0) break;
    }
    for (double& w : rule.weights) w /= total;
    return rule;
}

double riesz_integral_check(int n, double s, double xnorm, const SphericalRule& rule) {
    if (!(xnorm >= 0.0 && xnorm < 1.0))
        throw std::invalid_argument("riesz_integral_check: |x| must be < 1");
    Vec x = Vec::Zero(n);
    x[0] = xnorm;
    const double quad = integrate_real(
        [&](const Vec& zeta) { return std::pow((x - zeta).squaredNorm(), -s); }, rule);
    const double closed = hyp2f1({s, s - n / 2.0 + 1.0, n / 2.0, xnorm * xnorm});
    return std::abs(quad - closed);
}

void write_rule(std::ostream& os, const SphericalRule& rule) {
    char buf[32];
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        std::string line;
        for (int j = 0; j < rule.dim; ++j) {
            std::snprintf(buf, sizeof buf, "%.17g", rule.nodes[i][j]);
            line += buf;
            line += ' ';
        }
        std::snprintf(buf, sizeof buf, "%.17g", rule.weights[i]);
        line += buf;
        os << line << '\n';
    }
}

SphericalRule read_rule(std::istream& is) {
    SphericalRule rule;
    rule.kind = "file";
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        std::vector<double> vals;
        double v;
        while (ss >> v) vals.push_back(v);
        if (vals.size() < 3) throw std::runtime_error("read_rule: malformed line");
        if (rule.dim == 0)
            rule.dim = static_cast<int>(vals.size()) - 1;
        else if (static_cast<int>(vals.size()) != rule.dim + 1)
            throw std::runtime_error("read_rule: inconsistent column count");
        Vec node(rule.dim);
        for (int j = 0; j < rule.dim; ++j) node[j] = vals[j];
        rule.nodes.push_back(node);
        rule.weights.push_back(vals.back());
    }
    if (rule.nodes.empty()) throw std::runtime_error("read_rule: no nodes");
    return rule;
}

}  // namespace wco
