#include "wco/hardy.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>

#include "wco/specfun.hpp"

namespace wco {

double DiscreteMeasure::total_variation() const {
    double tv = 0.0;
    for (const auto& [zeta, w] : atoms) tv += std::abs(w);
    return tv;
}

void DiscreteMeasure::validate() const {
    if (atoms.empty()) throw std::invalid_argument("DiscreteMeasure: no atoms");
    for (const auto& [zeta, w] : atoms)
        if (std::abs(zeta.norm() - 1.0) > 1e-12)
            throw std::invalid_argument("DiscreteMeasure: atom off the unit sphere");
    if (!(total_variation() > 0.0))
        throw std::invalid_argument("DiscreteMeasure: zero total variation");
}

double poisson_kernel(const Vec& x, const Vec& zeta) {
    if (!(x.norm() < 1.0)) throw std::domain_error("poisson_kernel: |x| must be < 1");
    const int n = static_cast<int>(x.size());
    return (1.0 - x.squaredNorm()) / std::pow((x - zeta).norm(), n);
}

double extended_poisson(const Vec& y, const Vec& x) {
    if (!(y.norm() < 1.0)) throw std::domain_error("extended_poisson: |y| must be < 1");
    const int n = static_cast<int>(x.size());
    const double xy = x.dot(y);
    const double q = x.squaredNorm() * y.squaredNorm();
    return (1.0 - q) / std::pow(1.0 - 2.0 * xy + q, n / 2.0);
}

cplx poisson_integral(const BoundaryFn& f, const Vec& x, const SphericalRule& rule) {
    return integrate([&](const Vec& zeta) { return poisson_kernel(x, zeta) * f(zeta); }, rule);
}

cplx poisson_integral(const DiscreteMeasure& mu, const Vec& x) {
    cplx acc(0.0, 0.0);
    for (const auto& [zeta, w] : mu.atoms) acc += poisson_kernel(x, zeta) * w;
    return acc;
}

cplx HarmonicFn::operator()(const Vec& x) const {
    return scale * std::visit(
                       [&](const auto& fn) -> cplx {
                           using T = std::decay_t<decltype(fn)>;
                           if constexpr (std::is_same_v<T, ExtendedPoissonBody>) {
                               return extended_poisson(fn.y, x);
                           } else if constexpr (std::is_same_v<T, PoissonOfBoundaryBody>) {
                               return poisson_integral(fn.data, x, fn.rule);
                           } else if constexpr (std::is_same_v<T, PoissonOfMeasureBody>) {
                               return poisson_integral(fn.mu, x);
                           } else {
                               switch (fn.kind) {
                                   case PolynomialBody::Kind::constant: return 1.0;
                                   case PolynomialBody::Kind::coordinate: return x[fn.i];
                                   case PolynomialBody::Kind::product: return x[fn.i] * x[fn.j];
                                   case PolynomialBody::Kind::square_diff:
                                       return x[fn.i] * x[fn.i] - x[fn.j] * x[fn.j];
                               }
                               return 0.0;
                           }
                       },
                       body);
}

HarmonicFn HarmonicFn::extended_poisson_fn(Vec y) {
    if (!(y.norm() < 1.0)) throw std::invalid_argument("HarmonicFn: |y| must be < 1");
    return HarmonicFn{ExtendedPoissonBody{std::move(y)}};
}

HarmonicFn HarmonicFn::poisson_of_boundary(BoundaryFn f, SphericalRule rule) {
    return HarmonicFn{PoissonOfBoundaryBody{std::move(f), std::move(rule)}};
}

HarmonicFn HarmonicFn::poisson_of_measure(DiscreteMeasure mu) {
    mu.validate();
    return HarmonicFn{PoissonOfMeasureBody{std::move(mu)}};
}

HarmonicFn HarmonicFn::constant() { return HarmonicFn{PolynomialBody{}}; }

HarmonicFn HarmonicFn::coordinate(int i) {
    return HarmonicFn{PolynomialBody{PolynomialBody::Kind::coordinate, i, 0}};
}

HarmonicFn HarmonicFn::product(int i, int j) {
    if (i == j) throw std::invalid_argument("HarmonicFn::product: needs i != j");
    return HarmonicFn{PolynomialBody{PolynomialBody::Kind::product, i, j}};
}

HarmonicFn HarmonicFn::square_diff(int i, int j) {
    if (i == j) throw std::invalid_argument("HarmonicFn::square_diff: needs i != j");
    return HarmonicFn{PolynomialBody{PolynomialBody::Kind::square_diff, i, j}};
}

std::vector<double> default_radius_grid() {
    std::vector<double> radii;
    for (int k = 0; k <= 10; ++k) radii.push_back(std::min(1.0 - std::pow(2.0, -k), 0.999));
    return radii;
}

double hp_norm_estimate(const std::function<cplx(const Vec&)>& f, double p,
                        std::span<const double> radii, const SphericalRule& rule) {
    if (!(p >= 1.0)) throw std::invalid_argument("hp_norm_estimate: p must be in [1, inf]");
    if (radii.empty()) throw std::invalid_argument("hp_norm_estimate: empty radius grid");
    for (double r : radii)
        if (!(r >= 0.0 && r < 1.0))
            throw std::invalid_argument("hp_norm_estimate: radii must lie in [0, 1)");

    if (p == p_infinity) {
        const double rmax = *std::max_element(radii.begin(), radii.end());
        double sup = 0.0;
        for (const Vec& zeta : rule.nodes) sup = std::max(sup, std::abs(f(rmax * zeta)));
        return sup;
    }

    double best = 0.0;
    for (double r : radii) {
        const double mean =
            integrate_real([&](const Vec& zeta) { return std::pow(std::abs(f(r * zeta)), p); }, rule);
        best = std::max(best, std::pow(mean, 1.0 / p));
    }
    return best;
}

double hp_norm_estimate(const HarmonicFn& f, double p, std::span<const double> radii,
                        const SphericalRule& rule) {
    return hp_norm_estimate([&](const Vec& x) { return f(x); }, p, radii, rule);
}

double hp_norm_py_closed(const Vec& y, double p, int n) {
    if (!(y.norm() < 1.0)) throw std::domain_error("hp_norm_py_closed: |y| must be < 1");
    const double r = y.squaredNorm();
    const double phi = phi_p({p, n, r});
    const double pp = conjugate_exponent(p);
    const double expo = pp == p_infinity ? 0.0 : (1.0 - n) / pp;
    return phi * std::pow(1.0 - r, expo);
}

double change_of_variables_check(const BallMoebius& m, const BoundaryFn& f,
                                 const SphericalRule& rule) {
    const BallMoebius inv = m.inverse();
    const cplx lhs = integrate([&](const Vec& zeta) { return f(m(zeta)); }, rule);
    const int n = m.dim();
    const cplx rhs = integrate(
        [&](const Vec& zeta) { return f(zeta) * std::pow(inv.conformal_scale(zeta), n - 1.0); },
        rule);
    return std::abs(lhs - rhs);
}

HarmonicFn normalized_kernel(const Vec& y, double p, int n) {
    HarmonicFn k = HarmonicFn::extended_poisson_fn(y);
    k.scale = 1.0 / hp_norm_py_closed(y, p, n);
    return k;
}

// --- boundary expression parser -------------------------------------------

namespace {

struct ExprParser {
    std::string_view s;
    std::size_t pos = 0;
    int dim;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("boundary expression: " + what + " at offset " +
                                    std::to_string(pos));
    }

    double number() {
        skip_ws();
        std::size_t used = 0;
        double v;
        try {
            v = std::stod(std::string(s.substr(pos)), &used);
        } catch (const std::exception&) {
            fail("expected a number");
        }
        pos += used;
        return v;
    }

    // atom := z<i> | P(y1,...,yn) | number
    BoundaryFn atom() {
        skip_ws();
        if (pos >= s.size()) fail("unexpected end");
        const char c = s[pos];
        if (c == 'z' || c == 'Z') {
            ++pos;
            const int i = static_cast<int>(number());
            if (i < 1 || i > dim) fail("coordinate index out of range");
            return [i](const Vec& zeta) -> cplx { return zeta[i - 1]; };
        }
        if (c == 'P' || c == 'p') {
            ++pos;
            if (!eat('(')) fail("expected '(' after P");
            Vec y(dim);
            for (int k = 0; k < dim; ++k) {
                y[k] = number();
                if (k + 1 < dim && !eat(',')) fail("expected ','");
            }
            if (!eat(')')) fail("expected ')'");
            if (!(y.norm() < 1.0)) fail("kernel point must satisfy |y| < 1");
            return [y](const Vec& zeta) -> cplx { return poisson_kernel(y, zeta); };
        }
        const double v = number();
        return [v](const Vec&) -> cplx { return v; };
    }

    // term := atom ('*' atom)*
    BoundaryFn term() {
        BoundaryFn f = atom();
        while (eat('*')) {
            BoundaryFn g = atom();
            f = [f, g](const Vec& zeta) { return f(zeta) * g(zeta); };
        }
        return f;
    }

    BoundaryFn expr() {
        skip_ws();
        double sign = 1.0;
        if (eat('-')) sign = -1.0;
        BoundaryFn f = term();
        if (sign < 0) {
            BoundaryFn g = f;
            f = [g](const Vec& zeta) { return -g(zeta); };
        }
        for (;;) {
            skip_ws();
            if (eat('+')) {
                BoundaryFn g = term(), h = f;
                f = [h, g](const Vec& zeta) { return h(zeta) + g(zeta); };
            } else if (eat('-')) {
                BoundaryFn g = term(), h = f;
                f = [h, g](const Vec& zeta) { return h(zeta) - g(zeta); };
            } else {
                break;
            }
        }
        skip_ws();
        if (pos != s.size()) fail("trailing input");
        return f;
    }
};

}  // namespace

BoundaryFn parse_boundary_expr(const std::string& text, int dim) {
    if (dim < 2) throw std::invalid_argument("parse_boundary_expr: dimension must be >= 2");
    ExprParser p{text, 0, dim};
    return p.expr();
}

}  // namespace wco
