#include "wco/operators.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "wco/random.hpp"
#include "wco/specfun.hpp"

namespace wco {

WcoOperator WcoOperator::moebius(BallMoebius m, double C) {
    const int n = m.dim();
    return WcoOperator{std::move(m), Weight::jacobian_power(C), n};
}

WcoOperator WcoOperator::canonical(CanonicalMoebius m, double C) {
    const int n = m.dim();
    return WcoOperator{std::move(m), Weight::jacobian_power(C), n};
}

WcoOperator WcoOperator::custom(MapFn f, int dim, std::function<cplx(const Vec&)> weight) {
    return WcoOperator{std::move(f), Weight::custom(std::move(weight)), dim};
}

Vec WcoOperator::map(const Vec& x) const {
    return std::visit([&](const auto& m) { return m(x); }, phi);
}

Vec WcoOperator::phi_zero() const { return map(Vec::Zero(n)); }

double WcoOperator::conformal_scale(const Vec& x) const {
    if (const auto* bm = std::get_if<BallMoebius>(&phi)) return bm->conformal_scale(x);
    if (const auto* cm = std::get_if<CanonicalMoebius>(&phi)) return cm->conformal_scale(x);
    return fd_conformal_scale(std::get<MapFn>(phi), x);
}

cplx WcoOperator::weight(const Vec& x) const {
    if (const auto* jp = std::get_if<Weight::JacobianPower>(&psi.form))
        return jp->C * std::pow(conformal_scale(x), (n - 2) / 2.0);
    return std::get<Weight::Custom>(psi.form).fn(x);
}

bool WcoOperator::has_moebius_phi() const { return !std::holds_alternative<MapFn>(phi); }

bool WcoOperator::has_matched_weight() const {
    return std::holds_alternative<Weight::JacobianPower>(psi.form);
}

double WcoOperator::weight_constant() const {
    if (const auto* jp = std::get_if<Weight::JacobianPower>(&psi.form)) return jp->C;
    throw std::logic_error("WcoOperator: custom weight has no constant");
}

void WcoOperator::validate(std::uint64_t seed) const {
    Rng rng(seed);
    for (int i = 0; i < 1000; ++i) {
        const Vec x = rng.in_ball(n);
        if (map(x).norm() > 1.0 + 1e-12)
            throw std::runtime_error("WcoOperator: phi does not map the ball into the closed ball");
    }
    MapFn m = [this](const Vec& x) { return map(x); };
    int sign = 0;
    for (int i = 0; i < 100; ++i) {
        const Vec x = rng.in_ball(n, 0.95);
        const double det = jacobian_matrix_fd(m, x).determinant();
        if (std::abs(det) < 1e-12) continue;  // near-critical point, no sign information
        const int s = det > 0 ? 1 : -1;
        if (sign == 0) sign = s;
        if (s != sign) throw std::runtime_error("WcoOperator: Jacobian changes sign");
    }
}

cplx apply(const WcoOperator& W, const HarmonicFn& f, const Vec& x) {
    return W.weight(x) * f(W.map(x));
}

cplx laplacian_fd(const std::function<cplx(const Vec&)>& g, const Vec& x, double h) {
    const int n = static_cast<int>(x.size());
    const cplx center = g(x);
    cplx acc(0.0, 0.0);
    Vec xp = x, xm = x;
    for (int i = 0; i < n; ++i) {
        xp[i] = x[i] + h;
        xm[i] = x[i] - h;
        acc += g(xp) - 2.0 * center + g(xm);
        xp[i] = x[i];
        xm[i] = x[i];
    }
    return acc / (h * h);
}

double PdeResiduals::max() const { return std::max({psi_harmonic, coupling, conformal}); }

PdeResiduals pde_conditions_check(const WcoOperator& W, const Vec& x, double h1, double h2) {
    const int n = W.n;
    MapFn phi = [&](const Vec& v) { return W.map(v); };
    auto psi = [&](const Vec& v) { return W.weight(v); };

    PdeResiduals res;
    res.psi_harmonic = std::abs(laplacian_fd(psi, x, h2));

    // Laplacian of phi componentwise
    Vec lap_phi = Vec::Zero(n);
    {
        const Vec center = phi(x);
        Vec xp = x, xm = x;
        for (int i = 0; i < n; ++i) {
            xp[i] = x[i] + h2;
            xm[i] = x[i] - h2;
            lap_phi += (phi(xp) - 2.0 * center + phi(xm)) / (h2 * h2);
            xp[i] = x[i];
            xm[i] = x[i];
        }
    }

    const Mat J = jacobian_matrix_fd(phi, x, h1);

    // gradient of psi (complex-valued)
    Eigen::VectorXcd grad_psi(n);
    {
        Vec xp = x, xm = x;
        for (int i = 0; i < n; ++i) {
            xp[i] = x[i] + h1;
            xm[i] = x[i] - h1;
            grad_psi[i] = (psi(xp) - psi(xm)) / (2.0 * h1);
            xp[i] = x[i];
            xm[i] = x[i];
        }
    }

    const cplx psi_x = psi(x);
    const Eigen::VectorXcd coupling = psi_x * lap_phi.cast<cplx>() + 2.0 * (J.cast<cplx>() * grad_psi);
    res.coupling = coupling.cwiseAbs().maxCoeff();

    const double s2 = std::pow(std::abs(J.determinant()), 2.0 / n);
    res.conformal = (J * J.transpose() - s2 * Mat::Identity(n, n)).cwiseAbs().maxCoeff();
    return res;
}

double harmonicity_preservation_check(const WcoOperator& W, const HarmonicFn& f,
                                      std::span<const Vec> points, double h) {
    auto g = [&](const Vec& x) { return apply(W, f, x); };
    double worst = 0.0;
    for (const Vec& x : points) {
        // local magnitude of the stencil, so the residual is scale-free
        double scale = std::abs(g(x));
        Vec xp = x, xm = x;
        for (int i = 0; i < W.n; ++i) {
            xp[i] = x[i] + h;
            xm[i] = x[i] - h;
            scale = std::max({scale, std::abs(g(xp)), std::abs(g(xm))});
            xp[i] = x[i];
            xm[i] = x[i];
        }
        const double lap = std::abs(laplacian_fd(g, x, h));
        worst = std::max(worst, lap / std::max(1.0, scale));
    }
    return worst;
}

SphereReflectionDerivs sphere_reflection_derivatives(const Vec& a, double r, const Vec& x) {
    const int n = static_cast<int>(x.size());
    const Vec d = x - a;
    const double d2 = d.squaredNorm();
    if (d2 == 0.0) throw std::domain_error("sphere_reflection_derivatives: pole at x = a");
    SphereReflectionDerivs out;
    out.laplacian_phi = 2.0 * (2.0 - n) * r * r / (d2 * d2) * d;
    out.grad_psi = (2.0 - n) * std::pow(r, n - 2) / std::pow(d2, n / 2.0) * d;
    const Mat Q = d * d.transpose() / d2;
    out.dphi = r * r / d2 * (Mat::Identity(n, n) - 2.0 * Q);
    return out;
}

std::pair<double, double> poisson_sup_inequality_check(const WcoOperator& W,
                                                       const SphericalRule& rule, double r,
                                                       const Vec& eta) {
    if (!(r >= 0.0 && r < 1.0))
        throw std::invalid_argument("poisson_sup_inequality_check: r must be in [0, 1)");
    const int n = W.n;
    const double lhs = integrate_real(
        [&](const Vec& zeta) {
            const Vec xr = r * zeta;
            return poisson_kernel(W.map(xr), eta) *
                   std::pow(W.conformal_scale(xr), (n - 2) / 2.0);
        },
        rule);
    const double u = W.phi_zero().norm();
    const double rhs = (1.0 + u) / std::pow(1.0 - u, n - 1) *
                       std::pow(W.conformal_scale(Vec::Zero(n)), (n - 2) / 2.0);
    return {lhs, rhs};
}

double norm_formula(const BallMoebius& m, double p, int n) {
    if (!(p >= 1.0)) throw std::domain_error("norm_formula: p must be in [1, inf]");
    const double u = m.a.norm();
    const double inv_p = p == p_infinity ? 0.0 : 1.0 / p;
    const double expo = std::abs((n - 1.0) * inv_p - (n - 2.0) / 2.0);
    return std::pow((1.0 + u) / (1.0 - u), expo);
}

std::pair<double, double> upper_bound_h1(const WcoOperator& W, const DiscreteMeasure& mu,
                                         const SphericalRule& rule, std::span<const double> radii) {
    mu.validate();
    const HarmonicFn f = HarmonicFn::poisson_of_measure(mu);
    const double est =
        hp_norm_estimate([&](const Vec& x) { return apply(W, f, x); }, 1.0, radii, rule);
    const double ratio = est / mu.total_variation();
    const int n = W.n;
    const double u = W.phi_zero().norm();
    const double bound =
        (1.0 + u) / std::pow(1.0 - u, n - 1) * std::abs(W.weight(Vec::Zero(n)));
    return {ratio, bound};
}

std::pair<double, double> upper_bound_hp(const WcoOperator& W, const HarmonicFn& f, double p,
                                         const SphericalRule& rule, std::span<const double> radii) {
    if (!(p > 1.0 && p < p_infinity))
        throw std::domain_error("upper_bound_hp: requires 1 < p < inf");
    const double nf = hp_norm_estimate(f, p, radii, rule);
    const double nwf =
        hp_norm_estimate([&](const Vec& x) { return apply(W, f, x); }, p, radii, rule);
    const double ratio = nwf / nf;

    const int n = W.n;
    const double u = W.phi_zero().norm();
    double psi_sup;
    if (W.has_moebius_phi() && W.has_matched_weight()) {
        psi_sup = std::abs(W.weight_constant()) *
                  std::pow((1.0 + u) / (1.0 - u), (n - 2) / 2.0);
    } else {
        psi_sup = 0.0;
        for (const Vec& zeta : rule.nodes)
            psi_sup = std::max(psi_sup, std::abs(W.weight(0.999 * zeta)));
    }
    const double bound =
        std::pow((1.0 + u) / std::pow(1.0 - u, n - 1) * std::abs(W.weight(Vec::Zero(n))), 1.0 / p) *
        std::pow(psi_sup, 1.0 - 1.0 / p);
    return {ratio, bound};
}

HarmonicFn adjoint_on_kernel(const WcoOperator& W, const Vec& y) {
    if (!(y.norm() < 1.0)) throw std::domain_error("adjoint_on_kernel: |y| must be < 1");
    HarmonicFn out = HarmonicFn::extended_poisson_fn(W.map(y));
    out.scale = W.weight(y);
    return out;
}

cplx adjoint_integral(const WcoOperator& W, const BoundaryFn& fstar, const Vec& y,
                      const SphericalRule& rule) {
    if (!(y.norm() < 1.0)) throw std::domain_error("adjoint_integral: |y| must be < 1");
    const auto* bm = std::get_if<BallMoebius>(&W.phi);
    if (!bm) throw std::invalid_argument("adjoint_integral: needs a ball Moebius symbol");
    const int n = W.n;
    const double C = W.weight_constant();
    const Vec a0 = bm->a;  // phi^{-1}(0)
    const double one_minus_a2 = 1.0 - a0.squaredNorm();
    const double y2 = 1.0 - y.squaredNorm();
    return integrate(
        [&](const Vec& zeta) {
            const double jac = one_minus_a2 / (a0 - zeta).squaredNorm();
            const double pk = y2 / std::pow((y - (*bm)(zeta)).norm(), n);
            return fstar(zeta) * C * std::pow(jac, (n - 2) / 2.0) * pk;
        },
        rule);
}

double ratio_curve(const BallMoebius& m, double p, const Vec& y) {
    if (!(p >= 1.0 && p < p_infinity))
        throw std::domain_error("ratio_curve: requires 1 <= p < inf");
    if (!(y.norm() < 1.0)) throw std::domain_error("ratio_curve: |y| must be < 1");
    const int n = m.dim();
    const double pp = conjugate_exponent(p);
    const double num = phi_p({pp, n, m(y).squaredNorm()});
    const double den = phi_p({pp, n, y.squaredNorm()});
    const double expo = (n - 2.0) / 2.0 - (n - 1.0) / p;
    return num / den * std::pow(m.conformal_scale(y), expo);
}

double essential_norm_formula(const BallMoebius& m, double p, int n) {
    if (!(p > 1.0 && p < p_infinity))
        throw std::domain_error(
            "essential_norm_formula: known only for 1 < p < inf (p = 1, inf are open)");
    return norm_formula(m, p, n);
}

std::vector<double> weak_null_probe(double p, int n, std::span<const double> radii,
                                    double compact_radius) {
    if (!(compact_radius > 0.0 && compact_radius < 1.0))
        throw std::invalid_argument("weak_null_probe: compact radius must lie in (0, 1)");
    std::vector<double> sups;
    sups.reserve(radii.size());
    const int grid = 65;
    for (double u : radii) {
        Vec y = Vec::Zero(n);
        y[0] = u;
        const double norm = hp_norm_py_closed(y, p, n);
        double sup = 0.0;
        for (int k = 0; k < grid; ++k) {
            // the sup over the closed ball sits on the segment through y
            const double t = -compact_radius + 2.0 * compact_radius * k / (grid - 1);
            Vec x = Vec::Zero(n);
            x[0] = t;
            sup = std::max(sup, std::abs(extended_poisson(y, x)) / norm);
        }
        sups.push_back(sup);
    }
    return sups;
}

// --- operator records -------------------------------------------------------

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_vec(std::ostream& os, const char* key, const Vec& v) {
    os << key;
    for (int i = 0; i < v.size(); ++i) os << ' ' << fmt(v[i]);
    os << '\n';
}

void write_mat(std::ostream& os, const char* key, const Mat& A) {
    for (int i = 0; i < A.rows(); ++i) {
        os << key;
        for (int j = 0; j < A.cols(); ++j) os << ' ' << fmt(A(i, j));
        os << '\n';
    }
}

}  // namespace

std::string to_record(const WcoOperator& W) {
    if (!W.has_matched_weight())
        throw std::invalid_argument("to_record: custom weights are not serializable");
    std::ostringstream os;
    os << "dim " << W.n << '\n';
    if (const auto* bm = std::get_if<BallMoebius>(&W.phi)) {
        os << "phi ball\n";
        write_vec(os, "a", bm->a);
        write_mat(os, "A", bm->A);
    } else if (const auto* cm = std::get_if<CanonicalMoebius>(&W.phi)) {
        os << "phi canonical\n";
        os << "epsilon " << cm->epsilon << '\n';
        os << "alpha " << fmt(cm->alpha) << '\n';
        write_vec(os, "a", cm->a);
        write_vec(os, "b", cm->b);
        write_mat(os, "A", cm->A);
    } else {
        throw std::invalid_argument("to_record: custom maps are not serializable");
    }
    os << "psi jacobian_power\n";
    os << "C " << fmt(W.weight_constant()) << '\n';
    return os.str();
}

WcoOperator operator_from_record(const std::string& text) {
    std::istringstream is(text);
    std::string line, key;
    int dim = 0, epsilon = -1;
    double alpha = 0.0, C = 1.0;
    std::string phi_kind, psi_kind;
    Vec a, b;
    std::vector<std::vector<double>> arows;

    auto read_tail = [](std::istringstream& ss) {
        std::vector<double> vals;
        double v;
        while (ss >> v) vals.push_back(v);
        return vals;
    };

    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        ss >> key;
        if (key == "dim") {
            ss >> dim;
        } else if (key == "phi") {
            ss >> phi_kind;
        } else if (key == "psi") {
            ss >> psi_kind;
        } else if (key == "epsilon") {
            ss >> epsilon;
        } else if (key == "alpha") {
            ss >> alpha;
        } else if (key == "C") {
            ss >> C;
        } else if (key == "a") {
            const auto vals = read_tail(ss);
            a = Eigen::Map<const Vec>(vals.data(), vals.size());
        } else if (key == "b") {
            const auto vals = read_tail(ss);
            b = Eigen::Map<const Vec>(vals.data(), vals.size());
        } else if (key == "A") {
            arows.push_back(read_tail(ss));
        } else {
            throw std::invalid_argument("operator_from_record: unknown key '" + key + "'");
        }
    }
    if (dim < 2) throw std::invalid_argument("operator_from_record: missing or bad dim");
    if (psi_kind != "jacobian_power")
        throw std::invalid_argument("operator_from_record: psi must be jacobian_power");

    Mat A;
    if (arows.empty()) {
        A = Mat::Identity(dim, dim);
    } else {
        if (static_cast<int>(arows.size()) != dim)
            throw std::invalid_argument("operator_from_record: matrix row count mismatch");
        A.resize(dim, dim);
        for (int i = 0; i < dim; ++i) {
            if (static_cast<int>(arows[i].size()) != dim)
                throw std::invalid_argument("operator_from_record: matrix column count mismatch");
            for (int j = 0; j < dim; ++j) A(i, j) = arows[i][j];
        }
    }

    if (phi_kind == "ball") {
        return WcoOperator::moebius(BallMoebius(A, a), C);
    }
    if (phi_kind == "canonical") {
        if (epsilon < 0) throw std::invalid_argument("operator_from_record: missing epsilon");
        return WcoOperator::canonical(CanonicalMoebius(b, alpha, A, a, epsilon), C);
    }
    throw std::invalid_argument("operator_from_record: phi must be 'ball' or 'canonical'");
}

}  // namespace wco
