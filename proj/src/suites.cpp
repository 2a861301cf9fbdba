#include "wco/suites.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <future>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "wco/operators.hpp"
#include "wco/random.hpp"
#include "wco/specfun.hpp"

namespace wco {

namespace {

SphericalRule make_rule(const RunConfig& cfg) {
    if (cfg.quad == "product") {
        if (cfg.dim <= 5) return product_rule(cfg.dim, cfg.order);
        return monte_carlo_rule(cfg.dim, cfg.samples, cfg.seed);
    }
    if (cfg.quad == "mc") return monte_carlo_rule(cfg.dim, cfg.samples, cfg.seed);
    throw std::invalid_argument("quadrature kind must be 'product' or 'mc'");
}

BallMoebius make_moebius(const RunConfig& cfg) {
    return BallMoebius(rotation_from_givens(cfg.dim, cfg.rotations), cfg.center());
}

void add(Report& rep, std::string suite, std::string name, double residual, double tol) {
    rep.checks.push_back({std::move(suite), std::move(name), residual, tol, residual <= tol});
}

// for negative witnesses: the check passes when the residual EXCEEDS the bound
void add_exceeds(Report& rep, std::string suite, std::string name, double residual, double bound) {
    rep.checks.push_back({std::move(suite), std::move(name), residual, bound, residual > bound});
}

}  // namespace

Vec RunConfig::center() const {
    Vec c = a;
    if (c.size() == 0) {
        c = Vec::Zero(dim);
        c[0] = 0.5;
    }
    if (c.size() != dim) throw std::invalid_argument("config: center has wrong dimension");
    if (!(c.norm() < 1.0)) throw std::invalid_argument("config: center must satisfy |a| < 1");
    return c;
}

bool Report::all_pass() const {
    for (const auto& row : checks)
        if (!row.pass) return false;
    for (const auto& row : table)
        if (!row.pass) return false;
    return true;
}

// ---- identities ------------------------------------------------------------

Report run_identities(const RunConfig& cfg) {
    Report rep{cfg, {}, {}};
    const std::string S = "identities";
    const double ts = cfg.tol_scale;
    const int n = cfg.dim;
    const BallMoebius m = make_moebius(cfg);
    MapFn map = [&](const Vec& x) { return m(x); };
    Rng rng(cfg.seed);

    {
        double worst = 0.0;
        for (int i = 0; i < 200; ++i) {
            const Vec x = rng.in_ball(n, 0.9);
            worst = std::max(worst, std::abs(m.conformal_scale(x) - fd_conformal_scale(map, x)));
        }
        add(rep, S, "conformal-scale-closed-vs-fd", worst, 1e-6 * ts);
    }
    {
        double worst = 0.0;
        for (int i = 0; i < 1000; ++i) {
            const Vec x = rng.in_ball(n, 0.99);
            const double lhs = 1.0 - m(x).squaredNorm();
            const double rhs = m.conformal_scale(x) * (1.0 - x.squaredNorm());
            worst = std::max(worst, std::abs(lhs - rhs));
        }
        add(rep, S, "scale-product-identity", worst, 1e-10 * ts);
    }
    {
        double worst = 0.0;
        for (int i = 0; i < 1000; ++i) {
            const Vec x = rng.in_ball(n, 0.99), y = rng.in_ball(n, 0.99);
            const double lhs = (m(x) - m(y)).norm();
            const double rhs =
                std::sqrt(m.conformal_scale(x) * m.conformal_scale(y)) * (x - y).norm();
            worst = std::max(worst, std::abs(lhs - rhs));
        }
        add(rep, S, "two-point-distance-identity", worst, 1e-10 * ts);
    }
    {
        const double u = m.a.norm();
        const double lo = (1.0 - u) / (1.0 + u), hi = (1.0 + u) / (1.0 - u);
        double excess = 0.0, ratio_excess = 0.0;
        std::vector<double> scales;
        for (int i = 0; i < 1000; ++i) {
            const Vec x = rng.in_ball(n, 0.999);
            const double s = m.conformal_scale(x);
            excess = std::max({excess, lo - s, s - hi});
            scales.push_back(s);
        }
        for (int i = 0; i + 1 < 1000; i += 2)
            ratio_excess = std::max(ratio_excess, scales[i] / scales[i + 1] - hi * hi);
        add(rep, S, "scale-bounds", std::max(0.0, excess), 1e-12);
        add(rep, S, "scale-ratio-bound", std::max(0.0, ratio_excess), 1e-12);
    }
    {
        double worst = 0.0;
        for (int i = 0; i < 1000; ++i) {
            const Vec x = rng.in_ball(n, 0.99);
            worst = std::max(worst, (moebius_phi_a(m.a, moebius_phi_a(m.a, x)) - x).norm());
        }
        add(rep, S, "involution", worst, 1e-12 * ts);
    }
    {
        const BallMoebius inv = m.inverse();
        double worst = 0.0;
        for (int i = 0; i < 1000; ++i) {
            const Vec x = rng.in_ball(n, 0.99);
            worst = std::max(worst, (inv(m(x)) - x).norm());
        }
        add(rep, S, "inverse-roundtrip", worst, 1e-12 * ts);
    }
    {
        double worst = 0.0;
        for (int i = 0; i < 100; ++i) {
            const Vec x = rng.in_ball(n, 0.9);
            worst = std::max(worst, cr_residual(map, x));
        }
        add(rep, S, "conformality-fd", worst, 1e-6 * ts);
    }
    {
        // reflections are involutions
        const Vec c = 3.0 * rng.on_sphere(n);
        const Vec normal = rng.on_sphere(n);
        double worst = 0.0;
        for (int i = 0; i < 200; ++i) {
            const Vec x = rng.in_ball(n, 2.0);
            worst = std::max(worst, (reflect_sphere(c, 1.5, reflect_sphere(c, 1.5, x)) - x).norm());
            worst = std::max(
                worst, (reflect_hyperplane(normal, 0.25, reflect_hyperplane(normal, 0.25, x)) - x).norm());
        }
        add(rep, S, "reflection-involution", worst, 1e-12 * ts);
    }
    {
        const std::string expr = cfg.boundary.empty() ? "1 + 0.5*z1" : cfg.boundary;
        const BoundaryFn f = parse_boundary_expr(expr, n);
        const SphericalRule rule = make_rule(cfg);
        // Monte Carlo rules only resolve the integrals to O(count^{-1/2})
        const bool mc = rule.kind.rfind("monte_carlo", 0) == 0;
        const double tol = mc ? 10.0 / std::sqrt(static_cast<double>(rule.size())) : 1e-6;
        add(rep, S, "change-of-variables", change_of_variables_check(m, f, rule), tol * ts);
    }
    return rep;
}

// ---- norm tables -----------------------------------------------------------

Report run_norm_table(const RunConfig& cfg) {
    Report rep{cfg, {}, {}};
    const std::string S = "norms";
    const double ts = cfg.tol_scale;
    const int n = cfg.dim;
    const SphericalRule rule = make_rule(cfg);
    const auto radii = default_radius_grid();

    std::vector<double> ps = {1.0, cfg.p};
    ps.erase(std::unique(ps.begin(), ps.end()), ps.end());

    for (double p : ps) {
        for (double u : {0.0, 0.2, 0.4, 0.6, 0.8}) {
            Vec y = Vec::Zero(n);
            y[0] = u;
            const double closed = hp_norm_py_closed(y, p, n);
            const double est =
                hp_norm_estimate(HarmonicFn::extended_poisson_fn(y), p, radii, rule);
            const double rel = std::abs(est - closed) / closed;
            rep.table.push_back({"kernel_norm", n, p, u, closed, est, rel, rel <= 0.01 * ts});
        }
    }

    for (double u : {0.3, 0.5, 0.8}) {
        Vec a = Vec::Zero(n);
        a[0] = u;
        const BallMoebius m = BallMoebius::from_center(a);
        const double closed = norm_formula(m, cfg.p, n);
        double lower = 0.0;
        for (double sgn : {1.0, -1.0}) {
            Vec y = Vec::Zero(n);
            y[0] = sgn * 0.9999;
            lower = std::max(lower, ratio_curve(m, cfg.p, y));
        }
        const double rel = std::abs(lower - closed) / closed;
        rep.table.push_back(
            {"operator_norm", n, cfg.p, u, closed, lower, rel, lower >= (1.0 - 0.01 * ts) * closed});
    }

    double worst = 0.0;
    for (const auto& row : rep.table) worst = std::max(worst, row.rel_err);
    add(rep, S, "norm-table-max-rel-err", worst, 0.01 * ts);
    return rep;
}

// ---- harmonicity characterization -------------------------------------------

namespace {

struct PdeCase {
    std::string name;
    WcoOperator W;
};

std::vector<HarmonicFn> test_family(int n, Rng& rng) {
    std::vector<HarmonicFn> fs;
    fs.push_back(HarmonicFn::constant());
    for (int i = 0; i < n; ++i) fs.push_back(HarmonicFn::coordinate(i));
    fs.push_back(HarmonicFn::product(0, 1));
    fs.push_back(HarmonicFn::square_diff(0, n - 1));
    fs.push_back(HarmonicFn::extended_poisson_fn(0.4 * rng.on_sphere(n)));
    return fs;
}

// canonical-form reflection composed so that the unit ball lands in B(0, 0.8)
CanonicalMoebius contracted_sphere_reflection(const Vec& a, const Mat& A) {
    const double alpha = 0.8 * (a.squaredNorm() - 1.0);
    const Vec b = alpha / (a.squaredNorm() - 1.0) * (A * a);
    return CanonicalMoebius(b, alpha, A, a, 2);
}

}  // namespace

Report run_pde_check(const RunConfig& cfg) {
    if (cfg.dim < 3)
        throw std::invalid_argument("pde suite requires --dim >= 3 (the characterization is stated there)");
    Report rep{cfg, {}, {}};
    const std::string S = "pde";
    const double ts = cfg.tol_scale;
    const int n = cfg.dim;
    Rng rng(cfg.seed);

    std::vector<PdeCase> positive;
    positive.push_back({"identity", WcoOperator::moebius(BallMoebius::identity(n))});
    positive.push_back({"ball-moebius-1", WcoOperator::moebius(make_moebius(cfg))});
    positive.push_back(
        {"ball-moebius-2", WcoOperator::moebius(BallMoebius(rng.rotation(n), 0.3 * rng.on_sphere(n)))});
    positive.push_back(
        {"ball-moebius-3",
         WcoOperator::moebius(BallMoebius(rng.rotation(n), 0.6 * rng.on_sphere(n)), 2.5)});
    const Vec dir1 = rng.on_sphere(n), dir2 = rng.on_sphere(n);
    positive.push_back(
        {"sphere-reflection-1.5",
         WcoOperator::canonical(contracted_sphere_reflection(1.5 * dir1, Mat::Identity(n, n)))});
    positive.push_back(
        {"sphere-reflection-3",
         WcoOperator::canonical(contracted_sphere_reflection(3.0 * dir2, rng.rotation(n)))});

    std::vector<Vec> pts;
    for (int i = 0; i < 100; ++i) pts.push_back(rng.in_ball(n, 0.6));
    std::vector<Vec> hpts(pts.begin(), pts.begin() + 40);
    for (Vec& x : hpts) x *= 0.5 / 0.6;

    const auto family = test_family(n, rng);
    for (const auto& c : positive) {
        c.W.validate(cfg.seed);
        double worst = 0.0;
        for (const Vec& x : pts) worst = std::max(worst, pde_conditions_check(c.W, x).max());
        add(rep, S, c.name + "/pde-residuals", worst, 1e-4 * ts);

        double hworst = 0.0;
        for (const auto& f : family)
            hworst = std::max(hworst, harmonicity_preservation_check(c.W, f, hpts));
        add(rep, S, c.name + "/harmonicity", hworst, 1e-4 * ts);
    }

    {
        // closed-form reflection derivatives against finite differences
        double worst = 0.0;
        for (double len : {1.5, 3.0}) {
            const Vec a = len * dir1;
            const double r = std::sqrt(0.8 * (a.squaredNorm() - 1.0));
            MapFn refl = [&](const Vec& x) { return reflect_sphere(a, r, x); };
            auto psi = [&](const Vec& x) -> cplx {
                return std::pow(r / (x - a).norm(), n - 2);
            };
            for (int i = 0; i < 100; ++i) {
                const Vec x = rng.in_ball(n, 0.8);
                const auto closed = sphere_reflection_derivatives(a, r, x);
                Vec lap = Vec::Zero(n), grad = Vec::Zero(n);
                const double h = 1e-4;
                Vec xp = x, xm = x;
                for (int k = 0; k < n; ++k) {
                    xp[k] = x[k] + h;
                    xm[k] = x[k] - h;
                    lap += (refl(xp) - 2.0 * refl(x) + refl(xm)) / (h * h);
                    grad[k] = (psi(xp) - psi(xm)).real() / (2.0 * h);
                    xp[k] = x[k];
                    xm[k] = x[k];
                }
                const Mat J = jacobian_matrix_fd(refl, x, h);
                worst = std::max({worst, (lap - closed.laplacian_phi).cwiseAbs().maxCoeff(),
                                  (grad - closed.grad_psi).cwiseAbs().maxCoeff(),
                                  (J - closed.dphi).cwiseAbs().maxCoeff()});
            }
        }
        add(rep, S, "reflection-derivatives-closed-vs-fd", worst, 1e-5 * ts);
    }

    // negative witnesses: residuals must stay clear of zero and a concrete
    // harmonic function must fail to stay harmonic
    struct Witness {
        std::string name;
        WcoOperator W;
        HarmonicFn f;
    };
    std::vector<Witness> witnesses;
    {
        Mat D = Mat::Identity(n, n);
        for (int i = 1; i < n; ++i) D(i, i) = 0.5;
        witnesses.push_back({"witness-anisotropic-linear",
                             WcoOperator::custom([D](const Vec& x) -> Vec { return D * x; }, n,
                                                 [](const Vec&) -> cplx { return 1.0; }),
                             HarmonicFn::square_diff(0, 1)});
    }
    {
        Vec a = Vec::Zero(n);
        a[0] = 0.5;
        const BallMoebius mb = BallMoebius::from_center(a);
        witnesses.push_back({"witness-moebius-unit-weight",
                             WcoOperator::custom([mb](const Vec& x) -> Vec { return mb(x); }, n,
                                                 [](const Vec&) -> cplx { return 1.0; }),
                             HarmonicFn::coordinate(0)});
    }
    {
        witnesses.push_back({"witness-quadratic",
                             WcoOperator::custom(
                                 [n](const Vec& x) -> Vec {
                                     Vec y = 0.5 * x;
                                     y[0] = (x[0] + 3.0) * (x[0] + 3.0) / 16.0 - 0.5;
                                     return y;
                                 },
                                 n, [](const Vec&) -> cplx { return 1.0; }),
                             HarmonicFn::coordinate(0)});
    }
    for (const auto& w : witnesses) {
        w.W.validate(cfg.seed);
        double worst = 0.0;
        for (int i = 0; i < 20; ++i)
            worst = std::max(worst, pde_conditions_check(w.W, pts[i]).max());
        add_exceeds(rep, S, w.name + "/pde-residual-exceeds", worst, 1e-2);
        const double h = harmonicity_preservation_check(w.W, w.f, hpts);
        add_exceeds(rep, S, w.name + "/harmonicity-fails", h, 1e-2);
    }
    return rep;
}

// ---- operator norms ----------------------------------------------------------

Report run_opnorm(const RunConfig& cfg) {
    Report rep{cfg, {}, {}};
    const std::string S = "opnorm";
    const double ts = cfg.tol_scale;
    const int n = cfg.dim;
    const double p = cfg.p;
    const BallMoebius m = make_moebius(cfg);
    const double u = m.a.norm();
    Rng rng(cfg.seed);

    const double closed = norm_formula(m, p, n);
    rep.table.push_back({"opnorm_closed", n, p, u, closed, closed, 0.0, true});

    double lower = 0.0;
    if (p < p_infinity) {
        const Vec bdir = u > 0 ? Vec(m.a / u) : unit_vector(n);
        for (double sgn : {1.0, -1.0}) lower = std::max(lower, ratio_curve(m, p, sgn * 0.9999 * bdir));
        const double rel = std::abs(lower - closed) / closed;
        rep.table.push_back({"opnorm_lower_curve", n, p, u, closed, lower, rel,
                             lower >= (1.0 - 0.01 * ts) * closed});
        add(rep, S, "analytic-lower-sandwich", std::max(0.0, 1.0 - lower / closed), 0.01 * ts);
    }

    if (p >= 1.0 && p < p_infinity) {
        const WcoOperator W = WcoOperator::moebius(m, cfg.weight_constant);
        const SphericalRule rule = make_rule(cfg);
        const std::vector<double> radii = {0.5, 0.9, 0.999};
        double upper = 0.0;
        for (int i = 0; i < 20; ++i) {
            const Vec z = (0.1 + 0.7 * (i / 19.0)) * rng.on_sphere(n);
            const double est = hp_norm_estimate(
                [&](const Vec& x) { return apply(W, HarmonicFn::extended_poisson_fn(z), x); }, p,
                radii, rule);
            upper = std::max(upper, est / hp_norm_py_closed(z, p, n));
        }
        upper /= std::abs(cfg.weight_constant);  // the norm scales linearly in |C|
        const double rel = std::abs(upper - closed) / closed;
        rep.table.push_back(
            {"opnorm_upper_sweep", n, p, u, closed, upper, rel, upper <= (1.0 + 0.02 * ts) * closed});
        add(rep, S, "quadrature-upper-sandwich", std::max(0.0, upper / closed - 1.0), 0.02 * ts);
    }

    if (p > 1.0 && p < p_infinity) {
        const double ess = essential_norm_formula(m, p, n);
        add(rep, S, "essential-norm-equals-norm", std::abs(ess - closed), 0.0);
    } else {
        bool rejected = false;
        try {
            (void)essential_norm_formula(m, p, n);
        } catch (const std::domain_error&) {
            rejected = true;
        }
        rep.checks.push_back({S, "essential-norm-out-of-scope", rejected ? 0.0 : 1.0, 0.0, rejected});
    }

    {
        const double pw = (p > 1.0 && p < p_infinity) ? p : 2.0;
        const std::vector<double> ys = {0.9, 0.99, 0.999};
        const auto sups = weak_null_probe(pw, n, ys, 0.5);
        const bool decreasing = sups[0] > sups[1] && sups[1] > sups[2];
        rep.checks.push_back(
            {S, "weak-null-kernels-vanish", sups.back(), 0.05, decreasing && sups.back() < 0.05});
    }
    return rep;
}

// ---- adjoint -------------------------------------------------------------------

Report run_adjoint(const RunConfig& cfg) {
    Report rep{cfg, {}, {}};
    const std::string S = "adjoint";
    const double ts = cfg.tol_scale;
    const int n = cfg.dim;
    const BallMoebius m = make_moebius(cfg);
    const WcoOperator W = WcoOperator::moebius(m, cfg.weight_constant);
    const SphericalRule rule = make_rule(cfg);
    Rng rng(cfg.seed);

    const Vec y = 0.5 * rng.on_sphere(n);
    const Vec z = 0.6 * rng.on_sphere(n);

    {
        // explicit adjoint integral against the closed kernel image
        const BoundaryFn pz = [&](const Vec& zeta) -> cplx { return poisson_kernel(z, zeta); };
        const cplx quad = adjoint_integral(W, pz, y, rule);
        const cplx closedv = adjoint_on_kernel(W, z)(y);
        add(rep, S, "kernel-image-vs-integral", std::abs(quad - closedv) / std::abs(closedv),
            0.01 * ts);
    }
    {
        // duality <W f, P_y> = <f, W* P_y> with f = P_z; the left side by
        // boundary quadrature, the right side in closed form
        const cplx lhs = integrate(
            [&](const Vec& zeta) {
                return W.weight(zeta) * poisson_kernel(z, W.map(zeta)) * poisson_kernel(y, zeta);
            },
            rule);
        const cplx rhs = W.weight(y) * extended_poisson(z, W.map(y));
        add(rep, S, "duality-pairing", std::abs(lhs - rhs) / std::abs(rhs), 0.01 * ts);
    }
    {
        // at y = 0 the adjoint reduces to the weighted mean of the boundary data
        const BoundaryFn f = parse_boundary_expr(
            cfg.boundary.empty() ? "1 + 0.5*z1" : cfg.boundary, n);
        const cplx left = adjoint_integral(W, f, Vec::Zero(n), rule);
        const cplx right = integrate([&](const Vec& zeta) { return f(zeta) * W.weight(zeta); }, rule);
        add(rep, S, "adjoint-at-zero", std::abs(left - right), 1e-12 * ts);

        // the adjoint image of any boundary datum is harmonic
        const auto adj = [&](const Vec& w) { return adjoint_integral(W, f, w, rule); };
        const double lap = std::abs(laplacian_fd(adj, 0.3 * rng.on_sphere(n), 1e-3));
        add(rep, S, "adjoint-image-harmonic", lap, 1e-4 * ts);
    }
    return rep;
}

// ---- dispatch / merge ------------------------------------------------------------

Report run_suite(const RunConfig& cfg) {
    if (cfg.cmd == "identities") return run_identities(cfg);
    if (cfg.cmd == "norms") return run_norm_table(cfg);
    if (cfg.cmd == "pde") return run_pde_check(cfg);
    if (cfg.cmd == "opnorm") return run_opnorm(cfg);
    if (cfg.cmd == "adjoint") return run_adjoint(cfg);
    if (cfg.cmd != "all") throw std::invalid_argument("unknown command '" + cfg.cmd + "'");

    using Runner = Report (*)(const RunConfig&);
    const std::vector<Runner> runners = {run_identities, run_norm_table, run_pde_check, run_opnorm,
                                         run_adjoint};
    std::vector<Report> parts(runners.size());
    if (cfg.parallel) {
        std::vector<std::future<Report>> futs;
        futs.reserve(runners.size());
        for (auto r : runners) futs.push_back(std::async(std::launch::async, r, std::cref(cfg)));
        for (std::size_t i = 0; i < futs.size(); ++i) parts[i] = futs[i].get();
    } else {
        for (std::size_t i = 0; i < runners.size(); ++i) parts[i] = runners[i](cfg);
    }
    Report rep{cfg, {}, {}};
    for (const auto& part : parts) {
        rep.checks.insert(rep.checks.end(), part.checks.begin(), part.checks.end());
        rep.table.insert(rep.table.end(), part.table.begin(), part.table.end());
    }
    return rep;
}

// ---- serialization ------------------------------------------------------------

namespace {

std::string fmt_num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

nlohmann::json config_json(const RunConfig& cfg) {
    nlohmann::json j;
    j["cmd"] = cfg.cmd;
    j["dim"] = cfg.dim;
    j["p"] = cfg.p;
    const Vec c = cfg.center();
    j["a"] = std::vector<double>(c.begin(), c.end());
    nlohmann::json rots = nlohmann::json::array();
    for (const auto& [i, k, th] : cfg.rotations) rots.push_back({i, k, th});
    j["rotations"] = rots;
    j["quad"] = cfg.quad;
    j["samples"] = cfg.samples;
    j["order"] = cfg.order;
    j["seed"] = cfg.seed;
    j["tol_scale"] = cfg.tol_scale;
    j["weight_constant"] = cfg.weight_constant;
    j["boundary"] = cfg.boundary;
    return j;
}

}  // namespace

std::string to_json(const Report& report) {
    nlohmann::json j;
    j["config"] = config_json(report.cfg);
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& row : report.checks) {
        checks.push_back({{"suite", row.suite},
                          {"case", row.name},
                          {"residual", row.residual},
                          {"tolerance", row.tolerance},
                          {"pass", row.pass}});
    }
    j["checks"] = checks;
    nlohmann::json table = nlohmann::json::array();
    for (const auto& row : report.table) {
        table.push_back({{"kind", row.kind},
                         {"n", row.n},
                         {"p", row.p},
                         {"param", row.param},
                         {"closed_form", row.closed_form},
                         {"estimate", row.estimate},
                         {"rel_err", row.rel_err},
                         {"pass", row.pass}});
    }
    j["table"] = table;
    j["pass"] = report.all_pass();
    return j.dump(2) + "\n";
}

std::string to_csv(const Report& report) {
    std::ostringstream os;
    if (!report.table.empty()) {
        os << "kind,n,p,param,closed_form,estimate,rel_err,pass\n";
        for (const auto& r : report.table)
            os << r.kind << ',' << r.n << ',' << fmt_num(r.p) << ',' << fmt_num(r.param) << ','
               << fmt_num(r.closed_form) << ',' << fmt_num(r.estimate) << ',' << fmt_num(r.rel_err)
               << ',' << (r.pass ? "true" : "false") << '\n';
        if (!report.checks.empty()) os << '\n';
    }
    if (!report.checks.empty()) {
        os << "suite,case,residual,tolerance,pass\n";
        for (const auto& r : report.checks)
            os << r.suite << ',' << r.name << ',' << fmt_num(r.residual) << ','
               << fmt_num(r.tolerance) << ',' << (r.pass ? "true" : "false") << '\n';
    }
    return os.str();
}

}  // namespace wco
