// Batch verification driver: runs the identity / norm / characterization /
// operator-norm / adjoint suites and emits a machine-readable report.
//
//   wco_lab --cmd all --dim 3 --p 2 --a 0.5,0,0 --format json --out report.json
//
// Exit code 0 iff every check passed its tolerance; the report is written
// either way. The WCO_LAB_SEED environment variable overrides --seed.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "wco/suites.hpp"

namespace {

wco::Vec parse_vector(const std::string& text) {
    std::vector<double> vals;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) vals.push_back(std::stod(item));
    wco::Vec v(vals.size());
    for (std::size_t i = 0; i < vals.size(); ++i) v[i] = vals[i];
    return v;
}

std::vector<std::tuple<int, int, double>> parse_rotations(const std::string& text) {
    std::vector<std::tuple<int, int, double>> rots;
    std::stringstream ss(text);
    std::string group;
    while (std::getline(ss, group, ';')) {
        if (group.empty()) continue;
        int i, j;
        double theta;
        if (std::sscanf(group.c_str(), "%d,%d,%lf", &i, &j, &theta) != 3)
            throw CLI::ValidationError("--rot expects 'i,j,theta;...' groups");
        rots.emplace_back(i - 1, j - 1, theta);  // 1-based planes on the command line
    }
    return rots;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"weighted composition operator verification suites"};

    wco::RunConfig cfg;
    std::string a_text, rot_text;

    app.add_option("--cmd", cfg.cmd, "suite: identities|norms|pde|opnorm|adjoint|all")
        ->check(CLI::IsMember({"identities", "norms", "pde", "opnorm", "adjoint", "all"}));
    app.add_option("--dim", cfg.dim, "ambient dimension n >= 2")->check(CLI::Range(2, 64));
    app.add_option("--p", cfg.p, "Hardy exponent in [1, inf); pass 'inf' via --p-infinity");
    bool p_inf = false;
    app.add_flag("--p-infinity", p_inf, "use p = infinity");
    app.add_option("--a", a_text, "Moebius center as 'x1,x2,...' with |a| < 1");
    app.add_option("--rot", rot_text, "Givens rotations 'i,j,theta;...' (1-based planes)");
    app.add_option("--quad", cfg.quad, "quadrature kind")->check(CLI::IsMember({"product", "mc"}));
    app.add_option("--samples", cfg.samples, "Monte Carlo node count");
    app.add_option("--order", cfg.order, "product-rule order");
    app.add_option("--seed", cfg.seed, "RNG seed (env WCO_LAB_SEED overrides)");
    app.add_option("--tol-scale", cfg.tol_scale, "multiply all tolerances by this factor");
    app.add_option("--C", cfg.weight_constant, "constant of the matched weight C|Dphi|^{(n-2)/2}");
    app.add_option("--boundary", cfg.boundary,
                   "boundary datum, e.g. '1 + 0.5*z1 - 2*P(0.3,0,0)'");
    app.add_option("--format", cfg.format, "report format")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--out", cfg.out, "report path (stdout when omitted)");
    app.add_flag("--parallel", cfg.parallel, "run independent suites concurrently");

    CLI11_PARSE(app, argc, argv);

    try {
        if (p_inf) cfg.p = wco::p_infinity;
        if (!a_text.empty()) cfg.a = parse_vector(a_text);
        if (!rot_text.empty()) cfg.rotations = parse_rotations(rot_text);
        if (const char* env = std::getenv("WCO_LAB_SEED")) cfg.seed = std::stoull(env);
        if (cfg.weight_constant == 0.0) throw std::invalid_argument("--C must be nonzero");
        if (!(cfg.p >= 1.0)) throw std::invalid_argument("--p must be >= 1");

        const wco::Report report = wco::run_suite(cfg);
        const std::string text = cfg.format == "csv" ? wco::to_csv(report) : wco::to_json(report);
        if (cfg.out.empty()) {
            std::cout << text;
        } else {
            std::ofstream os(cfg.out, std::ios::binary);
            if (!os) {
                std::cerr << "error: cannot open '" << cfg.out << "' for writing\n";
                return 2;
            }
            os << text;
        }
        return report.all_pass() ? 0 : 1;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
}
