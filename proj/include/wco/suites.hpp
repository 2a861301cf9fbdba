#pragma once

#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

#include "wco/types.hpp"

namespace wco {

// Configuration of one verification run (mirrors the CLI flags).
struct RunConfig {
    std::string cmd = "all";  // identities | norms | pde | opnorm | adjoint | all
    int dim = 3;
    double p = 2.0;
    Vec a;  // empty -> default 0.5 e1
    std::vector<std::tuple<int, int, double>> rotations;  // Givens (i, j, angle), 1-based planes
    std::string quad = "product";                         // product | mc
    std::size_t samples = 100000;
    int order = 32;
    std::uint64_t seed = 12345;
    double tol_scale = 1.0;
    double weight_constant = 1.0;
    std::string boundary;  // optional boundary-data expression
    std::string format = "json";
    std::string out;
    bool parallel = false;

    Vec center() const;  // a, defaulted and validated
};

struct CheckRow {
    std::string suite;
    std::string name;
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct NormRow {
    std::string kind;
    int n = 0;
    double p = 0.0;
    double param = 0.0;  // |y| or |a|
    double closed_form = 0.0;
    double estimate = 0.0;
    double rel_err = 0.0;
    bool pass = false;
};

struct Report {
    RunConfig cfg;
    std::vector<CheckRow> checks;
    std::vector<NormRow> table;

    bool all_pass() const;
};

Report run_identities(const RunConfig& cfg);
Report run_norm_table(const RunConfig& cfg);
Report run_pde_check(const RunConfig& cfg);
Report run_opnorm(const RunConfig& cfg);
Report run_adjoint(const RunConfig& cfg);
Report run_suite(const RunConfig& cfg);  // dispatch on cfg.cmd, "all" merges everything

std::string to_json(const Report& report);
std::string to_csv(const Report& report);

}  // namespace wco
