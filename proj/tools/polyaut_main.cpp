#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "polyaut/criterion.hpp"
#include "polyaut/errors.hpp"
#include "polyaut/mapzoo.hpp"
#include "polyaut/polynomial_io.hpp"
#include "polyaut/report.hpp"

namespace {

constexpr int kExitAutomorphism = 0;
constexpr int kExitNotAutomorphism = 1;
constexpr int kExitPrecondition = 2;
constexpr int kExitBudget = 3;
constexpr int kExitUsage = 64;

struct CommonFlags {
    bool json = false;
    int parallel = 0;
    bool no_reduction = false;
    bool no_early_exit = false;
    std::uint64_t budget = 10'000'000;
    double timeout_secs = 0;
    bool no_timings = false;
};

void add_common_flags(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_flag("--json", flags.json, "emit a machine-readable JSON report on stdout");
    cmd->add_option("--parallel", flags.parallel, "worker count (0 = all cores)");
    cmd->add_flag("--no-reduction", flags.no_reduction,
                  "evaluate all n^3 wronskians instead of the reduced set");
    cmd->add_flag("--no-early-exit", flags.no_early_exit,
                  "keep testing membership after the first failure");
    cmd->add_option("--budget", flags.budget, "Groebner reduction-step budget")
        ->default_val(std::uint64_t{10'000'000});
    cmd->add_option("--timeout", flags.timeout_secs, "wall-clock limit in seconds (0 = none)");
    cmd->add_flag("--no-timings", flags.no_timings,
                  "omit timings from the report so identical runs are byte-identical");
}

polyaut::CheckOptions to_options(const CommonFlags& flags) {
    polyaut::CheckOptions options;
    options.early_exit = !flags.no_early_exit;
    options.parallelism = flags.parallel;
    options.no_reduction = flags.no_reduction;
    options.budget.max_steps = flags.budget;
    if (flags.timeout_secs > 0) {
        options.budget.deadline = std::chrono::steady_clock::now() +
                                  std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                      std::chrono::duration<double>(flags.timeout_secs));
    }
    return options;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::string label_for(const std::string& path) {
    return std::filesystem::path(path).stem().string();
}

void log_phases(const polyaut::CriterionReport& report) {
    const auto& t = report.timings;
    std::fprintf(stderr, "[polyaut] jacobian: det = %s (%.1f ms)\n",
                 report.jacobian_det.to_string().c_str(), t.jacobian_ms);
    std::fprintf(stderr, "[polyaut] derivation tables: %.1f ms\n", t.tables_ms);
    std::fprintf(stderr, "[polyaut] wronskians: %zu computed (%.1f ms)\n", report.computed_count,
                 t.wronskians_ms);
    if (report.verdict) {
        std::fprintf(stderr, "[polyaut] elimination basis: %.1f ms\n", t.basis_ms);
        std::fprintf(stderr, "[polyaut] membership: %.1f ms\n", t.membership_ms);
        if (report.inverse) std::fprintf(stderr, "[polyaut] inverse: %.1f ms\n", t.inverse_ms);
        std::fprintf(stderr, "[polyaut] verdict: %s (total %.1f ms)\n",
                     polyaut::verdict_name(*report.verdict), t.total_ms);
    } else {
        std::fprintf(stderr, "[polyaut] done (total %.1f ms)\n", t.total_ms);
    }
}

int emit_report(const polyaut::CriterionReport& report, const CommonFlags& flags) {
    const polyaut::ReportDocument doc = polyaut::make_report_document(report, !flags.no_timings);
    if (flags.json) {
        std::cout << polyaut::report_to_json(doc);
    } else {
        polyaut::print_human_report(std::cout, doc);
    }
    if (!report.verdict) return kExitAutomorphism;
    switch (*report.verdict) {
        case polyaut::Verdict::automorphism: return kExitAutomorphism;
        case polyaut::Verdict::not_automorphism: return kExitNotAutomorphism;
        case polyaut::Verdict::inconclusive_budget: return kExitBudget;
    }
    return kExitUsage;
}

int run_check(const std::string& map_path, const CommonFlags& flags, bool with_membership) {
    const polyaut::PolynomialMap map = polyaut::parse_map(read_file(map_path), label_for(map_path));
    const polyaut::CheckOptions options = to_options(flags);
    const polyaut::CriterionReport report = with_membership
                                                ? polyaut::check_automorphism(map, options)
                                                : polyaut::compute_wronskians(map, options);
    log_phases(report);
    return emit_report(report, flags);
}

int run_invert(const std::string& map_path, const CommonFlags& flags) {
    const polyaut::PolynomialMap map = polyaut::parse_map(read_file(map_path), label_for(map_path));
    polyaut::Budget budget = to_options(flags).budget;
    const auto inverse = polyaut::invert_map(map, budget);
    if (!inverse) {
        std::fprintf(stderr, "[polyaut] %s has no polynomial inverse (some x_i is not in Q[F])\n",
                     map.label.c_str());
        return kExitNotAutomorphism;
    }
    if (flags.json) {
        nlohmann::ordered_json j;
        j["schema_version"] = "1";
        j["map_label"] = map.label;
        j["n"] = map.n;
        nlohmann::ordered_json texts = nlohmann::ordered_json::array();
        for (const auto& g : *inverse) texts.push_back(polyaut::to_string(g));
        j["inverse"] = std::move(texts);
        std::cout << j.dump(2) << "\n";
        return kExitAutomorphism;
    }
    for (std::size_t i = 0; i < inverse->size(); ++i) {
        std::cout << "G" << (i + 1) << " = " << polyaut::to_string((*inverse)[i], "y") << "\n";
    }
    return kExitAutomorphism;
}

int run_druzkowski(const std::string& matrix_path, const std::string& out_path) {
    const polyaut::DruzkowskiSpec spec = polyaut::parse_druzkowski_matrix(read_file(matrix_path));
    const polyaut::DruzkowskiMap dm = polyaut::druzkowski_from_matrix(spec, label_for(matrix_path));
    std::fprintf(stderr, "[polyaut] rank(A) = %d\n", dm.rank);
    std::fprintf(stderr, "[polyaut] A^2 = 0: %s\n", dm.a_squared_zero ? "yes" : "no");
    std::fprintf(stderr, "[polyaut] det(J_F) constant: %s\n",
                 polyaut::has_constant_jacobian_det(dm.map) ? "yes" : "no");
    const std::string text = polyaut::print_map(dm.map);
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write '" + out_path + "'");
        out << text;
    }
    return kExitAutomorphism;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"polyaut - decides polynomial automorphisms via generalized wronskians"};
    app.require_subcommand(1);

    CommonFlags check_flags, wronskians_flags, invert_flags;
    std::string check_path, wronskians_path, invert_path, matrix_path, out_path;

    CLI::App* check = app.add_subcommand(
        "check", "decide whether a constant-Jacobian map is a polynomial automorphism");
    check->add_option("map", check_path, "map file")->required();
    add_common_flags(check, check_flags);

    CLI::App* wronskians =
        app.add_subcommand("wronskians", "compute the wronskian table without membership tests");
    wronskians->add_option("map", wronskians_path, "map file")->required();
    add_common_flags(wronskians, wronskians_flags);

    CLI::App* invert = app.add_subcommand("invert", "compute the polynomial inverse if it exists");
    invert->add_option("map", invert_path, "map file")->required();
    add_common_flags(invert, invert_flags);

    CLI::App* druzkowski =
        app.add_subcommand("druzkowski", "expand a cubic-linear map from its coefficient matrix");
    druzkowski->add_option("matrix", matrix_path, "matrix file")->required();
    druzkowski->add_option("-o,--output", out_path, "write the map file here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (check->parsed()) return run_check(check_path, check_flags, true);
        if (wronskians->parsed()) return run_check(wronskians_path, wronskians_flags, false);
        if (invert->parsed()) return run_invert(invert_path, invert_flags);
        if (druzkowski->parsed()) return run_druzkowski(matrix_path, out_path);
    } catch (const polyaut::NotConstantJacobian& e) {
        std::fprintf(stderr, "[polyaut] precondition failed: det(J_F) = %s is not constant\n",
                     polyaut::to_string(e.determinant()).c_str());
        return kExitPrecondition;
    } catch (const polyaut::SingularJacobian&) {
        std::fprintf(stderr, "[polyaut] precondition failed: det(J_F) = 0\n");
        return kExitPrecondition;
    } catch (const polyaut::BudgetExceeded& e) {
        std::fprintf(stderr, "[polyaut] %s\n", e.what());
        return kExitBudget;
    } catch (const polyaut::ParseError& e) {
        std::fprintf(stderr, "[polyaut] parse error: %s\n", e.what());
        return kExitUsage;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "[polyaut] error: %s\n", e.what());
        return kExitUsage;
    }
    return kExitUsage;
}
