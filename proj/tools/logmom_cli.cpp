// Command-line front end: membership checks, measure recovery, positivity
// certification, example families, Helson matrix analysis, and CM
// decomposition, with JSON/CSV output and verdict exit codes
// (0 member / 1 rejected / 2 inconclusive / >=3 error).

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "logmom/cmono.hpp"
#include "logmom/helson.hpp"
#include "logmom/json_io.hpp"
#include "logmom/logmoment.hpp"
#include "logmom/measure.hpp"

namespace {

using logmom::MomentSequence;

struct RunConfig {
    double tol = 1e-6;
    int grid_size = 200;
    double grid_max = 50.0;
    int max_order = 8;
    std::int64_t index_cap = 16;
    std::string format = "json";
    std::uint64_t seed = 1;
    std::int64_t start_index = 1;
};

void add_common_flags(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--tol", cfg.tol, "decision tolerance")->check(CLI::PositiveNumber);
    cmd->add_option("--grid-size", cfg.grid_size, "fit grid size")
        ->check(CLI::Range(8, 100000));
    cmd->add_option("--grid-max", cfg.grid_max, "fit grid upper end")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--max-order", cfg.max_order, "max difference order");
    cmd->add_option("--index-cap", cfg.index_cap, "dual search index cap");
    cmd->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--seed", cfg.seed, "rng seed");
    cmd->add_option("--start-index", cfg.start_index,
                    "start index for bare value lists");
}

// Sequence files are either the JSON wire format or a bare list of values
// (one per line, or CSV with a header row), starting at --start-index.
MomentSequence read_sequence(const std::string& path, std::int64_t start_index) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    const auto parsed = nlohmann::json::parse(text, nullptr, false);
    if (!parsed.is_discarded() && parsed.is_object())
        return logmom::sequence_from_json(parsed);
    std::vector<double> values;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        if (line.empty()) continue;
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream fields(line);
        double v;
        if (fields >> v) values.push_back(v);
    }
    return MomentSequence(start_index, std::move(values));
}

void print_sequence(const MomentSequence& w, const std::string& format) {
    if (format == "csv") {
        std::printf("n,w\n");
        for (std::size_t i = 0; i < w.values.size(); ++i)
            std::printf("%lld,%.17g\n",
                        static_cast<long long>(w.start + static_cast<std::int64_t>(i)),
                        w.values[i]);
    } else {
        std::cout << logmom::to_json(w).dump(2) << "\n";
    }
}

int cmd_check(const std::string& path, const RunConfig& cfg) {
    const auto w = read_sequence(path, cfg.start_index);
    logmom::MembershipConfig mc;
    mc.tol = cfg.tol;
    mc.grid_size = cfg.grid_size;
    mc.grid_max = cfg.grid_max;
    mc.max_order = cfg.max_order;
    mc.index_cap = cfg.index_cap;
    const auto report = logmom::membership(w, mc);
    std::cout << logmom::to_json(report).dump(2) << "\n";
    switch (report.verdict) {
        case logmom::Verdict::Member: return 0;
        case logmom::Verdict::Rejected: return 1;
        case logmom::Verdict::Inconclusive: return 2;
    }
    return 3;
}

int cmd_recover(const std::string& path, const RunConfig& cfg) {
    const auto w = read_sequence(path, cfg.start_index);
    const auto grid = logmom::default_fit_grid(cfg.grid_size, cfg.grid_max);
    const auto rec = logmom::recover_measure(w, grid, cfg.tol);
    nlohmann::json out{{"atom", rec.atom},
                       {"nu", logmom::to_json(rec.nu)},
                       {"residual", rec.residual}};
    std::cout << out.dump(2) << "\n";
    return rec.residual <= cfg.tol ? 0 : 2;
}

int cmd_certify(const std::string& path, const RunConfig& cfg, double grid_step) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    nlohmann::json j;
    in >> j;
    const auto q = logmom::polynomial_from_json(j);
    const auto res = logmom::certify_nonnegative(q, grid_step, cfg.tol);
    if (logmom::is_certificate(res)) {
        nlohmann::json out{
            {"result", "certificate"},
            {"certificate", logmom::to_json(std::get<logmom::PositivityCertificate>(res))}};
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    nlohmann::json out{
        {"result", "witness"},
        {"witness", logmom::to_json(std::get<logmom::FailureWitness>(res))}};
    std::cout << out.dump(2) << "\n";
    return 1;
}

int cmd_examples(const std::string& family, double alpha, std::int64_t N,
                 const RunConfig& cfg) {
    logmom::MeasureFamily fam;
    std::int64_t start = 1;
    if (family == "a") {
        fam.kind = logmom::MeasureFamily::Kind::LogGamma;
        if (alpha >= 0) throw std::runtime_error("family a needs alpha < 0");
        start = 2;
    } else if (family == "b") {
        fam.kind = logmom::MeasureFamily::Kind::PowerDensity;
        if (alpha <= 0) throw std::runtime_error("family b needs alpha > 0");
    } else {
        fam.kind = logmom::MeasureFamily::Kind::PointMass;
        if (alpha < 0 || alpha > 1) throw std::runtime_error("family c needs alpha in [0,1]");
    }
    fam.alpha = alpha;
    if (N < start) throw std::runtime_error("N below start index");
    std::vector<double> values;
    for (std::int64_t n = start; n <= N; ++n)
        values.push_back(logmom::family_log_moment(fam, n));
    print_sequence(MomentSequence(start, std::move(values)), cfg.format);
    return 0;
}

int cmd_helson(const std::string& path, std::vector<std::int64_t> sizes,
               double bound, const RunConfig& cfg) {
    const auto w = read_sequence(path, cfg.start_index);
    const auto crit = logmom::boundedness_criterion(w, bound);
    if (sizes.empty()) sizes = {2, 4, 8, 16};
    std::printf("N,norm,criterion_ok\n");
    for (const auto N : sizes) {
        const auto M = logmom::helson_build(w, N);
        const double norm = logmom::operator_norm(M, 1000, cfg.seed);
        std::printf("%lld,%.17g,%d\n", static_cast<long long>(N), norm,
                    crit.ok ? 1 : 0);
    }
    return 0;
}

int cmd_decompose(const std::string& path, const RunConfig& cfg) {
    const auto w = read_sequence(path, cfg.start_index);
    const auto grid = logmom::default_fit_grid(cfg.grid_size, cfg.grid_max);
    const auto fit = logmom::fit_pair(w, grid, cfg.tol);
    if (const auto* pair = std::get_if<logmom::DirichletPair>(&fit)) {
        std::cout << logmom::to_json(*pair).dump(2) << "\n";
        return 0;
    }
    nlohmann::json out{{"result", "no_fit"},
                       {"residual", std::get<logmom::FitFailure>(fit).residual}};
    std::cout << out.dump(2) << "\n";
    return 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hausdorff log-moment sequence toolkit"};
    app.require_subcommand(1);
    RunConfig cfg;

    std::string seq_path, poly_path;
    double grid_step = 1e-2;
    std::string family = "c";
    double alpha = 0.5;
    std::int64_t N = 20;
    std::vector<std::int64_t> sizes;
    double bound = 1.0;

    auto* check = app.add_subcommand("check", "decide sequence membership");
    check->add_option("sequence", seq_path, "sequence file")->required();
    add_common_flags(check, cfg);

    auto* recover = app.add_subcommand("recover", "recover the representing measure");
    recover->add_option("sequence", seq_path, "sequence file")->required();
    add_common_flags(recover, cfg);

    auto* certify = app.add_subcommand("certify", "certify polynomial nonnegativity");
    certify->add_option("polynomial", poly_path, "polynomial file")->required();
    certify->add_option("--grid-step", grid_step, "initial scan step")
        ->check(CLI::PositiveNumber);
    add_common_flags(certify, cfg);

    auto* examples = app.add_subcommand("examples", "closed-form example sequences");
    examples->add_option("--family", family, "a | b | c")
        ->check(CLI::IsMember({"a", "b", "c"}));
    examples->add_option("--alpha", alpha, "family parameter");
    examples->add_option("-N,--length", N, "last index");
    add_common_flags(examples, cfg);

    auto* helson = app.add_subcommand("helson", "truncated Helson matrix norms");
    helson->add_option("sequence", seq_path, "sequence file")->required();
    helson->add_option("--sizes", sizes, "truncation sizes")->delimiter(',');
    helson->add_option("--bound", bound, "criterion constant C");
    add_common_flags(helson, cfg);

    auto* decompose = app.add_subcommand("decompose", "fit an atom + CM function pair");
    decompose->add_option("sequence", seq_path, "sequence file")->required();
    add_common_flags(decompose, cfg);

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) return cmd_check(seq_path, cfg);
        if (recover->parsed()) return cmd_recover(seq_path, cfg);
        if (certify->parsed()) return cmd_certify(poly_path, cfg, grid_step);
        if (examples->parsed()) return cmd_examples(family, alpha, N, cfg);
        if (helson->parsed()) return cmd_helson(seq_path, sizes, bound, cfg);
        if (decompose->parsed()) return cmd_decompose(seq_path, cfg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 3;
}
