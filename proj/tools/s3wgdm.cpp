// s3wgdm: sequential three-way group decisions over double hierarchy
// hesitant fuzzy linguistic decision tables.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "s3w/case_io.hpp"
#include "s3w/engine.hpp"
#include "s3w/errors.hpp"
#include "s3w/kernels.hpp"
#include "s3w/report.hpp"
#include "s3w/sweep.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitRuntime = 2;

using nlohmann::json;

struct Options {
    std::string case_path;
    std::string params_path;
    std::string out_path;
    bool deterministic = false;
    std::optional<std::size_t> levels;
    std::string neg_direction;
    bool override_monotonicity = false;
    std::string sigma, kappa, eta;
    std::string dump_similarity;
};

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << text;
    if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

s3w::ParamsData load_params(const Options& o) {
    s3w::ParamsData p = s3w::load_params_file(o.params_path, o.override_monotonicity);
    if (o.neg_direction == "asc") p.rank.neg_direction = s3w::NegDirection::ascending;
    if (o.neg_direction == "desc") p.rank.neg_direction = s3w::NegDirection::descending;
    if (o.levels) p.levels = s3w::resize_levels(p.levels, *o.levels);
    return p;
}

s3w::kernels::Exec exec_of(const Options& o) {
    return o.deterministic ? s3w::kernels::Exec::serial : s3w::kernels::Exec::parallel;
}

int cmd_validate(const Options& o) {
    const s3w::CaseData c = s3w::load_case_file(o.case_path);
    s3w::validate_attributes(c.attributes);
    s3w::validate_expert_tables(c.experts, c.scale);
    const auto subsets = s3w::build_nested_subsets(c.attributes);
    if (!o.params_path.empty()) {
        const auto p = load_params(o);
        if (p.levels.size() > subsets.size())
            throw s3w::ValidationFailed({"params: " + std::to_string(p.levels.size()) +
                                         " levels but only " + std::to_string(subsets.size()) +
                                         " nested attribute subsets"});
    }
    std::cout << "valid: n=" << c.alternatives.size() << " m=" << c.attributes.size()
              << " e=" << c.experts.size() << " k=" << subsets.size() << '\n';
    for (std::size_t i = 0; i < subsets.size(); ++i) {
        std::cout << "  Z" << i + 1 << " = {";
        for (std::size_t k = 0; k < subsets[i].size(); ++k)
            std::cout << (k ? ", " : "") << subsets[i][k];
        std::cout << "}\n";
    }
    return kExitOk;
}

int cmd_decide(const Options& o) {
    const auto start = std::chrono::steady_clock::now();
    const s3w::CaseData c = s3w::load_case_file(o.case_path);
    const s3w::ParamsData p = load_params(o);

    s3w::SequentialOptions opt;
    opt.params = p.params;
    opt.levels = p.levels;
    opt.monotonicity_override = p.monotonicity_override;
    opt.exec = exec_of(o);
    const s3w::DecisionReport report = s3w::run_sequential(c.experts, c.attributes, c.scale, opt);
    const auto baseline = s3w::baseline_scores(c.experts, c.attributes, c.scale);

    s3w::RunMetadata meta;
    meta.deterministic = o.deterministic;
    meta.threads = o.deterministic ? 1 : s3w::kernels::max_threads();
    meta.total_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    const json j = s3w::report_to_json(report, p, baseline, meta);
    if (const auto problems = s3w::validate_report_json(j); !problems.empty())
        throw std::runtime_error("internal: report failed its own schema: " + problems.front());

    s3w::print_report(std::cout, report, p.rank);
    if (!o.out_path.empty()) write_text(o.out_path, j.dump(2) + "\n");

    if (!o.dump_similarity.empty()) {
        std::filesystem::create_directories(o.dump_similarity);
        for (const auto& level : report.levels) {
            std::ostringstream ss;
            s3w::write_similarity_csv(ss, level.similarity);
            write_text((std::filesystem::path(o.dump_similarity) /
                        ("level_" + std::to_string(level.index) + "_similarity.csv"))
                           .string(),
                       ss.str());
        }
    }
    return kExitOk;
}

int cmd_fuse(const Options& o) {
    const s3w::CaseData c = s3w::load_case_file(o.case_path);
    s3w::validate_attributes(c.attributes);
    s3w::validate_expert_tables(c.experts, c.scale);
    const auto fused = s3w::kernels::fuse(exec_of(o), c.experts);
    const std::string text = s3w::fused_table_to_json(fused).dump(2) + "\n";
    if (o.out_path.empty()) std::cout << text;
    else write_text(o.out_path, text);
    return kExitOk;
}

int cmd_sweep(const Options& o) {
    const s3w::CaseData c = s3w::load_case_file(o.case_path);
    const s3w::ParamsData p = load_params(o);
    s3w::SweepSpec spec;
    if (!o.sigma.empty()) spec.sigma = s3w::parse_range(o.sigma);
    if (!o.kappa.empty()) spec.kappa = s3w::parse_range(o.kappa);
    if (!o.eta.empty()) spec.eta = s3w::parse_range(o.eta);
    const auto rows = s3w::run_sweep(c, p, spec, exec_of(o));
    std::ostringstream ss;
    s3w::write_sweep_csv(ss, rows, p.levels.size());
    if (o.out_path.empty()) std::cout << ss.str();
    else write_text(o.out_path, ss.str());
    std::cerr << rows.size() << " grid point(s)\n";
    return kExitOk;
}

int cmd_baseline(const Options& o) {
    const s3w::CaseData c = s3w::load_case_file(o.case_path);
    const auto ranking = s3w::baseline_full_fusion(c.experts, c.attributes, c.scale);
    const auto scores = s3w::baseline_scores(c.experts, c.attributes, c.scale);
    s3w::print_ranking(std::cout, "Baseline ranking", ranking);

    if (o.out_path.empty()) return kExitOk;
    json doc = json::object();
    if (std::filesystem::exists(o.out_path)) {
        json existing = s3w::read_json_file(o.out_path);
        if (existing.is_object() && existing.contains("final_ranking")) {
            doc = std::move(existing);
            s3w::print_ranking(std::cout, "Sequential ranking",
                               doc["final_ranking"].get<std::vector<std::string>>());
        }
    }
    doc["baseline_ranking"] = ranking;
    doc["baseline_scores"] = json::object();
    for (const auto& s : scores) doc["baseline_scores"][s.id] = s.score;
    write_text(o.out_path, doc.dump(2) + "\n");
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sequential three-way group decisions for double hierarchy hesitant fuzzy "
                 "linguistic decision tables"};
    app.require_subcommand(1);
    Options o;

    auto add_case = [&](CLI::App* sub) {
        sub->add_option("--case", o.case_path, "Case file (JSON)")->required()->check(CLI::ExistingFile);
    };
    auto add_run_flags = [&](CLI::App* sub) {
        sub->add_option("--params", o.params_path, "Parameter file (JSON)")
            ->required()
            ->check(CLI::ExistingFile);
        sub->add_flag("--deterministic", o.deterministic, "Single-threaded reference kernels");
        sub->add_option("--levels", o.levels, "Number of decision levels to run")
            ->check(CLI::PositiveNumber);
        sub->add_option("--neg-direction", o.neg_direction, "Order inside the reject region")
            ->check(CLI::IsMember({"desc", "asc"}));
        sub->add_flag("--override-monotonicity", o.override_monotonicity,
                      "Allow kappa to fall or sigma to rise across levels");
    };

    auto* validate = app.add_subcommand("validate", "Check a case file and summarize it");
    add_case(validate);
    validate->add_option("--params", o.params_path, "Also check a parameter file")
        ->check(CLI::ExistingFile);
    validate->add_option("--levels", o.levels, "Level count to check against")
        ->check(CLI::PositiveNumber);
    validate->add_flag("--override-monotonicity", o.override_monotonicity);

    auto* decide = app.add_subcommand("decide", "Run the sequential decision and report");
    add_case(decide);
    add_run_flags(decide);
    decide->add_option("--out", o.out_path, "Report file (JSON)");
    decide->add_option("--dump-similarity", o.dump_similarity,
                       "Directory for per-level similarity matrices (CSV)");

    auto* fuse = app.add_subcommand("fuse", "Emit the group-fused decision table");
    add_case(fuse);
    fuse->add_option("--out", o.out_path, "Output file (JSON); stdout when omitted");
    fuse->add_flag("--deterministic", o.deterministic, "Single-threaded reference kernels");

    auto* sweep = app.add_subcommand("sweep", "Classification counts over a parameter grid");
    add_case(sweep);
    add_run_flags(sweep);
    sweep->add_option("--out", o.out_path, "Output file (CSV); stdout when omitted");
    sweep->add_option("--sigma", o.sigma, "start:stop:step for sigma (all levels)");
    sweep->add_option("--kappa", o.kappa, "start:stop:step for kappa (all levels)");
    sweep->add_option("--eta", o.eta, "start:stop:step for eta");

    auto* baseline = app.add_subcommand("baseline", "One-shot full-fusion ranking");
    add_case(baseline);
    baseline->add_option("--out", o.out_path,
                         "Output file (JSON); an existing report gains the baseline fields");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitInvalid;
    }

    try {
        if (*validate) return cmd_validate(o);
        if (*decide) return cmd_decide(o);
        if (*fuse) return cmd_fuse(o);
        if (*sweep) return cmd_sweep(o);
        if (*baseline) return cmd_baseline(o);
    } catch (const s3w::ValidationFailed& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const s3w::ConfigError& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const s3w::DomainError& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitRuntime;
    }
    return kExitRuntime;
}
