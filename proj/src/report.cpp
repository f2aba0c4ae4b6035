#include "s3w/report.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <set>

namespace s3w {

using nlohmann::json;

namespace {

json expected_json(const ExpectedUtility& e) {
    return {{"accept", e.accept}, {"defer", e.defer}, {"reject", e.reject}};
}

json utility_json(const ComprehensiveUtility& v) {
    json out;
    for (Cell c : kAllCells) out[cell_name(c)] = v[c];
    return out;
}

json level_json(const GranularLevel& level, const std::vector<std::string>& ranking) {
    json alts = json::object();
    for (std::size_t p = 0; p < level.evals.size(); ++p) {
        const auto& e = level.evals[p];
        json granule = json::array();
        for (auto m : level.granules[p].members) granule.push_back(level.universe[m]);
        alts[e.id] = {{"region", region_name(e.region)},
                      {"membership", e.membership},
                      {"probability", e.probability},
                      {"expected", expected_json(e.expected)},
                      {"utility", utility_json(e.utility)},
                      {"granule", granule}};
    }
    return {{"level", level.index},
            {"attributes", level.attributes},
            {"kappa", level.config.kappa},
            {"sigma", level.config.sigma},
            {"universe", level.universe},
            {"regions", {{"POS", level.pos}, {"BND", level.bnd}, {"NEG", level.neg}}},
            {"ranking", ranking},
            {"alternatives", alts},
            {"fused", fused_table_to_json(level.fused)}};
}

void require(std::vector<std::string>& problems, bool ok, const std::string& msg) {
    if (!ok) problems.push_back(msg);
}

bool is_region(const json& v) {
    return v.is_string() && (v == "POS" || v == "BND" || v == "NEG");
}

bool is_id_list(const json& v) {
    if (!v.is_array()) return false;
    return std::all_of(v.begin(), v.end(), [](const json& x) { return x.is_string(); });
}

bool is_expected(const json& v) {
    return v.is_object() && v.contains("accept") && v["accept"].is_number() && v.contains("defer") &&
           v["defer"].is_number() && v.contains("reject") && v["reject"].is_number();
}

}  // namespace

json fused_table_to_json(const FusedTable& table) {
    json cells = json::array();
    for (std::size_t r = 0; r < table.cells.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < table.cells.cols(); ++c)
            row.push_back(format_element(Element{table.cells(r, c)}));
        cells.push_back(std::move(row));
    }
    json prov = json::array();
    for (const auto& [id, w] : table.provenance) prov.push_back({{"id", id}, {"weight", w}});
    return {{"alternatives", table.alternatives},
            {"attributes", table.attributes},
            {"cells", cells},
            {"provenance", prov}};
}

json report_to_json(const DecisionReport& report, const ParamsData& params,
                    const std::vector<BaselineEntry>& baseline, const RunMetadata& meta) {
    json j;
    j["metadata"] = {{"tool", "s3wgdm"},
                     {"parameters", params_to_json(params)},
                     {"deterministic", meta.deterministic},
                     {"threads", meta.threads},
                     {"timings_ms", {{"total", meta.total_ms}}}};
    j["subsets"] = report.subsets;

    j["levels"] = json::array();
    for (std::size_t i = 0; i < report.levels.size(); ++i)
        j["levels"].push_back(level_json(report.levels[i], rank(report, params.rank, i + 1)));

    json alts = json::object();
    for (const auto& o : report.outcomes) {
        json traj = json::array();
        for (const auto& level : report.levels)
            if (const auto* e = level.find(o.id))
                traj.push_back({{"level", level.index},
                                {"region", region_name(e->region)},
                                {"expected", expected_json(e->expected)}});
        alts[o.id] = {{"exit_level", o.exit_level},
                      {"final_region", region_name(o.final_region)},
                      {"rank_key", o.rank_key},
                      {"trajectory", traj}};
    }
    j["alternatives"] = alts;
    j["final_ranking"] = rank(report, params.rank);

    std::vector<BaselineEntry> sorted = baseline;
    std::sort(sorted.begin(), sorted.end(), [](const BaselineEntry& a, const BaselineEntry& b) {
        return a.score != b.score ? a.score > b.score : a.id < b.id;
    });
    json ranking = json::array();
    json scores = json::object();
    for (const auto& b : sorted) {
        ranking.push_back(b.id);
        scores[b.id] = b.score;
    }
    j["baseline_ranking"] = ranking;
    j["baseline_scores"] = scores;
    return j;
}

std::vector<std::string> validate_report_json(const json& j) {
    std::vector<std::string> problems;
    if (!j.is_object()) return {"report is not an object"};
    for (const char* key : {"metadata", "subsets", "levels", "alternatives", "final_ranking",
                            "baseline_ranking", "baseline_scores"})
        require(problems, j.contains(key), std::string("missing '") + key + "'");
    if (!problems.empty()) return problems;

    require(problems, j["metadata"].is_object() && j["metadata"].contains("parameters"),
            "metadata needs parameters");
    require(problems, j["subsets"].is_array(), "subsets must be an array");
    require(problems, j["levels"].is_array() && !j["levels"].empty(), "levels must be a nonempty array");
    require(problems, j["alternatives"].is_object(), "alternatives must be an object");
    require(problems, is_id_list(j["final_ranking"]), "final_ranking must be a list of ids");
    require(problems, is_id_list(j["baseline_ranking"]), "baseline_ranking must be a list of ids");
    if (!problems.empty()) return problems;

    std::set<std::string> ids;
    for (const auto& [id, a] : j["alternatives"].items()) {
        ids.insert(id);
        const std::string at = "alternatives." + id;
        if (!a.is_object()) {
            problems.push_back(at + " must be an object");
            continue;
        }
        require(problems, a.contains("exit_level") && a["exit_level"].is_number_unsigned(),
                at + ".exit_level must be a positive integer");
        require(problems, a.contains("final_region") && is_region(a["final_region"]),
                at + ".final_region must be POS, BND or NEG");
        require(problems, a.contains("rank_key") && a["rank_key"].is_number(),
                at + ".rank_key must be a number");
        require(problems, a.contains("trajectory") && a["trajectory"].is_array() &&
                              !a["trajectory"].empty(),
                at + ".trajectory must be a nonempty array");
    }

    const std::set<std::string> ranked(j["final_ranking"].begin(), j["final_ranking"].end());
    require(problems, ranked == ids && ranked.size() == j["final_ranking"].size(),
            "final_ranking must list every alternative exactly once");

    for (std::size_t i = 0; i < j["levels"].size(); ++i) {
        const json& l = j["levels"][i];
        const std::string at = "levels[" + std::to_string(i) + "]";
        if (!l.is_object() || !l.contains("regions") || !l.contains("universe") ||
            !l.contains("alternatives") || !l.contains("attributes")) {
            problems.push_back(at + " lacks regions, universe, attributes or alternatives");
            continue;
        }
        require(problems, l.contains("level") && l["level"] == i + 1, at + ".level must be " +
                                                                        std::to_string(i + 1));
        std::multiset<std::string> covered;
        for (const char* r : {"POS", "BND", "NEG"}) {
            if (!l["regions"].contains(r) || !is_id_list(l["regions"][r])) {
                problems.push_back(at + ".regions." + r + " must be a list of ids");
                continue;
            }
            for (const auto& id : l["regions"][r]) covered.insert(id.get<std::string>());
        }
        if (!is_id_list(l["universe"])) {
            problems.push_back(at + ".universe must be a list of ids");
            continue;
        }
        const std::multiset<std::string> universe(l["universe"].begin(), l["universe"].end());
        require(problems, covered == universe, at + " regions must partition the universe");
        for (const auto& [id, a] : l["alternatives"].items())
            require(problems,
                    a.is_object() && a.contains("region") && is_region(a["region"]) &&
                        a.contains("expected") && is_expected(a["expected"]) &&
                        a.contains("probability") && a["probability"].is_number(),
                    at + ".alternatives." + id + " lacks region, probability or expected utilities");
    }
    return problems;
}

void print_report(std::ostream& os, const DecisionReport& report, const RankPolicy& policy) {
    const auto flags = os.flags();
    const auto prec = os.precision();
    os << std::setprecision(6);
    for (const auto& level : report.levels) {
        os << "Level " << level.index << "  Z = {";
        for (std::size_t k = 0; k < level.attributes.size(); ++k)
            os << (k ? ", " : "") << level.attributes[k];
        os << "}  kappa = " << level.config.kappa << "  sigma = " << level.config.sigma << '\n';
        os << "  " << std::left << std::setw(10) << "id" << std::setw(8) << "region" << std::right
           << std::setw(12) << "pr" << std::setw(12) << "E[accept]" << std::setw(12) << "E[defer]"
           << std::setw(12) << "E[reject]" << '\n';
        for (const auto& e : level.evals)
            os << "  " << std::left << std::setw(10) << e.id << std::setw(8) << region_name(e.region)
               << std::right << std::setw(12) << e.probability << std::setw(12) << e.expected.accept
               << std::setw(12) << e.expected.defer << std::setw(12) << e.expected.reject << '\n';
        print_ranking(os, "  ranking", rank(report, policy, level.index));
    }
    print_ranking(os, "Final ranking", rank(report, policy));
    os.flags(flags);
    os.precision(prec);
}

void print_ranking(std::ostream& os, const std::string& title, const std::vector<std::string>& ids) {
    os << title << ": ";
    for (std::size_t i = 0; i < ids.size(); ++i) os << (i ? " > " : "") << ids[i];
    os << '\n';
}

}  // namespace s3w
