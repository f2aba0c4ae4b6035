#include "s3w/engine.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "s3w/errors.hpp"

namespace s3w {

namespace {

int region_order(Region r) {
    switch (r) {
        case Region::pos: return 0;
        case Region::bnd: return 1;
        case Region::neg: return 2;
    }
    return 3;
}

bool is_parallel(kernels::Exec exec) { return exec == kernels::Exec::parallel; }

}  // namespace

const char* region_name(Region r) {
    switch (r) {
        case Region::pos: return "POS";
        case Region::bnd: return "BND";
        case Region::neg: return "NEG";
    }
    return "?";
}

const AlternativeEval* GranularLevel::find(const std::string& id) const {
    for (const auto& e : evals)
        if (e.id == id) return &e;
    return nullptr;
}

void validate_params(const DecisionParams& p) {
    if (!(p.eta >= 0.0 && p.eta <= 1.0))
        throw ConfigError("eta must lie in [0,1], got " + format_number(p.eta));
    if (!(p.theta > 0.0 && p.theta < 1.0))
        throw ConfigError("theta must lie in (0,1), got " + format_number(p.theta));
    if (!(p.delta >= 0.0) || !std::isfinite(p.delta))
        throw ConfigError("delta must be >= 0, got " + format_number(p.delta));
}

void validate_levels(const std::vector<LevelConfig>& levels, bool monotonicity_override) {
    if (levels.empty()) throw ConfigError("level list is empty");
    for (std::size_t i = 0; i < levels.size(); ++i) {
        const auto& l = levels[i];
        const std::string at = "level " + std::to_string(i + 1);
        if (!(l.kappa >= 0.0 && l.kappa <= 1.0))
            throw ConfigError(at + ": kappa must lie in [0,1], got " + format_number(l.kappa));
        if (!(l.sigma > 0.0) || !std::isfinite(l.sigma))
            throw ConfigError(at + ": sigma must be > 0, got " + format_number(l.sigma));
        if (i == 0 || monotonicity_override) continue;
        if (l.kappa < levels[i - 1].kappa)
            throw ConfigError(at + ": kappa decreases across levels (set the monotonicity override "
                                   "to allow this)");
        if (l.sigma > levels[i - 1].sigma)
            throw ConfigError(at + ": sigma increases across levels (set the monotonicity override "
                                   "to allow this)");
    }
}

void validate_subsets(const NestedSubsets& subsets, const std::vector<AttributeSpec>& attrs) {
    if (subsets.empty()) throw ConfigError("nested subset list is empty");
    std::set<std::string> known;
    for (const auto& a : attrs) known.insert(a.id);
    std::set<std::string> prev;
    for (std::size_t i = 0; i < subsets.size(); ++i) {
        std::set<std::string> cur(subsets[i].begin(), subsets[i].end());
        if (cur.size() != subsets[i].size())
            throw ConfigError("subset " + std::to_string(i + 1) + " repeats an attribute");
        for (const auto& id : cur)
            if (!known.count(id)) throw UnknownId("unknown attribute '" + id + "'");
        if (!std::includes(cur.begin(), cur.end(), prev.begin(), prev.end()) ||
            cur.size() <= prev.size())
            throw ConfigError("subset " + std::to_string(i + 1) +
                              " does not strictly extend the previous one");
        prev = std::move(cur);
    }
}

ExpectedUtility expected_perceived_utility(const ComprehensiveUtility& v, double pr) {
    return {v[Cell::PP] * pr + v[Cell::PN] * (1.0 - pr),
            v[Cell::BP] * pr + v[Cell::BN] * (1.0 - pr),
            v[Cell::NP] * pr + v[Cell::NN] * (1.0 - pr)};
}

Region classify(const ExpectedUtility& e) {
    if (e.accept >= e.defer && e.accept >= e.reject) return Region::pos;
    if (e.defer >= e.accept && e.defer >= e.reject) return Region::bnd;
    return Region::neg;
}

GranularLevel run_level(const FusedTable& table, const std::vector<AttributeSpec>& attrs,
                        const std::vector<std::string>& z, const LevelConfig& cfg,
                        const DecisionParams& params, const Scale& scale, kernels::Exec exec) {
    const std::size_t n = table.cells.rows();
    if (n == 0) throw ConfigError("level universe is empty");
    if (z.empty()) throw ConfigError("level attribute subset is empty");
    validate_params(params);

    GranularLevel level;
    level.universe = table.alternatives;
    level.attributes = z;
    level.config = cfg;
    level.fused = table;

    std::vector<std::size_t> cols;
    for (const auto& id : z) cols.push_back(table.col_of(id));
    const AttributeWeights weights = renormalize_weights(attrs, z);

    level.similarity = build_similarity_matrix(table, z, cfg.sigma, scale, exec);
    level.granules = cut_granules(level.similarity, cfg.kappa);
    const ConceptMembership membership = concept_membership(table, z, weights, scale);

    const std::size_t q = cols.size();
    Matrix<SimplifiedGainUnit> gains(n, q);
#pragma omp parallel for schedule(static) if (is_parallel(exec))
    for (long p = 0; p < static_cast<long>(n); ++p)
        for (std::size_t k = 0; k < q; ++k)
            gains(p, k) = simplify_gain_unit(
                build_gain_unit(Element{table.cells(p, cols[k])}, params.eta, scale), scale);

    Matrix<PerceivedUtilityUnit> perceived(n, q);
    for (std::size_t k = 0; k < q; ++k) {
        std::vector<SimplifiedGainUnit> column(n);
        for (std::size_t p = 0; p < n; ++p) column[p] = gains(p, k);
        const auto v = perceived_utility_units(column, params.theta, params.delta);
        for (std::size_t p = 0; p < n; ++p) perceived(p, k) = v[p];
    }

    level.evals.resize(n);
#pragma omp parallel for schedule(static) if (is_parallel(exec))
    for (long sp = 0; sp < static_cast<long>(n); ++sp) {
        const auto p = static_cast<std::size_t>(sp);
        std::map<std::string, PerceivedUtilityUnit> units;
        for (std::size_t k = 0; k < q; ++k) units.emplace(z[k], perceived(p, k));
        auto& e = level.evals[p];
        e.id = table.alternatives[p];
        e.membership = membership.values[p];
        e.probability = conditional_probability(level.granules[p], membership);
        e.utility = comprehensive_utility(units, weights);
        e.expected = expected_perceived_utility(e.utility, e.probability);
        e.region = classify(e.expected);
    }

    for (const auto& e : level.evals) {
        switch (e.region) {
            case Region::pos: level.pos.push_back(e.id); break;
            case Region::bnd: level.bnd.push_back(e.id); break;
            case Region::neg: level.neg.push_back(e.id); break;
        }
    }
    return level;
}

DecisionReport run_sequential(const std::vector<ExpertTable>& tables,
                              const std::vector<AttributeSpec>& attrs, const Scale& scale,
                              const SequentialOptions& options) {
    if (tables.empty()) throw ConfigError("expert list is empty");
    scale.validate();
    validate_params(options.params);
    validate_levels(options.levels, options.monotonicity_override);
    validate_attributes(attrs);
    validate_expert_tables(tables, scale);

    DecisionReport report;
    report.alternatives = tables.front().alternatives;
    report.params = options.params;
    report.subsets = options.subsets ? *options.subsets : build_nested_subsets(attrs);
    validate_subsets(report.subsets, attrs);
    if (options.levels.size() > report.subsets.size())
        throw ConfigError(std::to_string(options.levels.size()) + " levels requested but only " +
                          std::to_string(report.subsets.size()) + " nested attribute subsets exist");

    std::map<std::string, AlternativeOutcome> outcomes;
    std::vector<std::string> universe = report.alternatives;
    for (std::size_t i = 0; i < options.levels.size() && !universe.empty(); ++i) {
        const auto& z = report.subsets[i];
        try {
            std::vector<ExpertTable> sub;
            sub.reserve(tables.size());
            for (const auto& t : tables) sub.push_back(extract(t, universe, z));
            const FusedTable fused = orient_to_concept(kernels::fuse(options.exec, sub), attrs, scale);
            report.levels.push_back(
                run_level(fused, attrs, z, options.levels[i], options.params, scale, options.exec));
        } catch (const LevelError&) {
            throw;
        } catch (const std::exception& e) {
            throw LevelError(i + 1, e.what());
        }
        auto& level = report.levels.back();
        level.index = i + 1;
        for (const auto& e : level.evals)
            outcomes[e.id] = {e.id, level.index, e.region, e.expected.accept};
        universe = level.bnd;
    }

    for (const auto& id : report.alternatives) report.outcomes.push_back(outcomes.at(id));
    return report;
}

std::vector<std::string> rank(const DecisionReport& report, const RankPolicy& policy,
                              std::optional<std::size_t> after_level) {
    const std::size_t last = after_level.value_or(report.levels.size());
    if (last == 0 || last > report.levels.size())
        throw ConfigError("ranking level " + std::to_string(last) + " outside 1.." +
                          std::to_string(report.levels.size()));

    struct Entry {
        std::string id;
        Region region;
        double key;
    };
    std::vector<Entry> entries;
    for (const auto& id : report.alternatives) {
        const AlternativeEval* seen = nullptr;
        for (std::size_t i = 0; i < last; ++i)
            if (const auto* e = report.levels[i].find(id)) seen = e;
        if (!seen) continue;
        double key = seen->expected.accept;
        if (seen->region == Region::bnd && policy.boundary_key == BoundaryKey::expected_defer)
            key = seen->expected.defer;
        entries.push_back({id, seen->region, key});
    }

    std::sort(entries.begin(), entries.end(), [&](const Entry& a, const Entry& b) {
        if (a.region != b.region) return region_order(a.region) < region_order(b.region);
        if (a.key != b.key) {
            const bool ascending =
                a.region == Region::neg && policy.neg_direction == NegDirection::ascending;
            return ascending ? a.key < b.key : a.key > b.key;
        }
        return a.id < b.id;
    });

    std::vector<std::string> out;
    for (auto& e : entries) out.push_back(std::move(e.id));
    return out;
}

std::vector<BaselineEntry> baseline_scores(const std::vector<ExpertTable>& tables,
                                           const std::vector<AttributeSpec>& attrs,
                                           const Scale& scale) {
    validate_attributes(attrs);
    validate_expert_tables(tables, scale);
    const FusedTable fused = orient_to_concept(fuse_dhhflmwa(tables), attrs, scale);
    std::vector<BaselineEntry> out;
    for (std::size_t r = 0; r < fused.cells.rows(); ++r) {
        double score = 0.0;
        for (const auto& a : attrs)
            score += a.weight * superior_gradus(fused.cells(r, fused.col_of(a.id)), scale);
        out.push_back({fused.alternatives[r], score});
    }
    return out;
}

std::vector<std::string> baseline_full_fusion(const std::vector<ExpertTable>& tables,
                                              const std::vector<AttributeSpec>& attrs,
                                              const Scale& scale) {
    auto scores = baseline_scores(tables, attrs, scale);
    std::sort(scores.begin(), scores.end(), [](const BaselineEntry& a, const BaselineEntry& b) {
        if (a.score != b.score) return a.score > b.score;
        return a.id < b.id;
    });
    std::vector<std::string> out;
    for (auto& s : scores) out.push_back(std::move(s.id));
    return out;
}

}  // namespace s3w
