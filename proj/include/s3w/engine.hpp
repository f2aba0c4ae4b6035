#pragma once

#include <optional>
#include <string>
#include <vector>

#include "s3w/decision_model.hpp"
#include "s3w/kernels.hpp"
#include "s3w/neighborhood.hpp"
#include "s3w/regret_utility.hpp"

namespace s3w {

struct LevelConfig {
    double kappa = 1.0;
    double sigma = 0.7;
};

struct DecisionParams {
    double eta = 0.6;
    double theta = 0.88;
    double delta = 0.3;
};

enum class Region { pos, bnd, neg };

const char* region_name(Region r);

struct ExpectedUtility {
    double accept = 0.0;
    double defer = 0.0;
    double reject = 0.0;
};

struct AlternativeEval {
    std::string id;
    double membership = 0.0;
    double probability = 0.0;
    ComprehensiveUtility utility;
    ExpectedUtility expected;
    Region region = Region::bnd;
};

struct GranularLevel {
    std::size_t index = 0;  // 1-based
    std::vector<std::string> universe;
    std::vector<std::string> attributes;
    LevelConfig config;
    FusedTable fused;
    SimilarityMatrix similarity;
    std::vector<Granule> granules;
    std::vector<AlternativeEval> evals;  // aligned with universe
    std::vector<std::string> pos;
    std::vector<std::string> bnd;
    std::vector<std::string> neg;

    const AlternativeEval* find(const std::string& id) const;
};

struct AlternativeOutcome {
    std::string id;
    std::size_t exit_level = 0;
    Region final_region = Region::bnd;
    double rank_key = 0.0;
};

struct DecisionReport {
    std::vector<std::string> alternatives;
    NestedSubsets subsets;
    DecisionParams params;
    std::vector<GranularLevel> levels;
    std::vector<AlternativeOutcome> outcomes;  // input order
};

enum class NegDirection { descending, ascending };
enum class BoundaryKey { expected_accept, expected_defer };

struct RankPolicy {
    NegDirection neg_direction = NegDirection::descending;
    BoundaryKey boundary_key = BoundaryKey::expected_accept;
};

struct SequentialOptions {
    std::vector<LevelConfig> levels;
    DecisionParams params;
    bool monotonicity_override = false;
    kernels::Exec exec = kernels::Exec::serial;
    // Replaces the weight-derived nested subsets when set.
    std::optional<NestedSubsets> subsets;
};

void validate_params(const DecisionParams& params);
void validate_levels(const std::vector<LevelConfig>& levels, bool monotonicity_override);
void validate_subsets(const NestedSubsets& subsets, const std::vector<AttributeSpec>& attrs);

ExpectedUtility expected_perceived_utility(const ComprehensiveUtility& v, double pr);
Region classify(const ExpectedUtility& e);

// The table's rows are the level's universe; z selects its columns.
GranularLevel run_level(const FusedTable& table, const std::vector<AttributeSpec>& attrs,
                        const std::vector<std::string>& z, const LevelConfig& cfg,
                        const DecisionParams& params, const Scale& scale,
                        kernels::Exec exec = kernels::Exec::serial);

DecisionReport run_sequential(const std::vector<ExpertTable>& tables,
                              const std::vector<AttributeSpec>& attrs, const Scale& scale,
                              const SequentialOptions& options);

// Ranking with the information available after `after_level` (1-based; default: last level).
std::vector<std::string> rank(const DecisionReport& report, const RankPolicy& policy,
                              std::optional<std::size_t> after_level = std::nullopt);

struct BaselineEntry {
    std::string id;
    double score = 0.0;
};

std::vector<BaselineEntry> baseline_scores(const std::vector<ExpertTable>& tables,
                                           const std::vector<AttributeSpec>& attrs,
                                           const Scale& scale);
std::vector<std::string> baseline_full_fusion(const std::vector<ExpertTable>& tables,
                                              const std::vector<AttributeSpec>& attrs,
                                              const Scale& scale);

}  // namespace s3w
