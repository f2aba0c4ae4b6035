#pragma once

#include <map>
#include <string>
#include <vector>

#include "s3w/linguistic.hpp"
#include "s3w/matrix.hpp"

namespace s3w {

enum class AttributeKind { benefit, cost };

struct AttributeSpec {
    std::string id;
    double weight = 0.0;
    AttributeKind kind = AttributeKind::benefit;
    bool align_with_concept = true;
};

struct ExpertTable {
    std::string expert_id;
    double expert_weight = 0.0;
    std::vector<std::string> alternatives;
    std::vector<std::string> attributes;
    Matrix<Element> cells;
};

// Every cell holds exactly one term.
struct FusedTable {
    std::vector<std::string> alternatives;
    std::vector<std::string> attributes;
    Matrix<Term> cells;
    std::vector<std::pair<std::string, double>> provenance;

    std::size_t row_of(const std::string& alt) const;
    std::size_t col_of(const std::string& attr) const;
};

using NestedSubsets = std::vector<std::vector<std::string>>;
using AttributeWeights = std::map<std::string, double>;

inline constexpr double kWeightSumTol = 1e-6;
inline constexpr double kWeightTieTol = 1e-9;

void validate_attributes(const std::vector<AttributeSpec>& attrs);
void validate_expert_tables(const std::vector<ExpertTable>& tables, const Scale& scale);

NestedSubsets build_nested_subsets(const std::vector<AttributeSpec>& attrs);

ExpertTable extract(const ExpertTable& table, const std::vector<std::string>& universe,
                    const std::vector<std::string>& z);

// Validated, zero-filled output for fusing the given tables.
FusedTable prepare_fusion(const std::vector<ExpertTable>& tables);

FusedTable fuse_dhhflmwa(const std::vector<ExpertTable>& tables);

// Weighted average via the gamma-space laws: (+)_j w_j * le(h_j).
FusedTable fuse_dhhflmwa_gamma(const std::vector<ExpertTable>& tables, const Scale& scale);

AttributeWeights renormalize_weights(const std::vector<AttributeSpec>& attrs,
                                     const std::vector<std::string>& z);

FusedTable orient_to_concept(const FusedTable& table, const std::vector<AttributeSpec>& attrs,
                             const Scale& scale);

}  // namespace s3w
