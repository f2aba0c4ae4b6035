#include "s3w/decision_model.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <unordered_map>

#include "s3w/errors.hpp"

namespace s3w {

namespace {

std::size_t index_of(const std::vector<std::string>& ids, const std::string& id,
                     const char* what) {
    auto it = std::find(ids.begin(), ids.end(), id);
    if (it == ids.end()) throw UnknownId(std::string("unknown ") + what + " '" + id + "'");
    return static_cast<std::size_t>(it - ids.begin());
}

// Positions of the requested ids, in table order.
std::vector<std::size_t> select(const std::vector<std::string>& ids,
                                const std::vector<std::string>& wanted, const char* what) {
    std::vector<bool> keep(ids.size(), false);
    for (const auto& w : wanted) keep[index_of(ids, w, what)] = true;
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < ids.size(); ++i)
        if (keep[i]) out.push_back(i);
    return out;
}

void check_fusable(const std::vector<ExpertTable>& tables) {
    if (tables.empty()) throw ConfigError("fusion needs at least one expert table");
    const auto& first = tables.front();
    double total = 0.0;
    for (const auto& t : tables) {
        if (t.cells.rows() != first.cells.rows() || t.cells.cols() != first.cells.cols() ||
            t.alternatives != first.alternatives || t.attributes != first.attributes)
            throw ShapeMismatch("expert table '" + t.expert_id + "' does not match '" +
                                first.expert_id + "' in shape or ids");
        total += t.expert_weight;
    }
    if (std::abs(total - 1.0) > kWeightSumTol)
        throw ConfigError("expert weights sum to " + format_number(total) + ", expected 1");
}

}  // namespace

FusedTable prepare_fusion(const std::vector<ExpertTable>& tables) {
    check_fusable(tables);
    const auto& first = tables.front();
    FusedTable out;
    out.alternatives = first.alternatives;
    out.attributes = first.attributes;
    out.cells = Matrix<Term>(first.cells.rows(), first.cells.cols());
    for (const auto& t : tables) out.provenance.emplace_back(t.expert_id, t.expert_weight);
    return out;
}

std::size_t FusedTable::row_of(const std::string& alt) const {
    return index_of(alternatives, alt, "alternative");
}

std::size_t FusedTable::col_of(const std::string& attr) const {
    return index_of(attributes, attr, "attribute");
}

void validate_attributes(const std::vector<AttributeSpec>& attrs) {
    if (attrs.empty()) throw ConfigError("attribute list is empty");
    std::set<std::string> seen;
    double total = 0.0;
    for (const auto& a : attrs) {
        if (!seen.insert(a.id).second) throw ConfigError("duplicate attribute id '" + a.id + "'");
        if (!(a.weight >= 0.0 && a.weight <= 1.0))
            throw ConfigError("attribute '" + a.id + "' weight outside [0,1]");
        total += a.weight;
    }
    if (std::abs(total - 1.0) > kWeightSumTol)
        throw ConfigError("attribute weights sum to " + format_number(total) + ", expected 1");
}

void validate_expert_tables(const std::vector<ExpertTable>& tables, const Scale& scale) {
    check_fusable(tables);
    std::set<std::string> seen;
    for (const auto& t : tables) {
        if (!seen.insert(t.expert_id).second)
            throw ConfigError("duplicate expert id '" + t.expert_id + "'");
        if (!(t.expert_weight >= 0.0 && t.expert_weight <= 1.0))
            throw ConfigError("expert '" + t.expert_id + "' weight outside [0,1]");
        if (t.cells.rows() != t.alternatives.size() || t.cells.cols() != t.attributes.size())
            throw ShapeMismatch("expert '" + t.expert_id + "' table shape disagrees with its ids");
        for (std::size_t r = 0; r < t.cells.rows(); ++r)
            for (std::size_t c = 0; c < t.cells.cols(); ++c) validate_element(t.cells(r, c), scale);
    }
}

NestedSubsets build_nested_subsets(const std::vector<AttributeSpec>& attrs) {
    if (attrs.empty()) throw ConfigError("attribute list is empty");
    std::vector<double> levels;
    for (const auto& a : attrs) levels.push_back(a.weight);
    std::sort(levels.begin(), levels.end(), std::greater<>());
    std::vector<double> distinct;
    for (double w : levels)
        if (distinct.empty() || distinct.back() - w > kWeightTieTol) distinct.push_back(w);

    NestedSubsets out;
    for (double cut : distinct) {
        std::vector<std::string> z;
        for (const auto& a : attrs)
            if (a.weight >= cut - kWeightTieTol) z.push_back(a.id);
        out.push_back(std::move(z));
    }
    return out;
}

ExpertTable extract(const ExpertTable& table, const std::vector<std::string>& universe,
                    const std::vector<std::string>& z) {
    const auto rows = select(table.alternatives, universe, "alternative");
    const auto cols = select(table.attributes, z, "attribute");
    ExpertTable out;
    out.expert_id = table.expert_id;
    out.expert_weight = table.expert_weight;
    for (auto r : rows) out.alternatives.push_back(table.alternatives[r]);
    for (auto c : cols) out.attributes.push_back(table.attributes[c]);
    out.cells = Matrix<Element>(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) out.cells(i, j) = table.cells(rows[i], cols[j]);
    return out;
}

FusedTable fuse_dhhflmwa(const std::vector<ExpertTable>& tables) {
    FusedTable out = prepare_fusion(tables);
    for (std::size_t r = 0; r < out.cells.rows(); ++r) {
        for (std::size_t c = 0; c < out.cells.cols(); ++c) {
            Term acc{0.0, 0.0};
            for (const auto& t : tables) {
                const Term le = expected_term(t.cells(r, c));
                acc.phi += t.expert_weight * le.phi;
                acc.varphi += t.expert_weight * le.varphi;
            }
            out.cells(r, c) = acc;
        }
    }
    return out;
}

FusedTable fuse_dhhflmwa_gamma(const std::vector<ExpertTable>& tables, const Scale& scale) {
    FusedTable out = prepare_fusion(tables);
    for (std::size_t r = 0; r < out.cells.rows(); ++r) {
        for (std::size_t c = 0; c < out.cells.cols(); ++c) {
            HfeValue acc{0.0};
            for (const auto& t : tables) {
                const HfeValue le = to_hfe(linguistic_expected_value(t.cells(r, c)), scale);
                acc = hfe_add(acc, hfe_scalar_mul(t.expert_weight, le));
            }
            out.cells(r, c) = f_inverse(acc.front(), scale);
        }
    }
    return out;
}

AttributeWeights renormalize_weights(const std::vector<AttributeSpec>& attrs,
                                     const std::vector<std::string>& z) {
    if (z.empty()) throw ConfigError("attribute subset is empty");
    std::unordered_map<std::string, double> raw;
    for (const auto& a : attrs) raw[a.id] = a.weight;
    double total = 0.0;
    for (const auto& id : z) {
        auto it = raw.find(id);
        if (it == raw.end()) throw UnknownId("unknown attribute '" + id + "'");
        total += it->second;
    }
    if (!(total > 0.0)) throw ConfigError("attribute subset has zero total weight");
    AttributeWeights out;
    for (const auto& id : z) out[id] = raw[id] / total;
    return out;
}

FusedTable orient_to_concept(const FusedTable& table, const std::vector<AttributeSpec>& attrs,
                             const Scale& scale) {
    FusedTable out = table;
    for (const auto& a : attrs) {
        if (a.align_with_concept) continue;
        auto it = std::find(out.attributes.begin(), out.attributes.end(), a.id);
        if (it == out.attributes.end()) continue;
        const auto c = static_cast<std::size_t>(it - out.attributes.begin());
        for (std::size_t r = 0; r < out.cells.rows(); ++r)
            out.cells(r, c) = f_inverse(1.0 - f_scalar(out.cells(r, c), scale), scale);
    }
    return out;
}

}  // namespace s3w
