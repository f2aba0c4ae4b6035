#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "s3w/case_io.hpp"
#include "s3w/engine.hpp"

namespace s3w {

struct RunMetadata {
    bool deterministic = true;
    int threads = 1;
    double total_ms = 0.0;
};

nlohmann::json fused_table_to_json(const FusedTable& table);

nlohmann::json report_to_json(const DecisionReport& report, const ParamsData& params,
                              const std::vector<BaselineEntry>& baseline, const RunMetadata& meta);

// Empty when the document has the report shape.
std::vector<std::string> validate_report_json(const nlohmann::json& j);

// Human-readable tables, 6 significant digits.
void print_report(std::ostream& os, const DecisionReport& report, const RankPolicy& policy);
void print_ranking(std::ostream& os, const std::string& title, const std::vector<std::string>& ids);

}  // namespace s3w
