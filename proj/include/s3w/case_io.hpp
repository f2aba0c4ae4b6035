#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "s3w/decision_model.hpp"
#include "s3w/engine.hpp"

namespace s3w {

struct CaseData {
    Scale scale;
    std::vector<std::string> alternatives;
    std::vector<AttributeSpec> attributes;
    std::vector<ExpertTable> experts;
};

struct ParamsData {
    DecisionParams params;
    std::vector<LevelConfig> levels;
    RankPolicy rank;
    bool monotonicity_override = false;
};

// Input that failed validation; carries every problem found.
class ValidationFailed : public std::runtime_error {
public:
    explicit ValidationFailed(std::vector<std::string> problems);
    const std::vector<std::string>& problems() const noexcept { return problems_; }

private:
    std::vector<std::string> problems_;
};

// Parse errors are reported with line and column.
nlohmann::json parse_json_text(const std::string& text, const std::string& origin);
nlohmann::json read_json_file(const std::string& path);

// Each problem is appended to `problems`; the result is meaningful only when none were added.
CaseData case_from_json(const nlohmann::json& j, std::vector<std::string>& problems);
ParamsData params_from_json(const nlohmann::json& j, std::vector<std::string>& problems);

CaseData load_case_file(const std::string& path);
// force_override behaves as if the file set monotonicity_override.
ParamsData load_params_file(const std::string& path, bool force_override = false);

nlohmann::json case_to_json(const CaseData& c);
nlohmann::json params_to_json(const ParamsData& p);

// Truncates, or repeats the last level, to get exactly n levels.
std::vector<LevelConfig> resize_levels(std::vector<LevelConfig> levels, std::size_t n);

}  // namespace s3w
