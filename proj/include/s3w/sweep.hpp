#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "s3w/case_io.hpp"
#include "s3w/engine.hpp"

namespace s3w {

struct GridRange {
    double start = 0.0;
    double stop = 0.0;
    double step = 1.0;

    // Inclusive of stop (within 1e-9 of a step).
    std::vector<double> values() const;
};

// "start:stop:step", or a single value.
GridRange parse_range(std::string_view text);

struct SweepSpec {
    std::optional<GridRange> sigma;
    std::optional<GridRange> kappa;
    std::optional<GridRange> eta;
};

// Per level: accumulated POS, current BND, accumulated NEG.
using LevelCounts = std::array<std::size_t, 3>;

struct SweepRow {
    double sigma = 0.0;
    double kappa = 0.0;
    double eta = 0.0;
    std::vector<LevelCounts> counts;
    std::vector<std::string> ranking;
};

std::vector<LevelCounts> level_counts(const DecisionReport& report, std::size_t level_count);

std::vector<SweepRow> run_sweep(const CaseData& data, const ParamsData& params,
                                const SweepSpec& spec, kernels::Exec exec);

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows, std::size_t level_count);

}  // namespace s3w
