#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "s3w/decision_model.hpp"
#include "s3w/linguistic.hpp"

namespace s3w {

// Action (P accept, B defer, N reject) x state (concept holds / does not hold).
enum class Cell : std::size_t { PP, BP, NP, PN, BN, NN };

inline constexpr std::array<Cell, 6> kAllCells{Cell::PP, Cell::BP, Cell::NP,
                                               Cell::PN, Cell::BN, Cell::NN};

const char* cell_name(Cell c);

template <class T>
struct CellArray {
    std::array<T, 6> v{};

    T& operator[](Cell c) { return v[static_cast<std::size_t>(c)]; }
    const T& operator[](Cell c) const { return v[static_cast<std::size_t>(c)]; }
};

using GainUnit = CellArray<std::optional<Element>>;
using SimplifiedGainUnit = CellArray<double>;
using PerceivedUtilityUnit = CellArray<double>;
using ComprehensiveUtility = CellArray<double>;

GainUnit build_gain_unit(const Element& cell, double eta, const Scale& scale);
SimplifiedGainUnit simplify_gain_unit(const GainUnit& unit, const Scale& scale);

double utility(double b, double theta);
double regret_rejoice(double delta_u, double delta);

// One attribute, every alternative of the current universe.
std::vector<PerceivedUtilityUnit> perceived_utility_units(
    const std::vector<SimplifiedGainUnit>& units, double theta, double delta);

ComprehensiveUtility comprehensive_utility(
    const std::map<std::string, PerceivedUtilityUnit>& per_attribute,
    const AttributeWeights& weights);

}  // namespace s3w
