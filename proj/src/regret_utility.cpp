#include "s3w/regret_utility.hpp"

#include <algorithm>
#include <cmath>

#include "s3w/errors.hpp"

namespace s3w {

const char* cell_name(Cell c) {
    switch (c) {
        case Cell::PP: return "PP";
        case Cell::BP: return "BP";
        case Cell::NP: return "NP";
        case Cell::PN: return "PN";
        case Cell::BN: return "BN";
        case Cell::NN: return "NN";
    }
    return "?";
}

GainUnit build_gain_unit(const Element& cell, double eta, const Scale& scale) {
    if (!(eta >= 0.0 && eta <= 1.0))
        throw DomainError("eta must lie in [0,1], got " + format_number(eta));
    if (cell.size() != 1) throw LengthMismatch("gain unit needs a single-term cell");
    GainUnit unit;
    unit[Cell::PP] = cell;
    unit[Cell::BP] = scalar_mul(eta, cell, scale);
    unit[Cell::NN] = complement(cell, scale);
    unit[Cell::BN] = scalar_mul(eta, *unit[Cell::NN], scale);
    return unit;
}

SimplifiedGainUnit simplify_gain_unit(const GainUnit& unit, const Scale& scale) {
    SimplifiedGainUnit b;
    for (Cell c : kAllCells)
        b[c] = unit[c] ? std::clamp(superior_gradus(*unit[c], scale), 0.0, 1.0) : 0.0;
    return b;
}

double utility(double b, double theta) {
    if (!(b >= 0.0 && b <= 1.0)) throw DomainError("gain must lie in [0,1], got " + format_number(b));
    if (!(theta > 0.0 && theta < 1.0))
        throw DomainError("theta must lie in (0,1), got " + format_number(theta));
    return std::pow(b, theta);
}

double regret_rejoice(double delta_u, double delta) {
    if (!(delta >= 0.0) || !std::isfinite(delta))
        throw DomainError("delta must be >= 0, got " + format_number(delta));
    return 1.0 - std::exp(-delta * delta_u);
}

std::vector<PerceivedUtilityUnit> perceived_utility_units(
    const std::vector<SimplifiedGainUnit>& units, double theta, double delta) {
    if (units.empty()) throw DomainError("perceived utility needs at least one alternative");
    std::vector<CellArray<double>> u(units.size());
    CellArray<double> best;
    for (Cell c : kAllCells) best[c] = 0.0;
    for (std::size_t p = 0; p < units.size(); ++p) {
        for (Cell c : kAllCells) {
            u[p][c] = utility(units[p][c], theta);
            best[c] = std::max(best[c], u[p][c]);
        }
    }
    std::vector<PerceivedUtilityUnit> out(units.size());
    for (std::size_t p = 0; p < units.size(); ++p)
        for (Cell c : kAllCells) out[p][c] = u[p][c] + regret_rejoice(u[p][c] - best[c], delta);
    return out;
}

ComprehensiveUtility comprehensive_utility(
    const std::map<std::string, PerceivedUtilityUnit>& per_attribute,
    const AttributeWeights& weights) {
    if (per_attribute.size() != weights.size())
        throw ConfigError("utility units and weights cover different attributes");
    ComprehensiveUtility out;
    for (Cell c : kAllCells) out[c] = 0.0;
    for (const auto& [id, unit] : per_attribute) {
        auto it = weights.find(id);
        if (it == weights.end()) throw ConfigError("no weight for attribute '" + id + "'");
        for (Cell c : kAllCells) out[c] += it->second * unit[c];
    }
    return out;
}

}  // namespace s3w
