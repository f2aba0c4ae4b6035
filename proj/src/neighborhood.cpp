#include "s3w/neighborhood.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>

#include "s3w/errors.hpp"

namespace s3w {

namespace {

std::vector<std::size_t> column_indices(const FusedTable& table, const std::vector<std::string>& z) {
    std::vector<std::size_t> cols;
    cols.reserve(z.size());
    for (const auto& id : z) cols.push_back(table.col_of(id));
    return cols;
}

}  // namespace

double ConceptMembership::at(const std::string& id) const {
    auto it = std::find(ids.begin(), ids.end(), id);
    if (it == ids.end()) throw UnknownId("no membership for alternative '" + id + "'");
    return values[static_cast<std::size_t>(it - ids.begin())];
}

double kernel_similarity(std::span<const double> sg_x, std::span<const double> sg_y, double sigma) {
    if (!(sigma > 0.0) || !std::isfinite(sigma))
        throw DomainError("kernel width sigma must be > 0, got " + format_number(sigma));
    if (sg_x.size() != sg_y.size()) throw LengthMismatch("gradus profiles differ in length");
    double sum = 0.0;
    for (std::size_t k = 0; k < sg_x.size(); ++k) {
        const double d = sg_x[k] - sg_y[k];
        sum += d * d;
    }
    return std::exp(-sum / (2.0 * sigma * sigma));
}

double kernel_similarity(const FusedTable& table, std::size_t x, std::size_t y,
                         const std::vector<std::string>& z, double sigma, const Scale& scale) {
    std::vector<double> px, py;
    for (auto c : column_indices(table, z)) {
        px.push_back(superior_gradus(table.cells(x, c), scale));
        py.push_back(superior_gradus(table.cells(y, c), scale));
    }
    return kernel_similarity(px, py, sigma);
}

SimilarityMatrix build_similarity_matrix(const FusedTable& table, const std::vector<std::string>& z,
                                         double sigma, const Scale& scale, kernels::Exec exec) {
    const auto cols = column_indices(table, z);
    const auto profiles = kernels::gradus_profiles(exec, table, cols, scale);
    return {table.alternatives, sigma, kernels::similarity(exec, profiles, sigma)};
}

std::vector<Granule> cut_granules(const SimilarityMatrix& sim, double kappa) {
    if (!(kappa >= 0.0 && kappa <= 1.0))
        throw DomainError("kappa must lie in [0,1], got " + format_number(kappa));
    const std::size_t n = sim.size();
    std::vector<Granule> out(n);
    for (std::size_t x = 0; x < n; ++x) {
        out[x].center = x;
        out[x].kappa = kappa;
        for (std::size_t y = 0; y < n; ++y)
            if (x == y || sim(x, y) >= kappa) out[x].members.push_back(y);
    }
    return out;
}

ConceptMembership concept_membership(const FusedTable& table, const std::vector<std::string>& z,
                                     const AttributeWeights& weights, const Scale& scale) {
    double total = 0.0;
    for (const auto& id : z) {
        auto it = weights.find(id);
        if (it == weights.end()) throw ConfigError("no weight for attribute '" + id + "'");
        total += it->second;
    }
    if (std::abs(total - 1.0) > kWeightSumTol)
        throw ConfigError("membership weights sum to " + format_number(total) + ", expected 1");

    const auto cols = column_indices(table, z);
    ConceptMembership out{table.alternatives, std::vector<double>(table.cells.rows())};
    for (std::size_t r = 0; r < table.cells.rows(); ++r) {
        HfeValue acc{0.0};
        for (std::size_t k = 0; k < cols.size(); ++k) {
            const HfeValue g{f_scalar(table.cells(r, cols[k]), scale)};
            acc = hfe_add(acc, hfe_scalar_mul(weights.at(z[k]), g));
        }
        out.values[r] = acc.front();
    }
    return out;
}

double conditional_probability(const Granule& granule, const ConceptMembership& membership) {
    if (granule.members.empty()) throw DomainError("empty granule");
    std::vector<std::size_t> order = granule.members;
    for (auto m : order)
        if (m >= membership.values.size())
            throw UnknownId("granule member outside the membership universe");
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return membership.ids[a] < membership.ids[b];
    });
    double sum = 0.0;
    for (auto m : order) sum += membership.values[m];
    return std::clamp(sum / static_cast<double>(order.size()), 0.0, 1.0);
}

void write_similarity_csv(std::ostream& os, const SimilarityMatrix& sim) {
    os << "id";
    for (const auto& id : sim.ids) os << ',' << id;
    os << '\n' << std::setprecision(17);
    for (std::size_t i = 0; i < sim.size(); ++i) {
        os << sim.ids[i];
        for (std::size_t j = 0; j < sim.size(); ++j) os << ',' << sim(i, j);
        os << '\n';
    }
}

}  // namespace s3w
