#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "s3w/decision_model.hpp"
#include "s3w/kernels.hpp"
#include "s3w/matrix.hpp"

namespace s3w {

struct SimilarityMatrix {
    std::vector<std::string> ids;
    double sigma = 0.0;
    Matrix<double> values;

    std::size_t size() const noexcept { return ids.size(); }
    double operator()(std::size_t i, std::size_t j) const { return values(i, j); }
};

// Indices refer to the universe of the matrix the granule was cut from.
struct Granule {
    std::size_t center = 0;
    std::vector<std::size_t> members;
    double kappa = 0.0;
};

struct ConceptMembership {
    std::vector<std::string> ids;
    std::vector<double> values;

    double at(const std::string& id) const;
};

double kernel_similarity(std::span<const double> sg_x, std::span<const double> sg_y, double sigma);
double kernel_similarity(const FusedTable& table, std::size_t x, std::size_t y,
                         const std::vector<std::string>& z, double sigma, const Scale& scale);

SimilarityMatrix build_similarity_matrix(const FusedTable& table, const std::vector<std::string>& z,
                                         double sigma, const Scale& scale,
                                         kernels::Exec exec = kernels::Exec::serial);

std::vector<Granule> cut_granules(const SimilarityMatrix& sim, double kappa);

ConceptMembership concept_membership(const FusedTable& table, const std::vector<std::string>& z,
                                     const AttributeWeights& weights, const Scale& scale);

// Mean membership over the granule, summed in id order.
double conditional_probability(const Granule& granule, const ConceptMembership& membership);

void write_similarity_csv(std::ostream& os, const SimilarityMatrix& sim);

}  // namespace s3w
