#pragma once

#include <cstddef>
#include <vector>

#include "s3w/decision_model.hpp"
#include "s3w/matrix.hpp"

namespace s3w::kernels {

enum class Exec { serial, parallel };

// Superior-gradus profile: rows = table rows, columns = the given column indices.
Matrix<double> gradus_profiles_serial(const FusedTable& table, const std::vector<std::size_t>& cols,
                                      const Scale& scale);
Matrix<double> gradus_profiles_parallel(const FusedTable& table,
                                        const std::vector<std::size_t>& cols, const Scale& scale);

// Gaussian kernel over profile rows; diagonal forced to 1.
Matrix<double> similarity_serial(const Matrix<double>& profiles, double sigma);
Matrix<double> similarity_parallel(const Matrix<double>& profiles, double sigma);

FusedTable fuse_serial(const std::vector<ExpertTable>& tables);
FusedTable fuse_parallel(const std::vector<ExpertTable>& tables);

Matrix<double> gradus_profiles(Exec exec, const FusedTable& table,
                               const std::vector<std::size_t>& cols, const Scale& scale);
Matrix<double> similarity(Exec exec, const Matrix<double>& profiles, double sigma);
FusedTable fuse(Exec exec, const std::vector<ExpertTable>& tables);

int max_threads();

}  // namespace s3w::kernels
