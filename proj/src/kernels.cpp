#include "s3w/kernels.hpp"

#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "s3w/errors.hpp"

namespace s3w::kernels {

namespace {

void check_sigma(double sigma) {
    if (!(sigma > 0.0) || !std::isfinite(sigma))
        throw DomainError("kernel width sigma must be > 0, got " + format_number(sigma));
}

inline double pair_kernel(const double* x, const double* y, std::size_t q, double denom) {
    double sum = 0.0;
    for (std::size_t k = 0; k < q; ++k) {
        const double d = x[k] - y[k];
        sum += d * d;
    }
    return std::exp(-sum / denom);
}

inline Term fuse_cell(const std::vector<ExpertTable>& tables, std::size_t r, std::size_t c) {
    Term acc{0.0, 0.0};
    for (const auto& t : tables) {
        const Term le = expected_term(t.cells(r, c));
        acc.phi += t.expert_weight * le.phi;
        acc.varphi += t.expert_weight * le.varphi;
    }
    return acc;
}

}  // namespace

Matrix<double> gradus_profiles_serial(const FusedTable& table, const std::vector<std::size_t>& cols,
                                      const Scale& scale) {
    const std::size_t n = table.cells.rows();
    Matrix<double> out(n, cols.size());
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t k = 0; k < cols.size(); ++k)
            out(r, k) = superior_gradus(table.cells(r, cols[k]), scale);
    return out;
}

Matrix<double> gradus_profiles_parallel(const FusedTable& table,
                                        const std::vector<std::size_t>& cols, const Scale& scale) {
    const auto n = static_cast<long>(table.cells.rows());
    Matrix<double> out(table.cells.rows(), cols.size());
#pragma omp parallel for schedule(static)
    for (long r = 0; r < n; ++r)
        for (std::size_t k = 0; k < cols.size(); ++k)
            out(r, k) = superior_gradus(table.cells(r, cols[k]), scale);
    return out;
}

Matrix<double> similarity_serial(const Matrix<double>& profiles, double sigma) {
    check_sigma(sigma);
    const std::size_t n = profiles.rows();
    const std::size_t q = profiles.cols();
    const double denom = 2.0 * sigma * sigma;
    Matrix<double> out(n, n, 1.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double k = pair_kernel(&profiles(i, 0), &profiles(j, 0), q, denom);
            out(i, j) = k;
            out(j, i) = k;
        }
    }
    return out;
}

Matrix<double> similarity_parallel(const Matrix<double>& profiles, double sigma) {
    check_sigma(sigma);
    const std::size_t n = profiles.rows();
    const std::size_t q = profiles.cols();
    const double denom = 2.0 * sigma * sigma;
    Matrix<double> out(n, n, 1.0);
    if (q == 0) return out;
#pragma omp parallel for schedule(dynamic, 16)
    for (long i = 0; i < static_cast<long>(n); ++i) {
        const auto ui = static_cast<std::size_t>(i);
        for (std::size_t j = ui + 1; j < n; ++j) {
            const double k = pair_kernel(&profiles(ui, 0), &profiles(j, 0), q, denom);
            out(ui, j) = k;
            out(j, ui) = k;
        }
    }
    return out;
}

FusedTable fuse_serial(const std::vector<ExpertTable>& tables) { return fuse_dhhflmwa(tables); }

FusedTable fuse_parallel(const std::vector<ExpertTable>& tables) {
    FusedTable out = prepare_fusion(tables);
    const auto cols = out.cells.cols();
    const auto total = static_cast<long>(out.cells.rows() * cols);
#pragma omp parallel for schedule(static)
    for (long i = 0; i < total; ++i) {
        const auto r = static_cast<std::size_t>(i) / cols;
        const auto c = static_cast<std::size_t>(i) % cols;
        out.cells(r, c) = fuse_cell(tables, r, c);
    }
    return out;
}

Matrix<double> gradus_profiles(Exec exec, const FusedTable& table,
                               const std::vector<std::size_t>& cols, const Scale& scale) {
    return exec == Exec::parallel ? gradus_profiles_parallel(table, cols, scale)
                                  : gradus_profiles_serial(table, cols, scale);
}

Matrix<double> similarity(Exec exec, const Matrix<double>& profiles, double sigma) {
    return exec == Exec::parallel ? similarity_parallel(profiles, sigma)
                                  : similarity_serial(profiles, sigma);
}

FusedTable fuse(Exec exec, const std::vector<ExpertTable>& tables) {
    return exec == Exec::parallel ? fuse_parallel(tables) : fuse_serial(tables);
}

int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace s3w::kernels
