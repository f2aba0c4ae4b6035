#include "s3w/sweep.hpp"

#include <charconv>
#include <cmath>
#include <exception>
#include <ostream>

#include "s3w/errors.hpp"

namespace s3w {

namespace {

double parse_double(std::string_view s, std::string_view whole) {
    double v = 0.0;
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || res.ec != std::errc{} || res.ptr != s.data() + s.size() || !std::isfinite(v))
        throw ConfigError("bad grid range '" + std::string(whole) + "'");
    return v;
}

double tidy(double v) { return std::round(v * 1e12) / 1e12; }

}  // namespace

std::vector<double> GridRange::values() const {
    if (!(step > 0.0)) throw ConfigError("grid step must be > 0");
    if (stop < start) throw ConfigError("grid stop lies below start");
    std::vector<double> out;
    for (std::size_t i = 0;; ++i) {
        const double v = start + static_cast<double>(i) * step;
        if (v > stop + 1e-9 * step) break;
        out.push_back(tidy(v));
    }
    return out;
}

GridRange parse_range(std::string_view text) {
    std::vector<std::string_view> parts;
    std::size_t from = 0;
    while (true) {
        const auto colon = text.find(':', from);
        parts.push_back(text.substr(from, colon == std::string_view::npos ? colon : colon - from));
        if (colon == std::string_view::npos) break;
        from = colon + 1;
    }
    if (parts.size() == 1) {
        const double v = parse_double(parts[0], text);
        return {v, v, 1.0};
    }
    if (parts.size() != 3) throw ConfigError("grid range '" + std::string(text) + "' is not start:stop:step");
    GridRange r{parse_double(parts[0], text), parse_double(parts[1], text),
                parse_double(parts[2], text)};
    r.values();
    return r;
}

std::vector<LevelCounts> level_counts(const DecisionReport& report, std::size_t level_count) {
    std::vector<LevelCounts> out;
    std::size_t pos = 0, neg = 0, bnd = report.alternatives.size();
    for (std::size_t i = 0; i < level_count; ++i) {
        if (i < report.levels.size()) {
            const auto& l = report.levels[i];
            pos += l.pos.size();
            neg += l.neg.size();
            bnd = l.bnd.size();
        }
        out.push_back({pos, bnd, neg});
    }
    return out;
}

std::vector<SweepRow> run_sweep(const CaseData& data, const ParamsData& params,
                                const SweepSpec& spec, kernels::Exec exec) {
    if (params.levels.empty()) throw ConfigError("level list is empty");
    const std::vector<double> sigmas =
        spec.sigma ? spec.sigma->values() : std::vector<double>{params.levels.front().sigma};
    const std::vector<double> kappas =
        spec.kappa ? spec.kappa->values() : std::vector<double>{params.levels.front().kappa};
    const std::vector<double> etas =
        spec.eta ? spec.eta->values() : std::vector<double>{params.params.eta};
    if (sigmas.empty() || kappas.empty() || etas.empty()) throw ConfigError("sweep grid is empty");
    for (double s : sigmas)
        if (!(s > 0.0)) throw ConfigError("grid sigma must be > 0, got " + format_number(s));
    for (double k : kappas)
        if (!(k >= 0.0 && k <= 1.0)) throw ConfigError("grid kappa outside [0,1]: " + format_number(k));
    for (double e : etas)
        if (!(e >= 0.0 && e <= 1.0)) throw ConfigError("grid eta outside [0,1]: " + format_number(e));

    std::vector<SweepRow> rows;
    for (double s : sigmas)
        for (double k : kappas)
            for (double e : etas) rows.push_back({s, k, e, {}, {}});

    const std::size_t level_count = params.levels.size();
    std::vector<std::exception_ptr> errors(rows.size());
#pragma omp parallel for schedule(dynamic) if (exec == kernels::Exec::parallel)
    for (long i = 0; i < static_cast<long>(rows.size()); ++i) {
        auto& row = rows[static_cast<std::size_t>(i)];
        try {
            SequentialOptions opt;
            opt.params = params.params;
            opt.params.eta = row.eta;
            opt.levels = params.levels;
            for (auto& l : opt.levels) {
                if (spec.sigma) l.sigma = row.sigma;
                if (spec.kappa) l.kappa = row.kappa;
            }
            opt.monotonicity_override = params.monotonicity_override;
            opt.exec = kernels::Exec::serial;
            const DecisionReport report = run_sequential(data.experts, data.attributes, data.scale, opt);
            row.counts = level_counts(report, level_count);
            row.ranking = rank(report, params.rank);
        } catch (...) {
            errors[static_cast<std::size_t>(i)] = std::current_exception();
        }
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    return rows;
}

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows, std::size_t level_count) {
    os << "sigma,kappa,eta";
    for (std::size_t i = 1; i <= level_count; ++i)
        os << ",pos_" << i << ",bnd_" << i << ",neg_" << i;
    os << ",ranking\n";
    for (const auto& r : rows) {
        os << format_number(r.sigma) << ',' << format_number(r.kappa) << ',' << format_number(r.eta);
        for (const auto& c : r.counts) os << ',' << c[0] << ',' << c[1] << ',' << c[2];
        os << ',';
        for (std::size_t i = 0; i < r.ranking.size(); ++i) os << (i ? ">" : "") << r.ranking[i];
        os << '\n';
    }
}

}  // namespace s3w
