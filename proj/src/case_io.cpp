#include "s3w/case_io.hpp"

#include <cmath>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

#include "s3w/errors.hpp"

namespace s3w {

using nlohmann::json;

namespace {

std::string join_problems(const std::vector<std::string>& problems) {
    std::string out = std::to_string(problems.size()) + " validation problem(s)";
    for (const auto& p : problems) out += "\n  " + p;
    return out;
}

std::pair<std::size_t, std::size_t> line_col(const std::string& text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

// Small helper that records problems against a JSON path.
class Checker {
public:
    explicit Checker(std::vector<std::string>& problems) : problems_(problems) {}

    void fail(const std::string& path, const std::string& msg) {
        problems_.push_back(path + ": " + msg);
    }

    const json* member(const json& obj, const std::string& path, const char* key,
                       bool required = true) {
        if (!obj.is_object()) {
            fail(path, "expected an object");
            return nullptr;
        }
        auto it = obj.find(key);
        if (it == obj.end()) {
            if (required) fail(path, std::string("missing field '") + key + "'");
            return nullptr;
        }
        return &*it;
    }

    bool number(const json* v, const std::string& path, double& out) {
        if (!v) return false;
        if (!v->is_number()) {
            fail(path, "expected a number");
            return false;
        }
        out = v->get<double>();
        if (!std::isfinite(out)) {
            fail(path, "expected a finite number");
            return false;
        }
        return true;
    }

    bool string(const json* v, const std::string& path, std::string& out) {
        if (!v) return false;
        if (!v->is_string()) {
            fail(path, "expected a string");
            return false;
        }
        out = v->get<std::string>();
        return true;
    }

    bool boolean(const json* v, const std::string& path, bool& out) {
        if (!v) return false;
        if (!v->is_boolean()) {
            fail(path, "expected true or false");
            return false;
        }
        out = v->get<bool>();
        return true;
    }

    bool positive_int(const json* v, const std::string& path, int& out) {
        if (!v) return false;
        if (!v->is_number_integer() || v->get<long long>() < 1) {
            fail(path, "expected a positive integer");
            return false;
        }
        out = v->get<int>();
        return true;
    }

    std::size_t count() const { return problems_.size(); }

private:
    std::vector<std::string>& problems_;
};

std::optional<Element> read_cell(const json& cell, const std::string& path, const Scale& scale,
                                 Checker& ck) {
    try {
        if (cell.is_string()) return parse_element(cell.get<std::string>(), scale);
        if (cell.is_array()) {
            std::vector<Term> terms;
            for (std::size_t k = 0; k < cell.size(); ++k) {
                const std::string tp = path + "[" + std::to_string(k) + "]";
                Term t;
                bool ok = ck.number(ck.member(cell[k], tp, "phi"), tp + ".phi", t.phi);
                ok = ck.number(ck.member(cell[k], tp, "varphi"), tp + ".varphi", t.varphi) && ok;
                if (!ok) return std::nullopt;
                terms.push_back(t);
            }
            Element h(std::move(terms));
            validate_element(h, scale);
            return h;
        }
        ck.fail(path, "expected a term string or an array of {phi, varphi}");
    } catch (const ParseError& e) {
        ck.fail(path, std::string("syntax error: ") + e.what());
    } catch (const std::exception& e) {
        ck.fail(path, e.what());
    }
    return std::nullopt;
}

void check_weight_sum(double total, const std::string& path, Checker& ck) {
    if (std::abs(total - 1.0) > kWeightSumTol)
        ck.fail(path, "weights sum to " + format_number(total) + ", expected 1 (within 1e-6)");
}

}  // namespace

ValidationFailed::ValidationFailed(std::vector<std::string> problems)
    : std::runtime_error(join_problems(problems)), problems_(std::move(problems)) {}

json parse_json_text(const std::string& text, const std::string& origin) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        auto [line, col] = line_col(text, e.byte == 0 ? 0 : e.byte - 1);
        throw ValidationFailed({origin + ": JSON syntax error at line " + std::to_string(line) +
                                ", column " + std::to_string(col)});
    }
}

json read_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_json_text(ss.str(), path);
}

CaseData case_from_json(const json& j, std::vector<std::string>& problems) {
    Checker ck(problems);
    CaseData c;
    if (!j.is_object()) {
        ck.fail("$", "expected an object");
        return c;
    }

    bool scale_ok = false;
    if (const json* s = ck.member(j, "$", "scale")) {
        scale_ok = ck.positive_int(ck.member(*s, "scale", "tau"), "scale.tau", c.scale.tau);
        scale_ok = ck.positive_int(ck.member(*s, "scale", "sigma_scale"), "scale.sigma_scale",
                                   c.scale.sigma_scale) &&
                   scale_ok;
    }

    if (const json* alts = ck.member(j, "$", "alternatives")) {
        if (!alts->is_array() || alts->empty()) {
            ck.fail("alternatives", "expected a nonempty array of ids");
        } else {
            std::set<std::string> seen;
            for (std::size_t i = 0; i < alts->size(); ++i) {
                std::string id;
                const std::string p = "alternatives[" + std::to_string(i) + "]";
                if (!ck.string(&(*alts)[i], p, id)) continue;
                if (!seen.insert(id).second) ck.fail(p, "duplicate alternative id '" + id + "'");
                c.alternatives.push_back(id);
            }
        }
    }

    if (const json* attrs = ck.member(j, "$", "attributes")) {
        if (!attrs->is_array() || attrs->empty()) {
            ck.fail("attributes", "expected a nonempty array");
        } else {
            std::set<std::string> seen;
            double total = 0.0;
            for (std::size_t i = 0; i < attrs->size(); ++i) {
                const std::string p = "attributes[" + std::to_string(i) + "]";
                const json& a = (*attrs)[i];
                AttributeSpec spec;
                if (ck.string(ck.member(a, p, "id"), p + ".id", spec.id) &&
                    !seen.insert(spec.id).second)
                    ck.fail(p + ".id", "duplicate attribute id '" + spec.id + "'");
                if (ck.number(ck.member(a, p, "weight"), p + ".weight", spec.weight)) {
                    if (spec.weight < 0.0 || spec.weight > 1.0) ck.fail(p + ".weight", "outside [0,1]");
                    total += spec.weight;
                }
                std::string kind = "benefit";
                if (const json* k = ck.member(a, p, "kind", false); k && ck.string(k, p + ".kind", kind)) {
                    if (kind == "benefit") spec.kind = AttributeKind::benefit;
                    else if (kind == "cost") spec.kind = AttributeKind::cost;
                    else ck.fail(p + ".kind", "expected \"benefit\" or \"cost\"");
                }
                if (const json* al = ck.member(a, p, "align_with_concept", false))
                    ck.boolean(al, p + ".align_with_concept", spec.align_with_concept);
                c.attributes.push_back(spec);
            }
            check_weight_sum(total, "attributes", ck);
        }
    }

    const json* experts = ck.member(j, "$", "experts");
    if (!experts) return c;
    if (!experts->is_array() || experts->empty()) {
        ck.fail("experts", "expected a nonempty array");
        return c;
    }
    std::set<std::string> seen;
    double total = 0.0;
    const std::size_t n = c.alternatives.size();
    const std::size_t m = c.attributes.size();
    std::vector<std::string> attr_ids;
    for (const auto& a : c.attributes) attr_ids.push_back(a.id);
    for (std::size_t e = 0; e < experts->size(); ++e) {
        const std::string p = "experts[" + std::to_string(e) + "]";
        const json& ex = (*experts)[e];
        ExpertTable t;
        if (ck.string(ck.member(ex, p, "id"), p + ".id", t.expert_id) &&
            !seen.insert(t.expert_id).second)
            ck.fail(p + ".id", "duplicate expert id '" + t.expert_id + "'");
        if (ck.number(ck.member(ex, p, "weight"), p + ".weight", t.expert_weight)) {
            if (t.expert_weight < 0.0 || t.expert_weight > 1.0) ck.fail(p + ".weight", "outside [0,1]");
            total += t.expert_weight;
        }
        t.alternatives = c.alternatives;
        t.attributes = attr_ids;
        t.cells = Matrix<Element>(n, m);
        const json* table = ck.member(ex, p, "table");
        if (!table) continue;
        if (!table->is_array() || table->size() != n) {
            ck.fail(p + ".table", "expected " + std::to_string(n) + " rows (one per alternative)");
            continue;
        }
        for (std::size_t r = 0; r < n; ++r) {
            const std::string rp = p + ".table[" + std::to_string(r) + "]";
            const json& row = (*table)[r];
            if (!row.is_array() || row.size() != m) {
                ck.fail(rp, "expected " + std::to_string(m) + " cells (one per attribute)");
                continue;
            }
            if (!scale_ok) continue;
            for (std::size_t q = 0; q < m; ++q) {
                const std::string cp = rp + "[" + std::to_string(q) + "]";
                if (auto h = read_cell(row[q], cp, c.scale, ck)) t.cells(r, q) = std::move(*h);
            }
        }
        c.experts.push_back(std::move(t));
    }
    check_weight_sum(total, "experts", ck);
    return c;
}

ParamsData params_from_json(const json& j, std::vector<std::string>& problems) {
    Checker ck(problems);
    ParamsData p;
    if (!j.is_object()) {
        ck.fail("$", "expected an object");
        return p;
    }
    if (ck.number(ck.member(j, "$", "eta"), "eta", p.params.eta) &&
        !(p.params.eta >= 0.0 && p.params.eta <= 1.0))
        ck.fail("eta", "must lie in [0,1]");
    if (ck.number(ck.member(j, "$", "theta"), "theta", p.params.theta) &&
        !(p.params.theta > 0.0 && p.params.theta < 1.0))
        ck.fail("theta", "must lie in (0,1)");
    if (ck.number(ck.member(j, "$", "delta"), "delta", p.params.delta) && p.params.delta < 0.0)
        ck.fail("delta", "must be >= 0");

    if (const json* o = ck.member(j, "$", "monotonicity_override", false))
        ck.boolean(o, "monotonicity_override", p.monotonicity_override);

    if (const json* levels = ck.member(j, "$", "levels")) {
        if (!levels->is_array() || levels->empty()) {
            ck.fail("levels", "expected a nonempty array of {kappa, sigma}");
        } else {
            const std::size_t before = ck.count();
            for (std::size_t i = 0; i < levels->size(); ++i) {
                const std::string lp = "levels[" + std::to_string(i) + "]";
                LevelConfig l;
                if (ck.number(ck.member((*levels)[i], lp, "kappa"), lp + ".kappa", l.kappa) &&
                    !(l.kappa >= 0.0 && l.kappa <= 1.0))
                    ck.fail(lp + ".kappa", "must lie in [0,1]");
                if (ck.number(ck.member((*levels)[i], lp, "sigma"), lp + ".sigma", l.sigma) &&
                    !(l.sigma > 0.0))
                    ck.fail(lp + ".sigma", "must be > 0");
                p.levels.push_back(l);
            }
            if (ck.count() == before) {
                try {
                    validate_levels(p.levels, p.monotonicity_override);
                } catch (const std::exception& e) {
                    ck.fail("levels", e.what());
                }
            }
        }
    }

    if (const json* r = ck.member(j, "$", "rank", false)) {
        std::string dir, key;
        if (const json* d = ck.member(*r, "rank", "neg_direction", false);
            d && ck.string(d, "rank.neg_direction", dir)) {
            if (dir == "desc") p.rank.neg_direction = NegDirection::descending;
            else if (dir == "asc") p.rank.neg_direction = NegDirection::ascending;
            else ck.fail("rank.neg_direction", "expected \"desc\" or \"asc\"");
        }
        if (const json* k = ck.member(*r, "rank", "key", false); k && ck.string(k, "rank.key", key)) {
            if (key == "expected_p") p.rank.boundary_key = BoundaryKey::expected_accept;
            else if (key == "expected_b") p.rank.boundary_key = BoundaryKey::expected_defer;
            else ck.fail("rank.key", "expected \"expected_p\" or \"expected_b\"");
        }
    }
    return p;
}

CaseData load_case_file(const std::string& path) {
    const json j = read_json_file(path);
    std::vector<std::string> problems;
    CaseData c = case_from_json(j, problems);
    if (!problems.empty()) throw ValidationFailed(std::move(problems));
    return c;
}

ParamsData load_params_file(const std::string& path, bool force_override) {
    json j = read_json_file(path);
    if (force_override && j.is_object()) j["monotonicity_override"] = true;
    std::vector<std::string> problems;
    ParamsData p = params_from_json(j, problems);
    if (!problems.empty()) throw ValidationFailed(std::move(problems));
    return p;
}

json case_to_json(const CaseData& c) {
    json j;
    j["scale"] = {{"tau", c.scale.tau}, {"sigma_scale", c.scale.sigma_scale}};
    j["alternatives"] = c.alternatives;
    j["attributes"] = json::array();
    for (const auto& a : c.attributes)
        j["attributes"].push_back({{"id", a.id},
                                   {"weight", a.weight},
                                   {"kind", a.kind == AttributeKind::cost ? "cost" : "benefit"},
                                   {"align_with_concept", a.align_with_concept}});
    j["experts"] = json::array();
    for (const auto& t : c.experts) {
        json rows = json::array();
        for (std::size_t r = 0; r < t.cells.rows(); ++r) {
            json row = json::array();
            for (std::size_t q = 0; q < t.cells.cols(); ++q) row.push_back(format_element(t.cells(r, q)));
            rows.push_back(std::move(row));
        }
        j["experts"].push_back({{"id", t.expert_id}, {"weight", t.expert_weight}, {"table", rows}});
    }
    return j;
}

json params_to_json(const ParamsData& p) {
    json j;
    j["eta"] = p.params.eta;
    j["theta"] = p.params.theta;
    j["delta"] = p.params.delta;
    j["levels"] = json::array();
    for (const auto& l : p.levels) j["levels"].push_back({{"kappa", l.kappa}, {"sigma", l.sigma}});
    j["rank"] = {
        {"neg_direction", p.rank.neg_direction == NegDirection::ascending ? "asc" : "desc"},
        {"key", p.rank.boundary_key == BoundaryKey::expected_defer ? "expected_b" : "expected_p"}};
    j["monotonicity_override"] = p.monotonicity_override;
    return j;
}

std::vector<LevelConfig> resize_levels(std::vector<LevelConfig> levels, std::size_t n) {
    if (n == 0) throw ConfigError("level count must be >= 1");
    if (levels.empty()) throw ConfigError("level list is empty");
    while (levels.size() < n) levels.push_back(levels.back());
    levels.resize(n);
    return levels;
}

}  // namespace s3w
