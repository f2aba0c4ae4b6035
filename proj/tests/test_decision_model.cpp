#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "generators.hpp"
#include "s3w/decision_model.hpp"
#include "s3w/errors.hpp"

using namespace s3w;
using doctest::Approx;

namespace {

const Scale k33{3, 3};

std::vector<AttributeSpec> sle_attributes() {
    const double w[] = {0.2, 0.3, 0.15, 0.1, 0.1, 0.15};
    std::vector<AttributeSpec> out;
    for (int i = 0; i < 6; ++i)
        out.push_back({"a" + std::to_string(i + 1), w[i], AttributeKind::cost, true});
    return out;
}

ExpertTable one_cell(const std::string& id, double weight, Element h) {
    ExpertTable t;
    t.expert_id = id;
    t.expert_weight = weight;
    t.alternatives = {"x1"};
    t.attributes = {"a1"};
    t.cells = Matrix<Element>(1, 1);
    t.cells(0, 0) = std::move(h);
    return t;
}

}  // namespace

TEST_CASE("nested subsets follow weight order with tie groups") {
    const auto z = build_nested_subsets(sle_attributes());
    REQUIRE(z.size() == 4);
    CHECK(z[0] == std::vector<std::string>{"a2"});
    CHECK(z[1] == std::vector<std::string>{"a1", "a2"});
    CHECK(z[2] == std::vector<std::string>{"a1", "a2", "a3", "a6"});
    CHECK(z[3] == std::vector<std::string>{"a1", "a2", "a3", "a4", "a5", "a6"});

    std::vector<AttributeSpec> equal{{"p", 0.25}, {"q", 0.25}, {"r", 0.25}, {"s", 0.25}};
    const auto single = build_nested_subsets(equal);
    REQUIRE(single.size() == 1);
    CHECK(single[0].size() == 4);

    std::vector<AttributeSpec> distinct{{"b", 0.3}, {"a", 0.5}, {"c", 0.2}};
    const auto three = build_nested_subsets(distinct);
    REQUIRE(three.size() == 3);
    CHECK(three[0] == std::vector<std::string>{"a"});
    CHECK(three[1] == std::vector<std::string>{"b", "a"});
    CHECK(three[2].size() == 3);

    CHECK_THROWS_AS(build_nested_subsets({}), ConfigError);
}

TEST_CASE("nested subsets are nested and end with all attributes") {
    testgen::Rng rng(21);
    for (int i = 0; i < 200; ++i) {
        const std::size_t m = rng.index(1, 8);
        std::vector<AttributeSpec> attrs;
        for (std::size_t q = 0; q < m; ++q)
            attrs.push_back({"a" + std::to_string(q), double(rng.integer(1, 4)) / 10.0});
        const auto z = build_nested_subsets(attrs);
        for (std::size_t k = 1; k < z.size(); ++k) {
            CHECK(z[k].size() > z[k - 1].size());
            for (const auto& id : z[k - 1])
                CHECK(std::find(z[k].begin(), z[k].end(), id) != z[k].end());
        }
        CHECK(z.back().size() == m);
    }
}

TEST_CASE("extract restricts rows and columns") {
    testgen::Rng rng(3);
    CaseData c = testgen::random_case(rng, 8, 5, 1);
    const ExpertTable& h = c.experts.front();
    const auto& alts = c.alternatives;
    std::vector<std::string> attrs = h.attributes;

    const ExpertTable same = extract(h, alts, attrs);
    REQUIRE(same.cells.rows() == h.cells.rows());
    REQUIRE(same.cells.cols() == h.cells.cols());
    for (std::size_t r = 0; r < h.cells.rows(); ++r)
        for (std::size_t q = 0; q < h.cells.cols(); ++q)
            CHECK(same_terms(same.cells(r, q), h.cells(r, q), 0.0));
    CHECK(same.alternatives == h.alternatives);
    CHECK(same.attributes == h.attributes);

    std::vector<std::string> sub_u;
    for (std::size_t i = 0; i < alts.size(); i += 2) sub_u.push_back(alts[i]);
    std::vector<std::string> sub_z{attrs.back()};
    const ExpertTable a = extract(extract(h, sub_u, attrs), sub_u, sub_z);
    const ExpertTable b = extract(h, sub_u, sub_z);
    REQUIRE(a.cells.rows() == b.cells.rows());
    REQUIRE(a.cells.cols() == 1);
    for (std::size_t r = 0; r < a.cells.rows(); ++r)
        CHECK(same_terms(a.cells(r, 0), b.cells(r, 0), 0.0));
    CHECK(a.expert_weight == h.expert_weight);

    CHECK_THROWS_AS(extract(h, {"nope"}, attrs), UnknownId);
    CHECK_THROWS_AS(extract(h, alts, {"nope"}), UnknownId);
}

TEST_CASE("fusion closed form") {
    const std::vector<ExpertTable> tables{one_cell("E1", 0.5, Element{{2, 0}}),
                                          one_cell("E2", 0.3, Element{{-1, 2}}),
                                          one_cell("E3", 0.2, Element{{1, 0}})};
    const FusedTable f = fuse_dhhflmwa(tables);
    CHECK(f.cells(0, 0).phi == Approx(0.9).epsilon(1e-12));
    CHECK(f.cells(0, 0).varphi == Approx(0.6).epsilon(1e-12));
    REQUIRE(f.provenance.size() == 3);
    CHECK(f.provenance[1].first == "E2");

    const FusedTable solo = fuse_dhhflmwa({one_cell("E", 1.0, Element{{1, -1}, {1, -2}})});
    CHECK(solo.cells(0, 0).phi == 1.0);
    CHECK(solo.cells(0, 0).varphi == -1.5);

    const Element same{{2, 1}, {0, -1}};
    const FusedTable eq = fuse_dhhflmwa({one_cell("A", 0.4, same), one_cell("B", 0.6, same)});
    CHECK(eq.cells(0, 0).phi == Approx(1.0));
    CHECK(eq.cells(0, 0).varphi == Approx(0.0));

    CHECK_THROWS_AS(fuse_dhhflmwa({}), ConfigError);
    CHECK_THROWS_AS(fuse_dhhflmwa({one_cell("A", 0.5, same), one_cell("B", 0.3, same)}),
                    ConfigError);
    ExpertTable wide = one_cell("B", 0.5, same);
    wide.attributes = {"zz"};
    CHECK_THROWS_AS(fuse_dhhflmwa({one_cell("A", 0.5, same), wide}), ShapeMismatch);
}

TEST_CASE("fused subscripts stay inside the expert envelope") {
    testgen::Rng rng(8);
    for (int i = 0; i < 100; ++i) {
        const CaseData c = testgen::random_case(rng, 6, 4, 4);
        const FusedTable f = fuse_dhhflmwa(c.experts);
        for (std::size_t r = 0; r < f.cells.rows(); ++r) {
            for (std::size_t q = 0; q < f.cells.cols(); ++q) {
                double lo_p = 1e9, hi_p = -1e9, lo_v = 1e9, hi_v = -1e9;
                for (const auto& t : c.experts) {
                    const Term le = expected_term(t.cells(r, q));
                    lo_p = std::min(lo_p, le.phi);
                    hi_p = std::max(hi_p, le.phi);
                    lo_v = std::min(lo_v, le.varphi);
                    hi_v = std::max(hi_v, le.varphi);
                }
                CHECK(f.cells(r, q).phi >= lo_p - 1e-12);
                CHECK(f.cells(r, q).phi <= hi_p + 1e-12);
                CHECK(f.cells(r, q).varphi >= lo_v - 1e-12);
                CHECK(f.cells(r, q).varphi <= hi_v + 1e-12);
            }
        }
    }
}

TEST_CASE("gamma-space fusion is available and differs from the closed form") {
    const std::vector<ExpertTable> tables{one_cell("E1", 0.5, Element{{2, 0}}),
                                          one_cell("E2", 0.5, Element{{-2, 0}})};
    const Term lin = fuse_dhhflmwa(tables).cells(0, 0);
    const Term gam = fuse_dhhflmwa_gamma(tables, k33).cells(0, 0);
    const double g_expected = 1.0 - std::sqrt(1.0 - 5.0 / 6.0) * std::sqrt(1.0 - 1.0 / 6.0);
    CHECK(f_scalar(gam, k33) == Approx(g_expected).epsilon(1e-12));
    CHECK(f_scalar(lin, k33) == Approx(0.5));
    CHECK(f_scalar(gam, k33) != Approx(f_scalar(lin, k33)));
}

TEST_CASE("renormalized weights") {
    const auto attrs = sle_attributes();
    const auto w = renormalize_weights(attrs, {"a1", "a2"});
    CHECK(w.at("a1") == Approx(0.4));
    CHECK(w.at("a2") == Approx(0.6));
    CHECK(renormalize_weights(attrs, {"a4"}).at("a4") == 1.0);
    const auto full = renormalize_weights(attrs, {"a1", "a2", "a3", "a4", "a5", "a6"});
    for (const auto& a : attrs) CHECK(full.at(a.id) == Approx(a.weight).epsilon(1e-12));
    CHECK_THROWS_AS(renormalize_weights(attrs, {}), ConfigError);
    CHECK_THROWS_AS(renormalize_weights({{"z", 0.0}}, {"z"}), ConfigError);

    testgen::Rng rng(4);
    for (int i = 0; i < 100; ++i) {
        auto scaled = attrs;
        const double c = rng.uniform(0.01, 50.0);
        for (auto& a : scaled) a.weight *= c;
        const auto a = renormalize_weights(attrs, {"a1", "a3", "a6"});
        const auto b = renormalize_weights(scaled, {"a1", "a3", "a6"});
        double sum = 0.0;
        for (const auto& [id, v] : b) {
            CHECK(std::abs(v - a.at(id)) < 1e-9);
            sum += v;
        }
        CHECK(std::abs(sum - 1.0) < 1e-9);
    }
}

TEST_CASE("orientation complements misaligned attributes") {
    FusedTable t;
    t.alternatives = {"x1", "x2"};
    t.attributes = {"a1", "a2"};
    t.cells = Matrix<Term>(2, 2);
    t.cells(0, 0) = f_inverse(0.3, k33);
    t.cells(0, 1) = {1, 2};
    t.cells(1, 0) = {-2, 1};
    t.cells(1, 1) = {3, 0};

    const std::vector<AttributeSpec> aligned{{"a1", 0.5, AttributeKind::cost, true},
                                             {"a2", 0.5, AttributeKind::cost, true}};
    CHECK(orient_to_concept(t, aligned, k33).cells == t.cells);

    std::vector<AttributeSpec> flipped = aligned;
    flipped[0].align_with_concept = false;
    const FusedTable o = orient_to_concept(t, flipped, k33);
    CHECK(f_scalar(o.cells(0, 0), k33) == Approx(0.7).epsilon(1e-12));
    CHECK(o.cells(0, 1).phi == 1.0);

    for (auto& a : flipped) a.align_with_concept = false;
    const FusedTable twice = orient_to_concept(orient_to_concept(t, flipped, k33), flipped, k33);
    for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 0; c < 2; ++c)
            CHECK(std::abs(f_scalar(twice.cells(r, c), k33) - f_scalar(t.cells(r, c), k33)) < 1e-9);
}

TEST_CASE("table validation") {
    CHECK_THROWS_AS(validate_attributes({{"a", 0.5}, {"a", 0.5}}), ConfigError);
    CHECK_THROWS_AS(validate_attributes({{"a", 0.5}, {"b", 0.4}}), ConfigError);
    CHECK_NOTHROW(validate_attributes({{"a", 0.5}, {"b", 0.5}}));
    CHECK_THROWS_AS(validate_expert_tables({one_cell("E", 1.0, Element{{4, 0}})}, k33), DomainError);
    CHECK_THROWS_AS(validate_expert_tables({one_cell("E", 0.5, Element{{0, 0}}),
                                            one_cell("E", 0.5, Element{{0, 0}})},
                                           k33),
                    ConfigError);
}
