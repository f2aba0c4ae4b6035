#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "generators.hpp"
#include "s3w/errors.hpp"
#include "s3w/neighborhood.hpp"

using namespace s3w;
using doctest::Approx;

namespace {

const Scale k33{3, 3};

FusedTable column_table(const std::vector<Term>& cells) {
    FusedTable t;
    for (std::size_t i = 0; i < cells.size(); ++i) t.alternatives.push_back("x" + std::to_string(i + 1));
    t.attributes = {"a1"};
    t.cells = Matrix<Term>(cells.size(), 1);
    for (std::size_t i = 0; i < cells.size(); ++i) t.cells(i, 0) = cells[i];
    return t;
}

FusedTable random_fused(testgen::Rng& rng, std::size_t n, std::size_t m) {
    FusedTable t;
    for (std::size_t i = 0; i < n; ++i) t.alternatives.push_back("x" + std::to_string(i + 1));
    for (std::size_t q = 0; q < m; ++q) t.attributes.push_back("a" + std::to_string(q + 1));
    t.cells = Matrix<Term>(n, m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t q = 0; q < m; ++q) t.cells(i, q) = testgen::random_term(rng, k33);
    return t;
}

}  // namespace

TEST_CASE("kernel similarity values") {
    const std::vector<double> a{0.3, 0.8}, b{0.3, 0.8};
    CHECK(kernel_similarity(a, b, 0.7) == 1.0);
    CHECK(kernel_similarity(std::vector<double>{1.0}, std::vector<double>{0.0}, 0.7) ==
          Approx(0.360447788597821).epsilon(1e-12));
    const std::vector<double> x{0.1, 0.9}, y{0.6, 0.2};
    CHECK(kernel_similarity(x, y, 0.5) <= kernel_similarity(x, y, 0.7));
    CHECK_THROWS_AS(kernel_similarity(x, y, 0.0), DomainError);
    CHECK_THROWS_AS(kernel_similarity(x, std::vector<double>{1.0}, 0.7), LengthMismatch);

    const FusedTable t = column_table({{3, 0}, {-3, 0}});
    CHECK(kernel_similarity(t, 0, 1, {"a1"}, 0.7, k33) == Approx(0.360447788597821).epsilon(1e-12));
}

TEST_CASE("similarity matrix structure") {
    const FusedTable one = column_table({{1, 1}});
    const auto s1 = build_similarity_matrix(one, {"a1"}, 0.7, k33);
    CHECK(s1.size() == 1);
    CHECK(s1(0, 0) == 1.0);

    const FusedTable dup = column_table({{1, 1}, {-2, 0}, {1, 1}});
    const auto sd = build_similarity_matrix(dup, {"a1"}, 0.7, k33);
    CHECK(sd(0, 2) == 1.0);
    CHECK(sd(0, 1) < 1.0);

    testgen::Rng rng(17);
    for (int i = 0; i < 100; ++i) {
        const auto t = random_fused(rng, rng.index(1, 15), rng.index(1, 5));
        const auto s = build_similarity_matrix(t, t.attributes, rng.uniform(0.05, 2.0), k33);
        for (std::size_t x = 0; x < s.size(); ++x) {
            CHECK(s(x, x) == 1.0);
            for (std::size_t y = 0; y < s.size(); ++y) {
                CHECK(s(x, y) >= 0.0);
                CHECK(s(x, y) <= 1.0);
                CHECK(std::abs(s(x, y) - s(y, x)) <= 1e-12);
            }
        }
    }
}

TEST_CASE("granules") {
    const FusedTable t = column_table({{1, 1}, {-2, 0}, {1, 1}, {3, 3}});
    const auto sim = build_similarity_matrix(t, {"a1"}, 0.7, k33);
    for (const auto& g : cut_granules(sim, 0.0)) CHECK(g.members.size() == 4);
    const auto strict = cut_granules(sim, 1.0);
    CHECK(strict[1].members == std::vector<std::size_t>{1});
    CHECK(strict[0].members == std::vector<std::size_t>{0, 2});
    CHECK_THROWS_AS(cut_granules(sim, 1.5), DomainError);
    CHECK_THROWS_AS(cut_granules(sim, -0.1), DomainError);

    testgen::Rng rng(23);
    for (int i = 0; i < 50; ++i) {
        const auto rt = random_fused(rng, rng.index(2, 12), rng.index(1, 4));
        const auto s = build_similarity_matrix(rt, rt.attributes, 0.7, k33);
        const double k1 = rng.uniform(0.0, 1.0), k2 = rng.uniform(k1, 1.0);
        const auto g1 = cut_granules(s, k1), g2 = cut_granules(s, k2);
        for (std::size_t x = 0; x < g1.size(); ++x) {
            CHECK(std::find(g2[x].members.begin(), g2[x].members.end(), x) != g2[x].members.end());
            for (auto m : g2[x].members)
                CHECK(std::find(g1[x].members.begin(), g1[x].members.end(), m) != g1[x].members.end());
            for (auto m : g1[x].members)
                CHECK(std::find(g1[m].members.begin(), g1[m].members.end(), x) != g1[m].members.end());
        }
    }
}

TEST_CASE("concept membership") {
    const FusedTable half = column_table({{0, 0}});
    CHECK(concept_membership(half, {"a1"}, {{"a1", 1.0}}, k33).values[0] == Approx(0.5));

    FusedTable two;
    two.alternatives = {"x1"};
    two.attributes = {"a1", "a2"};
    two.cells = Matrix<Term>(1, 2, Term{0, 0});
    CHECK(concept_membership(two, {"a1", "a2"}, {{"a1", 0.5}, {"a2", 0.5}}, k33).values[0] ==
          Approx(0.5).epsilon(1e-12));
    CHECK_THROWS_AS(concept_membership(two, {"a1", "a2"}, {{"a1", 0.5}, {"a2", 0.4}}, k33),
                    ConfigError);

    testgen::Rng rng(2);
    for (int i = 0; i < 100; ++i) {
        const auto t = random_fused(rng, 4, 3);
        const auto w = testgen::random_weights(rng, 3);
        const AttributeWeights aw{{"a1", w[0]}, {"a2", w[1]}, {"a3", w[2]}};
        const auto pi = concept_membership(t, t.attributes, aw, k33);
        for (std::size_t r = 0; r < 4; ++r) {
            double prod = 1.0;
            for (std::size_t q = 0; q < 3; ++q) prod *= std::pow(1.0 - f_scalar(t.cells(r, q), k33), w[q]);
            CHECK(pi.values[r] == Approx(1.0 - prod).epsilon(1e-12));
            CHECK(pi.values[r] >= 0.0);
            CHECK(pi.values[r] <= 1.0);
        }
    }
}

TEST_CASE("conditional probability") {
    const ConceptMembership m{{"x1", "x2", "x3", "x4", "x5"}, {0.42, 0.1, 0.7, 1.0, 0.2}};
    CHECK(conditional_probability({0, {0}, 1.0}, m) == Approx(0.42));
    CHECK(conditional_probability({0, {0, 2, 4}, 0.5}, m) == Approx((0.42 + 0.7 + 0.2) / 3.0));
    const ConceptMembership ones{{"a", "b"}, {1.0, 1.0}};
    CHECK(conditional_probability({0, {0, 1}, 0.5}, ones) == 1.0);
    CHECK_THROWS_AS(conditional_probability({0, {}, 0.5}, m), DomainError);
    CHECK_THROWS_AS(conditional_probability({0, {9}, 0.5}, m), UnknownId);
    CHECK(m.at("x3") == 0.7);
}

TEST_CASE("similarity csv export") {
    const FusedTable t = column_table({{1, 1}, {-2, 0}});
    std::ostringstream os;
    write_similarity_csv(os, build_similarity_matrix(t, {"a1"}, 0.7, k33));
    const std::string text = os.str();
    CHECK(text.rfind("id,x1,x2\n", 0) == 0);
    CHECK(std::count(text.begin(), text.end(), '\n') == 3);
}
