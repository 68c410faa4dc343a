#include <doctest.h>

#include "akg/lie.hpp"

#include <algorithm>
#include <map>

using namespace akg;
using namespace akg::lie;

namespace {

std::multiset<Rational> ribbon_values(const LieData& d, const Weight& w) {
    std::multiset<Rational> out;
    for (const auto& [root, v] : ribbon_table(d, w)) out.insert(v);
    return out;
}

std::multiset<Rational> rset(std::initializer_list<Rational> xs) { return {xs}; }

const std::vector<LieType> kRoster = {
    {Family::A, 1}, {Family::A, 2}, {Family::A, 3}, {Family::A, 4}, {Family::A, 5},
    {Family::A, 6}, {Family::A, 7}, {Family::A, 8}, {Family::B, 2}, {Family::B, 3},
    {Family::B, 4}, {Family::B, 5}, {Family::C, 2}, {Family::C, 3}, {Family::C, 4},
    {Family::C, 5}, {Family::D, 4}, {Family::D, 5}, {Family::D, 6}, {Family::E, 6},
    {Family::E, 7}, {Family::E, 8}, {Family::F, 4}, {Family::G, 2},
};

}  // namespace

TEST_CASE("family/rank validation") {
    CHECK_THROWS_AS(build_lie_data({Family::B, 1}), std::invalid_argument);
    CHECK_THROWS_AS(build_lie_data({Family::D, 2}), std::invalid_argument);
    CHECK_THROWS_AS(build_lie_data({Family::E, 9}), std::invalid_argument);
    CHECK_THROWS_AS(build_lie_data({Family::F, 5}), std::invalid_argument);
    CHECK_THROWS_AS(build_lie_data({Family::G, 3}), std::invalid_argument);
    CHECK_THROWS_AS(build_lie_data({Family::A, 0}), std::invalid_argument);
}

TEST_CASE("group spec parsing") {
    CHECK(parse_group("A3") == LieType{Family::A, 3});
    CHECK(parse_group("e8") == LieType{Family::E, 8});
    CHECK(parse_group("SU(4)") == LieType{Family::A, 3});
    CHECK(parse_group("Spin(5)") == LieType{Family::B, 2});
    CHECK(parse_group("Spin(20)") == LieType{Family::D, 10});
    CHECK(parse_group("Sp(6)") == LieType{Family::C, 3});
    CHECK_THROWS(parse_group("H4"));
    CHECK_THROWS(parse_group("A"));
}

TEST_CASE("Coxeter data tables hold on the roster") {
    // gamma, g, 1/Delta per family
    std::map<std::string, std::array<long, 3>> table;
    for (int r = 1; r <= 8; ++r) table["A" + std::to_string(r)] = {r + 1, r + 1, r + 1};
    for (int r = 2; r <= 5; ++r) table["B" + std::to_string(r)] = {2 * r, 2 * r - 1, 4};
    for (int r = 2; r <= 5; ++r) table["C" + std::to_string(r)] = {2 * r, r + 1, 1L << r};
    for (int r = 4; r <= 6; ++r) table["D" + std::to_string(r)] = {2 * r - 2, 2 * r - 2, 4};
    table["E6"] = {12, 12, 3};
    table["E7"] = {18, 18, 2};
    table["E8"] = {30, 30, 1};
    table["F4"] = {12, 9, 4};
    table["G2"] = {6, 4, 3};

    for (const auto& t : kRoster) {
        CAPTURE(to_string(t));
        LieData d = build_lie_data(t);
        auto [gamma, g, inv_delta] = table.at(to_string(t));
        CHECK(d.coxeter == gamma);
        CHECK(d.dual_coxeter == g);
        CHECK(d.delta == Rational(1, inv_delta));
        CHECK(d.num_positive_roots() * 2 == d.rank * d.coxeter);
        long exp_sum = 0;
        for (long e : d.exponents) exp_sum += e;
        CHECK(exp_sum == d.num_positive_roots());
        CHECK(inner_product(d, d.highest_root, d.highest_root) == Rational(2));
        // highest root is a positive root of maximal level
        Rational top_level = level_of(d, d.highest_root);
        bool found = false;
        for (const auto& rt : d.positive_roots) {
            Weight w = d.root_weight(rt);
            CHECK(level_of(d, w) <= top_level);
            if (w == d.highest_root) found = true;
        }
        CHECK(found);
    }
}

TEST_CASE("rank-1 and exceptional golden data") {
    LieData a1 = build_lie_data({Family::A, 1});
    CHECK(a1.coxeter == 2);
    CHECK(a1.dual_coxeter == 2);
    CHECK(a1.delta == Rational(1, 2));
    REQUIRE(a1.positive_roots.size() == 1);
    CHECK(a1.root_weight(a1.positive_roots[0]) == Weight{Rational(2)});
    CHECK(a1.exponents == std::vector<long>{1});

    LieData g2 = build_lie_data({Family::G, 2});
    CHECK(g2.coxeter == 6);
    CHECK(g2.dual_coxeter == 4);
    CHECK(g2.delta == Rational(1, 3));
    CHECK(g2.positive_roots.size() == 6);
    CHECK(g2.exponents == std::vector<long>{1, 5});

    LieData e8 = build_lie_data({Family::E, 8});
    CHECK(e8.coxeter == 30);
    CHECK(e8.dual_coxeter == 30);
    CHECK(e8.delta == Rational(1));
    CHECK(e8.positive_roots.size() == 120);
    CHECK(e8.exponents == std::vector<long>{1, 7, 11, 13, 17, 19, 23, 29});

    LieData e6 = build_lie_data({Family::E, 6});
    CHECK(e6.exponents == std::vector<long>{1, 4, 5, 7, 8, 11});
    LieData e7 = build_lie_data({Family::E, 7});
    CHECK(e7.exponents == std::vector<long>{1, 5, 7, 9, 11, 13, 17});
    LieData f4 = build_lie_data({Family::F, 4});
    CHECK(f4.exponents == std::vector<long>{1, 5, 7, 11});
}

TEST_CASE("inner products and ribbon tables") {
    LieData a1 = build_lie_data({Family::A, 1});
    CHECK(inner_product(a1, a1.weyl_vector, a1.highest_root) == Rational(1));
    CHECK_THROWS_AS(inner_product(a1, Weight{Rational(1), Rational(0)}, a1.weyl_vector),
                    std::invalid_argument);

    LieData a5 = build_lie_data({Family::A, 5});
    CHECK(ribbon_values(a5, a5.weyl_vector) ==
          rset({1, 1, 1, 3, 3, 2, 5, 2, 4, 4, 2, 3, 2, 1, 1}));
    // symbolic table probe: distinct powers of ten make each displayed sum unique
    CHECK(ribbon_values(a5, from_ints({1, 10, 100, 1000, 10000})) ==
          rset({1, 100, 10000, 111, 11100, 110, 11111, 1100, 11110, 1111, 11000, 1110, 11, 1000,
                10}));

    LieData d4 = build_lie_data({Family::D, 4});
    CHECK(ribbon_values(d4, d4.weyl_vector) == rset({1, 1, 1, 4, 3, 3, 3, 5, 2, 2, 2, 1}));
    CHECK(ribbon_values(d4, from_ints({1, 10, 100, 1000})) ==
          rset({1, 100, 1000, 1111, 1110, 1011, 111, 1121, 11, 110, 1010, 10}));

    LieData g2 = build_lie_data({Family::G, 2});
    CHECK(ribbon_values(g2, g2.weyl_vector) ==
          rset({1, Rational(4, 3), 3, Rational(5, 3), 2, Rational(1, 3)}));
    // displayed G2 table, with the basic 7-dim fundamental carrying weight 1
    CHECK(ribbon_values(g2, from_ints({3, 1})) == rset({1, 1, 2, 3, 4, 5}));

    // zero weight: all zeros
    auto zeros = ribbon_table(g2, zero_weight(2));
    for (const auto& [root, v] : zeros) CHECK(v == 0);
}

TEST_CASE("levels") {
    LieData a1 = build_lie_data({Family::A, 1});
    CHECK(level_of(a1, zero_weight(1)) == 0);
    for (long k = 1; k <= 7; ++k) CHECK(level_of(a1, from_ints({k})) == k);

    // brute-force oracle: level of rho equals g - 1 (sum of comarks)
    LieData e8 = build_lie_data({Family::E, 8});
    CHECK(level_of(e8, zero_weight(8)) == 0);
    CHECK(level_of(e8, e8.weyl_vector) == Rational(e8.dual_coxeter - 1));
    CHECK(level_of(e8, e8.weyl_vector) == 29);
}

TEST_CASE("Weyl group enumeration") {
    LieData a1 = build_lie_data({Family::A, 1});
    auto w1 = weyl_group(a1, 10);
    REQUIRE(w1.size() == 2);
    CHECK(w1[0].signature == 1);
    CHECK(w1[1].signature == -1);
    CHECK(w1[1].action(0, 0) == -1);

    LieData a2 = build_lie_data({Family::A, 2});
    auto w2 = weyl_group(a2, 100);
    CHECK(w2.size() == 6);
    CHECK(std::count_if(w2.begin(), w2.end(), [](const WeylElement& w) {
              return w.signature == 1;
          }) == 3);

    LieData g2 = build_lie_data({Family::G, 2});
    CHECK(weyl_group(g2, 100).size() == 12);
    CHECK(weyl_group(build_lie_data({Family::B, 2}), 100).size() == 8);
    CHECK(weyl_group(build_lie_data({Family::A, 3}), 100).size() == 24);
    CHECK(weyl_group(build_lie_data({Family::D, 4}), 1000).size() == 192);

    // closure, signature balance, and invariance of the form
    for (const LieType& t : {LieType{Family::B, 2}, LieType{Family::G, 2}, LieType{Family::A, 3}}) {
        LieData d = build_lie_data(t);
        auto ws = weyl_group(d, 1000);
        long sig_sum = 0;
        for (const auto& w : ws) sig_sum += w.signature;
        CHECK(sig_sum == 0);
        // closure: s_i . w stays in the enumeration (keyed by the rho image)
        std::set<std::vector<long long>> images;
        for (const auto& w : ws) {
            std::vector<long long> img(d.rank, 0);
            for (int i = 0; i < d.rank; ++i)
                for (int j = 0; j < d.rank; ++j) img[i] += w.action(i, j);
            images.insert(img);
        }
        for (const auto& w : ws)
            for (int i = 0; i < d.rank; ++i) {
                std::vector<long long> img(d.rank, 0);
                for (int a = 0; a < d.rank; ++a)
                    for (int j = 0; j < d.rank; ++j) img[a] += w.action(a, j);
                apply_simple_reflection(d, i, img);
                CHECK(images.count(img) == 1);
            }
        // the action preserves <.,.>: check on a fixed pair of weights
        Weight u = from_ints(std::vector<long>(d.rank, 1));
        Weight v = from_ints([&] {
            std::vector<long> x(d.rank, 0);
            x[0] = 2;
            if (d.rank > 1) x[d.rank - 1] = 1;
            return x;
        }());
        Rational target = inner_product(d, u, v);
        for (const auto& w : ws) {
            Weight wu(d.rank), wv(d.rank);
            for (int i = 0; i < d.rank; ++i) {
                Rational au(0), av(0);
                for (int j = 0; j < d.rank; ++j) {
                    au += Rational(static_cast<long>(w.action(i, j))) * u[j];
                    av += Rational(static_cast<long>(w.action(i, j))) * v[j];
                }
                wu[i] = au;
                wv[i] = av;
            }
            CHECK(inner_product(d, wu, wv) == target);
            CHECK((w.signature == 1 || w.signature == -1));
        }
    }

    LieData e8 = build_lie_data({Family::E, 8});
    CHECK_THROWS_WITH_AS(weyl_group(e8, 10'000'000),
                         doctest::Contains("696729600"), std::domain_error);
}

TEST_CASE("weight systems with multiplicities") {
    LieData a1 = build_lie_data({Family::A, 1});
    for (long n : {1L, 2L, 5L}) {
        WeightSystem ws = weight_system(a1, from_ints({n}));
        REQUIRE(ws.weights.size() == static_cast<std::size_t>(n + 1));
        std::multiset<long long> vals;
        for (std::size_t i = 0; i < ws.weights.size(); ++i) {
            CHECK(ws.multiplicities[i] == 1);
            vals.insert(ws.weights[i][0]);
        }
        std::multiset<long long> expect;
        for (long j = -n; j <= n; j += 2) expect.insert(j);
        CHECK(vals == expect);
    }

    LieData a2 = build_lie_data({Family::A, 2});
    WeightSystem fund = weight_system(a2, from_ints({1, 0}));
    CHECK(fund.weights.size() == 3);
    for (auto m : fund.multiplicities) CHECK(m == 1);

    // adjoint of A2: six roots with multiplicity 1 and the origin twice
    WeightSystem adj = weight_system(a2, from_ints({1, 1}));
    long long total = 0;
    for (std::size_t i = 0; i < adj.weights.size(); ++i) {
        total += adj.multiplicities[i];
        bool origin = adj.weights[i][0] == 0 && adj.weights[i][1] == 0;
        CHECK(adj.multiplicities[i] == (origin ? 2 : 1));
    }
    CHECK(total == 8);

    // G2 basic 7-dimensional representation
    LieData g2 = build_lie_data({Family::G, 2});
    WeightSystem seven = weight_system(g2, from_ints({1, 0}));
    long long dim = 0;
    for (auto m : seven.multiplicities) dim += m;
    CHECK(dim == 7);

    CHECK_THROWS_AS(weight_system(a2, from_ints({40, 40}), 100), std::domain_error);
}
