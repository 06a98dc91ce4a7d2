#include <doctest.h>

#include "bkp/fock_oracle.hpp"
#include "bkp/npoint_formulas.hpp"
#include "bkp/random_instances.hpp"

using namespace bkp;

namespace {

AffineB a10() { return AffineB::validate({{1, 0, 1}}); }

bool all_zero(const NPointTable& t) {
    for (const auto& [idx, v] : t.entries)
        if (v != 0) return false;
    return true;
}

}  // namespace

TEST_CASE("cycle enumeration") {
    const auto c1 = enumerate_cycles(1);
    REQUIRE(c1.size() == 1);
    CHECK(c1[0].order == std::vector<int>{0});
    CHECK(c1[0].succ == std::vector<int>{0});

    const auto c2 = enumerate_cycles(2);
    REQUIRE(c2.size() == 1);
    CHECK(c2[0].succ == std::vector<int>{1, 0});

    const auto c3 = enumerate_cycles(3);
    REQUIRE(c3.size() == 2);
    CHECK(c3[0].order == std::vector<int>{0, 1, 2});
    CHECK(c3[1].order == std::vector<int>{0, 2, 1});

    CHECK(enumerate_cycles(4).size() == 6);
    CHECK(enumerate_cycles(5).size() == 24);
    for (const Cycle& c : enumerate_cycles(5)) {
        int v = 0, steps = 0;
        do {
            v = c.succ[v];
            ++steps;
        } while (v != 0);
        CHECK(steps == 5);
    }
}

TEST_CASE("multi-index ranges") {
    CHECK(odd_multi_indices(1, 5) == std::vector<MultiIndex>{{1}, {3}, {5}});
    CHECK(odd_multi_indices(2, 4) == std::vector<MultiIndex>{{1, 1}, {1, 3}, {3, 1}});
    CHECK(multi_indices(2, 3).size() == 3);
    CHECK(odd_multi_indices(3, 2).empty());
}

TEST_CASE("zero coordinates give zero tables") {
    for (int n = 1; n <= 4; ++n) {
        CAPTURE(n);
        CHECK(all_zero(bkp_npoint_wangyang(AffineB{}, n, 7)));
        CHECK(all_zero(bkp_npoint_embedded(AffineB{}, n, 7)));
        CHECK(bkp_wangyang_series(AffineB{}, n, 7).is_zero());
        CHECK(bkp_embedded_series(AffineB{}, n, 7).is_zero());
        if (n >= 2) CHECK(kp_npoint(AffineKP{}, n, 7).is_zero());
    }
}

TEST_CASE("one-point function for a_{1,0} = 1") {
    for (const NPointTable& t : {bkp_npoint_wangyang(a10(), 1, 5), bkp_npoint_embedded(a10(), 1, 5)}) {
        CHECK(t.at({1}) == -1);
        CHECK(t.at({3}) == 0);
        CHECK(t.at({5}) == 0);
    }
    CHECK(bkp_wangyang_series(a10(), 1, 5) == make_monomial(1, {-1}, -1));
    CHECK(bkp_embedded_series(a10(), 1, 5) == make_monomial(1, {-2}, -1));
    const FormulaComparison c = compare_formulas(a10(), 1, 5);
    CHECK(c.ok());
    CHECK(c.raw_series_equal);
}

TEST_CASE("higher points for a_{1,0} = 1") {
    CHECK(bkp_npoint_wangyang(a10(), 2, 6).at({1, 1}) == -1);
    CHECK(bkp_npoint_wangyang(a10(), 3, 6).at({1, 1, 1}) == -2);
    CHECK(bkp_npoint_embedded(a10(), 3, 6).at({1, 1, 1}) == -2);
}

TEST_CASE("KP formula matches the KP oracle") {
    const AffineKP alpha(std::map<IndexPair, Rational>{{{0, 0}, Rational(3, 5)}});
    const LaurentSeries s = kp_npoint(alpha, 2, 4);
    CHECK(s.coefficient({-2, -2}) == kp_npoint_oracle(alpha, 2, 4).at({1, 1}));

    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        const AffineKP kp = bkp_to_kp(random_affine_b(seed));
        for (int n = 2; n <= 3; ++n) {
            CAPTURE(seed);
            CAPTURE(n);
            const int w = n == 2 ? 5 : 4;
            const auto d = first_difference(kp_table(kp_npoint(kp, n, w), n, w), kp_npoint_oracle(kp, n, w));
            CHECK_MESSAGE(!d, (d ? describe(*d) : ""));
        }
    }
}

TEST_CASE("Wang-Yang and embedded formulas agree on random instances") {
    for (std::uint64_t seed = 20; seed < 24; ++seed)
        for (int n = 1; n <= 3; ++n) {
            CAPTURE(seed);
            CAPTURE(n);
            const FormulaComparison c = compare_formulas(random_affine_b(seed), n, 7);
            CHECK(c.ok());
            CHECK(c.wangyang.symmetric());
            CHECK(c.embedded.symmetric());
            for (const auto& [idx, v] : c.wangyang.entries)
                for (int i : idx) CHECK(i % 2 == 1);
        }
}

TEST_CASE("formulas agree with the Fock oracle") {
    for (std::uint64_t seed = 30; seed < 32; ++seed)
        for (int n = 1; n <= 3; ++n) {
            CAPTURE(seed);
            CAPTURE(n);
            const AffineB b = random_affine_b(seed);
            const NPointTable oracle = bkp_npoint_oracle(b, n, 6);
            CHECK_FALSE(first_difference(bkp_npoint_wangyang(b, n, 6), oracle));
            CHECK_FALSE(first_difference(bkp_npoint_embedded(b, n, 6), oracle));
        }
}

TEST_CASE("serial and parallel evaluation agree") {
    const AffineB b = random_affine_b(41);
    for (int n = 2; n <= 4; ++n) {
        const int w = n == 4 ? 6 : 7;
        const EvalOptions serial{0, Execution::Serial}, parallel{0, Execution::Parallel};
        CHECK(bkp_wangyang_series(b, n, w, serial) == bkp_wangyang_series(b, n, w, parallel));
        CHECK(bkp_embedded_series(b, n, w, serial) == bkp_embedded_series(b, n, w, parallel));
        CHECK(kp_npoint(bkp_to_kp(b), n, w, serial) == kp_npoint(bkp_to_kp(b), n, w, parallel));
    }
}

TEST_CASE("tables do not move when the cap is doubled") {
    const AffineB b = random_affine_b(52);
    for (int n = 1; n <= 3; ++n) {
        const int cap = default_cap(n, 7, b.max_index());
        CHECK_FALSE(first_difference(bkp_npoint_wangyang(b, n, 7, {cap}), bkp_npoint_wangyang(b, n, 7, {2 * cap})));
        CHECK_FALSE(first_difference(bkp_npoint_embedded(b, n, 7, {cap}), bkp_npoint_embedded(b, n, 7, {2 * cap})));
    }
}

TEST_CASE("embedded series has only even exponents") {
    const AffineB b = random_affine_b(60);
    for (int n = 1; n <= 3; ++n) CHECK(only_even_exponents(bkp_embedded_series(b, n, 7)));
    CHECK_FALSE(only_even_exponents(make_monomial(2, {-2, -1}, 1)));
}

TEST_CASE("table comparison reports the first differing entry") {
    NPointTable a{2, 4, {{{1, 1}, Rational(1)}, {{1, 3}, Rational(2)}}};
    NPointTable b = a;
    CHECK_FALSE(first_difference(a, b));
    b.entries[{1, 3}] = 5;
    const auto d = first_difference(a, b);
    REQUIRE(d);
    CHECK(d->indices == MultiIndex{1, 3});
    CHECK(d->left == 2);
    CHECK(d->right == 5);
    CHECK_FALSE(a.symmetric());
}

TEST_CASE("invalid arguments") {
    CHECK_THROWS(bkp_npoint_wangyang(AffineB{}, 0, 5));
    CHECK_THROWS(kp_npoint(AffineKP{}, 1, 5));
}
