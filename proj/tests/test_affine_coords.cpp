#include <doctest.h>

#include "bkp/affine_coords.hpp"
#include "bkp/random_instances.hpp"
#include "test_support.hpp"

using namespace bkp;
using bkp::testing::box;

namespace {

AffineB a10() { return AffineB::validate({{1, 0, 1}}); }

// A^BKP straight from its defining double sum.
LaurentSeries direct_A_BKP(const AffineB& b, const Window& w) {
    LaurentSeries s(2, w);
    for (const auto& [key, v] : b.entries()) {
        const auto [n, m] = key;
        const int mult = (n >= 1 ? 1 : 0) + (m >= 1 ? 1 : 0);
        const Rational sign = (m + n + 1) % 2 == 0 ? 1 : -1;
        s.add_term({-n, -m}, fraction(mult, 2) * sign * v);
    }
    return s;
}

}  // namespace

TEST_CASE("validation completes the antisymmetric matrix") {
    const AffineB b = a10();
    CHECK(b.at(1, 0) == 1);
    CHECK(b.at(0, 1) == -1);
    CHECK(b.entries().size() == 2);
    CHECK(b.max_index() == 1);
    CHECK(AffineB::validate({}).empty());
    CHECK(AffineB::validate({{0, 1, -1}}).at(1, 0) == 1);
    CHECK_NOTHROW(AffineB::validate({{1, 0, 1}, {0, 1, -1}}));
    CHECK_THROWS_AS(AffineB::validate({{1, 1, 5}}), CoordinateError);
    CHECK_THROWS_AS(AffineB::validate({{1, 0, 1}, {0, 1, 1}}), CoordinateError);
    CHECK_THROWS_AS(AffineB::validate({{-1, 0, 1}}), CoordinateError);
}

TEST_CASE("BKP to KP coordinates") {
    const AffineKP kp = bkp_to_kp(a10());
    CHECK(kp.at(0, 0) == -2);
    CHECK(kp.at(0, 1) == 2);
    CHECK(kp.entries().size() == 2);
    CHECK(bkp_to_kp(AffineB{}).empty());

    const AffineKP k21 = bkp_to_kp(AffineB::validate({{2, 1, 1}}));
    CHECK(k21.at(1, 1) == 2);
    CHECK(k21.at(0, 2) == 2);
    CHECK(k21.entries().size() == 2);
}

TEST_CASE("BKP to KP on random input matches the entrywise rule") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const AffineB b = random_affine_b(seed);
        const AffineKP kp = bkp_to_kp(b);
        for (int m = 0; m <= 5; ++m)
            for (int n = 0; n <= 5; ++n) {
                const Rational sign = m % 2 == 0 ? -2 : 2;
                Rational expected = sign * b.at(m + 1, 0);
                if (n > 0) expected = sign * (b.at(m + 1, n) + b.at(m + 1, 0) * b.at(0, n));
                CHECK(kp.at(m, n) == expected);
            }
    }
}

TEST_CASE("KP generating series") {
    const Window w = box(2, -8, 8);
    LaurentSeries expected(2, w);
    expected.add_term({-1, -1}, -2);
    expected.add_term({-1, -2}, 2);
    CHECK(series_A_KP(bkp_to_kp(a10()), w) == expected);
    CHECK(series_A_KP(AffineKP{}, w).is_zero());
    CHECK(series_A_KP(AffineKP(std::map<IndexPair, Rational>{{{1, 1}, Rational(2)}}), w) == make_monomial(2, {-2, -2}, 2));
}

TEST_CASE("BKP generating series") {
    const Window w = box(2, -8, 8);
    LaurentSeries expected(2, w);
    expected.add_term({-1, 0}, Rational(1, 2));
    expected.add_term({0, -1}, Rational(-1, 2));
    CHECK(series_A_BKP(a10(), w) == expected);
    CHECK(series_A_BKP(AffineB{}, w).is_zero());
    const AffineB b21 = AffineB::validate({{2, 1, 1}});
    CHECK(series_A_BKP(b21, w) == direct_A_BKP(b21, w));
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const AffineB b = random_affine_b(seed);
        CHECK(series_A_BKP(b, w) == direct_A_BKP(b, w));
    }
}

TEST_CASE("A^BKP is antisymmetric") {
    const Window w = box(2, -8, 8);
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const AffineB b = random_affine_b(seed);
        const LaurentSeries wz = series_A_BKP(b, ArgPlacement{2, 0, 1, 1, 1}, w);
        const LaurentSeries zw = series_A_BKP(b, ArgPlacement{2, 1, 0, 1, 1}, w);
        CHECK(wz == -zw);
    }
}

TEST_CASE("sign substitution on A^BKP") {
    const Window w = box(2, -8, 8);
    LaurentSeries expected(2, w);
    expected.add_term({-1, 0}, Rational(1, 2));
    expected.add_term({0, -1}, Rational(1, 2));
    CHECK(substitute_sign(series_A_BKP(a10(), w), 1, -1) == expected);
    CHECK(series_A_BKP(a10(), ArgPlacement{2, 0, 1, 1, -1}, w) == expected);
}

TEST_CASE("KP hat series") {
    const Window w = box(2, -10, 4);
    const LaurentSeries inv = expand_kernel(KernelKind::InvDiff, {0, 1}, {1, 2}, 2, w);
    CHECK(series_A_hat_KP(AffineKP{}, {0, 1}, {1, 2}, 2, w) == inv);
    CHECK(series_A_hat_KP(AffineKP{}, {1, 2}, {0, 1}, 2, w) == -inv);

    const AffineKP kp = bkp_to_kp(a10());
    LaurentSeries diag(1, box(1, -10, 4));
    diag.add_term({-2}, -2);
    diag.add_term({-3}, 2);
    CHECK(series_A_hat_KP(kp, {0, 1}, {0, 1}, 1, box(1, -10, 4)) == diag);
}

TEST_CASE("BKP hat series") {
    const Window w = box(2, -10, 10);
    // Zero coordinates at (z_1, -z_2): -1/4 - 1/2 sum (-1)^k z_1^-k (-z_2)^k.
    LaurentSeries expected(2, w);
    expected.add_term({0, 0}, Rational(-1, 4));
    for (int k = 1; k <= 10; ++k) expected.add_term({-k, k}, Rational(-1, 2));
    CHECK(series_A_hat_BKP(AffineB{}, {0, 1, 1}, {1, 2, -1}, 2, w) == expected);

    const Window w1 = box(1, -10, 10);
    CHECK(series_A_hat_BKP(a10(), {0, 1, 1}, {0, 1, -1}, 1, w1) == make_monomial(1, {-1}, 1));
    CHECK(series_A_hat_BKP(AffineB{}, {0, 1, 1}, {0, 1, -1}, 1, w1).is_zero());
}

TEST_CASE("generating-series relation") {
    CHECK(check_relation_GSKPBKP(a10(), 8));
    CHECK(check_relation_GSKPBKP(AffineB{}, 8));
    for (std::uint64_t seed = 100; seed < 110; ++seed) CHECK(check_relation_GSKPBKP(random_affine_b(seed), 8));
}

TEST_CASE("random instances are deterministic and within shape") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const AffineB a = random_affine_b(seed), b = random_affine_b(seed);
        CHECK(a.entries() == b.entries());
        CHECK_FALSE(a.empty());
        CHECK(a.max_index() <= 4);
        for (const auto& [key, v] : a.entries()) {
            CHECK(abs(v.get_num()) <= 9);
            CHECK(v.get_den() <= 9);
        }
    }
}
