#include <doctest.h>

#include "bkp/fock_oracle.hpp"
#include "bkp/random_instances.hpp"

using namespace bkp;

namespace {

AffineB a10() { return AffineB::validate({{1, 0, 1}}); }

FockVector scaled(FockVector v, const Rational& c) {
    for (auto& [s, x] : v.terms) x *= c;
    std::erase_if(v.terms, [](const auto& kv) { return kv.second == 0; });
    return v;
}

FockVector sum(const FockVector& a, const FockVector& b) {
    FockVector out = a;
    for (const auto& [s, c] : b.terms) out.add(s, c);
    return out;
}

std::vector<FockState> low_states() {
    std::vector<FockState> out;
    for (int charge = -2; charge <= 2; ++charge)
        for (const FockState& s : basis_states(6, charge)) out.push_back(s);
    return out;
}

const int kRoom = 40;

}  // namespace

TEST_CASE("vacuum and grading") {
    const FockVector v = vacuum(4);
    CHECK(v.vacuum_coefficient() == 1);
    CHECK(v.terms.size() == 1);
    CHECK(FockState{}.grade() == 0);
    CHECK(FockState{{-1}, {}}.grade() == 0);
    CHECK(FockState{{-3}, {}}.grade() == 1);
    CHECK(FockState{{}, {1}}.grade() == 1);
    CHECK(FockState{{-1}, {1}}.grade() == 1);
    CHECK(FockState{{-1}, {1}}.charge() == 0);
    CHECK(basis_states(0, 0).size() == 1);
    // Charge-0 states of grade <= 3 are counted by partitions: 1+1+2+3.
    CHECK(basis_states(3, 0).size() == 7);
}

TEST_CASE("single fermions") {
    const FockVector v = vacuum(6);
    const FockVector one = apply_psi(-1, v);
    REQUIRE(one.terms.size() == 1);
    CHECK(one.terms.begin()->first.bubbles == std::vector<int>{-1});
    CHECK(one.terms.begin()->first.holes.empty());
    CHECK(one.terms.begin()->second == 1);
    CHECK(apply_psi_star(1, v).terms.empty());
    CHECK(apply_psi_star(1, one) == v);
    CHECK(apply_psi(1, v).terms.empty());
}

TEST_CASE("charged fermion anticommutators on low basis states") {
    for (const FockState& s : low_states()) {
        const FockVector b = basis_vector(s, kRoom);
        for (int r2 = -7; r2 <= 7; r2 += 2)
            for (int s2 = -7; s2 <= 7; s2 += 2) {
                const FockVector lhs = sum(apply_psi(r2, apply_psi_star(s2, b)), apply_psi_star(s2, apply_psi(r2, b)));
                CHECK(lhs == (r2 + s2 == 0 ? b : FockVector{}));
                CHECK(sum(apply_psi(r2, apply_psi(s2, b)), apply_psi(s2, apply_psi(r2, b))).terms.empty());
            }
    }
}

TEST_CASE("neutral fermion anticommutators on low basis states") {
    for (const FockState& s : low_states()) {
        const FockVector b = basis_vector(s, kRoom);
        for (int m = -4; m <= 4; ++m)
            for (int n = -4; n <= 4; ++n) {
                const FockVector lhs = sum(apply_quadratic({QuadraticOp::Kind::PhiPhi, m, n}, b),
                                           apply_quadratic({QuadraticOp::Kind::PhiPhi, n, m}, b));
                const Rational expected = m + n == 0 ? (m % 2 == 0 ? 1 : -1) : 0;
                CHECK(lhs == scaled(b, expected));
                const FockVector hat = sum(apply_quadratic({QuadraticOp::Kind::PhiHatPhiHat, m, n}, b),
                                           apply_quadratic({QuadraticOp::Kind::PhiHatPhiHat, n, m}, b));
                CHECK(hat == scaled(b, expected));
            }
    }
}

TEST_CASE("grade bookkeeping") {
    std::vector<QuadraticOp> ops;
    for (int m = -3; m <= 3; ++m)
        for (int n = -3; n <= 3; ++n) {
            ops.push_back({QuadraticOp::Kind::PhiPhi, m, n});
            ops.push_back({QuadraticOp::Kind::PhiHatPhiHat, m, n});
        }
    for (int a = -5; a <= 5; a += 2)
        for (int b = -5; b <= 5; b += 2) ops.push_back({QuadraticOp::Kind::PsiPsiStar, a, b});
    for (int k = 1; k <= 4; ++k) {
        ops.push_back({QuadraticOp::Kind::HKP, k});
        ops.push_back({QuadraticOp::Kind::HB, k});
    }
    CHECK(grade_shift({QuadraticOp::Kind::PhiPhi, 2, 3}) == 5);
    CHECK(grade_shift({QuadraticOp::Kind::HB, 3}) == -3);
    for (const FockState& s : basis_states(5, 0))
        for (const QuadraticOp& op : ops) {
            const FockVector out = apply_quadratic(op, basis_vector(s, kRoom));
            for (const auto& [t, c] : out.terms) CHECK(t.grade() == s.grade() + grade_shift(op));
        }
}

TEST_CASE("neutral bilinear on the vacuum") {
    const FockVector v = apply_quadratic({QuadraticOp::Kind::PhiPhi, 0, 1}, vacuum(6));
    CHECK(v.terms.size() == 2);
    CHECK(v.graded_part(1) == v);
    CHECK(apply_quadratic({QuadraticOp::Kind::HKP, 1}, vacuum(6)).terms.empty());
    CHECK(apply_quadratic({QuadraticOp::Kind::HB, 1}, v).vacuum_coefficient() == Rational(-1, 2));
}

TEST_CASE("exponential of a bilinear") {
    CHECK(exp_bilinear_vacuum({}, 6) == vacuum(6));
    const std::vector<QuadraticOp> gen = bkp_generator(a10());
    const FockVector e = exp_bilinear_vacuum(gen, 6);
    CHECK(e.vacuum_coefficient() == 1);
    const FockVector x1 = apply_sum(gen, vacuum(6));
    const FockVector x2 = apply_sum(gen, x1);
    CHECK(e.graded_part(1) == x1);
    CHECK(e.graded_part(2) == scaled(x2, Rational(1, 2)));
    CHECK_THROWS_AS(exp_bilinear_vacuum({{QuadraticOp::Kind::PhiPhi, -1, 0}}, 4), std::invalid_argument);
}

TEST_CASE("tau coefficients") {
    const Rational alpha(3, 7);
    const TimeSeries kp = tau_kp(AffineKP(std::map<IndexPair, Rational>{{{0, 0}, alpha}}), 3);
    CHECK(kp.at(TimeMonomial{}) == 1);
    CHECK(kp.at(TimeMonomial{1}) == alpha);

    const TimeSeries bkp = tau_bkp(a10(), 5);
    CHECK(bkp.at(TimeMonomial{}) == 1);
    CHECK(bkp.at(TimeMonomial{1}) == -1);
    for (const auto& [m, c] : bkp)
        for (int t : m) CHECK(t % 2 == 1);

    const TimeSeries trivial = tau_bkp(AffineB{}, 7);
    CHECK(trivial == TimeSeries{{TimeMonomial{}, Rational(1)}});
}

TEST_CASE("logarithm") {
    CHECK(log_series({{TimeMonomial{}, Rational(1)}}, 7).empty());
    const TimeSeries tau = {{{}, Rational(1)}, {{1}, Rational(-1)}, {{1, 1}, Rational(1, 2)}};
    const TimeSeries F = log_series(tau, 2);
    CHECK(F == TimeSeries{{{1}, Rational(-1)}});
    CHECK(npoint_from_F(F, 1, 2, true).at({1}) == -1);
    CHECK_THROWS_AS(log_series({{{1}, Rational(1)}}, 3), std::domain_error);

    // F = t_1^2 / 2 has d^2F/dt_1^2 = 1.
    const TimeSeries g = {{{1, 1}, Rational(1, 2)}};
    CHECK(npoint_from_F(g, 2, 2, true).at({1, 1}) == 1);
}

TEST_CASE("oracle one-point value") {
    const NPointTable t = bkp_npoint_oracle(a10(), 1, 5);
    CHECK(t.at({1}) == -1);
    CHECK(t.at({3}) == 0);
    CHECK(t.at({5}) == 0);
}

TEST_CASE("square relation") {
    CHECK(check_square_relation(AffineB{}, 6));
    CHECK(check_square_relation(a10(), 6));
    for (std::uint64_t seed = 3; seed < 5; ++seed) CHECK(check_square_relation(random_affine_b(seed), 6));
}

TEST_CASE("state equality") {
    CHECK(check_state_equality(AffineB{}, 8));
    CHECK(check_state_equality(a10(), 8));
    for (std::uint64_t seed = 3; seed < 5; ++seed) CHECK(check_state_equality(random_affine_b(seed), 6));
}

TEST_CASE("oracle is stable under a higher cutoff") {
    const AffineB b = random_affine_b(9);
    for (int n = 1; n <= 2; ++n)
        CHECK_FALSE(first_difference(bkp_npoint_oracle(b, n, 6), bkp_npoint_oracle(b, n, 6, 8)));
}
