#include <algorithm>
#include <stdexcept>

#include "bkp/fock_oracle.hpp"

namespace bkp {

int weight(const TimeMonomial& m) {
    int w = 0;
    for (int t : m) w += t;
    return w;
}

namespace {

Rational factorial(int k) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(k));
    return Rational(f);
}

Rational multiplicity_factorials(const TimeMonomial& m) {
    Rational p = 1;
    for (std::size_t i = 0; i < m.size();) {
        std::size_t j = i;
        while (j < m.size() && m[j] == m[i]) ++j;
        p *= factorial(static_cast<int>(j - i));
        i = j;
    }
    return p;
}

FockVector drop_above(const FockVector& v, int grade) {
    FockVector out;
    out.cutoff = v.cutoff;
    for (const auto& [s, c] : v.terms)
        if (s.grade() <= grade) out.terms.emplace(s, c);
    return out;
}

struct TauSearch {
    QuadraticOp::Kind kind;
    int max_weight;
    int step;
    TimeSeries out;

    // cur = prod H_{t} v over the times in mono; only states that can still
    // be lowered to the vacuum are kept.
    void visit(const FockVector& cur, TimeMonomial& mono, int first_time) {
        const Rational c = cur.vacuum_coefficient();
        if (c != 0) out[mono] = c / multiplicity_factorials(mono);
        const int used = weight(mono);
        for (int t = first_time; used + t <= max_weight; t += step) {
            FockVector next = apply_quadratic({kind, t, 0, 1}, cur);
            next = drop_above(next, max_weight - used - t);
            if (next.terms.empty()) continue;
            mono.push_back(t);
            visit(next, mono, t);
            mono.pop_back();
        }
    }
};

}  // namespace

TimeSeries tau_coefficients(Hierarchy h, const std::vector<QuadraticOp>& generator, int max_weight,
                            bool odd_times_only, int cutoff) {
    if (max_weight < 0) throw std::invalid_argument("max_weight must be >= 0");
    const bool odd = odd_times_only || h == Hierarchy::BKP;
    TauSearch search{h == Hierarchy::BKP ? QuadraticOp::Kind::HB : QuadraticOp::Kind::HKP, max_weight,
                     odd ? 2 : 1, {}};
    const FockVector v = exp_bilinear_vacuum(generator, std::max(cutoff, max_weight));
    TimeMonomial mono;
    search.visit(v, mono, 1);
    return search.out;
}

TimeSeries tau_bkp(const AffineB& b, int max_weight, int cutoff) {
    return tau_coefficients(Hierarchy::BKP, bkp_generator(b), max_weight, true, cutoff);
}

TimeSeries tau_kp(const AffineKP& kp, int max_weight, int cutoff) {
    return tau_coefficients(Hierarchy::KP, kp_generator(kp), max_weight, false, cutoff);
}

TimeSeries multiply(const TimeSeries& a, const TimeSeries& b, int max_weight) {
    TimeSeries out;
    for (const auto& [ma, ca] : a) {
        const int wa = weight(ma);
        for (const auto& [mb, cb] : b) {
            if (wa + weight(mb) > max_weight) continue;
            TimeMonomial m;
            std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(m));
            out[m] += ca * cb;
        }
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

TimeSeries log_series(const TimeSeries& tau, int max_weight) {
    auto it = tau.find(TimeMonomial{});
    if (it == tau.end() || it->second != 1) throw std::domain_error("log_series: constant term must be 1");
    TimeSeries u = tau;
    u.erase(TimeMonomial{});
    // Every monomial of u has weight >= 1, so u^k vanishes for k > max_weight.
    TimeSeries F, power = u;
    for (int k = 1; k <= max_weight && !power.empty(); ++k) {
        const Rational c = Rational(k % 2 == 1 ? 1 : -1, k);
        for (const auto& [m, v] : power) F[m] += c * v;
        power = multiply(power, u, max_weight);
    }
    std::erase_if(F, [](const auto& kv) { return kv.second == 0; });
    return F;
}

NPointTable npoint_from_F(const TimeSeries& F, int n, int max_weight, bool odd_only) {
    NPointTable t{n, max_weight, {}};
    const auto indices = odd_only ? odd_multi_indices(n, max_weight) : multi_indices(n, max_weight);
    for (const auto& idx : indices) {
        TimeMonomial m = idx;
        std::sort(m.begin(), m.end());
        auto it = F.find(m);
        if (it == F.end()) continue;
        t.entries.emplace(idx, it->second * multiplicity_factorials(m));
    }
    return t;
}

NPointTable bkp_npoint_oracle(const AffineB& b, int n, int max_weight, int cutoff) {
    return npoint_from_F(log_series(tau_bkp(b, max_weight, cutoff), max_weight), n, max_weight, true);
}

NPointTable kp_npoint_oracle(const AffineKP& kp, int n, int max_weight, int cutoff) {
    return npoint_from_F(log_series(tau_kp(kp, max_weight, cutoff), max_weight), n, max_weight, false);
}

bool check_square_relation(const AffineB& b, int max_weight) {
    const TimeSeries bkp = tau_bkp(b, max_weight);
    const TimeSeries kp = tau_coefficients(Hierarchy::KP, doubled_generator(b), max_weight, true);
    return kp == multiply(bkp, bkp, max_weight);
}

bool check_state_equality(const AffineB& b, int cutoff) {
    const FockVector lhs = exp_bilinear_vacuum(kp_generator(bkp_to_kp(b)), cutoff);
    const FockVector rhs = exp_bilinear_vacuum(doubled_generator(b), cutoff);
    return lhs == rhs;
}

}  // namespace bkp
