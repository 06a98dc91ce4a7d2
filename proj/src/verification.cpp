#include "bkp/verification.hpp"

#include <sstream>

#include "bkp/fock_oracle.hpp"
#include "bkp/random_instances.hpp"

namespace bkp {

void CheckOutcome::fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
}

std::vector<AffineB> seeded_affine(std::uint64_t seed, int count) {
    std::vector<AffineB> out;
    for (int i = 0; i < count; ++i) out.push_back(random_affine_b(seed + static_cast<std::uint64_t>(i)));
    return out;
}

std::vector<SeriesPairSpec> seeded_specs(std::uint64_t seed, int count) {
    std::vector<SeriesPairSpec> out;
    for (int i = 0; i < count; ++i) out.push_back(random_series_pair(seed + static_cast<std::uint64_t>(i)));
    return out;
}

namespace {

std::string where(std::size_t instance, int n) {
    std::ostringstream os;
    os << "instance " << instance << ", n=" << n;
    return os.str();
}

std::string str(int v) { return std::to_string(v); }

CheckOutcome outcome(std::string name, std::vector<std::pair<std::string, std::string>> params) {
    CheckOutcome out;
    out.name = std::move(name);
    out.params = std::move(params);
    return out;
}

}  // namespace

CheckOutcome verify_generating_series(const std::vector<AffineB>& instances, int depth) {
    CheckOutcome out = outcome("generating_series", {{"depth", str(depth)}, {"instances", str(int(instances.size()))}});
    for (std::size_t i = 0; i < instances.size(); ++i) {
        ++out.cases;
        if (!check_relation_GSKPBKP(instances[i], depth)) out.fail("relation fails for instance " + str(int(i)));
    }
    return out;
}

CheckOutcome verify_square(const std::vector<AffineB>& instances, int max_weight) {
    CheckOutcome out = outcome("square", {{"max_weight", str(max_weight)}, {"instances", str(int(instances.size()))}});
    for (std::size_t i = 0; i < instances.size(); ++i) {
        ++out.cases;
        if (!check_square_relation(instances[i], max_weight)) out.fail("square relation fails for instance " + str(int(i)));
    }
    return out;
}

CheckOutcome verify_state(const std::vector<AffineB>& instances, int cutoff) {
    CheckOutcome out = outcome("state", {{"cutoff", str(cutoff)}, {"instances", str(int(instances.size()))}});
    for (std::size_t i = 0; i < instances.size(); ++i) {
        ++out.cases;
        if (!check_state_equality(instances[i], cutoff)) out.fail("states differ for instance " + str(int(i)));
    }
    return out;
}

CheckOutcome verify_equivalence(const std::vector<AffineB>& instances, int max_n, int max_weight,
                                const EvalOptions& opts) {
    CheckOutcome out = outcome("equivalence",
                     {{"max_n", str(max_n)}, {"max_weight", str(max_weight)}, {"instances", str(int(instances.size()))}});
    for (std::size_t i = 0; i < instances.size(); ++i)
        for (int n = 1; n <= max_n; ++n) {
            ++out.cases;
            const FormulaComparison c = compare_formulas(instances[i], n, max_weight, opts);
            if (c.table_diff)
                out.fail(where(i, n) + ": tables differ at " + describe(*c.table_diff));
            else if (!c.raw_series_equal)
                out.fail(where(i, n) + ": raw series differ");
            else if (!c.parity_clean)
                out.fail(where(i, n) + ": even exponents survive the sign sum");
            else if (!c.wangyang.symmetric())
                out.fail(where(i, n) + ": table not symmetric");
        }
    return out;
}

CheckOutcome verify_oracle(const std::vector<AffineB>& instances, int max_n, int max_weight) {
    CheckOutcome out = outcome("oracle",
                     {{"max_n", str(max_n)}, {"max_weight", str(max_weight)}, {"instances", str(int(instances.size()))}});
    for (std::size_t i = 0; i < instances.size(); ++i) {
        // One log computation serves every n.
        const TimeSeries F = log_series(tau_bkp(instances[i], max_weight), max_weight);
        for (int n = 1; n <= max_n; ++n) {
            ++out.cases;
            const NPointTable oracle = npoint_from_F(F, n, max_weight, true);
            if (auto d = first_difference(bkp_npoint_wangyang(instances[i], n, max_weight), oracle))
                out.fail(where(i, n) + ": Wang-Yang vs oracle at " + describe(*d));
            if (auto d = first_difference(bkp_npoint_embedded(instances[i], n, max_weight), oracle))
                out.fail(where(i, n) + ": embedded vs oracle at " + describe(*d));
        }
    }
    return out;
}

namespace {

std::string describe(const LemmaReport& r) {
    std::ostringstream os;
    if (r.first_difference) {
        os << "monomial (";
        for (std::size_t j = 0; j < r.first_difference->size(); ++j)
            os << (j ? "," : "") << (*r.first_difference)[j];
        os << "): " << to_string(r.lhs) << " vs " << to_string(r.rhs);
    }
    if (!r.cap_stable) os << (r.first_difference ? "; " : "") << "coefficients move when the cap is doubled";
    return os.str();
}

}  // namespace

CheckOutcome verify_lemma(const std::vector<SeriesPairSpec>& specs, int max_k, int depth) {
    CheckOutcome out = outcome("lemma", {{"max_k", str(max_k)}, {"depth", str(depth)}, {"specs", str(int(specs.size()))}});
    for (std::size_t i = 0; i < specs.size(); ++i)
        for (int k = 1; k <= max_k; ++k) {
            ++out.cases;
            const LemmaReport r = check_lemma(k, specs[i], depth);
            if (!r.ok()) out.fail("spec " + str(int(i)) + ", k=" + str(k) + ": " + describe(r));
        }
    return out;
}

CheckOutcome verify_lemma_diagonal(const std::vector<AffineB>& instances, int max_k, int depth) {
    CheckOutcome out = outcome("lemma_diagonal",
                     {{"max_k", str(max_k)}, {"depth", str(depth)}, {"instances", str(int(instances.size()))}});
    for (std::size_t i = 0; i < instances.size(); ++i)
        for (int k = 1; k <= max_k; ++k) {
            ++out.cases;
            const LemmaReport r = check_lemma_diagonal(k, instantiate_from_affine(instances[i]), depth);
            if (!r.ok()) out.fail("instance " + str(int(i)) + ", k=" + str(k) + ": " + describe(r));
        }
    return out;
}

CheckOutcome verify_trivial(int max_n, int max_weight) {
    CheckOutcome out = outcome("trivial", {{"max_n", str(max_n)}, {"max_weight", str(max_weight)}});
    const AffineB zero;
    for (int n = 1; n <= max_n; ++n) {
        ++out.cases;
        if (!bkp_npoint_wangyang(zero, n, max_weight).entries.empty()) out.fail("Wang-Yang nonzero at n=" + str(n));
        if (!bkp_npoint_embedded(zero, n, max_weight).entries.empty()) out.fail("embedded nonzero at n=" + str(n));
        if (!bkp_npoint_oracle(zero, n, max_weight).entries.empty()) out.fail("oracle nonzero at n=" + str(n));
        if (n >= 2 && !kp_npoint(AffineKP{}, n, max_weight).is_zero()) out.fail("KP formula nonzero at n=" + str(n));
    }
    return out;
}

CheckOutcome verify_one_point(int max_weight) {
    CheckOutcome out = outcome("one_point", {{"max_weight", str(max_weight)}});
    const AffineB b = AffineB::validate({{1, 0, 1}});
    const std::pair<const char*, NPointTable> routes[] = {
        {"Wang-Yang", bkp_npoint_wangyang(b, 1, max_weight)},
        {"embedded", bkp_npoint_embedded(b, 1, max_weight)},
        {"oracle", bkp_npoint_oracle(b, 1, max_weight)},
    };
    for (const auto& [name, t] : routes) {
        ++out.cases;
        if (t.at({1}) != -1) out.fail(std::string(name) + ": dF/dt_1 = " + to_string(t.at({1})));
        if (max_weight >= 3 && t.at({3}) != 0) out.fail(std::string(name) + ": dF/dt_3 = " + to_string(t.at({3})));
    }
    return out;
}

CheckOutcome verify_truncation(const std::vector<AffineB>& instances, int max_n, int max_weight) {
    CheckOutcome out = outcome("truncation",
                     {{"max_n", str(max_n)}, {"max_weight", str(max_weight)}, {"instances", str(int(instances.size()))}});
    for (std::size_t i = 0; i < instances.size(); ++i) {
        const AffineB& b = instances[i];
        const TimeSeries F = log_series(tau_bkp(b, max_weight), max_weight);
        const TimeSeries F2 = log_series(tau_bkp(b, max_weight, max_weight + 2), max_weight);
        for (int n = 1; n <= max_n; ++n) {
            ++out.cases;
            const int cap = default_cap(n, max_weight, b.max_index());
            const EvalOptions base{cap, Execution::Parallel}, doubled{2 * cap, Execution::Parallel};
            if (auto d = first_difference(bkp_npoint_wangyang(b, n, max_weight, base),
                                          bkp_npoint_wangyang(b, n, max_weight, doubled)))
                out.fail(where(i, n) + ": Wang-Yang moves with the cap at " + describe(*d));
            if (auto d = first_difference(bkp_npoint_embedded(b, n, max_weight, base),
                                          bkp_npoint_embedded(b, n, max_weight, doubled)))
                out.fail(where(i, n) + ": embedded moves with the cap at " + describe(*d));
            if (auto d = first_difference(npoint_from_F(F, n, max_weight, true), npoint_from_F(F2, n, max_weight, true)))
                out.fail(where(i, n) + ": oracle moves with the cutoff at " + describe(*d));
        }
    }
    return out;
}

}  // namespace bkp
