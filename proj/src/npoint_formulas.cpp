#include "bkp/npoint_formulas.hpp"

#include "parallel_sum.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace bkp {

std::vector<Cycle> enumerate_cycles(int n) {
    if (n < 1) throw std::invalid_argument("enumerate_cycles: n must be >= 1");
    std::vector<int> rest(n - 1);
    std::iota(rest.begin(), rest.end(), 1);
    std::vector<Cycle> out;
    do {
        Cycle c;
        c.order.push_back(0);
        c.order.insert(c.order.end(), rest.begin(), rest.end());
        c.succ.assign(n, 0);
        for (int i = 0; i < n; ++i) c.succ[c.order[i]] = c.order[(i + 1) % n];
        out.push_back(std::move(c));
    } while (std::next_permutation(rest.begin(), rest.end()));
    return out;
}

Rational NPointTable::at(const MultiIndex& indices) const {
    auto it = entries.find(indices);
    return it == entries.end() ? Rational(0) : it->second;
}

bool NPointTable::symmetric() const {
    for (const auto& [idx, v] : entries) {
        MultiIndex p = idx;
        std::sort(p.begin(), p.end());
        do {
            if (at(p) != v) return false;
        } while (std::next_permutation(p.begin(), p.end()));
    }
    return true;
}

namespace {

void tuples(int n, int remaining, int step, std::vector<int>& cur, std::vector<MultiIndex>& out) {
    if (static_cast<int>(cur.size()) == n) {
        out.push_back(cur);
        return;
    }
    for (int i = 1; i <= remaining; i += step) {
        cur.push_back(i);
        tuples(n, remaining - i, step, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<MultiIndex> odd_multi_indices(int n, int max_weight) {
    std::vector<MultiIndex> out;
    std::vector<int> cur;
    tuples(n, max_weight, 2, cur, out);
    return out;
}

std::vector<MultiIndex> multi_indices(int n, int max_weight) {
    std::vector<MultiIndex> out;
    std::vector<int> cur;
    tuples(n, max_weight, 1, cur, out);
    return out;
}

int default_cap(int n, int max_weight, int max_coordinate_index) {
    return max_weight + n * (std::max(0, max_coordinate_index) + 2);
}

namespace {

LaurentSeries sum_terms(int count, const std::function<LaurentSeries(int)>& job, int n_vars, const Window& target,
                        Execution exec) {
    return detail::sum_terms(count, job, n_vars, target,
                             exec == Execution::Serial ? detail::Mode::Serial : detail::Mode::Parallel);
}

// Multiplies the factors of one cycle in visiting order. A variable is
// touched by exactly two factors (the edges into and out of it), so once
// both are in the product its exponent is final and anything outside the
// target range can be projected away.
LaurentSeries cycle_product(const std::vector<LaurentSeries>& factors, const Cycle& c, const Window& target) {
    const int n = static_cast<int>(factors.size());
    LaurentSeries acc = factors[0];
    for (int j = 1; j < n; ++j) {
        acc = acc * factors[j];
        if (j < n - 1) {
            Window w = acc.window();
            for (int i = 1; i <= j; ++i) {
                const int v = c.order[i];
                w.lo[v] = std::max(w.lo[v], target.lo[v]);
                w.hi[v] = std::min(w.hi[v], target.hi[v]);
            }
            acc = acc.restricted(w);
        }
    }
    return acc.restricted(target);
}

// Keeps the monomials whose weight sum_k (-e_k - shift) is at most max_weight.
LaurentSeries restrict_weight(const LaurentSeries& s, int shift, int max_weight) {
    LaurentSeries out(s.n_vars(), s.window());
    s.for_each_term([&](const ExpVec& e, const Rational& c) {
        int w = 0;
        for (int x : e) w += -x - shift;
        if (w <= max_weight) out.add_term(e, c);
    });
    return out;
}

struct Setup {
    int cap;
    Window factor_window;
    Window target;
};

// shift = 1 for the z^{-i-1} normalization, 0 for z^{-i}.
Setup make_setup(int n, int max_weight, int max_index, int shift, const EvalOptions& opts) {
    Setup s;
    s.cap = opts.cap > 0 ? opts.cap : default_cap(n, max_weight, max_index);
    const int reach = s.cap + std::max(0, max_index) + 2;
    s.factor_window = Window::uniform(n, -reach, s.cap);
    const int top = max_weight - (n - 1);  // largest single index
    s.target = Window::uniform(n, -(top + shift), -(1 + shift));
    return s;
}

int sign_of(unsigned mask, int slot) { return (mask >> slot) & 1u ? -1 : +1; }

// prod_i A-hat^KP(eps_a z_a, eps_b z_b) around the cycle.
LaurentSeries kp_cycle_term(const AffineKP& kp, const Cycle& c, unsigned eps, const Setup& s) {
    const int n = static_cast<int>(c.order.size());
    auto arg = [&](int slot) { return KernelArg{slot, slot, sign_of(eps, slot)}; };
    if (n == 2) {
        // (K + A12)(K' + A21) with K K' = -1/(u1-u2)^2 taken in closed form.
        const KernelArg u1 = arg(0), u2 = arg(1);
        const LaurentSeries k12 = expand_kernel(KernelKind::InvDiff, u1, u2, n, s.factor_window);
        const LaurentSeries k21 = expand_kernel(KernelKind::InvDiff, u2, u1, n, s.factor_window);
        const LaurentSeries a12 = series_A_KP(kp, ArgPlacement{n, 0, 1, u1.sign, u2.sign}, s.factor_window);
        const LaurentSeries a21 = series_A_KP(kp, ArgPlacement{n, 1, 0, u2.sign, u1.sign}, s.factor_window);
        LaurentSeries sum = -expand_kernel(KernelKind::InvDiffSq, u1, u2, n, s.factor_window);
        sum += k12 * a21;
        sum += a12 * k21;
        sum += a12 * a21;
        return sum.restricted(s.target);
    }
    std::vector<LaurentSeries> factors;
    factors.reserve(n);
    for (int i = 0; i < n; ++i)
        factors.push_back(series_A_hat_KP(kp, arg(c.order[i]), arg(c.order[(i + 1) % n]), n, s.factor_window));
    return cycle_product(factors, c, s.target);
}

// Wang-Yang factor xi for the edge a -> b.
LaurentSeries wy_factor(const AffineB& b, int from, int to, unsigned eps, int n, const Window& w) {
    const int ea = sign_of(eps, from), eb = sign_of(eps, to);
    if (from <= to) return series_A_hat_BKP(b, KernelArg{from, from, ea}, KernelArg{to, to, -eb}, n, w);
    return -series_A_hat_BKP(b, KernelArg{to, to, -eb}, KernelArg{from, from, ea}, n, w);
}

unsigned popcount_sign(unsigned mask) { return __builtin_popcount(mask) % 2 == 0 ? 1u : 0u; }

}  // namespace

LaurentSeries kp_npoint(const AffineKP& kp, int n, int max_weight, const EvalOptions& opts) {
    if (n < 2) throw std::invalid_argument("kp_npoint: the KP cycle formula needs n >= 2");
    const Setup s = make_setup(n, max_weight, kp.max_index(), 1, opts);
    const auto cycles = enumerate_cycles(n);
    auto job = [&](int i) { return kp_cycle_term(kp, cycles[i], 0u, s); };
    LaurentSeries total = sum_terms(static_cast<int>(cycles.size()), job, n, s.target, opts.execution);
    if (n % 2 == 0) total *= Rational(-1);
    if (n == 2)
        total -= expand_kernel(KernelKind::InvDiffSq, {0, 0}, {1, 1}, n, s.factor_window).restricted(s.target);
    return restrict_weight(total, 1, max_weight);
}

NPointTable kp_table(const LaurentSeries& series, int n, int max_weight) {
    NPointTable t{n, max_weight, {}};
    for (const auto& idx : multi_indices(n, max_weight)) {
        ExpVec e(n);
        for (int k = 0; k < n; ++k) e[k] = -idx[k] - 1;
        Rational v = series.coefficient(e);
        if (v != 0) t.entries.emplace(idx, v);
    }
    return t;
}

LaurentSeries bkp_embedded_series(const AffineB& b, int n, int max_weight, const EvalOptions& opts) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    const AffineKP kp = bkp_to_kp(b);
    const Setup s = make_setup(n, max_weight, std::max(b.max_index(), kp.max_index()), 1, opts);
    const auto cycles = enumerate_cycles(n);
    const int signs = 1 << n;
    auto job = [&](int i) { return kp_cycle_term(kp, cycles[i / signs], static_cast<unsigned>(i % signs), s); };
    LaurentSeries total =
        sum_terms(static_cast<int>(cycles.size()) * signs, job, n, s.target, opts.execution);
    // (-1)^{n-1} / 2^{n+1}
    Rational pre(1, 1u << (n + 1));
    if (n % 2 == 0) pre = -pre;
    total *= pre;
    if (n == 2) total -= expand_kernel(KernelKind::KpDelta, {0, 0}, {1, 1}, n, s.factor_window).restricted(s.target);
    return restrict_weight(total, 1, max_weight);
}

LaurentSeries bkp_wangyang_series(const AffineB& b, int n, int max_weight, const EvalOptions& opts) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    const Setup s = make_setup(n, max_weight, b.max_index(), 0, opts);
    const auto cycles = enumerate_cycles(n);
    // eps_1 = +1; bits 1..n-1 of the mask carry eps_2..eps_n.
    const int signs = 1 << (n - 1);
    auto job = [&](int i) {
        const Cycle& c = cycles[i / signs];
        const unsigned eps = static_cast<unsigned>(i % signs) << 1;
        std::vector<LaurentSeries> factors;
        for (int k = 0; k < n; ++k)
            factors.push_back(wy_factor(b, c.order[k], c.order[(k + 1) % n], eps, n, s.factor_window));
        LaurentSeries term = n == 1 ? factors[0].restricted(s.target) : cycle_product(factors, c, s.target);
        // -(eps_2 ... eps_n)
        if (popcount_sign(eps)) term *= Rational(-1);
        return term;
    };
    LaurentSeries total =
        sum_terms(static_cast<int>(cycles.size()) * signs, job, n, s.target, opts.execution);
    if (n == 2)
        total -= expand_kernel(KernelKind::BkpDelta, {0, 0}, {1, 1}, n, s.factor_window).restricted(s.target);
    return restrict_weight(total, 0, max_weight);
}

namespace {

NPointTable odd_table(const LaurentSeries& series, int n, int max_weight, int shift) {
    NPointTable t{n, max_weight, {}};
    for (const auto& idx : odd_multi_indices(n, max_weight)) {
        ExpVec e(n);
        for (int k = 0; k < n; ++k) e[k] = -idx[k] - shift;
        Rational v = series.coefficient(e);
        if (v != 0) t.entries.emplace(idx, v);
    }
    return t;
}

}  // namespace

NPointTable bkp_npoint_embedded(const AffineB& b, int n, int max_weight, const EvalOptions& opts) {
    return odd_table(bkp_embedded_series(b, n, max_weight, opts), n, max_weight, 1);
}

NPointTable bkp_npoint_wangyang(const AffineB& b, int n, int max_weight, const EvalOptions& opts) {
    return odd_table(bkp_wangyang_series(b, n, max_weight, opts), n, max_weight, 0);
}

bool only_even_exponents(const LaurentSeries& s) {
    bool ok = true;
    s.for_each_term([&](const ExpVec& e, const Rational&) {
        for (int x : e)
            if (x % 2 != 0) ok = false;
    });
    return ok;
}

std::optional<TableDiff> first_difference(const NPointTable& left, const NPointTable& right) {
    std::map<MultiIndex, int> keys;
    for (const auto& [k, v] : left.entries) keys[k];
    for (const auto& [k, v] : right.entries) keys[k];
    for (const auto& [k, unused] : keys) {
        Rational l = left.at(k), r = right.at(k);
        if (l != r) return TableDiff{k, l, r};
    }
    return std::nullopt;
}

std::string describe(const TableDiff& d) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < d.indices.size(); ++i) os << (i ? "," : "") << d.indices[i];
    os << "): " << to_string(d.left) << " vs " << to_string(d.right);
    return os.str();
}

FormulaComparison compare_formulas(const AffineB& b, int n, int max_weight, const EvalOptions& opts) {
    const LaurentSeries wy = bkp_wangyang_series(b, n, max_weight, opts);
    const LaurentSeries emb = bkp_embedded_series(b, n, max_weight, opts);

    FormulaComparison cmp;
    cmp.wangyang = odd_table(wy, n, max_weight, 0);
    cmp.embedded = odd_table(emb, n, max_weight, 1);
    cmp.table_diff = first_difference(cmp.wangyang, cmp.embedded);
    cmp.parity_clean = only_even_exponents(emb);

    // wy[e] == emb[e - (1,...,1)] over both supports.
    cmp.raw_series_equal = true;
    auto check = [&](const ExpVec& wy_exp) {
        if (cmp.raw_diff) return;
        ExpVec emb_exp = wy_exp;
        for (int& x : emb_exp) x -= 1;
        const Rational lhs = wy.window().contains(wy_exp) ? wy.coefficient(wy_exp) : Rational(0);
        const Rational rhs = emb.window().contains(emb_exp) ? emb.coefficient(emb_exp) : Rational(0);
        if (lhs != rhs) {
            cmp.raw_series_equal = false;
            cmp.raw_diff = wy_exp;
        }
    };
    wy.for_each_term([&](const ExpVec& e, const Rational&) { check(e); });
    emb.for_each_term([&](const ExpVec& e, const Rational&) {
        ExpVec shifted = e;
        for (int& x : shifted) x += 1;
        check(shifted);
    });
    return cmp;
}

}  // namespace bkp
