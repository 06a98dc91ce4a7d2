#include "bkp/lemma_verifier.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "bkp/npoint_formulas.hpp"
#include "parallel_sum.hpp"

namespace bkp {

void SeriesPairSpec::set_s(int m, int n, const Rational& c) {
    if (m < 1 || n < 1) throw std::invalid_argument("s indices must be >= 1");
    if (m == n) throw std::invalid_argument("s has no diagonal entries");
    IndexPair key = m < n ? IndexPair{m, n} : IndexPair{n, m};
    Rational v = m < n ? c : Rational(-c);
    if (v == 0)
        s_.erase(key);
    else
        s_[key] = v;
}

void SeriesPairSpec::set_t(int m, const Rational& c) {
    if (m < 1) throw std::invalid_argument("t has no constant term");
    if (c == 0)
        t_.erase(m);
    else
        t_[m] = c;
}

int SeriesPairSpec::max_index() const {
    int top = 0;
    for (const auto& [key, v] : s_) top = std::max(top, key.second);
    for (const auto& [m, v] : t_) top = std::max(top, m);
    return top;
}

VarRef select(VarRef base, int eps) {
    if (eps > 0) return base;
    return {base.index, base.flavor == Flavor::X ? Flavor::Y : Flavor::X};
}

int lemma_vars(LemmaMode mode, int k) { return mode == LemmaMode::Independent ? 2 * k : k; }

KernelArg place(VarRef v, LemmaMode mode) {
    if (mode == LemmaMode::Independent)
        return {2 * (v.index - 1) + (v.flavor == Flavor::Y ? 1 : 0), v.index, +1};
    return {v.index - 1, v.index, v.flavor == Flavor::X ? +1 : -1};
}

namespace {

int sign_pow(int sign, int e) { return sign < 0 && e % 2 != 0 ? -1 : 1; }

void add_monomial(LaurentSeries& out, const KernelArg& a, int ea, const KernelArg& b, int eb, const Rational& c) {
    ExpVec e(out.n_vars(), 0);
    e[a.slot] += ea;
    e[b.slot] += eb;
    if (!out.window().contains(e)) return;
    const int sign = sign_pow(a.sign, ea) * sign_pow(b.sign, eb);
    out.add_term(e, sign > 0 ? c : Rational(-c));
}

// c * s(a, b)
void add_s(LaurentSeries& out, const SeriesPairSpec& spec, const KernelArg& a, const KernelArg& b, const Rational& c) {
    for (const auto& [key, v] : spec.s_entries()) {
        add_monomial(out, a, -key.first, b, -key.second, c * v);
        add_monomial(out, a, -key.second, b, -key.first, -c * v);
    }
}

// c * t(a)
void add_t(LaurentSeries& out, const SeriesPairSpec& spec, const KernelArg& a, const Rational& c) {
    for (const auto& [m, v] : spec.t_entries()) add_monomial(out, a, -m, a, 0, c * v);
}

// c * t(a) t(b)
void add_tt(LaurentSeries& out, const SeriesPairSpec& spec, const KernelArg& a, const KernelArg& b, const Rational& c) {
    for (const auto& [m, v] : spec.t_entries())
        for (const auto& [n, w] : spec.t_entries()) add_monomial(out, a, -m, b, -n, c * v * w);
}

LaurentSeries ratio(const KernelArg& num, const KernelArg& other, int n_vars, const Window& w) {
    return expand_kernel(KernelKind::LemmaRatio, num, other, n_vars, w);
}

}  // namespace

LaurentSeries eval_f(const SeriesPairSpec& spec, VarRef a, VarRef b, LemmaMode mode, int k, const Window& window) {
    const int n = lemma_vars(mode, k);
    const KernelArg y = place(a, mode), x = place(b, mode);
    LaurentSeries out(n, window);
    add_s(out, spec, y, x, 2);
    add_t(out, spec, y, 2);
    add_t(out, spec, x, -2);
    // (y-x)/(y+x) = y/(x+y) - x/(y+x)
    out += ratio(y, x, n, window);
    out -= ratio(x, y, n, window);
    return out;
}

LaurentSeries eval_g(const SeriesPairSpec& spec, VarRef a, VarRef b, LemmaMode mode, int k, const Window& window) {
    const int n = lemma_vars(mode, k);
    const KernelArg y = place(a, mode), x = place(b, mode);
    LaurentSeries out(n, window);
    add_s(out, spec, y, x, 1);
    add_t(out, spec, y, 2);
    add_tt(out, spec, y, x, -2);
    out -= ratio(x, y, n, window);
    return out;
}

LaurentSeries lemma_side(LemmaSide side, int k, const SeriesPairSpec& spec, LemmaMode mode,
                         const Window& factor_window, const Window& target) {
    if (k < 1 || k > 4) throw std::invalid_argument("lemma_side: k must be in 1..4");
    const int n = lemma_vars(mode, k);
    const auto cycles = enumerate_cycles(k);
    // For a fixed cycle the sign sum is the trace of a product of 2x2
    // matrices M_i[a][b] = eps_a h(first(a), second(b)), rows indexed by the
    // sign of the edge's source, columns by the sign of its target.
    auto job = [&](int idx) {
        const Cycle& c = cycles[idx];
        auto edge = [&](int i, int a, int b) {
            const int from = c.order[i], to = c.order[(i + 1) % k];
            const int ea = a == 0 ? +1 : -1, eb = b == 0 ? +1 : -1;
            const VarRef first = select({from + 1, Flavor::Y}, ea);
            const VarRef second = select({to + 1, Flavor::X}, eb);
            LaurentSeries h = side == LemmaSide::LHS ? eval_f(spec, first, second, mode, k, factor_window)
                                                     : eval_g(spec, first, second, mode, k, factor_window);
            if (ea < 0) h *= Rational(-1);
            return h;
        };
        using Matrix = std::vector<std::vector<LaurentSeries>>;
        Matrix p(2);
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) p[a].push_back(edge(0, a, b));
        for (int i = 1; i < k; ++i) {
            Matrix next(2);
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b) {
                    if (i == k - 1 && a != b) {
                        next[a].push_back(LaurentSeries(n, target));
                        continue;
                    }
                    LaurentSeries e0 = edge(i, 0, b), e1 = edge(i, 1, b);
                    LaurentSeries entry = p[a][0] * e0;
                    entry += p[a][1] * e1;
                    // In diagonal mode z_j sits in the two factors around
                    // it; once both are in, its exponent is final.
                    if (mode == LemmaMode::Diagonal && i < k - 1) {
                        Window w = entry.window();
                        for (int j = 1; j <= i; ++j) {
                            const int v = c.order[j];
                            w.lo[v] = std::max(w.lo[v], target.lo[v]);
                            w.hi[v] = std::min(w.hi[v], target.hi[v]);
                        }
                        entry = entry.restricted(w);
                    }
                    next[a].push_back(std::move(entry));
                }
            p = std::move(next);
        }
        LaurentSeries trace = p[0][0].restricted(target);
        trace += p[1][1].restricted(target);
        return trace;
    };
    LaurentSeries total =
        detail::sum_terms(static_cast<int>(cycles.size()), job, n, target, detail::Mode::Parallel);
    if (side == LemmaSide::RHS) total *= Rational(1 << k);
    return total;
}

namespace {

LemmaReport compare(const LaurentSeries& lhs, const LaurentSeries& rhs) {
    LemmaReport r;
    r.equal = lhs == rhs;
    if (!r.equal) {
        LaurentSeries diff = lhs - rhs;
        const ExpVec e = diff.terms().front().first;
        r.first_difference = e;
        r.lhs = lhs.coefficient(e);
        r.rhs = rhs.coefficient(e);
    }
    return r;
}

}  // namespace

LemmaReport check_lemma(int k, const SeriesPairSpec& spec, int depth) {
    const Window w = Window::uniform(2 * k, -depth, depth);
    return compare(lemma_side(LemmaSide::LHS, k, spec, LemmaMode::Independent, w, w),
                   lemma_side(LemmaSide::RHS, k, spec, LemmaMode::Independent, w, w));
}

LemmaReport check_lemma_diagonal(int k, const SeriesPairSpec& spec, int depth, int cap) {
    if (cap <= 0) cap = depth + k * (spec.max_index() + 2);
    const Window target = Window::uniform(k, -depth, depth);
    auto run = [&](int c) {
        const Window fw = Window::uniform(k, -(depth + c), c);
        return std::pair{lemma_side(LemmaSide::LHS, k, spec, LemmaMode::Diagonal, fw, target),
                         lemma_side(LemmaSide::RHS, k, spec, LemmaMode::Diagonal, fw, target)};
    };
    const auto [lhs, rhs] = run(cap);
    LemmaReport r = compare(lhs, rhs);
    const auto [lhs2, rhs2] = run(2 * cap);
    r.cap_stable = lhs == lhs2 && rhs == rhs2;
    return r;
}

SeriesPairSpec instantiate_from_affine(const AffineB& b) {
    SeriesPairSpec spec;
    for (const auto& [key, v] : b.entries()) {
        const auto [m, n] = key;
        if (m >= 1 && n >= 1 && m < n) spec.set_s(m, n, 2 * v);
        if (m >= 1 && n == 0) spec.set_t(m, v);
    }
    return spec;
}

}  // namespace bkp
