#include "bkp/exact_series.hpp"

namespace bkp {

std::string to_string(KernelKind kind) {
    switch (kind) {
        case KernelKind::InvDiff: return "InvDiff";
        case KernelKind::InvDiffSq: return "InvDiffSq";
        case KernelKind::InvSum: return "InvSum";
        case KernelKind::GeomTail: return "GeomTail";
        case KernelKind::KpDelta: return "KpDelta";
        case KernelKind::BkpDelta: return "BkpDelta";
        case KernelKind::LemmaRatio: return "LemmaRatio";
    }
    return "?";
}

namespace {

struct Term {
    int e_dom;
    int e_oth;
    Rational c;
};

// k-th term of each expansion, written in the dominant/other variables.
// `first_dominates` is true when the first argument u is the dominant one.
Term kernel_term(KernelKind kind, bool first_dominates, int k, int order) {
    const Rational alt = (k % 2 == 0) ? 1 : -1;
    switch (kind) {
        case KernelKind::InvDiff:
            return {-k - 1, k, first_dominates ? Rational(1) : Rational(-1)};
        case KernelKind::InvDiffSq:
            return {-k - 2, k, Rational(k + 1)};
        case KernelKind::InvSum: {
            // binom(-m, k) = (-1)^k binom(m+k-1, k)
            mpz_class b;
            mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(order + k - 1), static_cast<unsigned long>(k));
            return {-order - k, k, alt * Rational(b)};
        }
        case KernelKind::GeomTail:
            if (first_dominates) return {-(k + 1), k + 1, -alt};  // (-1)^(k+1), k+1 >= 1
            return {-k, k, -alt};
        case KernelKind::KpDelta:
            return {-2 * k - 2, 2 * k, Rational(2 * k + 1, 2)};
        case KernelKind::BkpDelta:
            return {-2 * k - 1, 2 * k + 1, Rational(2 * k + 1, 2)};
        case KernelKind::LemmaRatio:
            if (first_dominates) return {-k, k, alt};  // sum (-N)^-n O^n
            return {-k - 1, k + 1, alt};              // -sum (-O)^(-n-1) N^(n+1)
    }
    throw SeriesError("unknown kernel kind");
}

}  // namespace

LaurentSeries expand_kernel(KernelKind kind, KernelArg a, KernelArg b, int n_vars, const Window& window, int order) {
    LaurentSeries out(n_vars, window);
    if (a.index == b.index) {
        if (kind == KernelKind::LemmaRatio) return out;
        throw SeriesError("diagonal request for kernel " + to_string(kind) + ": it has no equal-index case");
    }
    if (a.slot == b.slot) throw SeriesError("kernel arguments must live in distinct variables");
    if (a.slot < 0 || a.slot >= n_vars || b.slot < 0 || b.slot >= n_vars)
        throw SeriesError("kernel argument slot out of range");
    if (kind == KernelKind::InvSum && order < 1) throw SeriesError("InvSum needs order >= 1");

    const bool first_dominates = a.index < b.index;
    const KernelArg& dom = first_dominates ? a : b;
    const KernelArg& oth = first_dominates ? b : a;
    out.mark_direction(dom.slot, oth.slot);

    ExpVec e(n_vars, 0);
    for (int k = 0;; ++k) {
        Term t = kernel_term(kind, first_dominates, k, order);
        // Dominant exponents only decrease and the other only increases.
        if (t.e_dom < window.lo[dom.slot] || t.e_oth > window.hi[oth.slot]) break;
        e[dom.slot] = t.e_dom;
        e[oth.slot] = t.e_oth;
        if (!window.contains(e)) continue;
        int parity = 0;
        if (dom.sign < 0) parity += t.e_dom;
        if (oth.sign < 0) parity += t.e_oth;
        out.add_term(e, parity % 2 == 0 ? t.c : Rational(-t.c));
    }
    return out;
}

}  // namespace bkp
