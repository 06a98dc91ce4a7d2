#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bkp/rational.hpp"

namespace bkp {

// Exponents of z_1..z_n in a monomial; may be negative.
using ExpVec = std::vector<int>;

class SeriesError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A requested monomial (or term) lies outside the window of a series.
class WindowError : public SeriesError {
public:
    using SeriesError::SeriesError;
};

// Product of two kernels expanded in opposite directions on the same
// variable pair: every output coefficient would be an infinite sum.
class DivergentPairing : public SeriesError {
public:
    using SeriesError::SeriesError;
};

// Per-variable inclusive exponent ranges [lo_k, hi_k].
struct Window {
    std::vector<int> lo;
    std::vector<int> hi;

    static Window uniform(int n_vars, int lo, int hi);
    static Window point(const ExpVec& e);

    int n_vars() const { return static_cast<int>(lo.size()); }
    bool contains(const ExpVec& e) const;
    Window intersect(const Window& other) const;
    Window hull(const Window& other) const;
    // Minkowski sum: the exponent box reachable by a product.
    Window sum(const Window& other) const;

    friend bool operator==(const Window&, const Window&) = default;
};

// "Negative powers of `dominant`, positive powers of `other`": the region a
// kernel expansion was taken in.
struct Direction {
    int dominant;
    int other;
    friend bool operator==(const Direction&, const Direction&) = default;
};

// Truncated multivariate Laurent series over Q. Terms are stored sparsely
// and never include zero coefficients. The window bounds every stored
// exponent; products default to the Minkowski sum of the operand windows,
// so plain arithmetic is exact on the represented Laurent polynomials.
// Only the explicit-window product discards terms, and it records that in
// truncated().
class LaurentSeries {
public:
    LaurentSeries(int n_vars, Window window);

    int n_vars() const { return n_vars_; }
    const Window& window() const { return window_; }
    bool truncated() const { return truncated_; }
    const std::vector<Direction>& directions() const { return directions_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    // Throws WindowError when e is outside the window ("insufficient truncation").
    Rational coefficient(const ExpVec& e) const;

    // Accumulates c into the coefficient of e; throws WindowError outside the window.
    void add_term(const ExpVec& e, const Rational& c);

    void mark_direction(int dominant, int other);
    void mark_truncated() { truncated_ = true; }

    // Terms in lexicographic exponent order.
    std::vector<std::pair<ExpVec, Rational>> terms() const;
    void for_each_term(const std::function<void(const ExpVec&, const Rational&)>& f) const;

    // Projection onto the monomials inside w (a deliberate restriction, not
    // arithmetic truncation: the flag is left untouched).
    LaurentSeries restricted(const Window& w) const;

    LaurentSeries& operator+=(const LaurentSeries& other);
    LaurentSeries& operator-=(const LaurentSeries& other);
    LaurentSeries& operator*=(const Rational& c);

    friend LaurentSeries operator+(LaurentSeries a, const LaurentSeries& b) { return a += b; }
    friend LaurentSeries operator-(LaurentSeries a, const LaurentSeries& b) { return a -= b; }
    friend LaurentSeries operator-(LaurentSeries a) { return a *= Rational(-1); }
    friend LaurentSeries operator*(LaurentSeries a, const Rational& c) { return a *= c; }
    friend LaurentSeries operator*(const Rational& c, LaurentSeries a) { return a *= c; }
    friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);

    // Coefficientwise equality; windows and flags are not compared.
    friend bool operator==(const LaurentSeries& a, const LaurentSeries& b);

    // Packed-key access for the hot loops in this library.
    using Key = std::uint64_t;
    const std::unordered_map<Key, Rational>& raw_terms() const { return terms_; }
    ExpVec decode(Key key) const;
    Key encode(const ExpVec& e) const;

private:
    friend LaurentSeries mul(const LaurentSeries&, const LaurentSeries&, const Window&);
    friend LaurentSeries substitute_sign(const LaurentSeries&, int, int);

    void check_compatible(const LaurentSeries& other) const;
    void merge_directions(const LaurentSeries& other);
    void check_codec_range(const Window& w) const;

    int n_vars_;
    int bits_;
    Window window_;
    std::unordered_map<Key, Rational> terms_;
    bool truncated_ = false;
    std::vector<Direction> directions_;
};

LaurentSeries make_monomial(int n_vars, const ExpVec& e, const Rational& coeff, const Window& window);
LaurentSeries make_monomial(int n_vars, const ExpVec& e, const Rational& coeff);

// Cauchy product truncated to `result_window`; sets truncated() when any
// product term fell outside it.
LaurentSeries mul(const LaurentSeries& a, const LaurentSeries& b, const Window& result_window);

// z_var -> sign * z_var.
LaurentSeries substitute_sign(const LaurentSeries& s, int var, int sign);

// Re-homes a series into n_vars variables: variable k of `s` becomes
// variable target[k] with its argument multiplied by sign[k]. Several source
// variables may share one target (exponents add), which is how diagonal
// values such as A(z,-z) are formed.
LaurentSeries embed(const LaurentSeries& s, int n_vars, std::span<const int> target,
                    std::span<const int> sign, const Window& window);

std::string to_string(const LaurentSeries& s);

// ---------------------------------------------------------------------------
// Directional kernel expansions.

enum class KernelKind {
    InvDiff,     // 1/(u-v)
    InvDiffSq,   // 1/(u-v)^2
    InvSum,      // 1/(u+v)^m
    GeomTail,    // -v/(u+v) = sum_{k>=1} (-1)^k u^-k v^k when u dominates
    KpDelta,     // (u^2+v^2) / (2 (u^2-v^2)^2)
    BkpDelta,    // u v (u^2+v^2) / (2 (u^2-v^2)^2)
    LemmaRatio,  // N/(O+N) with N the first argument, O the second
};

std::string to_string(KernelKind kind);

// One argument of a kernel: the series variable it lives in, the index that
// decides the expansion region, and the sign of the substitution u = sign*z.
struct KernelArg {
    int slot;
    int index;
    int sign = +1;
};

// Expansion of the named rational function of (u, v) = (a.sign z_a, b.sign z_b)
// in the region where the argument with the smaller index dominates,
// restricted to `window`. LemmaRatio returns 0 when the indices coincide;
// every other kind rejects equal indices. `order` is the power m of InvSum.
LaurentSeries expand_kernel(KernelKind kind, KernelArg a, KernelArg b, int n_vars, const Window& window,
                            int order = 1);

}  // namespace bkp
