#pragma once

#include <map>
#include <optional>

#include "bkp/affine_coords.hpp"
#include "bkp/exact_series.hpp"

namespace bkp {

// Finite data for the pair (s, t):
//   s(x,y) = sum_{m<n} c_{m,n} (x^-m y^-n - x^-n y^-m),  t(x) = sum_{m>=1} t_m x^-m.
// Only the m < n triangle of s is stored, so s(y,x) = -s(x,y) holds by
// construction.
class SeriesPairSpec {
public:
    // Any (m, n) with m != n, both >= 1; (n, m) input is stored negated.
    void set_s(int m, int n, const Rational& c);
    void set_t(int m, const Rational& c);

    const std::map<IndexPair, Rational>& s_entries() const { return s_; }
    const std::map<int, Rational>& t_entries() const { return t_; }
    int max_index() const;
    bool empty() const { return s_.empty() && t_.empty(); }

private:
    std::map<IndexPair, Rational> s_;
    std::map<int, Rational> t_;
};

enum class Flavor { X, Y };

struct VarRef {
    int index;  // 1..k
    Flavor flavor;
};

// The pair of the selector xi_i^{(1-eps)/2}: `base` when eps = +1, the
// other flavor of the same index when eps = -1.
VarRef select(VarRef base, int eps);

// How lemma variables map to series variables.
//   Independent: x_i, y_i are separate variables (2k of them, x_i first).
//   Diagonal:    x_i = z_i and y_i = -z_i (k variables).
enum class LemmaMode { Independent, Diagonal };

int lemma_vars(LemmaMode mode, int k);
KernelArg place(VarRef v, LemmaMode mode);

// f(y,x) = 2 s(y,x) + 2 t(y) - 2 t(x) + (y-x)/(y+x)
// g(y,x) = s(y,x) + 2 t(y)(1 - t(x)) - x/(y+x)
// with the rational parts expanded by index comparison (0 on equal index).
LaurentSeries eval_f(const SeriesPairSpec& spec, VarRef a, VarRef b, LemmaMode mode, int k, const Window& window);
LaurentSeries eval_g(const SeriesPairSpec& spec, VarRef a, VarRef b, LemmaMode mode, int k, const Window& window);

enum class LemmaSide { LHS, RHS };

// sum over eps in {+-1}^k and permutations fixing 1 of
//   prod_i eps_{s(i)} h(select(y_{s(i)}), select(x_{s(i+1)})),
// with h = f (LHS) or h = 2^k g (RHS). Factors are computed on
// `factor_window`, the sum is projected to `target`.
LaurentSeries lemma_side(LemmaSide side, int k, const SeriesPairSpec& spec, LemmaMode mode,
                         const Window& factor_window, const Window& target);

struct LemmaReport {
    bool equal = false;
    // Diagonal mode: the compared coefficients did not move when the
    // positive cap was doubled.
    bool cap_stable = true;
    std::optional<ExpVec> first_difference;
    Rational lhs;
    Rational rhs;

    bool ok() const { return equal && cap_stable; }
};

// Independent variables on the window [-depth, depth]^{2k}. For k >= 2 every
// variable occurs in exactly one factor, so the comparison is exact.
LemmaReport check_lemma(int k, const SeriesPairSpec& spec, int depth);

// x_i = -y_i = z_i on [-depth, depth]^k, positive exponents capped at `cap`
// (0: depth + k (max_index + 2)) and re-checked at twice the cap.
LemmaReport check_lemma_diagonal(int k, const SeriesPairSpec& spec, int depth, int cap = 0);

// s(w,z) = s_0(-w,z) and t = t_0 built from the affine coordinates:
// c_{m,n} = 2 a_{m,n} for 1 <= m < n, t_m = a_{m,0}.
SeriesPairSpec instantiate_from_affine(const AffineB& b);

}  // namespace bkp
