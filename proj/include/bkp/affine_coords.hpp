#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bkp/exact_series.hpp"
#include "bkp/rational.hpp"

namespace bkp {

class CoordinateError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using IndexPair = std::pair<int, int>;

struct RawEntry {
    int n;
    int m;
    Rational value;
};

// Affine coordinates in the BKP sense: a finite antisymmetric matrix
// a_{n,m} = -a_{m,n} over n, m >= 0.
class AffineB {
public:
    AffineB() = default;

    // Antisymmetric completion of the given entries. Either triangle (or
    // both, if consistent) may be supplied.
    static AffineB validate(const std::vector<RawEntry>& raw);

    Rational at(int n, int m) const;
    // Largest index appearing in a nonzero entry; -1 when empty.
    int max_index() const { return max_index_; }
    bool empty() const { return entries_.empty(); }
    // Both triangles, zero entries omitted.
    const std::map<IndexPair, Rational>& entries() const { return entries_; }

private:
    std::map<IndexPair, Rational> entries_;
    int max_index_ = -1;
};

// Affine coordinates in the KP sense, a^KP_{m,n} with m, n >= 0.
class AffineKP {
public:
    AffineKP() = default;
    explicit AffineKP(std::map<IndexPair, Rational> entries);

    Rational at(int m, int n) const;
    int max_index() const { return max_index_; }
    bool empty() const { return entries_.empty(); }
    const std::map<IndexPair, Rational>& entries() const { return entries_; }

    friend bool operator==(const AffineKP&, const AffineKP&) = default;

private:
    std::map<IndexPair, Rational> entries_;
    int max_index_ = -1;
};

// a^KP_{m,0} = 2(-1)^{m+1} a_{m+1,0};
// a^KP_{m,n} = 2(-1)^{m+1} (a_{m+1,n} + a_{m+1,0} a_{0,n}) for n >= 1.
AffineKP bkp_to_kp(const AffineB& b);

// Where the two arguments (w, z) of a generating series go inside an
// n-variable series: w -> w_sign * z_{w_slot}, z -> z_sign * z_{z_slot}.
// Equal slots give the diagonal value (exponents add).
struct ArgPlacement {
    int n_vars = 2;
    int w_slot = 0;
    int z_slot = 1;
    int w_sign = +1;
    int z_sign = +1;
};

// A^KP(w,z) = sum a^KP_{m,n} w^{-m-1} z^{-n-1}.
LaurentSeries series_A_KP(const AffineKP& kp, const ArgPlacement& at, const Window& window);
LaurentSeries series_A_KP(const AffineKP& kp, const Window& window);

// A^BKP(w,z) = 1/2 ( sum_{n>=1,m>=0} + sum_{n>=0,m>=1} ) (-1)^{m+n+1} a_{n,m} w^{-n} z^{-m}.
LaurentSeries series_A_BKP(const AffineB& b, const ArgPlacement& at, const Window& window);
LaurentSeries series_A_BKP(const AffineB& b, const Window& window);

// A-hat in the KP sense for arguments (u, v) = (i.sign z_i, j.sign z_j):
// InvDiff(u, v) + A^KP(u, v) for distinct indices (smaller index dominant),
// A^KP(u, v) alone when the indices coincide.
LaurentSeries series_A_hat_KP(const AffineKP& kp, KernelArg i, KernelArg j, int n_vars, const Window& window);

// A-hat in the BKP sense: A^BKP(w,z) - 1/4 - 1/2 sum_{k>=1} (-1)^k w^-k z^k,
// the tail expanded with the smaller index dominant. On equal indices this
// is A^BKP alone (the diagonal case of the Wang-Yang factor).
LaurentSeries series_A_hat_BKP(const AffineB& b, KernelArg w, KernelArg z, int n_vars, const Window& window);

// A^BKP(w,z) == 1/4 (z A^KP(w,-z) - w A^KP(z,-w)) on the window.
bool check_relation_GSKPBKP(const AffineB& b, const Window& window);
bool check_relation_GSKPBKP(const AffineB& b, int depth);

}  // namespace bkp
