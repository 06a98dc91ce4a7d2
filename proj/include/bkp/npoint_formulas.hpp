#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bkp/affine_coords.hpp"
#include "bkp/exact_series.hpp"

namespace bkp {

enum class Execution {
    Serial,    // reference loop over (cycle, sign vector) terms
    Parallel,  // OpenMP over the same terms, partial sums merged at the end
};

// A single n-cycle on {0..n-1} (variables z_1..z_n are slots 0..n-1).
// `order` is the visiting order starting at 0; succ[order[i]] = order[i+1].
struct Cycle {
    std::vector<int> order;
    std::vector<int> succ;
};

// All (n-1)! n-cycles, via permutations fixing the first element.
std::vector<Cycle> enumerate_cycles(int n);

using MultiIndex = std::vector<int>;

// Mixed partial derivatives d^n F / dt_{i_1}...dt_{i_n} at t = 0.
struct NPointTable {
    int n = 0;
    int max_weight = 0;
    std::map<MultiIndex, Rational> entries;

    Rational at(const MultiIndex& indices) const;
    // Invariance under permutations of the index tuple.
    bool symmetric() const;
};

// Ordered tuples of odd indices >= 1 with sum <= max_weight.
std::vector<MultiIndex> odd_multi_indices(int n, int max_weight);
// Ordered tuples of indices >= 1 with sum <= max_weight.
std::vector<MultiIndex> multi_indices(int n, int max_weight);

struct EvalOptions {
    // Positive exponent cap for kernel expansions; 0 picks default_cap().
    int cap = 0;
    Execution execution = Execution::Parallel;
};

// max_weight + n (max_coordinate_index + 2).
int default_cap(int n, int max_weight, int max_coordinate_index);

// Zhou's connected n-point series of a KP tau-function (n >= 2),
// restricted to the monomials z^{-i-1} with i >= 1 and sum i <= max_weight.
LaurentSeries kp_npoint(const AffineKP& kp, int n, int max_weight, const EvalOptions& opts = {});
// Table of all indices >= 1 read off a kp_npoint series.
NPointTable kp_table(const LaurentSeries& series, int n, int max_weight);

// Right-hand side of the KP-embedding formula, restricted to z^{-i-1} with
// sum i <= max_weight (all parities; the sign sum should leave only odd i).
LaurentSeries bkp_embedded_series(const AffineB& b, int n, int max_weight, const EvalOptions& opts = {});
// Right-hand side of the Wang-Yang formula, restricted to z^{-i} with
// sum i <= max_weight.
LaurentSeries bkp_wangyang_series(const AffineB& b, int n, int max_weight, const EvalOptions& opts = {});

NPointTable bkp_npoint_embedded(const AffineB& b, int n, int max_weight, const EvalOptions& opts = {});
NPointTable bkp_npoint_wangyang(const AffineB& b, int n, int max_weight, const EvalOptions& opts = {});

// True when every monomial of s has only even exponents.
bool only_even_exponents(const LaurentSeries& s);

struct TableDiff {
    MultiIndex indices;
    Rational left;
    Rational right;
};

std::optional<TableDiff> first_difference(const NPointTable& left, const NPointTable& right);
std::string describe(const TableDiff& d);

struct FormulaComparison {
    NPointTable wangyang;
    NPointTable embedded;
    std::optional<TableDiff> table_diff;
    // Wang-Yang series == z_1...z_n * embedded series, coefficientwise.
    bool raw_series_equal = false;
    std::optional<ExpVec> raw_diff;
    // The embedded sign sum left only odd indices.
    bool parity_clean = false;

    bool ok() const { return !table_diff && raw_series_equal && parity_clean; }
};

FormulaComparison compare_formulas(const AffineB& b, int n, int max_weight, const EvalOptions& opts = {});

}  // namespace bkp
