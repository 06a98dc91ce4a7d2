#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bkp/affine_coords.hpp"
#include "bkp/lemma_verifier.hpp"
#include "bkp/npoint_formulas.hpp"

namespace bkp {

// Outcome of one named check over a batch of cases.
struct CheckOutcome {
    std::string name;
    std::vector<std::pair<std::string, std::string>> params;
    int cases = 0;
    bool pass = true;
    // First failure, empty on success.
    std::string detail;

    void fail(const std::string& why);
};

// Seeded random instances: element i uses seed + i.
std::vector<AffineB> seeded_affine(std::uint64_t seed, int count);
std::vector<SeriesPairSpec> seeded_specs(std::uint64_t seed, int count);

// A^BKP(w,z) == (z A^KP(w,-z) - w A^KP(z,-w))/4 on [-depth, depth]^2.
CheckOutcome verify_generating_series(const std::vector<AffineB>& instances, int depth);
// tau^KP on odd times == (tau^BKP)^2 up to max_weight.
CheckOutcome verify_square(const std::vector<AffineB>& instances, int max_weight);
// e^{A^KP}|0> == e^{A + kappa(A)}|0> at the cutoff.
CheckOutcome verify_state(const std::vector<AffineB>& instances, int cutoff);
// Wang-Yang == embedded tables (and the raw-series and parity checks) for n = 1..max_n.
CheckOutcome verify_equivalence(const std::vector<AffineB>& instances, int max_n, int max_weight,
                                const EvalOptions& opts = {});
// Both formula tables == oracle table for n = 1..max_n.
CheckOutcome verify_oracle(const std::vector<AffineB>& instances, int max_n, int max_weight);
// Lemma identity with independent variables for k = 1..max_k.
CheckOutcome verify_lemma(const std::vector<SeriesPairSpec>& specs, int max_k, int depth);
// Lemma identity at x_i = -y_i = z_i for the data read off affine coordinates.
CheckOutcome verify_lemma_diagonal(const std::vector<AffineB>& instances, int max_k, int depth);
// Zero coordinates give zero tables on every route for n = 1..max_n.
CheckOutcome verify_trivial(int max_n, int max_weight);
// a_{1,0} = 1: dF/dt_1 = -1 and dF/dt_3 = 0 on every route.
CheckOutcome verify_one_point(int max_weight);
// Tables unchanged under a doubled cap and an oracle cutoff raised by 2.
CheckOutcome verify_truncation(const std::vector<AffineB>& instances, int max_n, int max_weight);

}  // namespace bkp
