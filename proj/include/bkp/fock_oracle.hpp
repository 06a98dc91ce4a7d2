#pragma once

#include <map>
#include <optional>
#include <vector>

#include "bkp/affine_coords.hpp"
#include "bkp/npoint_formulas.hpp"
#include "bkp/rational.hpp"

namespace bkp {

// Half-integers are stored doubled: r = R/2 with R odd.

// A semi-infinite wedge z^{a_1} ^ z^{a_2} ^ ... (a_1 < a_2 < ...), described
// by its bubbles (present negative half-integers) and holes (absent positive
// ones). Every charge sector is representable, since single neutral
// fermions change the charge by one.
struct FockState {
    std::vector<int> bubbles;  // ascending, doubled, all < 0
    std::vector<int> holes;    // ascending, doubled, all > 0

    int charge() const { return static_cast<int>(bubbles.size()) - static_cast<int>(holes.size()); }
    // E - charge/2, an integer >= 0. Under this grading phi_m has degree m,
    // psi_r has degree -r - 1/2 and psi*_r has degree -r + 1/2.
    int grade() const;
    bool is_vacuum() const { return bubbles.empty() && holes.empty(); }

    friend auto operator<=>(const FockState&, const FockState&) = default;
};

// Finite rational combination of basis states with grade <= cutoff.
struct FockVector {
    std::map<FockState, Rational> terms;
    int cutoff = 0;
    // Some image fell above the cutoff and was dropped.
    bool truncated = false;

    Rational vacuum_coefficient() const;
    void add(const FockState& s, const Rational& c);
    // Components of exactly this grade.
    FockVector graded_part(int grade) const;

    friend bool operator==(const FockVector& a, const FockVector& b) { return a.terms == b.terms; }
};

FockVector vacuum(int cutoff);
FockVector basis_vector(const FockState& s, int cutoff);

// All basis states with grade <= max_grade and the given charge.
std::vector<FockState> basis_states(int max_grade, int charge);

// psi_r inserts z^r; psi*_r removes z^{-r}. r2 is the doubled index.
FockVector apply_psi(int r2, const FockVector& v);
FockVector apply_psi_star(int r2, const FockVector& v);

// A single charged fermion: psi_{r} or psi*_{r}.
struct Fermion {
    bool star;
    int r2;
};

// coeff * left * right (right acts first).
struct Bilinear {
    Rational coeff;
    Fermion left;
    Fermion right;
};

struct QuadraticOp {
    enum class Kind {
        PsiPsiStar,    // psi_{a/2} psi*_{b/2} (doubled a, b)
        PhiPhi,        // phi_a phi_b
        PhiHatPhiHat,  // phihat_a phihat_b
        HKP,           // H_a = sum_r :psi_{-r} psi*_{r+a}:, a >= 1
        HB,            // H^B_a = 1/2 sum_i (-1)^{i-1} phi_i phi_{-i-a}, a >= 1
    };
    Kind kind;
    int a = 0;
    int b = 0;
    Rational coeff = 1;
};

// Change of grade caused by the operator.
int grade_shift(const QuadraticOp& op);

// Fixed bilinears as explicit psi-bilinears; the 1/sqrt2 factors of the
// neutral fermions pair into exact 1/2 (and -1/2 for the hatted ones).
std::vector<Bilinear> to_bilinears(const QuadraticOp& op);

FockVector apply_quadratic(const QuadraticOp& op, const FockVector& v);
FockVector apply_sum(const std::vector<QuadraticOp>& ops, const FockVector& v);

// sum_k X^k/k! |0>, X = sum of the generator terms, each of which must
// raise the grade (std::invalid_argument otherwise).
FockVector exp_bilinear_vacuum(const std::vector<QuadraticOp>& generator, int cutoff);

// sum a_{n,m} phi_m phi_n.
std::vector<QuadraticOp> bkp_generator(const AffineB& b);
// sum a^KP_{n,m} psi_{-m-1/2} psi*_{-n-1/2}.
std::vector<QuadraticOp> kp_generator(const AffineKP& kp);
// sum a_{n,m} (phi_m phi_n + phihat_m phihat_n).
std::vector<QuadraticOp> doubled_generator(const AffineB& b);

// Sorted list of time indices with repetition: {1,1,3} is t_1^2 t_3.
using TimeMonomial = std::vector<int>;
using TimeSeries = std::map<TimeMonomial, Rational>;

int weight(const TimeMonomial& m);

enum class Hierarchy { KP, BKP };

// Coefficients of <0| e^{H(t)} v> up to total weight max_weight, with v the
// exponential of the generator. BKP uses H^B and odd times; KP uses H_n and
// either all times or only the odd ones. The state is built at grade
// cutoff max(cutoff, max_weight).
TimeSeries tau_coefficients(Hierarchy h, const std::vector<QuadraticOp>& generator, int max_weight,
                            bool odd_times_only, int cutoff = 0);

TimeSeries tau_bkp(const AffineB& b, int max_weight, int cutoff = 0);
TimeSeries tau_kp(const AffineKP& kp, int max_weight, int cutoff = 0);

TimeSeries multiply(const TimeSeries& a, const TimeSeries& b, int max_weight);

// log(1 + u) truncated at max_weight; throws std::domain_error unless the
// constant term is 1.
TimeSeries log_series(const TimeSeries& tau, int max_weight);

// Entry (i_1..i_n) = coefficient of t_{i_1}...t_{i_n} times the product of
// multiplicity factorials. odd_only restricts to odd indices.
NPointTable npoint_from_F(const TimeSeries& F, int n, int max_weight, bool odd_only);

NPointTable bkp_npoint_oracle(const AffineB& b, int n, int max_weight, int cutoff = 0);
NPointTable kp_npoint_oracle(const AffineKP& kp, int n, int max_weight, int cutoff = 0);

// tau^KP(t_1, 0, t_3, 0, ...) for the doubled generator equals tau^BKP squared.
bool check_square_relation(const AffineB& b, int max_weight);

// e^{A^KP}|0> with A^KP from bkp_to_kp equals e^{A + kappa(A)}|0>.
bool check_state_equality(const AffineB& b, int cutoff);

}  // namespace bkp
