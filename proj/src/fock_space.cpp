#include <algorithm>
#include <stdexcept>

#include "bkp/fock_oracle.hpp"

namespace bkp {

int FockState::grade() const {
    int g = 0;
    for (int b : bubbles) g += (-b - 1) / 2;
    for (int h : holes) g += (h + 1) / 2;
    return g;
}

Rational FockVector::vacuum_coefficient() const {
    auto it = terms.find(FockState{});
    return it == terms.end() ? Rational(0) : it->second;
}

void FockVector::add(const FockState& s, const Rational& c) {
    if (c == 0) return;
    if (s.grade() > cutoff) {
        truncated = true;
        return;
    }
    auto [it, inserted] = terms.try_emplace(s, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

FockVector FockVector::graded_part(int g) const {
    FockVector out;
    out.cutoff = cutoff;
    for (const auto& [s, c] : terms)
        if (s.grade() == g) out.terms.emplace(s, c);
    return out;
}

FockVector vacuum(int cutoff) { return basis_vector(FockState{}, cutoff); }

FockVector basis_vector(const FockState& s, int cutoff) {
    FockVector v;
    v.cutoff = cutoff;
    v.add(s, 1);
    return v;
}

namespace {

void pick_holes(int budget, int next, FockState& cur, int charge, std::vector<FockState>& out) {
    if (cur.charge() == charge) out.push_back(cur);
    for (int h = next; (h + 1) / 2 <= budget; h += 2) {
        cur.holes.push_back(h);
        pick_holes(budget - (h + 1) / 2, h + 2, cur, charge, out);
        cur.holes.pop_back();
    }
}

// Bubbles are chosen from -1/2 downwards; stored ascending at the end.
void pick_bubbles(int budget, int next, FockState& cur, int charge, std::vector<FockState>& out) {
    FockState sorted = cur;
    std::sort(sorted.bubbles.begin(), sorted.bubbles.end());
    pick_holes(budget, 1, sorted, charge, out);
    for (int b = next; (-b - 1) / 2 <= budget; b -= 2) {
        cur.bubbles.push_back(b);
        pick_bubbles(budget - (-b - 1) / 2, b - 2, cur, charge, out);
        cur.bubbles.pop_back();
    }
}

}  // namespace

std::vector<FockState> basis_states(int max_grade, int charge) {
    std::vector<FockState> out;
    FockState cur;
    pick_bubbles(max_grade, -1, cur, charge, out);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

bool present(const FockState& s, int x) {
    if (x < 0) return std::binary_search(s.bubbles.begin(), s.bubbles.end(), x);
    return !std::binary_search(s.holes.begin(), s.holes.end(), x);
}

int present_below(const FockState& s, int x) {
    int count = static_cast<int>(std::lower_bound(s.bubbles.begin(), s.bubbles.end(), x) - s.bubbles.begin());
    if (x > 0) {
        count += (x - 1) / 2;
        count -= static_cast<int>(std::lower_bound(s.holes.begin(), s.holes.end(), x) - s.holes.begin());
    }
    return count;
}

void toggle(std::vector<int>& sorted, int x) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), x);
    if (it != sorted.end() && *it == x)
        sorted.erase(it);
    else
        sorted.insert(it, x);
}

// Applies one fermion to a basis state: returns false when it annihilates.
bool act(const Fermion& f, FockState& s, int& sign) {
    const int x = f.star ? -f.r2 : f.r2;
    if (present(s, x) != f.star) return false;
    if (present_below(s, x) % 2 != 0) sign = -sign;
    toggle(x < 0 ? s.bubbles : s.holes, x);
    return true;
}

void apply_bilinear_to_state(const Bilinear& b, const FockState& s, const Rational& c, FockVector& out) {
    FockState t = s;
    int sign = 1;
    if (!act(b.right, t, sign) || !act(b.left, t, sign)) return;
    out.add(t, sign > 0 ? Rational(c * b.coeff) : Rational(-c * b.coeff));
}

FockVector apply_single(const Fermion& f, const FockVector& v) {
    FockVector out;
    out.cutoff = v.cutoff;
    out.truncated = v.truncated;
    for (const auto& [s, c] : v.terms) {
        FockState t = s;
        int sign = 1;
        if (act(f, t, sign)) out.add(t, sign > 0 ? c : Rational(-c));
    }
    return out;
}

Fermion psi_of_phi(int m) { return {false, -2 * m - 1}; }
Fermion star_of_phi(int m) { return {true, -2 * m + 1}; }
int parity_sign(int m) { return m % 2 == 0 ? 1 : -1; }

void phi_pair(int m, int n, const Rational& c, bool hat, std::vector<Bilinear>& out) {
    // phi_m phi_n = 1/2 (P_m + s_m S_m)(P_n + s_n S_n);
    // phihat_m phihat_n = -1/2 (P_m - s_m S_m)(P_n - s_n S_n).
    const Rational half = hat ? Rational(-c / 2) : Rational(c / 2);
    const int sm = hat ? -parity_sign(m) : parity_sign(m);
    const int sn = hat ? -parity_sign(n) : parity_sign(n);
    out.push_back({half, psi_of_phi(m), psi_of_phi(n)});
    out.push_back({half * sn, psi_of_phi(m), star_of_phi(n)});
    out.push_back({half * sm, star_of_phi(m), psi_of_phi(n)});
    out.push_back({half * (sm * sn), star_of_phi(m), star_of_phi(n)});
}

// Summands of H_k / H^B_k that can act nontrivially on s.
std::vector<Bilinear> hamiltonian_terms(const QuadraticOp& op, const FockState& s) {
    std::vector<Bilinear> out;
    const int k = op.a;
    if (op.kind == QuadraticOp::Kind::HKP) {
        // Moves a present element x to x + k.
        const int lo = s.bubbles.empty() ? 1 : s.bubbles.front();
        const int hi = (s.holes.empty() ? -1 : s.holes.back()) - 2 * k;
        for (int x = lo; x <= hi; x += 2) out.push_back({op.coeff, {false, x + 2 * k}, {true, -x}});
        return out;
    }
    int reach = 0;
    if (!s.bubbles.empty()) reach = std::max(reach, -s.bubbles.front());
    if (!s.holes.empty()) reach = std::max(reach, s.holes.back());
    const int bound = (reach + 1) / 2 + k + 2;
    for (int i = -bound; i <= bound; ++i) {
        const Rational c = (i % 2 == 0) ? Rational(-op.coeff / 2) : Rational(op.coeff / 2);
        phi_pair(i, -i - k, c, false, out);
    }
    return out;
}

bool is_hamiltonian(const QuadraticOp& op) {
    return op.kind == QuadraticOp::Kind::HKP || op.kind == QuadraticOp::Kind::HB;
}

}  // namespace

FockVector apply_psi(int r2, const FockVector& v) { return apply_single({false, r2}, v); }
FockVector apply_psi_star(int r2, const FockVector& v) { return apply_single({true, r2}, v); }

int grade_shift(const QuadraticOp& op) {
    switch (op.kind) {
        case QuadraticOp::Kind::PsiPsiStar: return (-op.a - 1) / 2 + (-op.b + 1) / 2;
        case QuadraticOp::Kind::PhiPhi:
        case QuadraticOp::Kind::PhiHatPhiHat: return op.a + op.b;
        case QuadraticOp::Kind::HKP:
        case QuadraticOp::Kind::HB: return -op.a;
    }
    return 0;
}

std::vector<Bilinear> to_bilinears(const QuadraticOp& op) {
    std::vector<Bilinear> out;
    switch (op.kind) {
        case QuadraticOp::Kind::PsiPsiStar:
            if (op.a % 2 == 0 || op.b % 2 == 0) throw std::invalid_argument("fermion indices must be half-integers");
            out.push_back({op.coeff, {false, op.a}, {true, op.b}});
            break;
        case QuadraticOp::Kind::PhiPhi: phi_pair(op.a, op.b, op.coeff, false, out); break;
        case QuadraticOp::Kind::PhiHatPhiHat: phi_pair(op.a, op.b, op.coeff, true, out); break;
        default: throw std::invalid_argument("Hamiltonians have no finite bilinear form");
    }
    return out;
}

FockVector apply_quadratic(const QuadraticOp& op, const FockVector& v) { return apply_sum({op}, v); }

FockVector apply_sum(const std::vector<QuadraticOp>& ops, const FockVector& v) {
    std::vector<Bilinear> fixed;
    std::vector<QuadraticOp> hams;
    for (const auto& op : ops) {
        if (is_hamiltonian(op)) {
            if (op.a < 1) throw std::invalid_argument("Hamiltonian index must be >= 1");
            hams.push_back(op);
        } else {
            auto b = to_bilinears(op);
            fixed.insert(fixed.end(), b.begin(), b.end());
        }
    }
    FockVector out;
    out.cutoff = v.cutoff;
    out.truncated = v.truncated;
    for (const auto& [s, c] : v.terms) {
        for (const auto& b : fixed) apply_bilinear_to_state(b, s, c, out);
        for (const auto& h : hams)
            for (const auto& b : hamiltonian_terms(h, s)) apply_bilinear_to_state(b, s, c, out);
    }
    return out;
}

FockVector exp_bilinear_vacuum(const std::vector<QuadraticOp>& generator, int cutoff) {
    for (const auto& op : generator)
        if (is_hamiltonian(op) || grade_shift(op) < 1)
            throw std::invalid_argument("generator term does not raise the grade");
    FockVector result = vacuum(cutoff);
    FockVector term = result;
    for (int k = 1; k <= cutoff && !term.terms.empty(); ++k) {
        term = apply_sum(generator, term);
        for (auto& [s, c] : term.terms) c /= k;
        for (const auto& [s, c] : term.terms) result.add(s, c);
        result.truncated = result.truncated || term.truncated;
    }
    return result;
}

std::vector<QuadraticOp> bkp_generator(const AffineB& b) {
    std::vector<QuadraticOp> out;
    for (const auto& [key, v] : b.entries())
        out.push_back({QuadraticOp::Kind::PhiPhi, key.second, key.first, v});
    return out;
}

std::vector<QuadraticOp> kp_generator(const AffineKP& kp) {
    std::vector<QuadraticOp> out;
    for (const auto& [key, v] : kp.entries())
        out.push_back({QuadraticOp::Kind::PsiPsiStar, -2 * key.second - 1, -2 * key.first - 1, v});
    return out;
}

std::vector<QuadraticOp> doubled_generator(const AffineB& b) {
    std::vector<QuadraticOp> out;
    for (const auto& [key, v] : b.entries()) {
        out.push_back({QuadraticOp::Kind::PhiPhi, key.second, key.first, v});
        out.push_back({QuadraticOp::Kind::PhiHatPhiHat, key.second, key.first, v});
    }
    return out;
}

}  // namespace bkp
