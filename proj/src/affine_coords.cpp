#include "bkp/affine_coords.hpp"

#include <algorithm>

namespace bkp {

namespace {

int sign_power(int sign, int exponent) { return (sign < 0 && exponent % 2 != 0) ? -1 : 1; }

}  // namespace

AffineB AffineB::validate(const std::vector<RawEntry>& raw) {
    std::map<IndexPair, Rational> given;
    for (const auto& r : raw) {
        if (r.n < 0 || r.m < 0)
            throw CoordinateError("negative index (" + std::to_string(r.n) + "," + std::to_string(r.m) + ")");
        if (r.n == r.m) {
            if (r.value != 0) throw CoordinateError("nonzero diagonal entry at (" + std::to_string(r.n) + "," +
                                                    std::to_string(r.m) + ")");
            continue;
        }
        auto check = [&](IndexPair key, const Rational& v) {
            auto [it, inserted] = given.try_emplace(key, v);
            if (!inserted && it->second != v)
                throw CoordinateError("antisymmetry conflict at (" + std::to_string(key.first) + "," +
                                      std::to_string(key.second) + ")");
        };
        check({r.n, r.m}, r.value);
        check({r.m, r.n}, -r.value);
    }
    AffineB b;
    for (auto& [key, v] : given) {
        if (v == 0) continue;
        b.entries_.emplace(key, v);
        b.max_index_ = std::max({b.max_index_, key.first, key.second});
    }
    return b;
}

Rational AffineB::at(int n, int m) const {
    auto it = entries_.find({n, m});
    return it == entries_.end() ? Rational(0) : it->second;
}

AffineKP::AffineKP(std::map<IndexPair, Rational> entries) {
    for (auto& [key, v] : entries) {
        if (key.first < 0 || key.second < 0) throw CoordinateError("negative KP index");
        if (v == 0) continue;
        entries_.emplace(key, v);
        max_index_ = std::max({max_index_, key.first, key.second});
    }
}

Rational AffineKP::at(int m, int n) const {
    auto it = entries_.find({m, n});
    return it == entries_.end() ? Rational(0) : it->second;
}

AffineKP bkp_to_kp(const AffineB& b) {
    std::map<IndexPair, Rational> kp;
    const int top = b.max_index();
    for (int m = 0; m + 1 <= top; ++m) {
        const Rational lead = b.at(m + 1, 0);
        const Rational pre = (m % 2 == 0) ? Rational(-2) : Rational(2);  // 2(-1)^{m+1}
        if (lead != 0) kp[{m, 0}] = pre * lead;
        for (int n = 1; n <= top; ++n) {
            Rational v = pre * (b.at(m + 1, n) + lead * b.at(0, n));
            if (v != 0) kp[{m, n}] = v;
        }
    }
    return AffineKP(std::move(kp));
}

LaurentSeries series_A_KP(const AffineKP& kp, const ArgPlacement& at, const Window& window) {
    LaurentSeries out(at.n_vars, window);
    for (const auto& [key, v] : kp.entries()) {
        const auto [m, n] = key;
        ExpVec e(at.n_vars, 0);
        e[at.w_slot] += -m - 1;
        e[at.z_slot] += -n - 1;
        const int s = sign_power(at.w_sign, m + 1) * sign_power(at.z_sign, n + 1);
        out.add_term(e, s > 0 ? v : Rational(-v));
    }
    return out;
}

LaurentSeries series_A_KP(const AffineKP& kp, const Window& window) { return series_A_KP(kp, ArgPlacement{}, window); }

LaurentSeries series_A_BKP(const AffineB& b, const ArgPlacement& at, const Window& window) {
    LaurentSeries out(at.n_vars, window);
    for (const auto& [key, v] : b.entries()) {
        const auto [n, m] = key;
        const int copies = (n >= 1 ? 1 : 0) + (m >= 1 ? 1 : 0);
        if (copies == 0) continue;
        Rational c = v * fraction(copies, 2);
        if ((m + n + 1) % 2 != 0) c = -c;
        if (sign_power(at.w_sign, n) * sign_power(at.z_sign, m) < 0) c = -c;
        ExpVec e(at.n_vars, 0);
        e[at.w_slot] += -n;
        e[at.z_slot] += -m;
        out.add_term(e, c);
    }
    return out;
}

LaurentSeries series_A_BKP(const AffineB& b, const Window& window) { return series_A_BKP(b, ArgPlacement{}, window); }

LaurentSeries series_A_hat_KP(const AffineKP& kp, KernelArg i, KernelArg j, int n_vars, const Window& window) {
    LaurentSeries a = series_A_KP(kp, ArgPlacement{n_vars, i.slot, j.slot, i.sign, j.sign}, window);
    if (i.index == j.index) return a;
    return expand_kernel(KernelKind::InvDiff, i, j, n_vars, window) + a;
}

LaurentSeries series_A_hat_BKP(const AffineB& b, KernelArg w, KernelArg z, int n_vars, const Window& window) {
    LaurentSeries a = series_A_BKP(b, ArgPlacement{n_vars, w.slot, z.slot, w.sign, z.sign}, window);
    if (w.index == z.index) return a;
    a.add_term(ExpVec(n_vars, 0), Rational(-1, 4));
    a -= Rational(1, 2) * expand_kernel(KernelKind::GeomTail, w, z, n_vars, window);
    return a;
}

bool check_relation_GSKPBKP(const AffineB& b, const Window& window) {
    const AffineKP kp = bkp_to_kp(b);
    // Generous working window: the KP series have degree >= -(max_index+1)
    // in each variable and the monomial factor shifts by one.
    const int reach = std::max(kp.max_index(), b.max_index()) + 2;
    const Window work = Window::uniform(2, -reach, 1);

    LaurentSeries lhs = series_A_BKP(b, work);
    LaurentSeries z_akp = make_monomial(2, {0, 1}, 1) * series_A_KP(kp, ArgPlacement{2, 0, 1, +1, -1}, work);
    LaurentSeries w_akp = make_monomial(2, {1, 0}, 1) * series_A_KP(kp, ArgPlacement{2, 1, 0, +1, -1}, work);
    LaurentSeries rhs = Rational(1, 4) * (z_akp - w_akp);
    return lhs.restricted(window) == rhs.restricted(window);
}

bool check_relation_GSKPBKP(const AffineB& b, int depth) {
    return check_relation_GSKPBKP(b, Window::uniform(2, -depth, depth));
}

}  // namespace bkp
