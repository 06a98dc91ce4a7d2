#pragma once

#include <random>

#include "bkp/exact_series.hpp"

namespace bkp::testing {

inline Window box(int n, int lo, int hi) { return Window::uniform(n, lo, hi); }

// A few random monomials with small exponents and coefficients.
inline LaurentSeries random_series(std::mt19937_64& rng, int n, const Window& w, int terms = 4) {
    LaurentSeries s(n, w);
    for (int t = 0; t < terms; ++t) {
        ExpVec e(n);
        for (int k = 0; k < n; ++k) e[k] = w.lo[k] + static_cast<int>(rng() % (w.hi[k] - w.lo[k] + 1));
        s.add_term(e, fraction(static_cast<long>(rng() % 11) - 5, static_cast<long>(rng() % 4) + 1));
    }
    return s;
}

// u = sign * z_slot as a one-term series.
inline LaurentSeries linear(int n, int slot, int sign, const Window& w) {
    ExpVec e(n, 0);
    e[slot] = 1;
    return make_monomial(n, e, Rational(sign), w);
}

inline LaurentSeries constant(int n, const Rational& c, const Window& w) {
    return make_monomial(n, ExpVec(n, 0), c, w);
}

}  // namespace bkp::testing
