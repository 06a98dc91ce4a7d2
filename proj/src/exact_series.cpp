#include "bkp/exact_series.hpp"

#include <algorithm>
#include <sstream>

namespace bkp {

// ---------------------------------------------------------------------------
// Window

Window Window::uniform(int n_vars, int lo, int hi) {
    return Window{std::vector<int>(n_vars, lo), std::vector<int>(n_vars, hi)};
}

Window Window::point(const ExpVec& e) { return Window{e, e}; }

bool Window::contains(const ExpVec& e) const {
    if (static_cast<int>(e.size()) != n_vars()) return false;
    for (int k = 0; k < n_vars(); ++k)
        if (e[k] < lo[k] || e[k] > hi[k]) return false;
    return true;
}

Window Window::intersect(const Window& other) const {
    Window w = *this;
    for (int k = 0; k < n_vars(); ++k) {
        w.lo[k] = std::max(lo[k], other.lo[k]);
        w.hi[k] = std::min(hi[k], other.hi[k]);
    }
    return w;
}

Window Window::hull(const Window& other) const {
    Window w = *this;
    for (int k = 0; k < n_vars(); ++k) {
        w.lo[k] = std::min(lo[k], other.lo[k]);
        w.hi[k] = std::max(hi[k], other.hi[k]);
    }
    return w;
}

Window Window::sum(const Window& other) const {
    Window w = *this;
    for (int k = 0; k < n_vars(); ++k) {
        w.lo[k] = lo[k] + other.lo[k];
        w.hi[k] = hi[k] + other.hi[k];
    }
    return w;
}

// ---------------------------------------------------------------------------
// Packed exponent keys: bits_ bits per variable, offset by half the range.

namespace {

int bits_for(int n_vars) {
    if (n_vars < 1) throw SeriesError("a series needs at least one variable");
    if (n_vars <= 8) return std::min(16, 64 / n_vars);
    throw SeriesError("at most 8 variables are supported, got " + std::to_string(n_vars));
}

std::uint64_t offset_all(int n_vars, int bits) {
    std::uint64_t off = 0;
    for (int k = 0; k < n_vars; ++k) off |= (std::uint64_t{1} << (bits - 1)) << (bits * k);
    return off;
}

}  // namespace

LaurentSeries::LaurentSeries(int n_vars, Window window)
    : n_vars_(n_vars), bits_(bits_for(n_vars)), window_(std::move(window)) {
    if (window_.n_vars() != n_vars_ || static_cast<int>(window_.hi.size()) != n_vars_)
        throw SeriesError("window dimension does not match the variable count");
    check_codec_range(window_);
}

void LaurentSeries::check_codec_range(const Window& w) const {
    const int limit = (1 << (bits_ - 1)) - 1;
    for (int k = 0; k < n_vars_; ++k)
        if (w.lo[k] < -limit || w.hi[k] > limit)
            throw WindowError("window exceeds the supported exponent range +-" + std::to_string(limit));
}

LaurentSeries::Key LaurentSeries::encode(const ExpVec& e) const {
    const int off = 1 << (bits_ - 1);
    Key key = 0;
    for (int k = 0; k < n_vars_; ++k) key |= static_cast<Key>(e[k] + off) << (bits_ * k);
    return key;
}

ExpVec LaurentSeries::decode(Key key) const {
    const int off = 1 << (bits_ - 1);
    const Key mask = (Key{1} << bits_) - 1;
    ExpVec e(n_vars_);
    for (int k = 0; k < n_vars_; ++k) e[k] = static_cast<int>((key >> (bits_ * k)) & mask) - off;
    return e;
}

Rational LaurentSeries::coefficient(const ExpVec& e) const {
    if (static_cast<int>(e.size()) != n_vars_) throw SeriesError("exponent vector has the wrong length");
    if (!window_.contains(e)) throw WindowError("insufficient truncation: monomial outside the series window");
    auto it = terms_.find(encode(e));
    return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentSeries::add_term(const ExpVec& e, const Rational& c) {
    if (static_cast<int>(e.size()) != n_vars_) throw SeriesError("exponent vector has the wrong length");
    if (!window_.contains(e)) throw WindowError("term outside the series window");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(encode(e), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void LaurentSeries::mark_direction(int dominant, int other) {
    Direction d{dominant, other};
    if (std::find(directions_.begin(), directions_.end(), d) == directions_.end()) directions_.push_back(d);
}

std::vector<std::pair<ExpVec, Rational>> LaurentSeries::terms() const {
    std::vector<std::pair<ExpVec, Rational>> out;
    out.reserve(terms_.size());
    for (const auto& [key, c] : terms_) out.emplace_back(decode(key), c);
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    return out;
}

void LaurentSeries::for_each_term(const std::function<void(const ExpVec&, const Rational&)>& f) const {
    for (const auto& [key, c] : terms_) f(decode(key), c);
}

LaurentSeries LaurentSeries::restricted(const Window& w) const {
    LaurentSeries out(n_vars_, w);
    out.truncated_ = truncated_;
    out.directions_ = directions_;
    for (const auto& [key, c] : terms_) {
        ExpVec e = decode(key);
        if (w.contains(e)) out.terms_.emplace(out.encode(e), c);
    }
    return out;
}

void LaurentSeries::check_compatible(const LaurentSeries& other) const {
    if (other.n_vars_ != n_vars_)
        throw SeriesError("variable-count mismatch: " + std::to_string(n_vars_) + " vs " +
                          std::to_string(other.n_vars_));
}

void LaurentSeries::merge_directions(const LaurentSeries& other) {
    for (const auto& d : other.directions_) mark_direction(d.dominant, d.other);
    truncated_ = truncated_ || other.truncated_;
}

LaurentSeries& LaurentSeries::operator+=(const LaurentSeries& other) {
    check_compatible(other);
    window_ = window_.hull(other.window_);
    merge_directions(other);
    for (const auto& [key, c] : other.terms_) {
        auto [it, inserted] = terms_.try_emplace(key, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

LaurentSeries& LaurentSeries::operator-=(const LaurentSeries& other) {
    check_compatible(other);
    window_ = window_.hull(other.window_);
    merge_directions(other);
    for (const auto& [key, c] : other.terms_) {
        auto [it, inserted] = terms_.try_emplace(key, -c);
        if (!inserted) {
            it->second -= c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

LaurentSeries& LaurentSeries::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [key, v] : terms_) v *= c;
    return *this;
}

namespace {

void check_pairing(const LaurentSeries& a, const LaurentSeries& b) {
    for (const auto& da : a.directions())
        for (const auto& db : b.directions())
            if (da.dominant == db.other && da.other == db.dominant)
                throw DivergentPairing("divergent pairing: variables " + std::to_string(da.dominant + 1) + " and " +
                                       std::to_string(da.other + 1) + " expanded in opposite directions");
}

}  // namespace

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
    a.check_compatible(b);
    return mul(a, b, a.window().sum(b.window()));
}

LaurentSeries mul(const LaurentSeries& a, const LaurentSeries& b, const Window& result_window) {
    a.check_compatible(b);
    check_pairing(a, b);
    LaurentSeries out(a.n_vars_, result_window);
    out.merge_directions(a);
    out.merge_directions(b);

    const Window reach = a.window_.sum(b.window_);
    const bool exact_box = result_window.intersect(reach) == reach;
    // Keys add fieldwise when no field leaves its range; that holds whenever
    // the Minkowski box fits the codec.
    bool keys_add = true;
    try {
        out.check_codec_range(reach);
    } catch (const WindowError&) {
        keys_add = false;
    }
    const LaurentSeries::Key off = offset_all(a.n_vars_, a.bits_);

    Rational prod;
    for (const auto& [ka, ca] : a.terms_) {
        ExpVec ea;
        if (!keys_add || !exact_box) ea = a.decode(ka);
        for (const auto& [kb, cb] : b.terms_) {
            LaurentSeries::Key key;
            if (keys_add && exact_box) {
                key = ka + kb - off;
            } else {
                ExpVec e = b.decode(kb);
                for (int k = 0; k < a.n_vars_; ++k) e[k] += ea[k];
                if (!result_window.contains(e)) {
                    out.truncated_ = true;
                    continue;
                }
                key = out.encode(e);
            }
            prod = ca * cb;
            auto [it, inserted] = out.terms_.try_emplace(key, prod);
            if (!inserted) it->second += prod;
        }
    }
    std::erase_if(out.terms_, [](const auto& kv) { return kv.second == 0; });
    return out;
}

bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
    return a.n_vars_ == b.n_vars_ && a.terms_ == b.terms_;
}

LaurentSeries make_monomial(int n_vars, const ExpVec& e, const Rational& coeff, const Window& window) {
    LaurentSeries s(n_vars, window);
    s.add_term(e, coeff);
    return s;
}

LaurentSeries make_monomial(int n_vars, const ExpVec& e, const Rational& coeff) {
    return make_monomial(n_vars, e, coeff, Window::point(e));
}

LaurentSeries substitute_sign(const LaurentSeries& s, int var, int sign) {
    if (var < 0 || var >= s.n_vars_) throw SeriesError("substitute_sign: variable out of range");
    LaurentSeries out = s;
    if (sign == 1) return out;
    for (auto& [key, c] : out.terms_) {
        const int e = out.decode(key)[var];
        if (e % 2 != 0) c = -c;
    }
    return out;
}

LaurentSeries embed(const LaurentSeries& s, int n_vars, std::span<const int> target, std::span<const int> sign,
                    const Window& window) {
    if (static_cast<int>(target.size()) != s.n_vars() || static_cast<int>(sign.size()) != s.n_vars())
        throw SeriesError("embed: mapping length does not match the source variable count");
    LaurentSeries out(n_vars, window);
    for (const auto& d : s.directions())
        if (target[d.dominant] != target[d.other]) out.mark_direction(target[d.dominant], target[d.other]);
    if (s.truncated()) out.mark_truncated();
    s.for_each_term([&](const ExpVec& e, const Rational& c) {
        ExpVec f(n_vars, 0);
        int parity = 0;
        for (int k = 0; k < s.n_vars(); ++k) {
            f[target[k]] += e[k];
            if (sign[k] < 0) parity += e[k];
        }
        out.add_term(f, parity % 2 == 0 ? c : Rational(-c));
    });
    return out;
}

std::string to_string(const LaurentSeries& s) {
    if (s.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : s.terms()) {
        if (!first) os << " + ";
        first = false;
        os << "(" << to_string(c) << ")";
        for (int k = 0; k < s.n_vars(); ++k)
            if (e[k] != 0) os << "*z" << (k + 1) << "^" << e[k];
    }
    return os.str();
}

}  // namespace bkp
