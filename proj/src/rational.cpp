#include "bkp/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace bkp {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational fraction(long p, long q) {
    if (q == 0) throw std::invalid_argument("zero denominator");
    Rational r(p, q);
    r.canonicalize();
    return r;
}

Rational parse_rational(std::string_view text) {
    std::string_view body = text;
    if (!body.empty() && body.front() == '-') body.remove_prefix(1);
    auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
    if (!all_digits(num) || (slash != std::string_view::npos && !all_digits(den)))
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");

    mpz_class p(std::string(num), 10);
    mpz_class q = 1;
    if (slash != std::string_view::npos) {
        q = mpz_class(std::string(den), 10);
        if (q == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    }
    if (text.front() == '-') p = -p;
    Rational r(p, q);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& value) { return value.get_str(10); }

}  // namespace bkp
