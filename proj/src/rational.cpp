#include "liequiv/rational.hpp"

#include <cctype>
#include <cmath>
#include <limits>

#include "liequiv/errors.hpp"

namespace liequiv {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                                 : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
        throw InvalidArgument("malformed rational '" + std::string(text) + "'");
    }
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) {
        throw InvalidArgument("zero denominator in '" + std::string(text) + "'");
    }
    Rational q(negative ? mpz_class(-n) : n, d);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& value) { return value.get_str(10); }

double to_double(const Rational& value) {
    // mpq_get_d truncates toward zero; pick the nearer of the truncated value
    // and its neighbour away from zero.
    const double truncated = value.get_d();
    if (!std::isfinite(truncated)) return truncated;
    const Rational exact_trunc(truncated);
    if (exact_trunc == value) return truncated;
    const double away = std::nextafter(
        truncated, value > 0 ? std::numeric_limits<double>::infinity()
                             : -std::numeric_limits<double>::infinity());
    if (!std::isfinite(away)) return away;
    const Rational exact_away(away);
    const Rational d_trunc = abs(value - exact_trunc);
    const Rational d_away = abs(exact_away - value);
    if (d_trunc < d_away) return truncated;
    if (d_away < d_trunc) return away;
    // Tie: even mantissa wins.
    int exp = 0;
    const double mant = std::frexp(truncated, &exp);
    const auto bits = static_cast<long long>(std::ldexp(std::fabs(mant), 53));
    return (bits % 2 == 0) ? truncated : away;
}

int sign(const Rational& value) { return sgn(value); }

}  // namespace liequiv
