#include "ks/exactlin/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace ks {

Rational::Rational(const Integer& numerator, const Integer& denominator) {
    if (denominator == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

namespace {

bool valid_integer_text(std::string_view s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

Integer integer_from(std::string_view s) {
    if (!s.empty() && s[0] == '+') s.remove_prefix(1);
    return Integer(std::string(s), 10);
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    const auto num_text = text.substr(0, slash);
    if (!valid_integer_text(num_text, true)) {
        throw std::invalid_argument("invalid rational '" + std::string(text) + "'");
    }
    if (slash == std::string_view::npos) {
        return Rational(integer_from(num_text));
    }
    const auto den_text = text.substr(slash + 1);
    if (!valid_integer_text(den_text, false)) {
        throw std::invalid_argument("invalid rational '" + std::string(text) + "'");
    }
    const Integer den = integer_from(den_text);
    if (den == 0) {
        throw std::invalid_argument("invalid rational '" + std::string(text) + "': zero denominator");
    }
    return Rational(integer_from(num_text), den);
}

Rational& Rational::operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) {
        throw std::domain_error("rational division by zero");
    }
    value_ /= rhs.value_;
    return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

std::size_t Rational::hash() const {
    const std::hash<std::string> h;
    return h(value_.get_str());
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace ks
