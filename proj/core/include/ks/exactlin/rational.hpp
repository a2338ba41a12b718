#pragma once

#include <compare>
#include <concepts>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace ks {

using Integer = mpz_class;

/// Exact rational number. Always kept in lowest terms with a positive
/// denominator; zero is 0/1.
class Rational {
public:
    Rational() = default;

    template <std::integral T>
    Rational(T value) : value_(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)

    explicit Rational(const Integer& value) : value_(value) {}

    /// Throws std::domain_error on a zero denominator.
    Rational(const Integer& numerator, const Integer& denominator);

    /// Accepts "n", "-n", "p/q" and "-p/q". Throws std::invalid_argument.
    static Rational parse(std::string_view text);

    [[nodiscard]] Integer numerator() const { return value_.get_num(); }
    [[nodiscard]] Integer denominator() const { return value_.get_den(); }

    [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
    [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }
    [[nodiscard]] int sign() const { return sgn(value_); }

    /// Canonical text: "n" for integers, "p/q" otherwise.
    [[nodiscard]] std::string str() const { return value_.get_str(); }

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    /// Throws std::domain_error on division by zero.
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    Rational operator-() const;

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    [[nodiscard]] std::size_t hash() const;

    [[nodiscard]] const mpq_class& raw() const { return value_; }

private:
    explicit Rational(mpq_class value) : value_(std::move(value)) {}

    mpq_class value_;
};

Rational abs(const Rational& r);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace ks

template <>
struct std::hash<ks::Rational> {
    std::size_t operator()(const ks::Rational& r) const noexcept { return r.hash(); }
};
