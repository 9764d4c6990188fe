#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace dimcheck {

/// Exact rational number, always stored normalized: gcd(|num|, den) == 1 and
/// den > 0. Arithmetic is exact; intermediate products are widened to 128 bits
/// and std::overflow_error is thrown if a result leaves the int64 range.
class Rational {
public:
    constexpr Rational() = default;
    Rational(std::int64_t num);  // NOLINT: integers convert implicitly
    Rational(std::int64_t num, std::int64_t den);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    double to_double() const;

    Rational operator-() const;
    Rational reciprocal() const;

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);

    friend bool operator==(const Rational& a, const Rational& b) = default;
    friend bool operator<(const Rational& a, const Rational& b);
    friend bool operator<=(const Rational& a, const Rational& b);
    friend bool operator>(const Rational& a, const Rational& b);
    friend bool operator>=(const Rational& a, const Rational& b);

    /// "3", "-2/5". Integers omit the denominator.
    std::string str() const;

    /// Accepts "p" or "p/q" with optional leading sign; throws
    /// std::invalid_argument on anything else (including q == 0).
    static Rational parse(std::string_view text);

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

}  // namespace dimcheck
