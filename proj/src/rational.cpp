#include "dimcheck/rational.hpp"

#include <charconv>
#include <limits>
#include <stdexcept>

namespace dimcheck {

namespace {

using i128 = __int128;

std::int64_t narrow(i128 v) {
    if (v > std::numeric_limits<std::int64_t>::max() ||
        v < std::numeric_limits<std::int64_t>::min()) {
        throw std::overflow_error("rational arithmetic overflow");
    }
    return static_cast<std::int64_t>(v);
}

i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

struct Parts {
    std::int64_t num;
    std::int64_t den;
};

Parts normalize(i128 num, i128 den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    i128 g = gcd128(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return {narrow(num), narrow(den)};
}

}  // namespace

Rational::Rational(std::int64_t num) : num_(num), den_(1) {}

Rational::Rational(std::int64_t num, std::int64_t den) {
    Parts p = normalize(num, den);
    num_ = p.num;
    den_ = p.den;
}

double Rational::to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
}

Rational Rational::operator-() const {
    return {narrow(-i128(num_)), den_};
}

Rational Rational::reciprocal() const {
    if (num_ == 0) throw std::invalid_argument("reciprocal of zero");
    return {den_, num_};
}

Rational operator+(const Rational& a, const Rational& b) {
    Parts p = normalize(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                        i128(a.den_) * b.den_);
    return {p.num, p.den};
}

Rational operator-(const Rational& a, const Rational& b) {
    return a + (-b);
}

Rational operator*(const Rational& a, const Rational& b) {
    Parts p = normalize(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
    return {p.num, p.den};
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::invalid_argument("rational division by zero");
    Parts p = normalize(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
    return {p.num, p.den};
}

bool operator<(const Rational& a, const Rational& b) {
    return i128(a.num()) * b.den() < i128(b.num()) * a.den();
}

bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
bool operator>(const Rational& a, const Rational& b) { return b < a; }
bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

std::string Rational::str() const {
    std::string s = std::to_string(num_);
    if (den_ != 1) {
        s += '/';
        s += std::to_string(den_);
    }
    return s;
}

Rational Rational::parse(std::string_view text) {
    auto fail = [&] {
        throw std::invalid_argument("invalid rational literal: '" + std::string(text) + "'");
    };
    std::string_view rest = text;
    bool negative = false;
    if (!rest.empty() && (rest.front() == '+' || rest.front() == '-')) {
        negative = rest.front() == '-';
        rest.remove_prefix(1);
    }
    std::int64_t num = 0;
    auto [p, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), num);
    if (ec != std::errc{} || p == rest.data()) fail();
    rest.remove_prefix(static_cast<std::size_t>(p - rest.data()));
    std::int64_t den = 1;
    if (!rest.empty()) {
        if (rest.front() != '/') fail();
        rest.remove_prefix(1);
        auto [q, ec2] = std::from_chars(rest.data(), rest.data() + rest.size(), den);
        if (ec2 != std::errc{} || q != rest.data() + rest.size() || den == 0) fail();
    }
    return {negative ? -num : num, den};
}

}  // namespace dimcheck
