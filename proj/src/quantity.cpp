#include "dimcheck/quantity.hpp"

#include <cmath>

namespace dimcheck {

Quantity::Quantity(double value, Dimension dim) : value_(value), dim_(std::move(dim)) {
    if (!std::isfinite(value_)) {
        throw std::invalid_argument("quantity value must be finite");
    }
}

Quantity operator+(const Quantity& a, const Quantity& b) {
    if (a.dim_ != b.dim_) throw NonEquidimensionalError(a.dim_, b.dim_);
    return {a.value_ + b.value_, a.dim_};
}

Quantity operator-(const Quantity& a, const Quantity& b) {
    if (a.dim_ != b.dim_) throw NonEquidimensionalError(a.dim_, b.dim_);
    return {a.value_ - b.value_, a.dim_};
}

Quantity operator*(const Quantity& a, const Quantity& b) {
    return {a.value_ * b.value_, a.dim_ * b.dim_};
}

Quantity operator/(const Quantity& a, const Quantity& b) {
    if (b.value_ == 0.0) throw DivisionByZeroError();
    return {a.value_ / b.value_, a.dim_ * b.dim_.inverse()};
}

Quantity pow(const Quantity& q, const Rational& e) {
    double v = std::pow(q.value(), e.to_double());
    return {v, q.dim().pow(e)};
}

bool equivalent(const Quantity& a, const Quantity& b) {
    if (a.dim() != b.dim()) throw NonEquidimensionalError(a.dim(), b.dim());
    return a.value() == b.value();
}

}  // namespace dimcheck
