#pragma once

#include "dimcheck/dimension.hpp"

#include <stdexcept>

namespace dimcheck {

/// Two quantities with different dimensions were added, subtracted or compared.
struct NonEquidimensionalError : std::runtime_error {
    NonEquidimensionalError(Dimension left_dim, Dimension right_dim)
        : std::runtime_error("non-equidimensional operands: " + left_dim.str() +
                             " vs " + right_dim.str()),
          left(std::move(left_dim)),
          right(std::move(right_dim)) {}

    Dimension left;
    Dimension right;
};

struct DivisionByZeroError : std::runtime_error {
    DivisionByZeroError() : std::runtime_error("division by a zero-valued quantity") {}
};

/// Numerical value paired with a dimension. The value must be finite;
/// construction rejects NaN and infinities.
class Quantity {
public:
    Quantity(double value, Dimension dim);

    double value() const { return value_; }
    const Dimension& dim() const { return dim_; }

    friend Quantity operator+(const Quantity& a, const Quantity& b);
    friend Quantity operator-(const Quantity& a, const Quantity& b);
    friend Quantity operator*(const Quantity& a, const Quantity& b);
    friend Quantity operator/(const Quantity& a, const Quantity& b);

private:
    double value_;
    Dimension dim_;
};

Quantity pow(const Quantity& q, const Rational& e);

/// Equality with physical sense: defined only for equidimensional operands,
/// throws NonEquidimensionalError otherwise.
bool equivalent(const Quantity& a, const Quantity& b);

}  // namespace dimcheck
