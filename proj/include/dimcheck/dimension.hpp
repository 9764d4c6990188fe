#pragma once

#include "dimcheck/rational.hpp"

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dimcheck {

class DimensionSystem;
using SystemPtr = std::shared_ptr<const DimensionSystem>;

/// Ordered set of base dimension names (e.g. QK QL QP U T M). The order is
/// fixed at creation: exponent vectors and canonical dimension strings index
/// into it.
class DimensionSystem {
public:
    explicit DimensionSystem(std::vector<std::string> base_names);

    static SystemPtr make(std::vector<std::string> base_names) {
        return std::make_shared<const DimensionSystem>(std::move(base_names));
    }

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }

    /// Index of a base name, or -1 when absent.
    int index_of(std::string_view base) const;
    bool has(std::string_view base) const { return index_of(base) >= 0; }

    friend bool operator==(const DimensionSystem& a, const DimensionSystem& b) {
        return a.names_ == b.names_;
    }

private:
    std::vector<std::string> names_;
};

/// Two dimensions from systems with different base sets were combined.
struct MixedSystemsError : std::runtime_error {
    MixedSystemsError() : std::runtime_error("dimensions from different base-dimension systems") {}
};

/// Element of the commutative group of dimensions: a rational exponent per
/// base name, zero exponents never stored. The empty exponent vector is the
/// neutral (dimensionless) element.
class Dimension {
public:
    using ExponentList = std::vector<std::pair<std::size_t, Rational>>;

    static Dimension one(SystemPtr sys);
    /// Throws std::invalid_argument when `base` is not a base of `sys`.
    static Dimension base(SystemPtr sys, std::string_view base);
    /// Entries may be unsorted and contain zeros; both are normalized away.
    static Dimension from_exponents(SystemPtr sys, ExponentList entries);

    const SystemPtr& system() const { return sys_; }
    bool dimensionless() const { return exps_.empty(); }
    /// Exponent of the i-th base name (zero when absent).
    Rational exponent(std::size_t base_index) const;
    /// Sorted by base index, no zero entries.
    const ExponentList& exponents() const { return exps_; }

    Dimension pow(const Rational& e) const;
    Dimension inverse() const { return pow(Rational(-1)); }

    friend Dimension operator*(const Dimension& a, const Dimension& b);
    friend Dimension operator/(const Dimension& a, const Dimension& b);

    friend bool operator==(const Dimension& a, const Dimension& b);
    friend bool operator!=(const Dimension& a, const Dimension& b) { return !(a == b); }

    /// Canonical form with bases in declaration order: "QK^(2/3)*QP^(-2/3)*T^(-1)",
    /// exponent 1 prints bare, dimensionless prints "1".
    std::string str() const;

private:
    Dimension(SystemPtr sys, ExponentList exps) : sys_(std::move(sys)), exps_(std::move(exps)) {}

    SystemPtr sys_;
    ExponentList exps_;
};

inline bool is_dimensionless(const Dimension& d) { return d.dimensionless(); }

/// True when both dimensions live over the same base-name list.
bool same_system(const Dimension& a, const Dimension& b);

}  // namespace dimcheck
