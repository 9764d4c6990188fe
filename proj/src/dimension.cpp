#include "dimcheck/dimension.hpp"

#include <algorithm>
#include <cctype>

namespace dimcheck {

namespace {

bool valid_identifier(std::string_view s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    return std::all_of(s.begin(), s.end(), [](char ch) {
        return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_';
    });
}

}  // namespace

DimensionSystem::DimensionSystem(std::vector<std::string> base_names)
    : names_(std::move(base_names)) {
    for (const auto& n : names_) {
        if (!valid_identifier(n)) {
            throw std::invalid_argument("invalid base dimension name: '" + n + "'");
        }
    }
    for (std::size_t i = 0; i < names_.size(); ++i) {
        for (std::size_t j = i + 1; j < names_.size(); ++j) {
            if (names_[i] == names_[j]) {
                throw std::invalid_argument("duplicate base dimension name: '" + names_[i] + "'");
            }
        }
    }
}

int DimensionSystem::index_of(std::string_view base) const {
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i] == base) return static_cast<int>(i);
    }
    return -1;
}

bool same_system(const Dimension& a, const Dimension& b) {
    if (a.system() == b.system()) return true;
    return a.system() && b.system() && *a.system() == *b.system();
}

Dimension Dimension::one(SystemPtr sys) {
    if (!sys) throw std::invalid_argument("null dimension system");
    return {std::move(sys), {}};
}

Dimension Dimension::base(SystemPtr sys, std::string_view base) {
    if (!sys) throw std::invalid_argument("null dimension system");
    int idx = sys->index_of(base);
    if (idx < 0) {
        throw std::invalid_argument("unknown base dimension: '" + std::string(base) + "'");
    }
    ExponentList e{{static_cast<std::size_t>(idx), Rational(1)}};
    return {std::move(sys), std::move(e)};
}

Dimension Dimension::from_exponents(SystemPtr sys, ExponentList entries) {
    if (!sys) throw std::invalid_argument("null dimension system");
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    ExponentList out;
    for (auto& [idx, exp] : entries) {
        if (idx >= sys->size()) throw std::invalid_argument("base index out of range");
        if (!out.empty() && out.back().first == idx) {
            out.back().second = out.back().second + exp;
        } else {
            out.emplace_back(idx, exp);
        }
    }
    std::erase_if(out, [](const auto& e) { return e.second.is_zero(); });
    return {std::move(sys), std::move(out)};
}

Rational Dimension::exponent(std::size_t base_index) const {
    for (const auto& [idx, exp] : exps_) {
        if (idx == base_index) return exp;
    }
    return Rational(0);
}

Dimension Dimension::pow(const Rational& e) const {
    if (e.is_zero()) return {sys_, {}};
    ExponentList out = exps_;
    for (auto& [idx, exp] : out) exp = exp * e;
    return {sys_, std::move(out)};
}

Dimension operator*(const Dimension& a, const Dimension& b) {
    if (!same_system(a, b)) throw MixedSystemsError();
    Dimension::ExponentList merged;
    merged.reserve(a.exps_.size() + b.exps_.size());
    auto ia = a.exps_.begin(), ib = b.exps_.begin();
    while (ia != a.exps_.end() || ib != b.exps_.end()) {
        if (ib == b.exps_.end() || (ia != a.exps_.end() && ia->first < ib->first)) {
            merged.push_back(*ia++);
        } else if (ia == a.exps_.end() || ib->first < ia->first) {
            merged.push_back(*ib++);
        } else {
            Rational sum = ia->second + ib->second;
            if (!sum.is_zero()) merged.emplace_back(ia->first, sum);
            ++ia;
            ++ib;
        }
    }
    return {a.sys_, std::move(merged)};
}

Dimension operator/(const Dimension& a, const Dimension& b) {
    return a * b.inverse();
}

bool operator==(const Dimension& a, const Dimension& b) {
    return same_system(a, b) && a.exps_ == b.exps_;
}

std::string Dimension::str() const {
    if (exps_.empty()) return "1";
    std::string out;
    for (const auto& [idx, exp] : exps_) {
        if (!out.empty()) out += '*';
        out += sys_->name(idx);
        if (exp != Rational(1)) {
            out += "^(";
            out += exp.str();
            out += ')';
        }
    }
    return out;
}

}  // namespace dimcheck
