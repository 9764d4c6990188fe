#pragma once

#include "dimcheck/model.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace dimcheck {

struct ParseError : std::runtime_error {
    enum class Kind { Syntax, DuplicateName, UndeclaredIdentifier, UnknownBaseDimension };

    ParseError(Kind k, Span sp, std::string expected_, std::string found_);

    Kind kind;
    Span span;
    std::string expected;
    std::string found;
};

/// Parse a whole model file. Deterministic: byte-identical text yields a
/// structurally identical ModelSpec.
ModelSpec parse_model(std::string_view text);

/// Parse a single expression against the declarations of an existing model.
Expr parse_expr(std::string_view text, const ModelSpec& spec);

/// Parse a dimension expression ("1", "QK/(QP*T)", "QK^(2/3)*T^(-1)").
Dimension parse_dimexpr(std::string_view text, SystemPtr sys);

}  // namespace dimcheck
