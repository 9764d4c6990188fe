#pragma once

#include "dimcheck/model.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dimcheck {

struct UndeclaredIdentifierError : std::runtime_error {
    UndeclaredIdentifierError(std::string name_, Span span_)
        : std::runtime_error("undeclared identifier '" + name_ + "'"),
          name(std::move(name_)),
          span(span_) {}

    std::string name;
    Span span;
};

struct MissingTimeDimensionError : std::runtime_error {
    MissingTimeDimensionError()
        : std::runtime_error("der/integ require a base dimension named 'T'") {}
};

/// Identifier dimensions, parameter bindings and function signatures visible
/// while inferring the dimension of an expression.
class Env {
public:
    static Env from_model(const ModelSpec& spec,
                          const std::vector<std::pair<std::string, Dimension>>& inferred = {});

    explicit Env(SystemPtr system) : sys_(std::move(system)) {}

    void bind(std::string name, Dimension dim);
    void bind_param(std::string name, Dimension dim, std::optional<Rational> value);
    void add_func(FuncSig sig);

    const Dimension* lookup(std::string_view name) const;
    const FuncSig* lookup_func(std::string_view name) const;
    std::optional<Rational> param_binding(std::string_view name) const;

    const SystemPtr& system() const { return sys_; }
    bool has_time() const { return sys_->has("T"); }
    /// The base dimension named T; throws MissingTimeDimensionError when the
    /// system does not declare one.
    Dimension time() const;

private:
    SystemPtr sys_;
    std::map<std::string, Dimension, std::less<>> dims_;
    std::map<std::string, Rational, std::less<>> bindings_;
    std::map<std::string, FuncSig, std::less<>> funcs_;
};

enum class ViolationRule {
    AdditionMismatch,
    EqualityMismatch,
    TranscendentalArgNotDimensionless,
    ExponentNotDimensionless,
    FunctionArgMismatch,
};

std::string_view rule_name(ViolationRule rule);

/// A witnessed failure of dimensional homogeneity at one node.
struct Violation {
    std::string equation;  // empty for bare-expression inference
    ViolationRule rule;
    Span span;
    Dimension expected;
    Dimension found;
};

/// Thrown by the single-result infer_dimension on the first violation.
struct ViolationError : std::runtime_error {
    explicit ViolationError(Violation v)
        : std::runtime_error(std::string(rule_name(v.rule)) + ": expected " +
                             v.expected.str() + ", found " + v.found.str()),
          violation(std::move(v)) {}

    Violation violation;
};

/// Dimension of an expression under env; throws ViolationError at the first
/// homogeneity failure and UndeclaredIdentifierError for unknown names.
Dimension infer_dimension(const Expr& e, const Env& env);

/// Collecting variant: violations are appended and inference recovers with
/// the consensus dimension of the offending group, so one pass can report
/// several independent problems.
Dimension infer_dimension(const Expr& e, const Env& env, std::vector<Violation>& out);

enum class Verdict { Homogeneous, Inhomogeneous };

struct EquationReport {
    std::string name;
    Verdict verdict = Verdict::Homogeneous;
    std::vector<Violation> violations;
};

/// Check one equation: every additive term on both sides, and the two sides
/// themselves, must share one dimension. Violations are charged to the
/// minority terms.
EquationReport check_equation(const std::string& name, const Expr& lhs, const Expr& rhs,
                              const Env& env);

struct Report {
    std::string model;
    std::vector<EquationReport> equations;
    std::vector<std::pair<std::string, Dimension>> inferred;

    bool all_homogeneous() const;
    std::size_t violation_count() const;
};

struct UnsolvableInferenceError : std::runtime_error {
    enum class Reason { Underdetermined, Inconsistent };

    UnsolvableInferenceError(Reason r, std::string witness_);

    Reason reason;
    std::string witness;  // equation name (inconsistent) or variable name (underdetermined)
};

/// Resolve every `infer`-marked variable by exact Gaussian elimination over
/// the per-base-dimension exponent equations the model's equations induce.
std::vector<std::pair<std::string, Dimension>> solve_unknown_dimensions(const ModelSpec& spec);

/// Solve unknowns first, then check every equation in declaration order.
Report check_model(const ModelSpec& spec, std::string model_label = "");

/// Basis of the nullspace of the (base dimension x variable) exponent matrix.
/// Each basis vector is scaled to smallest integer form with its first
/// nonzero entry positive; the product of the variables raised to a basis
/// vector's entries is dimensionless.
std::vector<std::vector<Rational>> dimensionless_groups(
    const std::vector<std::pair<std::string, Dimension>>& vars);

}  // namespace dimcheck
