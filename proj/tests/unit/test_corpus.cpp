#include "dimcheck/checker.hpp"
#include "dimcheck/parser.hpp"
#include "dimcheck/report.hpp"

#include <doctest.h>
#include <json.hpp>

#include <fstream>
#include <sstream>

using namespace dimcheck;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    REQUIRE_MESSAGE(in.good(), "cannot open " << path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

ModelSpec load(const char* name) {
    return parse_model(read_file(std::string(DIMCHECK_MODELS_DIR) + "/" + name));
}

std::string span_text(const ModelSpec& spec, const Span& sp) {
    const std::string& line = spec.source_lines.at(static_cast<std::size_t>(sp.line) - 1);
    return line.substr(static_cast<std::size_t>(sp.col_start) - 1,
                       static_cast<std::size_t>(sp.col_end - sp.col_start));
}

}  // namespace

TEST_CASE("naive income model: exactly one stock/flow violation") {
    ModelSpec spec = load("eq2_income_naive.model");
    Report rep = check_model(spec, "eq2_income_naive");
    REQUIRE(rep.equations.size() == 1);
    CHECK(rep.equations[0].verdict == Verdict::Inhomogeneous);
    REQUIRE(rep.equations[0].violations.size() == 1);
    const Violation& v = rep.equations[0].violations[0];
    CHECK(v.rule == ViolationRule::AdditionMismatch);
    CHECK(v.expected.str() == "QK*T^(-1)");
    CHECK(v.found.str() == "QK");
    CHECK(span_text(spec, v.span) == "wK*K");
}

TEST_CASE("naive profit model: the capital cost term cannot balance") {
    ModelSpec spec = load("eq5_profit_naive.model");
    Report rep = check_model(spec, "eq5_profit_naive");
    REQUIRE(rep.equations.size() == 1);
    CHECK(rep.equations[0].verdict == Verdict::Inhomogeneous);
    REQUIRE(rep.equations[0].violations.size() == 1);
    const Violation& v = rep.equations[0].violations[0];
    CHECK(v.rule == ViolationRule::AdditionMismatch);
    CHECK(v.expected.str() == "QK*T^(-1)");
    CHECK(v.found.str() == "QK");
    CHECK(span_text(spec, v.span) == "wK*K");
}

TEST_CASE("corrected model: every equation homogeneous, a0 inferred") {
    ModelSpec spec = load("corrected_model.model");
    Report rep = check_model(spec, "corrected_model");
    CHECK(rep.equations.size() == 14);
    for (const auto& eq : rep.equations) {
        INFO("equation " << eq.name);
        CHECK(eq.verdict == Verdict::Homogeneous);
    }
    REQUIRE(rep.inferred.size() == 1);
    CHECK(rep.inferred[0].first == "a0");
    CHECK(rep.inferred[0].second.str() == "QK^(2/3)*QP^(-2/3)*T^(-1)");
}

TEST_CASE("hamiltonian model: objective, transforms and elasticity all balance") {
    ModelSpec spec = load("hamiltonian.model");
    Report rep = check_model(spec, "hamiltonian");
    CHECK(rep.equations.size() == 6);
    for (const auto& eq : rep.equations) {
        INFO("equation " << eq.name);
        CHECK(eq.verdict == Verdict::Homogeneous);
    }
    // the welfare integral really is a utility stock per capita
    Env env = Env::from_model(spec);
    const Equation* welfare = nullptr;
    for (const auto& eq : spec.equations) {
        if (eq.name == "welfare_present_value") welfare = &eq;
    }
    REQUIRE(welfare != nullptr);
    CHECK(infer_dimension(welfare->rhs, env).str() == "U*QP^(-1)");
}

TEST_CASE("named corpus verdicts match the catalogue") {
    ModelSpec spec = load("corrected_model.model");
    Report rep = check_model(spec, "corrected_model");
    std::vector<std::string> expected_names = {
        "income",          "profit",           "labour_flow",    "population_growth",
        "saving",          "investment",       "accumulation",   "accumulation_percap",
        "solow_modified",  "foc_consumption",  "state_equation", "costate_equation",
        "consumption_dynamics", "capital_dynamics"};
    REQUIRE(rep.equations.size() == expected_names.size());
    for (std::size_t i = 0; i < expected_names.size(); ++i) {
        CHECK(rep.equations[i].name == expected_names[i]);
    }
}

TEST_CASE("JSON report follows the published schema") {
    ModelSpec spec = load("eq2_income_naive.model");
    Report rep = check_model(spec, "eq2_income_naive");
    nlohmann::json doc = nlohmann::json::parse(render_json(rep, spec));
    CHECK(doc.at("model") == "eq2_income_naive");
    REQUIRE(doc.at("equations").size() == 1);
    const auto& eq = doc.at("equations").at(0);
    CHECK(eq.at("name") == "income");
    CHECK(eq.at("verdict") == "inhomogeneous");
    REQUIRE(eq.at("violations").size() == 1);
    const auto& v = eq.at("violations").at(0);
    CHECK(v.at("rule") == "AdditionMismatch");
    CHECK(v.at("expected") == "QK*T^(-1)");
    CHECK(v.at("found") == "QK");
    CHECK(v.at("span").at("line").is_number_integer());
    CHECK(v.at("span").at("cs").is_number_integer());
    CHECK(v.at("span").at("ce").is_number_integer());
    CHECK(doc.at("inferred").is_object());
}

TEST_CASE("text report underlines the offending span") {
    ModelSpec spec = load("eq2_income_naive.model");
    Report rep = check_model(spec, "eq2_income_naive");
    std::string text = render_text(rep, spec);
    CHECK(text.find("equation income: INHOMOGENEOUS") != std::string::npos);
    CHECK(text.find("AdditionMismatch") != std::string::npos);
    CHECK(text.find("^~~~") != std::string::npos);
    CHECK(text.find("summary: 1 equation, 0 homogeneous, 1 inhomogeneous") != std::string::npos);
    CHECK(text.find("\033[") == std::string::npos);  // no ANSI without color
}

TEST_CASE("an empty model checks clean") {
    ModelSpec spec = parse_model("dims T M QK QL QP U\n");
    Report rep = check_model(spec, "empty");
    CHECK(rep.equations.empty());
    CHECK(rep.all_homogeneous());
    CHECK(rep.inferred.empty());
}
