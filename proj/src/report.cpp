#include "dimcheck/report.hpp"

#include <json.hpp>

namespace dimcheck {

namespace {

const char* kRed = "\033[31m";
const char* kGreen = "\033[32m";
const char* kBold = "\033[1m";
const char* kReset = "\033[0m";

void append_violation(std::string& out, const Violation& v, const ModelSpec& spec,
                      const RenderOptions& opts) {
    out += "  line " + std::to_string(v.span.line) + ", col " + std::to_string(v.span.col_start) +
           ": ";
    if (opts.color) out += kBold;
    out += rule_name(v.rule);
    if (opts.color) out += kReset;
    out += ": expected " + v.expected.str() + ", found " + v.found.str() + "\n";
    if (v.span.line >= 1 && static_cast<std::size_t>(v.span.line) <= spec.source_lines.size()) {
        const std::string& line = spec.source_lines[static_cast<std::size_t>(v.span.line) - 1];
        out += "    " + line + "\n    ";
        int underline_end = std::max(v.span.col_end, v.span.col_start + 1);
        for (int c = 1; c < v.span.col_start; ++c) out += ' ';
        if (opts.color) out += kRed;
        out += '^';
        for (int c = v.span.col_start + 1; c < underline_end; ++c) out += '~';
        if (opts.color) out += kReset;
        out += "\n";
    }
}

}  // namespace

std::string render_text(const Report& report, const ModelSpec& spec, RenderOptions opts) {
    std::string out;
    for (const auto& eq : report.equations) {
        bool ok = eq.verdict == Verdict::Homogeneous;
        out += "equation " + eq.name + ": ";
        if (opts.color) out += ok ? kGreen : kRed;
        out += ok ? "homogeneous" : "INHOMOGENEOUS";
        if (opts.color) out += kReset;
        if (!ok) {
            out += " (" + std::to_string(eq.violations.size()) + " violation" +
                   (eq.violations.size() == 1 ? "" : "s") + ")";
        }
        out += "\n";
        for (const auto& v : eq.violations) append_violation(out, v, spec, opts);
    }
    for (const auto& [name, dim] : report.inferred) {
        out += "inferred " + name + " : " + dim.str() + "\n";
    }
    std::size_t bad = 0;
    for (const auto& eq : report.equations) {
        if (eq.verdict != Verdict::Homogeneous) ++bad;
    }
    out += "summary: " + std::to_string(report.equations.size()) + " equation" +
           (report.equations.size() == 1 ? "" : "s") + ", " +
           std::to_string(report.equations.size() - bad) + " homogeneous, " +
           std::to_string(bad) + " inhomogeneous\n";
    return out;
}

std::string render_json(const Report& report, const ModelSpec& spec) {
    (void)spec;
    nlohmann::ordered_json doc;
    doc["model"] = report.model;
    doc["equations"] = nlohmann::ordered_json::array();
    for (const auto& eq : report.equations) {
        nlohmann::ordered_json je;
        je["name"] = eq.name;
        je["verdict"] = eq.verdict == Verdict::Homogeneous ? "homogeneous" : "inhomogeneous";
        je["violations"] = nlohmann::ordered_json::array();
        for (const auto& v : eq.violations) {
            nlohmann::ordered_json jv;
            jv["rule"] = std::string(rule_name(v.rule));
            jv["span"] = {{"line", v.span.line}, {"cs", v.span.col_start}, {"ce", v.span.col_end}};
            jv["expected"] = v.expected.str();
            jv["found"] = v.found.str();
            je["violations"].push_back(std::move(jv));
        }
        doc["equations"].push_back(std::move(je));
    }
    doc["inferred"] = nlohmann::ordered_json::object();
    for (const auto& [name, dim] : report.inferred) {
        doc["inferred"][name] = dim.str();
    }
    return doc.dump(2) + "\n";
}

}  // namespace dimcheck
