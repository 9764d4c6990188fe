#pragma once

#include "dimcheck/checker.hpp"

#include <string>

namespace dimcheck {

struct RenderOptions {
    bool color = false;
};

/// Human-readable report: one line per equation verdict, violations rendered
/// with the offending source line and a caret underline.
std::string render_text(const Report& report, const ModelSpec& spec, RenderOptions opts = {});

/// Machine-readable report:
/// {"model":..., "equations":[{"name","verdict","violations":[{"rule","span":
/// {"line","cs","ce"},"expected","found"}]}], "inferred":{name: dimstring}}
std::string render_json(const Report& report, const ModelSpec& spec);

}  // namespace dimcheck
