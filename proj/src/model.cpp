#include "dimcheck/model.hpp"

namespace dimcheck {

const VarDecl* ModelSpec::find_var(std::string_view name) const {
    for (const auto& v : vars) {
        if (v.name == name) return &v;
    }
    return nullptr;
}

const ParamDecl* ModelSpec::find_param(std::string_view name) const {
    for (const auto& p : params) {
        if (p.name == name) return &p;
    }
    return nullptr;
}

const FuncSig* ModelSpec::find_func(std::string_view name) const {
    for (const auto& f : funcs) {
        if (f.name == name) return &f;
    }
    return nullptr;
}

bool ModelSpec::declared(std::string_view name) const {
    return find_var(name) || find_param(name) || find_func(name);
}

}  // namespace dimcheck
