#pragma once

#include <string>
#include <vector>

#include "glspec/graph.hpp"

namespace glspec {

// Symbolic handle for the named graph constructors. Textual form is
// "Name" or "Name(p1,p2,...)", e.g. "Y(7,3)", "K(2,3)", "F".
struct FamilySpec {
    std::string name;
    std::vector<int> params;

    static FamilySpec parse(const std::string& text);
    std::string text() const;
    bool operator==(const FamilySpec&) const = default;
};

Graph make(const FamilySpec& spec);
Graph make(const std::string& text);

// Catalog names, fixed-order. Parameterized families list their domain
// in the constructor's error messages.
const std::vector<std::string>& family_names();

}  // namespace glspec
