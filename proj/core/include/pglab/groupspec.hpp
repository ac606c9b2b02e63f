#pragma once

#include "pglab/group.hpp"

#include <memory>
#include <string>

namespace pglab {

// Expression tree over family atoms (C4, D16, Q32, SD16, Mod16, DD32, V8)
// and the binary operators `x` (direct product) and `*` (central product),
// both left-associative with equal precedence.
struct GroupSpec {
    enum class Kind { Atom, Direct, Central };
    Kind kind = Kind::Atom;
    Family family = Family::C; // atoms
    long order = 1;
    std::unique_ptr<GroupSpec> lhs, rhs;
};

// Parses a spec; errors carry the byte offset in the message
// (SyntaxError / UnknownFamily / IllegalOrderForFamily).
GroupSpec parse_group_spec(const std::string& text);

// Canonical printer; parse(pretty(s)) reproduces s.
std::string pretty_print(const GroupSpec& spec);

// Evaluates the expression through make_named / direct_product /
// central_product.
GroupPtr build_spec(const GroupSpec& spec);

} // namespace pglab
