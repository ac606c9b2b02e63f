#include "pglab/groupspec.hpp"

#include "pglab/cyclotomic.hpp"
#include "pglab/errors.hpp"

#include <cctype>

namespace pglab {

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;

    [[noreturn]] void error(Err code, const std::string& what, size_t at) {
        fail(code, what + " at offset " + std::to_string(at));
    }

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool peek(char c) {
        skip_ws();
        return pos < s.size() && s[pos] == c;
    }

    GroupSpec parse_atom() {
        skip_ws();
        if (pos >= s.size()) error(Err::SyntaxError, "expected a group atom", pos);
        if (s[pos] == '(') {
            ++pos;
            GroupSpec inner = parse_expr();
            skip_ws();
            if (pos >= s.size() || s[pos] != ')')
                error(Err::SyntaxError, "expected ')'", pos);
            ++pos;
            return inner;
        }
        size_t start = pos;
        // Family letters: uppercase run plus lowercase continuation (Mod);
        // the operator 'x' is always lowercase and never starts a family.
        if (!std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == 'x')
            error(Err::SyntaxError, "expected a family name", pos);
        std::string word;
        while (pos < s.size() && std::isalpha(static_cast<unsigned char>(s[pos])) && s[pos] != 'x')
            word += s[pos++];
        Family fam;
        if (word == "C") fam = Family::C;
        else if (word == "D") fam = Family::D;
        else if (word == "Q") fam = Family::Q;
        else if (word == "SD") fam = Family::SD;
        else if (word == "Mod") fam = Family::Mod;
        else if (word == "DD") fam = Family::DD;
        else if (word == "V") fam = Family::V;
        else error(Err::UnknownFamily, "unknown family '" + word + "'", start);
        size_t dstart = pos;
        long order = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            order = order * 10 + (s[pos] - '0');
            if (order > 1'000'000) error(Err::SyntaxError, "order too large", dstart);
            ++pos;
        }
        if (pos == dstart) error(Err::SyntaxError, "expected an order after '" + word + "'", pos);
        GroupSpec atom;
        atom.kind = GroupSpec::Kind::Atom;
        atom.family = fam;
        atom.order = order;
        validate_atom(atom, start);
        return atom;
    }

    void validate_atom(const GroupSpec& a, size_t at) {
        // Mirror make_named's legality rules so parse errors carry offsets.
        long p = a.order == 1 ? 2 : prime_of(a.order);
        auto bad = [&](const std::string& why) {
            error(Err::IllegalOrderForFamily,
                  std::string(family_name(a.family)) + std::to_string(a.order) + ": " + why, at);
        };
        if (a.order < 1 || (a.order > 1 && p == 0)) bad("order is not a prime power");
        switch (a.family) {
            case Family::C:
            case Family::V: break;
            case Family::D:
            case Family::Q:
                if (p != 2 || a.order < 8) bad("needs a 2-power order >= 8");
                break;
            case Family::SD:
                if (p != 2 || a.order < 16) bad("needs a 2-power order >= 16");
                break;
            case Family::Mod:
                if (a.order < p * p * p || (p == 2 && a.order < 16))
                    bad("needs order >= p^3 (>= 16 when p = 2)");
                break;
            case Family::DD:
                if (p != 2 || a.order < 32) bad("needs a 2-power order >= 32");
                break;
        }
    }

    GroupSpec parse_expr() {
        GroupSpec left = parse_atom();
        while (true) {
            skip_ws();
            if (pos >= s.size()) break;
            char c = s[pos];
            if (c != 'x' && c != '*') break;
            ++pos;
            GroupSpec right = parse_atom();
            GroupSpec node;
            node.kind = c == 'x' ? GroupSpec::Kind::Direct : GroupSpec::Kind::Central;
            node.lhs = std::make_unique<GroupSpec>(std::move(left));
            node.rhs = std::make_unique<GroupSpec>(std::move(right));
            left = std::move(node);
        }
        return left;
    }
};

void print_rec(const GroupSpec& spec, std::string& out, bool parenthesize) {
    if (spec.kind == GroupSpec::Kind::Atom) {
        out += family_name(spec.family);
        out += std::to_string(spec.order);
        return;
    }
    if (parenthesize) out += "(";
    print_rec(*spec.lhs, out, false);
    out += spec.kind == GroupSpec::Kind::Direct ? "x" : "*";
    print_rec(*spec.rhs, out, true); // right operand of equal precedence
    if (parenthesize) out += ")";
}

} // namespace

GroupSpec parse_group_spec(const std::string& text) {
    Parser p{text};
    GroupSpec spec = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size())
        fail(Err::SyntaxError, "trailing input at offset " + std::to_string(p.pos));
    return spec;
}

std::string pretty_print(const GroupSpec& spec) {
    std::string out;
    print_rec(spec, out, false);
    return out;
}

GroupPtr build_spec(const GroupSpec& spec) {
    if (spec.kind == GroupSpec::Kind::Atom) return make_named(spec.family, spec.order);
    GroupPtr l = build_spec(*spec.lhs);
    GroupPtr r = build_spec(*spec.rhs);
    return spec.kind == GroupSpec::Kind::Direct ? direct_product(l, r) : central_product(l, r);
}

} // namespace pglab
