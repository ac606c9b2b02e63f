#pragma once

#include <stdexcept>
#include <string>

namespace pglab {

// Every failure condition the library can raise, by name. Conditions marked
// "assertion" in the docs signal internal bugs and should never be reachable
// through the public API on valid input.
enum class Err {
    NotAssociative,
    NoIdentity,
    NoInverse,
    OrderNotPPower,
    IllegalOrderForFamily,
    AmbiguousCenter,
    GroupTooLarge,
    NotNormal,
    NotASubgroup,
    NotRoquette,
    MixedPrimeLevels,
    NotAUnit,
    BadLevel,
    IncompleteTable,
    NonIntegerMultiplicity,
    NonIntegral,
    ClassificationInconsistency,
    NoSuchSubgroup,
    DualPathMismatch,
    NotInBurnsideRing,
    NotRealCharacter,
    TooLargeForBruteForce,
    CountMismatch,
    SyntaxError,
    UnknownFamily,
};

const char* err_name(Err e);

class Error : public std::runtime_error {
public:
    Error(Err code, const std::string& what)
        : std::runtime_error(std::string(err_name(code)) + ": " + what), code_(code) {}

    Err code() const { return code_; }

private:
    Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& what) { throw Error(code, what); }

inline void require(bool ok, Err code, const std::string& what) {
    if (!ok) fail(code, what);
}

} // namespace pglab
