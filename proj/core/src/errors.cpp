#include "pglab/errors.hpp"

namespace pglab {

const char* err_name(Err e) {
    switch (e) {
        case Err::NotAssociative: return "NotAssociative";
        case Err::NoIdentity: return "NoIdentity";
        case Err::NoInverse: return "NoInverse";
        case Err::OrderNotPPower: return "OrderNotPPower";
        case Err::IllegalOrderForFamily: return "IllegalOrderForFamily";
        case Err::AmbiguousCenter: return "AmbiguousCenter";
        case Err::GroupTooLarge: return "GroupTooLarge";
        case Err::NotNormal: return "NotNormal";
        case Err::NotASubgroup: return "NotASubgroup";
        case Err::NotRoquette: return "NotRoquette";
        case Err::MixedPrimeLevels: return "MixedPrimeLevels";
        case Err::NotAUnit: return "NotAUnit";
        case Err::BadLevel: return "BadLevel";
        case Err::IncompleteTable: return "IncompleteTable";
        case Err::NonIntegerMultiplicity: return "NonIntegerMultiplicity";
        case Err::NonIntegral: return "NonIntegral";
        case Err::ClassificationInconsistency: return "ClassificationInconsistency";
        case Err::NoSuchSubgroup: return "NoSuchSubgroup";
        case Err::DualPathMismatch: return "DualPathMismatch";
        case Err::NotInBurnsideRing: return "NotInBurnsideRing";
        case Err::NotRealCharacter: return "NotRealCharacter";
        case Err::TooLargeForBruteForce: return "TooLargeForBruteForce";
        case Err::CountMismatch: return "CountMismatch";
        case Err::SyntaxError: return "SyntaxError";
        case Err::UnknownFamily: return "UnknownFamily";
    }
    return "UnknownError";
}

} // namespace pglab
