#pragma once

#include "pglab/cyclotomic.hpp"

#include <string>
#include <vector>

namespace pglab {

// The unit group (Z/n)^x as a sorted list. For n <= 2 this is {1}.
std::vector<long> units_mod(long n);

// Subgroup of (Z/n)^x generated by gens (sorted).
std::vector<long> unit_subgroup(long n, const std::vector<long>& gens);

// All subgroups of (Z/n)^x, each sorted, deduplicated, in a deterministic
// order (by size, then lexicographic).
std::vector<std::vector<long>> unit_subgroups(long n);

bool is_unit_subgroup(long n, const std::vector<long>& s);

// A subfield of Q(zeta_n) represented by the subgroup of (Z/n)^x that fixes
// it. Equality, degree, conductor and containment are subgroup arithmetic;
// no primitive elements are ever computed.
struct FieldHandle {
    long n = 1;                 // prime-power level (1 means Q)
    std::vector<long> stab;     // sorted fixing subgroup of (Z/n)^x
    long degree = 1;            // [Fix(stab) : Q]
    long conductor = 1;         // least n' | n with the field inside Q(zeta_n')
    bool is_real = true;        // whether -1 mod n lies in stab
    std::string name;           // "Q", "Q_m", "Q_m^R", "Q_m^I", or "" if unnamed

    // Same abstract subfield of the cyclotomic tower. Handles at different
    // levels compare equal when their conductor-level data agree.
    bool operator==(const FieldHandle& o) const;
    bool operator!=(const FieldHandle& o) const { return !(*this == o); }

    // True when *this is a subfield of o (both reduced to a common level).
    bool contained_in(const FieldHandle& o) const;

    // Re-expressed at the conductor level.
    FieldHandle canonical() const;

    // Whether x (already in canonical CycNum form) lies in this field.
    bool contains_value(const CycNum& x) const;
};

// Fix(stab) inside Q(zeta_n). Throws NotASubgroup if stab is not a subgroup
// of (Z/n)^x. Populates degree, conductor, reality and the short name.
FieldHandle stabilizer_field(long n, std::vector<long> stab);

// Q itself (degree 1).
FieldHandle rational_field();

// Full cyclotomic field Q(zeta_n).
FieldHandle cyclotomic_field(long n);

// Real subfield Q(zeta_n + zeta_n^-1), n >= 8 a 2-power.
FieldHandle real_subfield(long n);

// Q(zeta_n - zeta_n^-1), n >= 8 a 2-power.
FieldHandle imaginary_subfield(long n);

// The three involutions of (Z/4v)^x for v >= 2 a power of 2:
// beta = -1, gamma = 2v+1, delta = 2v-1.
struct Involutions {
    long beta;
    long gamma;
    long delta;
};

Involutions involutions(long four_v);

} // namespace pglab
