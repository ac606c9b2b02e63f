#pragma once

#include "pglab/character.hpp"
#include "pglab/cyclo_field.hpp"

#include <vector>

namespace pglab {

// A Galois conjugacy class of complex irreducibles. The Galois group
// (Z/n)^x, n = exp(G), acts through power maps: (sigma_k psi)(g) = psi(g^k).
struct GaloisOrbit {
    std::vector<long> members;   // indices into the character table, ascending
    std::vector<long> stabilizer; // {k : sigma_k fixes any member}, sorted
    long representative() const { return members[0]; }
    long size() const { return static_cast<long>(members.size()); }
};

std::vector<GaloisOrbit> galois_orbits(const CharacterTable& table);

// The full invariant list of a Galois class: order v, Schur index m,
// Frobenius-Schur indicator and type, vertex field, exponent n(psi), Fein
// field and the minimal splitting fields it pins.
struct IrrepInvariants {
    long v = 1;
    long m = 1;
    int fs = 1;
    char fs_type = 'R'; // 'R', 'C' or 'H'
    FieldHandle vertex_field;
    long n_psi = 1;
    FieldHandle fein;
    std::vector<FieldHandle> min_splitting;
    std::vector<long> vertex_stab; // the orbit stabilizer
    bool trivial = false;          // whether the orbit is the trivial character
};

IrrepInvariants irrep_invariants(const CharacterTable& table, const GaloisOrbit& orbit);

// Character of psi_Q: m times the orbit sum; all values rational integers.
Character rational_character(const CharacterTable& table, const GaloisOrbit& orbit,
                             const IrrepInvariants& inv);

// Partition of the orbit into sigma-orbits of the subgroup S <= (Z/n)^x;
// the blocks correspond to the K-irreps for K = Fix(S).
std::vector<std::vector<long>> irreps_over_subfield(const CharacterTable& table,
                                                    const GaloisOrbit& orbit,
                                                    const std::vector<long>& s);

// Permutation of class indices induced by g -> g^k.
std::vector<long> power_class_map(const ConjClasses& cls, long k);

// The vertex field Q[chi] of any character, as a stabilizer inside
// (Z/exp)^x of the character's own group.
FieldHandle character_field(const Character& chi);

} // namespace pglab
