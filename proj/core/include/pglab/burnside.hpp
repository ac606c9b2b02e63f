#pragma once

#include "pglab/genotype.hpp"
#include "pglab/linalg.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace pglab {

// Table of marks: mark(K, H) = |(G/K)^H|, rows indexed by the orbit types
// [G/K] and columns by species H, both in canonical subgroup-class order.
// Lower triangular with diagonal |N_G(K) : K|.
struct MarksTable {
    GroupPtr group;
    const SubgroupClassTable* lattice = nullptr;
    std::vector<std::vector<long>> m;

    long size() const { return static_cast<long>(m.size()); }
    long mark(long k_class, long h_class) const {
        return m[static_cast<size_t>(k_class)][static_cast<size_t>(h_class)];
    }
};

MarksTable table_of_marks(const GroupPtr& g, const SubgroupClassTable& lattice);

// Integer linear combination of the basis [G/K], by class index.
struct BurnsideElement {
    std::vector<BigInt> coeffs;
};

// A superclass function: one integer per subgroup class.
using SuperclassFunction = std::vector<BigInt>;

// +-1 vector over subgroup classes; in_burnside records whether it is the
// ghost vector of an actual Burnside-ring element.
struct SignVector {
    std::vector<int> signs; // each +1 or -1
    bool in_burnside = false;

    bool operator==(const SignVector& o) const { return signs == o.signs; }
};

// Solves marks * a = u (as species equations); throws NotInBurnsideRing when
// the unique rational solution is not integral.
BurnsideElement ghost_solve(const MarksTable& marks, const SuperclassFunction& u);

// Integrality test without throwing.
bool in_burnside_ring(const MarksTable& marks, const std::vector<BigInt>& ghost);

// Permutation character of G/K, K the representative of a lattice class.
Character lin_character(const ClassesPtr& cls, const SubgroupClassTable& lattice, long k_class);

// tom Dieck unit of a real character: s_H = par(dim chi^H). Validates that
// chi is real (chi = conj chi, fs-consistent) and that the sign vector is a
// Burnside-ring element.
SignVector die_unit(const Character& chi, const MarksTable& marks);

// Unit exp[G/K]: s_H = par(#H-orbits on G/K). Checked against
// die(lin[G/K]) when the lattice is small enough for that to be cheap.
SignVector exp_unit(const ClassesPtr& cls, const MarksTable& marks, long k_class);

// Orbit-count superclass function of G/K (the ghost of the permutation
// module's fixed-space dimensions).
std::vector<long> orbit_counts(const GroupPtr& g, const SubgroupClassTable& lattice, long k_class);

struct UnitGroup {
    std::vector<SignVector> units; // full list when brute-forced, else basis span
    long rank = 0;
    bool brute_forced = false;     // true when all 2^c vectors were tested
};

// Unit group of B(G). Brute force over all sign vectors when the class count
// is at most brute_threshold; always computes the subgroup generated by the
// die images of realified irreducibles, and cross-checks the two when both
// are available.
UnitGroup burnside_units(const GroupPtr& g, const SubgroupClassTable& lattice,
                         const MarksTable& marks, const CharacterTable& table,
                         long brute_threshold = 22);

// Fixed-point dimension matrix: Die[orbit][subgroup class].
std::vector<std::vector<long>> die_matrix(const CharacterTable& table,
                                          const SubgroupClassTable& lattice,
                                          const std::vector<GaloisOrbit>& orbits);

struct CountCheck {
    std::string name;
    long expected = 0;
    long actual = 0;
    bool pass = false;
    bool skipped = false;
    std::string note;
};

struct CountReport {
    std::vector<CountCheck> checks;
    bool all_pass = true;
    bool tornehave_assumed = false; // unit rank taken from the die span only
};

// Verifies the counting theorems: the Q-rank and F2-rank of the Die matrix,
// the unit-group rank, and the exp image rank with its surjectivity
// criterion. Throws nothing; failures are recorded in the report.
CountReport verify_counts(const GroupPtr& g, const SubgroupClassTable& lattice,
                          const CharacterTable& table, const std::vector<GaloisOrbit>& orbits,
                          const std::vector<IrrepInvariants>& invs,
                          const std::vector<RoquetteTag>& tags, const MarksTable& marks,
                          long brute_threshold = 22);

} // namespace pglab
