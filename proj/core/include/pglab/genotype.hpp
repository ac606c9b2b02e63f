#pragma once

#include "pglab/rationality.hpp"
#include "pglab/roquette.hpp"

#include <optional>
#include <vector>

namespace pglab {

// One step of the recursive reduction: inside the current subquotient, the
// chosen normal E = C_p x C_p, its centralizer T (maximal), and the
// restriction constituent that was followed. Element sets are given in the
// ids of the original group.
struct GeneticStep {
    std::vector<long> e_elems;
    std::vector<long> t_elems;
    std::vector<long> new_kernel; // kernel accumulated after this step
    long constituent_index = 0;   // index in the canonical table of T/K
};

// The full reduction of one complex irreducible down to a Roquette
// subquotient with a faithful germ.
struct GeneticChain {
    std::vector<GeneticStep> steps;
    std::vector<long> h_elems; // terminal H <= G
    std::vector<long> k_elems; // terminal K normal in H
    RoquetteTag tag;
    // Germ as a character of H/K, plus its realization for re-induction.
    Subquotient terminal;
    Character germ;
};

// Diagnosis of a single induction psi = ind_{H/K}^G(phi) for complex
// irreducibles: tight iff the induced character matches exactly and the
// character fields agree.
struct TightnessReport {
    bool induced_ok = false;
    bool narrow = false;
    bool tight() const { return induced_ok && narrow; }
};

TightnessReport is_tight_induction(const ClassesPtr& g_cls, const Character& psi,
                                   const Subgroup& h, const std::vector<long>& k_elems,
                                   const Character& phi_on_quotient);

// Lemma-4.2 subgroup: a normal E = C_p x C_p with E meeting Z(G) in order p
// and E/Z central modulo the order-p central subgroup Z inside E. Requires
// G non-Roquette with cyclic center; ties broken by least element list.
Subgroup find_normal_E(const GroupPtr& g);

// The recursive reduction: quotient by the kernel, then repeatedly pass to
// the centralizer of a chosen E and a restriction constituent, until the
// subquotient is Roquette and the germ faithful. Verifies tightness of every
// step and the exact recomposition ind(germ) = psi.
GeneticChain genetic_reduction(const ClassesPtr& g_cls, const Character& psi);

// Theorem-5.13 classifier from (v, fs, vertex field).
RoquetteTag genotype_via_invariants(const IrrepInvariants& inv, long p);

// Runs both routes on the orbit and checks they agree.
RoquetteTag genotype(const CharacterTable& table, const GaloisOrbit& orbit,
                     const IrrepInvariants& inv);

// Census of genotypes over all Galois classes of the table.
std::vector<std::pair<RoquetteTag, long>> genotype_census(const CharacterTable& table);

// Exhaustive cross-check for small groups: every subquotient H/K that is
// Roquette with a faithful irrep tightly inducing to psi must carry the same
// tag. Returns the number of witnesses found (>= 1).
long exhaustive_genetic_check(const ClassesPtr& g_cls, const SubgroupClassTable& lattice,
                              const Character& psi, const RoquetteTag& expected);

} // namespace pglab
