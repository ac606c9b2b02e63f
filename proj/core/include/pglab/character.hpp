#pragma once

#include "pglab/cyclotomic.hpp"
#include "pglab/group.hpp"
#include "pglab/lattice.hpp"

#include <functional>
#include <memory>
#include <vector>

namespace pglab {

using ClassesPtr = std::shared_ptr<const ConjClasses>;

ClassesPtr classes_of(const GroupPtr& g);

// A class function with exact cyclotomic values, one per conjugacy class in
// canonical class order.
class Character {
public:
    Character() = default;
    Character(ClassesPtr cls, std::vector<CycNum> values)
        : cls_(std::move(cls)), values_(std::move(values)) {}

    const ClassesPtr& classes() const { return cls_; }
    const GroupPtr& group() const { return cls_->group; }
    const std::vector<CycNum>& values() const { return values_; }
    const CycNum& value(long class_idx) const { return values_[static_cast<size_t>(class_idx)]; }
    const CycNum& value_at(long element) const {
        return values_[static_cast<size_t>(cls_->class_of[static_cast<size_t>(element)])];
    }

    long degree() const; // value at the identity, a rational integer

    Character operator+(const Character& o) const;
    Character operator*(long k) const;
    bool operator==(const Character& o) const { return values_ == o.values_; }

    bool is_zero() const;

private:
    ClassesPtr cls_;
    std::vector<CycNum> values_;
};

Character trivial_character(const ClassesPtr& cls);
Character conjugate_character(const Character& chi);

// All |H/[H,H]| degree-1 characters of the (whole) group, sorted by value
// vector. Computed through the abelianization, with characters tracked as
// exponent maps into Z/exp so that root extraction stays exact.
std::vector<Character> linear_characters(const ClassesPtr& cls);

// Induction from a subgroup given by parent element ids and a value lookup
// (zero off H is implicit): ind(g) = (1/|H|) sum_{x in G} phi(x g x^-1).
Character induce(const ClassesPtr& g_cls, const std::vector<long>& h_elems,
                 const std::function<const CycNum&(long)>& phi_at_parent);

Character induce(const ClassesPtr& g_cls, const EmbeddedGroup& h, const Character& phi);

// Induction from a subquotient: inflate through sq.proj, then induce.
Character induce(const ClassesPtr& g_cls, const Subquotient& sq, const Character& phi);

Character restrict_to(const Character& psi, const EmbeddedGroup& h, const ClassesPtr& h_cls);

// Deflates psi (a character of sq.H's parent restricted... of the group
// realizing H) is not needed; this deflates a character of H to H/K when K
// lies in its kernel.
Character deflate(const Character& phi_on_h, const EmbeddedGroup& h, const Subquotient& sq,
                  const ClassesPtr& q_cls);

Rational inner_product(const Character& a, const Character& b);

long fixed_point_dim(const Character& psi, const Subgroup& h);

Subgroup character_kernel(const Character& psi);

// Indicator sum (1/|G|) sum_g chi(g^2) for arbitrary class functions.
Rational frobenius_schur_raw(const Character& chi);

// For an irreducible character: value in {1, 0, -1}.
int frobenius_schur(const Character& psi);

struct CharacterTable {
    ClassesPtr cls;
    std::vector<Character> irreps; // trivial pinned at index 0

    long size() const { return static_cast<long>(irreps.size()); }
};

// Complete complex character table by monomial induction: for subgroup class
// representatives H (largest first) and each linear character of H, keep the
// induced characters of norm 1 until sum deg^2 = |G|. p-groups are monomial,
// so this terminates with exactly one irreducible per conjugacy class.
CharacterTable character_table(const GroupPtr& g);
CharacterTable character_table(const ClassesPtr& cls, const SubgroupClassTable& lattice);

// Multiplicities <psi, irrep_i> for each row of the table.
std::vector<long> decompose(const Character& psi, const CharacterTable& table);

} // namespace pglab
