#pragma once

#include <memory>
#include <string>
#include <vector>

namespace pglab {

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

// A finite p-group of order <= 128 as an explicit multiplication table.
// Element 0 is the identity. Immutable after construction; all operations
// on groups are pure functions, so instances are freely shared.
class FiniteGroup {
public:
    long order() const { return order_; }
    long prime() const { return p_; }
    long exponent() const { return exponent_; }

    long mul(long a, long b) const { return mul_[static_cast<size_t>(a * order_ + b)]; }
    long inv(long a) const { return inv_[static_cast<size_t>(a)]; }
    long conj(long g, long x) const { return mul(mul(x, g), inv(x)); } // x g x^-1
    long pow(long g, long k) const;
    long element_order(long g) const { return elt_order_[static_cast<size_t>(g)]; }

    const std::string& label(long g) const { return labels_[static_cast<size_t>(g)]; }

    bool is_abelian() const;
    bool is_cyclic() const;

private:
    friend GroupPtr build_group(const std::vector<std::vector<long>>& mul, long p,
                                std::vector<std::string> labels);

    long order_ = 1;
    long p_ = 2;
    long exponent_ = 1;
    std::vector<long> mul_;       // row-major order x order
    std::vector<long> inv_;
    std::vector<long> elt_order_;
    std::vector<std::string> labels_;
};

// Validates the table (identity 0, associativity, inverses, order a power
// of p) and computes inverses, element orders and the exponent.
GroupPtr build_group(const std::vector<std::vector<long>>& mul, long p,
                     std::vector<std::string> labels = {});

enum class Family { C, D, Q, SD, Mod, DD, V };

const char* family_name(Family f);

// Standard-presentation constructors. C and V accept any prime-power order;
// D and Q need order >= 8, SD >= 16, Mod >= p^3 (>= 16 when p = 2),
// DD >= 32. Generators carry the labels a, b, c, d, x.
GroupPtr make_named(Family family, long order);

GroupPtr direct_product(const GroupPtr& g, const GroupPtr& h);

// Identifies the unique order-2 central subgroups of g and h; rejects
// operands whose center has none or several subgroups of order 2.
GroupPtr central_product(const GroupPtr& g, const GroupPtr& h);

// A subgroup as a sorted element-id list plus the owning group.
struct Subgroup {
    GroupPtr parent;
    std::vector<long> elems; // sorted, contains 0

    long size() const { return static_cast<long>(elems.size()); }
    bool contains(long g) const;
    bool operator==(const Subgroup& o) const { return elems == o.elems; }
};

Subgroup whole_group(const GroupPtr& g);
Subgroup trivial_subgroup(const GroupPtr& g);

// Closure of the given elements under multiplication and inverse.
Subgroup generated_subgroup(const GroupPtr& g, const std::vector<long>& gens);

bool is_subgroup(const GroupPtr& g, const std::vector<long>& elems);
bool is_normal(const Subgroup& s);

Subgroup centralizer(const GroupPtr& g, const Subgroup& s);
Subgroup center(const GroupPtr& g);
Subgroup derived_subgroup(const GroupPtr& g);
Subgroup normalizer(const GroupPtr& g, const Subgroup& s);

bool is_abelian_subgroup(const Subgroup& s);
bool is_cyclic_subgroup(const Subgroup& s);
bool is_elementary_abelian(const Subgroup& s);

// Conjugate subgroup x S x^-1.
std::vector<long> conjugate_subgroup(const GroupPtr& g, const std::vector<long>& elems, long x);

// Quotient G/N with cosets sorted by least member (so the identity coset is
// element 0) plus the projection map.
struct Quotient {
    GroupPtr group;
    std::vector<long> proj; // parent element id -> quotient element id
};

Quotient quotient(const GroupPtr& g, const Subgroup& n);

// The subgroup realized as an abstract group, with the embedding back into
// the parent.
struct EmbeddedGroup {
    GroupPtr group;
    std::vector<long> to_parent; // element id in group -> element id in parent
};

EmbeddedGroup subgroup_as_group(const Subgroup& s);

// Conjugacy classes in canonical order: by element order of the
// representative, then least member id; each class sorted, identity first.
struct ConjClasses {
    GroupPtr group;
    std::vector<std::vector<long>> classes;
    std::vector<long> class_of; // element -> class index
    std::vector<long> reps;     // least member of each class
};

ConjClasses conjugacy_classes(const GroupPtr& g);

} // namespace pglab
