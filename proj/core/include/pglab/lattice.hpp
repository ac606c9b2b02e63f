#pragma once

#include "pglab/group.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace pglab {

// Element-set bitmask for groups of order <= 128.
struct Mask {
    std::array<std::uint64_t, 2> w{0, 0};

    void set(long i) { w[static_cast<size_t>(i >> 6)] |= 1ULL << (i & 63); }
    bool test(long i) const { return (w[static_cast<size_t>(i >> 6)] >> (i & 63)) & 1; }
    bool operator==(const Mask& o) const { return w == o.w; }
    bool subset_of(const Mask& o) const {
        return (w[0] & ~o.w[0]) == 0 && (w[1] & ~o.w[1]) == 0;
    }
    long popcount() const;
};

Mask mask_of(const std::vector<long>& elems);
std::vector<long> mask_elems(const Mask& m, long order);

// True when a's sorted element list is lexicographically smaller than b's.
bool mask_list_less(const Mask& a, const Mask& b);

// One conjugacy class of subgroups: canonical representative (the
// lexicographically least member of the orbit by sorted element list),
// the full orbit, and the normalizer of the representative.
struct SubgroupClass {
    Subgroup rep;
    std::vector<Mask> orbit; // all conjugates, deduplicated
    Subgroup normalizer;
};

// All subgroups of G up to conjugacy, ordered by non-decreasing subgroup
// order with ties broken by the representative's element list.
struct SubgroupClassTable {
    GroupPtr group;
    std::vector<SubgroupClass> classes;

    long size() const { return static_cast<long>(classes.size()); }
    // Index of the class containing the given subgroup.
    long class_of(const std::vector<long>& elems) const;
};

// Bottom-up cyclic extension: each class of order p^k is extended by
// prime-order elements of its normalizer modulo the subgroup. Requires
// |G| <= 128.
SubgroupClassTable subgroup_classes(const GroupPtr& g);

// K normal in H, both inside the parent of H; the quotient H/K realized as
// a group together with the projection from parent ids (only meaningful on
// elements of H).
struct Subquotient {
    Subgroup H;
    Subgroup K;
    GroupPtr group;          // H/K
    std::vector<long> proj;  // parent element id -> H/K element id (or -1)
};

Subquotient make_subquotient(const Subgroup& h, const std::vector<long>& k_elems);

} // namespace pglab
