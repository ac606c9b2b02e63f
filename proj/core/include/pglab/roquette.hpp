#pragma once

#include "pglab/group.hpp"

#include <string>
#include <vector>

namespace pglab {

// Isomorphism type of a Roquette p-group: C_{p^m} (m >= 0), Q_{2^m}
// (m >= 3), D_{2^m} (m >= 4), SD_{2^m} (m >= 4).
struct RoquetteTag {
    Family family = Family::C;
    long order = 1;

    RoquetteTag() = default;
    RoquetteTag(Family f, long o);

    std::string str() const { return std::string(family_name(family)) + std::to_string(order); }
    bool operator==(const RoquetteTag& o) const { return family == o.family && order == o.order; }
    bool operator!=(const RoquetteTag& o) const { return !(*this == o); }
    bool operator<(const RoquetteTag& o) const {
        if (order != o.order) return order < o.order;
        return static_cast<int>(family) < static_cast<int>(o.family);
    }
};

// All normal subgroups isomorphic to C_p x C_p, sorted by element list.
std::vector<Subgroup> normal_rank2_elementary(const GroupPtr& g);

// True iff every normal abelian subgroup of G is cyclic (equivalently, G
// has no normal C_p x C_p).
bool is_roquette(const GroupPtr& g);

// Identifies the isomorphism class of a Roquette group: cyclic iff abelian;
// among nonabelian 2-groups of order 2^m the involution count t decides:
// t = 1 -> Q, t = 2^{m-1}+1 -> D, t = 2^{m-2}+1 -> SD.
RoquetteTag roquette_iso_type(const GroupPtr& g);

} // namespace pglab
