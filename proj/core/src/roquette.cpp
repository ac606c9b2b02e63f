#include "pglab/roquette.hpp"

#include "pglab/cyclotomic.hpp"
#include "pglab/errors.hpp"

#include <algorithm>
#include <set>

namespace pglab {

RoquetteTag::RoquetteTag(Family f, long o) : family(f), order(o) {
    long p = o == 1 ? 2 : prime_of(o);
    bool ok = false;
    switch (f) {
        case Family::C: ok = o == 1 || p != 0; break;
        case Family::Q: ok = p == 2 && o >= 8; break;
        case Family::D: ok = p == 2 && o >= 16; break;
        case Family::SD: ok = p == 2 && o >= 16; break;
        default: ok = false; break;
    }
    require(ok, Err::NotRoquette,
            std::string(family_name(f)) + std::to_string(o) + " is not a Roquette type");
}

std::vector<Subgroup> normal_rank2_elementary(const GroupPtr& g) {
    long p = g->prime();
    std::vector<long> order_p;
    for (long a = 1; a < g->order(); ++a)
        if (g->element_order(a) == p) order_p.push_back(a);

    std::set<std::vector<long>> found;
    for (size_t i = 0; i < order_p.size(); ++i) {
        for (size_t j = i + 1; j < order_p.size(); ++j) {
            long x = order_p[i], y = order_p[j];
            if (g->mul(x, y) != g->mul(y, x)) continue;
            Subgroup e = generated_subgroup(g, {x, y});
            if (e.size() != p * p) continue; // y inside <x>
            if (is_normal(e)) found.insert(e.elems);
        }
    }
    std::vector<Subgroup> out;
    for (const auto& elems : found) out.push_back(Subgroup{g, elems});
    return out;
}

bool is_roquette(const GroupPtr& g) {
    // A noncyclic normal abelian subgroup yields a normal C_p x C_p (the
    // socle of its torsion-p part is G-invariant), and conversely.
    return normal_rank2_elementary(g).empty();
}

RoquetteTag roquette_iso_type(const GroupPtr& g) {
    require(is_roquette(g), Err::NotRoquette, "group is not Roquette");
    if (g->is_abelian()) {
        require(g->is_cyclic(), Err::NotRoquette, "abelian Roquette group must be cyclic");
        return RoquetteTag(Family::C, g->order());
    }
    require(g->prime() == 2, Err::NotRoquette, "nonabelian Roquette groups are 2-groups");
    long m2 = g->order(); // 2^m
    long invol = 0;
    for (long a = 1; a < g->order(); ++a)
        if (g->element_order(a) == 2) ++invol;
    if (invol == 1) return RoquetteTag(Family::Q, m2);
    if (invol == m2 / 2 + 1) return RoquetteTag(Family::D, m2);
    if (invol == m2 / 4 + 1) return RoquetteTag(Family::SD, m2);
    fail(Err::NotRoquette, "involution count matches no Roquette family");
}

} // namespace pglab
