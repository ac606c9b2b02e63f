#include "pglab/lattice.hpp"

#include "pglab/errors.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <unordered_map>

namespace pglab {

long Mask::popcount() const {
    return std::popcount(w[0]) + std::popcount(w[1]);
}

Mask mask_of(const std::vector<long>& elems) {
    Mask m;
    for (long e : elems) m.set(e);
    return m;
}

std::vector<long> mask_elems(const Mask& m, long order) {
    std::vector<long> out;
    for (long i = 0; i < order; ++i)
        if (m.test(i)) out.push_back(i);
    return out;
}

bool mask_list_less(const Mask& a, const Mask& b) {
    // Sorted element lists compare lexicographically at the lowest
    // differing bit: whichever mask contains it is the smaller list.
    for (int k = 0; k < 2; ++k) {
        std::uint64_t diff = a.w[static_cast<size_t>(k)] ^ b.w[static_cast<size_t>(k)];
        if (diff) {
            std::uint64_t low = diff & (~diff + 1);
            return (a.w[static_cast<size_t>(k)] & low) != 0;
        }
    }
    return false;
}

namespace {

struct MaskHash {
    size_t operator()(const Mask& m) const {
        return std::hash<std::uint64_t>()(m.w[0] * 0x9e3779b97f4a7c15ULL ^ m.w[1]);
    }
};

} // namespace

long SubgroupClassTable::class_of(const std::vector<long>& elems) const {
    Mask m = mask_of(elems);
    for (size_t i = 0; i < classes.size(); ++i) {
        if (classes[i].rep.size() != static_cast<long>(elems.size())) continue;
        for (const Mask& o : classes[i].orbit)
            if (o == m) return static_cast<long>(i);
    }
    fail(Err::NotASubgroup, "element set is not a subgroup of this group");
}

SubgroupClassTable subgroup_classes(const GroupPtr& g) {
    require(g->order() <= 128, Err::GroupTooLarge,
            "subgroup enumeration is limited to order <= 128");
    long n = g->order();
    long p = g->prime();

    struct Entry {
        std::vector<long> elems;
        std::vector<Mask> orbit;
        std::vector<long> normalizer;
    };

    auto close_class = [&](const std::vector<long>& elems) {
        Entry e;
        std::set<std::vector<long>> orbit_lists;
        std::vector<long> nrm;
        for (long x = 0; x < n; ++x) {
            auto conj = conjugate_subgroup(g, elems, x);
            if (conj == elems) nrm.push_back(x);
            orbit_lists.insert(std::move(conj));
        }
        e.elems = *orbit_lists.begin(); // lexicographically least conjugate
        if (e.elems != elems) {
            // Recompute the normalizer for the canonical representative.
            nrm.clear();
            for (long x = 0; x < n; ++x)
                if (conjugate_subgroup(g, e.elems, x) == e.elems) nrm.push_back(x);
        }
        for (const auto& l : orbit_lists) e.orbit.push_back(mask_of(l));
        e.normalizer = std::move(nrm);
        return e;
    };

    std::vector<Entry> classes;
    std::unordered_map<Mask, long, MaskHash> seen; // any conjugate mask -> class id
    auto add_class = [&](const std::vector<long>& elems) -> bool {
        if (seen.count(mask_of(elems))) return false;
        Entry e = close_class(elems);
        long id = static_cast<long>(classes.size());
        for (const Mask& m : e.orbit) seen.emplace(m, id);
        classes.push_back(std::move(e));
        return true;
    };

    add_class({0});
    size_t level_begin = 0;
    while (level_begin < classes.size()) {
        size_t level_end = classes.size();
        for (size_t ci = level_begin; ci < level_end; ++ci) {
            // Copies: classes may reallocate while we extend.
            std::vector<long> h = classes[ci].elems;
            std::vector<long> nrm = classes[ci].normalizer;
            Mask hm = mask_of(h);
            for (long x : nrm) {
                if (hm.test(x)) continue;
                // x H generates an order-p extension iff x^p lies in H.
                if (!hm.test(g->pow(x, p))) continue;
                std::vector<long> ext = h;
                ext.push_back(x);
                add_class(generated_subgroup(g, ext).elems);
            }
        }
        level_begin = level_end;
    }

    std::vector<long> order(classes.size());
    for (size_t i = 0; i < classes.size(); ++i) order[i] = static_cast<long>(i);
    std::sort(order.begin(), order.end(), [&](long a, long b) {
        const auto& ea = classes[static_cast<size_t>(a)].elems;
        const auto& eb = classes[static_cast<size_t>(b)].elems;
        if (ea.size() != eb.size()) return ea.size() < eb.size();
        return ea < eb;
    });

    SubgroupClassTable out;
    out.group = g;
    out.classes.reserve(classes.size());
    for (long i : order) {
        Entry& e = classes[static_cast<size_t>(i)];
        SubgroupClass c;
        c.rep = Subgroup{g, std::move(e.elems)};
        c.orbit = std::move(e.orbit);
        std::sort(c.orbit.begin(), c.orbit.end(), mask_list_less);
        c.normalizer = Subgroup{g, std::move(e.normalizer)};
        out.classes.push_back(std::move(c));
    }
    return out;
}

Subquotient make_subquotient(const Subgroup& h, const std::vector<long>& k_elems) {
    EmbeddedGroup hg = subgroup_as_group(h);
    std::vector<long> pos(static_cast<size_t>(h.parent->order()), -1);
    for (size_t i = 0; i < hg.to_parent.size(); ++i)
        pos[static_cast<size_t>(hg.to_parent[i])] = static_cast<long>(i);

    std::vector<long> k_in_h;
    for (long e : k_elems) {
        require(pos[static_cast<size_t>(e)] >= 0, Err::NotASubgroup, "K is not inside H");
        k_in_h.push_back(pos[static_cast<size_t>(e)]);
    }
    std::sort(k_in_h.begin(), k_in_h.end());
    Quotient q = quotient(hg.group, Subgroup{hg.group, k_in_h});

    Subquotient out;
    out.H = h;
    out.K = Subgroup{h.parent, k_elems};
    std::sort(out.K.elems.begin(), out.K.elems.end());
    out.group = q.group;
    out.proj.assign(static_cast<size_t>(h.parent->order()), -1);
    for (size_t i = 0; i < hg.to_parent.size(); ++i)
        out.proj[static_cast<size_t>(hg.to_parent[i])] = q.proj[i];
    return out;
}

} // namespace pglab
