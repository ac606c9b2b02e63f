#include "pglab/genotype.hpp"

#include "pglab/errors.hpp"

#include <algorithm>
#include <map>

namespace pglab {

TightnessReport is_tight_induction(const ClassesPtr& g_cls, const Character& psi,
                                   const Subgroup& h, const std::vector<long>& k_elems,
                                   const Character& phi_on_quotient) {
    Subquotient sq = make_subquotient(h, k_elems);
    TightnessReport rep;
    Character ind = induce(g_cls, sq, phi_on_quotient);
    rep.induced_ok = ind == psi;
    rep.narrow = character_field(psi) == character_field(phi_on_quotient);
    return rep;
}

Subgroup find_normal_E(const GroupPtr& g) {
    Subgroup z = center(g);
    require(is_cyclic_subgroup(z), Err::NoSuchSubgroup,
            "no faithful irreducible exists: center is not cyclic");
    require(!is_roquette(g), Err::NoSuchSubgroup, "group is Roquette");

    long p = g->prime();
    // Z: the order-p subgroup of the cyclic center.
    long zgen = 0;
    for (long e : z.elems)
        if (g->element_order(e) == p) { zgen = e; break; }
    Subgroup zp = generated_subgroup(g, {zgen});

    std::vector<Subgroup> candidates = normal_rank2_elementary(g);
    for (const Subgroup& e : candidates) {
        // E must meet the center exactly in Z and have E/Z central mod Z.
        std::vector<long> meet;
        for (long x : e.elems)
            if (z.contains(x)) meet.push_back(x);
        if (static_cast<long>(meet.size()) != p) continue;
        if (meet != zp.elems) continue;
        bool central_mod_z = true;
        for (long x : e.elems) {
            for (long y = 0; y < g->order() && central_mod_z; ++y) {
                long comm = g->mul(g->mul(g->inv(x), g->inv(y)), g->mul(x, y));
                central_mod_z = zp.contains(comm);
            }
            if (!central_mod_z) break;
        }
        if (central_mod_z) return e; // candidates are sorted by element list
    }
    fail(Err::NoSuchSubgroup, "no Lemma-4.2 subgroup found (internal error)");
}

namespace {

struct ReductionState {
    std::vector<long> h_elems; // subgroup of the original group
    std::vector<long> k_elems; // normal subgroup of H
    Subquotient sq;            // H/K with projection from original ids
    ClassesPtr q_cls;
    Character psi;             // faithful character of H/K
};

// Pulls a subset of H/K back to original-group element ids.
std::vector<long> preimage(const ReductionState& st, const std::vector<long>& q_elems) {
    Mask qm = mask_of(q_elems);
    std::vector<long> out;
    for (long e : st.h_elems)
        if (qm.test(st.sq.proj[static_cast<size_t>(e)])) out.push_back(e);
    return out;
}

} // namespace

GeneticChain genetic_reduction(const ClassesPtr& g_cls, const Character& psi_orig) {
    const GroupPtr& g = g_cls->group;

    GeneticChain chain;
    ReductionState st;
    st.h_elems = whole_group(g).elems;
    st.k_elems = character_kernel(psi_orig).elems;
    st.sq = make_subquotient(Subgroup{g, st.h_elems}, st.k_elems);
    st.q_cls = classes_of(st.sq.group);
    {
        // Deflate psi to G/Ker(psi).
        std::vector<long> pre(static_cast<size_t>(st.sq.group->order()), -1);
        for (long e : st.h_elems) {
            long q = st.sq.proj[static_cast<size_t>(e)];
            if (pre[static_cast<size_t>(q)] < 0) pre[static_cast<size_t>(q)] = e;
        }
        std::vector<CycNum> vals;
        for (long rep : st.q_cls->reps)
            vals.push_back(psi_orig.value_at(pre[static_cast<size_t>(rep)]));
        st.psi = Character(st.q_cls, std::move(vals));
    }

    while (!is_roquette(st.sq.group)) {
        Subgroup e_q = find_normal_E(st.sq.group);
        Subgroup t_q = centralizer(st.sq.group, e_q);
        require(t_q.size() * st.sq.group->prime() == st.sq.group->order(), Err::NoSuchSubgroup,
                "centralizer of E is not maximal (internal error)");

        // Smallest-index irreducible constituent of the restriction to T.
        EmbeddedGroup t_emb = subgroup_as_group(t_q);
        CharacterTable t_table = character_table(t_emb.group);
        Character res = restrict_to(st.psi, t_emb, t_table.cls);
        long chosen = -1;
        for (size_t i = 0; i < t_table.irreps.size(); ++i) {
            if (inner_product(res, t_table.irreps[i]) != 0) { chosen = static_cast<long>(i); break; }
        }
        require(chosen >= 0, Err::NoSuchSubgroup, "restriction has no constituent");
        const Character& phi = t_table.irreps[static_cast<size_t>(chosen)];

        // Tightness of this step inside the current subquotient (Lemma 4.2).
        Subgroup phi_ker = character_kernel(phi);
        std::vector<long> phi_ker_in_q;
        for (long i : phi_ker.elems) phi_ker_in_q.push_back(t_emb.to_parent[static_cast<size_t>(i)]);
        std::sort(phi_ker_in_q.begin(), phi_ker_in_q.end());
        {
            Subquotient tq_sq = make_subquotient(t_q, phi_ker_in_q);
            ClassesPtr tq_cls = classes_of(tq_sq.group);
            Character germ_step = deflate(phi, t_emb, tq_sq, tq_cls);
            TightnessReport tr = is_tight_induction(st.q_cls, st.psi, t_q, phi_ker_in_q, germ_step);
            require(tr.tight(), Err::DualPathMismatch,
                    "Lemma-4.2 step is not a tight induction (internal error)");
        }

        GeneticStep step;
        step.e_elems = preimage(st, e_q.elems);
        step.t_elems = preimage(st, t_q.elems);
        step.constituent_index = chosen;

        // Descend: H := preimage of T, K := preimage of Ker(phi).
        ReductionState next;
        next.h_elems = step.t_elems;
        next.k_elems = preimage(st, phi_ker_in_q);
        step.new_kernel = next.k_elems;
        next.sq = make_subquotient(Subgroup{g, next.h_elems}, next.k_elems);
        next.q_cls = classes_of(next.sq.group);
        {
            std::vector<long> pre(static_cast<size_t>(next.sq.group->order()), -1);
            for (long e : next.h_elems) {
                long q = next.sq.proj[static_cast<size_t>(e)];
                if (pre[static_cast<size_t>(q)] < 0) pre[static_cast<size_t>(q)] = e;
            }
            // Value of phi at a parent element: through the T-embedding.
            std::vector<long> pos_in_t(static_cast<size_t>(st.sq.group->order()), -1);
            for (size_t i = 0; i < t_emb.to_parent.size(); ++i)
                pos_in_t[static_cast<size_t>(t_emb.to_parent[i])] = static_cast<long>(i);
            std::vector<CycNum> vals;
            for (long rep : next.q_cls->reps) {
                long orig = pre[static_cast<size_t>(rep)];
                long in_q = st.sq.proj[static_cast<size_t>(orig)];
                vals.push_back(phi.value_at(pos_in_t[static_cast<size_t>(in_q)]));
            }
            next.psi = Character(next.q_cls, std::move(vals));
        }

        chain.steps.push_back(std::move(step));
        st = std::move(next);
    }

    // Terminal: H/K is Roquette and psi is faithful on it.
    require(character_kernel(st.psi).size() == 1, Err::NoSuchSubgroup,
            "terminal germ is not faithful (internal error)");
    chain.h_elems = st.h_elems;
    chain.k_elems = st.k_elems;
    chain.tag = roquette_iso_type(st.sq.group);
    chain.terminal = st.sq;
    chain.germ = st.psi;

    // Corollary 4.4 bound and the exact recomposition check.
    long index = g->order() / static_cast<long>(chain.h_elems.size());
    require(index <= static_cast<long>(chain.k_elems.size()), Err::CountMismatch,
            "terminal |G:H| exceeds |K|");
    TightnessReport tr =
        is_tight_induction(g_cls, psi_orig, Subgroup{g, chain.h_elems}, chain.k_elems, chain.germ);
    require(tr.induced_ok, Err::DualPathMismatch, "chain recomposition does not reproduce psi");
    require(tr.tight(), Err::DualPathMismatch, "terminal induction is not tight");
    return chain;
}

RoquetteTag genotype_via_invariants(const IrrepInvariants& inv, long p) {
    if (inv.v == 1) {
        if (inv.trivial) return RoquetteTag(Family::C, 1);
        if (inv.fs == 1) return RoquetteTag(Family::C, 2);
        if (inv.fs == -1) return RoquetteTag(Family::Q, 8);
        fail(Err::ClassificationInconsistency, "v = 1 with fs = 0");
    }
    if (p != 2) {
        // v = p^m - p^{m-1}; irrep_invariants already pinned n_psi = p^m.
        return RoquetteTag(Family::C, inv.n_psi);
    }
    long v = inv.v;
    if (inv.fs == -1) return RoquetteTag(Family::Q, 8 * v);
    if (inv.fs == 1) return RoquetteTag(Family::D, 8 * v);
    if (inv.vertex_field.conductor == 2 * v) return RoquetteTag(Family::C, 2 * v);
    if (inv.vertex_field.conductor == 4 * v) return RoquetteTag(Family::SD, 8 * v);
    fail(Err::ClassificationInconsistency, "fs = 0 class matches no row");
}

RoquetteTag genotype(const CharacterTable& table, const GaloisOrbit& orbit,
                     const IrrepInvariants& inv) {
    RoquetteTag by_invariants = genotype_via_invariants(inv, table.cls->group->prime());
    GeneticChain chain = genetic_reduction(
        table.cls, table.irreps[static_cast<size_t>(orbit.representative())]);
    require(by_invariants == chain.tag, Err::DualPathMismatch,
            "classifier says " + by_invariants.str() + ", reduction says " + chain.tag.str());
    return by_invariants;
}

std::vector<std::pair<RoquetteTag, long>> genotype_census(const CharacterTable& table) {
    std::map<RoquetteTag, long> counts;
    for (const GaloisOrbit& orb : galois_orbits(table)) {
        IrrepInvariants inv = irrep_invariants(table, orb);
        counts[genotype(table, orb, inv)] += 1;
    }
    return {counts.begin(), counts.end()};
}

long exhaustive_genetic_check(const ClassesPtr& g_cls, const SubgroupClassTable& lattice,
                              const Character& psi, const RoquetteTag& expected) {
    long witnesses = 0;
    for (const SubgroupClass& sc : lattice.classes) {
        const Subgroup& h = sc.rep;
        EmbeddedGroup h_emb = subgroup_as_group(h);
        SubgroupClassTable h_lattice = subgroup_classes(h_emb.group);
        for (const SubgroupClass& ksc : h_lattice.classes) {
            // K must be normal in H.
            if (!is_normal(Subgroup{h_emb.group, ksc.rep.elems})) continue;
            std::vector<long> k_elems;
            for (long i : ksc.rep.elems) k_elems.push_back(h_emb.to_parent[static_cast<size_t>(i)]);
            std::sort(k_elems.begin(), k_elems.end());
            Subquotient sq = make_subquotient(h, k_elems);
            if (!is_roquette(sq.group)) continue;
            CharacterTable q_table = character_table(sq.group);
            for (const Character& phi : q_table.irreps) {
                if (character_kernel(phi).size() != 1) continue; // germ must be faithful
                TightnessReport tr = is_tight_induction(g_cls, psi, h, k_elems, phi);
                if (!tr.tight()) continue;
                RoquetteTag tag = roquette_iso_type(sq.group);
                require(tag == expected, Err::DualPathMismatch,
                        "exhaustive witness " + tag.str() + " != " + expected.str());
                ++witnesses;
            }
        }
    }
    require(witnesses >= 1, Err::DualPathMismatch, "no genetic subquotient found exhaustively");
    return witnesses;
}

} // namespace pglab
