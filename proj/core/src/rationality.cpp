#include "pglab/rationality.hpp"

#include "pglab/errors.hpp"

#include <algorithm>
#include <map>

namespace pglab {

std::vector<long> power_class_map(const ConjClasses& cls, long k) {
    std::vector<long> out;
    out.reserve(cls.reps.size());
    for (long rep : cls.reps)
        out.push_back(cls.class_of[static_cast<size_t>(cls.group->pow(rep, k))]);
    return out;
}

namespace {

// Index of the irrep whose values are psi composed with the k-power map.
long apply_sigma(const CharacterTable& table, const std::map<std::vector<CycNum>, long>& index,
                 long irrep, const std::vector<long>& pmap) {
    const auto& vals = table.irreps[static_cast<size_t>(irrep)].values();
    std::vector<CycNum> moved;
    moved.reserve(vals.size());
    for (long c : pmap) moved.push_back(vals[static_cast<size_t>(c)]);
    auto it = index.find(moved);
    require(it != index.end(), Err::IncompleteTable,
            "Galois conjugate of an irreducible is missing from the table");
    return it->second;
}

} // namespace

std::vector<GaloisOrbit> galois_orbits(const CharacterTable& table) {
    const ConjClasses& cls = *table.cls;
    long n = cls.group->exponent();
    std::vector<long> units = units_mod(n);

    std::map<std::vector<CycNum>, long> index;
    for (size_t i = 0; i < table.irreps.size(); ++i)
        index.emplace(table.irreps[i].values(), static_cast<long>(i));

    std::vector<std::vector<long>> pmaps;
    pmaps.reserve(units.size());
    for (long k : units) pmaps.push_back(power_class_map(cls, k));

    std::vector<char> seen(table.irreps.size(), 0);
    std::vector<GaloisOrbit> orbits;
    for (size_t i = 0; i < table.irreps.size(); ++i) {
        if (seen[i]) continue;
        GaloisOrbit orb;
        std::vector<long> members;
        for (size_t ui = 0; ui < units.size(); ++ui) {
            long j = apply_sigma(table, index, static_cast<long>(i), pmaps[ui]);
            members.push_back(j);
            if (j == static_cast<long>(i)) orb.stabilizer.push_back(units[ui]);
        }
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        orb.members = std::move(members);
        for (long j : orb.members) seen[static_cast<size_t>(j)] = 1;
        orbits.push_back(std::move(orb));
    }
    std::sort(orbits.begin(), orbits.end(),
              [](const GaloisOrbit& a, const GaloisOrbit& b) { return a.members[0] < b.members[0]; });
    return orbits;
}

namespace {

// Theorem-row filler: everything past (v, fs, vertex field) is pinned by the
// classification of genotypes.
void fill_row_fields(IrrepInvariants& inv, long p) {
    const FieldHandle& V = inv.vertex_field;
    long v = inv.v;

    auto inconsistent = [&](const std::string& why) {
        fail(Err::ClassificationInconsistency,
             "(v=" + std::to_string(v) + ", fs=" + std::to_string(inv.fs) +
                 ", conductor=" + std::to_string(V.conductor) + "): " + why);
    };

    if (v == 1) {
        if (V.degree != 1) inconsistent("v = 1 but the vertex field is not Q");
        if (inv.fs == 0) inconsistent("rational character values are real, fs = 0 impossible");
        if (inv.fs == 1) {
            inv.m = 1;
            inv.n_psi = 1;
            inv.fein = rational_field();
            inv.min_splitting = {rational_field()};
        } else {
            // Quaternion Q8 row, continued from the Q_{8v} pattern at v = 1.
            inv.m = 2;
            inv.n_psi = 4;
            inv.fein = cyclotomic_field(4);
            inv.min_splitting = {cyclotomic_field(4), imaginary_subfield(8)};
        }
        return;
    }

    if (p != 2) {
        if (inv.fs != 0) inconsistent("odd p with v > 1 must have fs = 0");
        // v = p^m - p^{m-1} determines p^m.
        long pm = 0;
        for (long cand = p; cand <= (1L << 30); cand *= p) {
            if (cand - cand / p == v) { pm = cand; break; }
            if (cand - cand / p > v) break;
        }
        if (pm == 0) inconsistent("order is not phi(p^m) for any m");
        if (!(V.conductor == pm && V.degree == v)) inconsistent("vertex field is not Q_{p^m}");
        inv.m = 1;
        inv.n_psi = pm;
        inv.fein = cyclotomic_field(pm);
        inv.min_splitting = {inv.fein};
        return;
    }

    // p = 2, v >= 2 a power of 2.
    if (prime_of(v) != 2 && v != 1) inconsistent("order is not a power of 2");
    long two_v = 2 * v, four_v = 4 * v, eight_v = 8 * v;
    if (inv.fs == -1) {
        if (V != real_subfield(four_v)) inconsistent("quaternionic class needs V = Q_{4v}^R");
        inv.m = 2;
        inv.n_psi = four_v;
        inv.fein = cyclotomic_field(four_v);
        inv.min_splitting = {cyclotomic_field(four_v), imaginary_subfield(eight_v)};
    } else if (inv.fs == 1) {
        if (V != real_subfield(four_v)) inconsistent("dihedral class needs V = Q_{4v}^R");
        inv.m = 1;
        inv.n_psi = four_v;
        inv.fein = real_subfield(four_v);
        inv.min_splitting = {inv.fein};
    } else if (V.conductor == two_v) {
        if (V != cyclotomic_field(two_v)) inconsistent("fs = 0 at conductor 2v needs V = Q_{2v}");
        inv.m = 1;
        inv.n_psi = two_v;
        inv.fein = cyclotomic_field(two_v);
        inv.min_splitting = {inv.fein};
    } else if (V.conductor == four_v) {
        if (V != imaginary_subfield(four_v)) inconsistent("fs = 0 at conductor 4v needs V = Q_{4v}^I");
        inv.m = 1;
        inv.n_psi = four_v;
        inv.fein = imaginary_subfield(four_v);
        inv.min_splitting = {inv.fein};
    } else {
        inconsistent("fs = 0 with conductor matching neither 2v nor 4v");
    }
}

} // namespace

IrrepInvariants irrep_invariants(const CharacterTable& table, const GaloisOrbit& orbit) {
    const ConjClasses& cls = *table.cls;
    long n = cls.group->exponent();

    IrrepInvariants inv;
    inv.v = orbit.size();
    inv.vertex_stab = orbit.stabilizer;
    inv.vertex_field = stabilizer_field(n, orbit.stabilizer);
    require(inv.vertex_field.degree == inv.v, Err::ClassificationInconsistency,
            "orbit size disagrees with the vertex field degree");

    const Character& rep = table.irreps[static_cast<size_t>(orbit.representative())];
    inv.trivial = rep == trivial_character(table.cls);
    inv.fs = frobenius_schur(rep);
    inv.fs_type = inv.fs == 1 ? 'R' : (inv.fs == 0 ? 'C' : 'H');
    fill_row_fields(inv, cls.group->prime());
    return inv;
}

Character rational_character(const CharacterTable& table, const GaloisOrbit& orbit,
                             const IrrepInvariants& inv) {
    Character sum(table.cls, std::vector<CycNum>(table.cls->classes.size(), CycNum(0)));
    for (long j : orbit.members) sum = sum + table.irreps[static_cast<size_t>(j)];
    sum = sum * inv.m;
    for (const CycNum& v : sum.values())
        require(v.is_integer(), Err::NonIntegral, "rational character has a non-integer value");
    return sum;
}

std::vector<std::vector<long>> irreps_over_subfield(const CharacterTable& table,
                                                    const GaloisOrbit& orbit,
                                                    const std::vector<long>& s) {
    const ConjClasses& cls = *table.cls;
    long n = cls.group->exponent();
    require(is_unit_subgroup(n, s), Err::NotASubgroup,
            "not a subgroup of (Z/" + std::to_string(n) + ")^x");

    std::map<std::vector<CycNum>, long> index;
    for (long j : orbit.members)
        index.emplace(table.irreps[static_cast<size_t>(j)].values(), j);

    std::vector<std::vector<long>> blocks;
    std::vector<char> seen(table.irreps.size(), 0);
    for (long j : orbit.members) {
        if (seen[static_cast<size_t>(j)]) continue;
        std::vector<long> block;
        for (long k : s) {
            auto pmap = power_class_map(cls, k);
            long img = apply_sigma(table, index, j, pmap);
            if (!seen[static_cast<size_t>(img)]) {
                seen[static_cast<size_t>(img)] = 1;
                block.push_back(img);
            }
        }
        std::sort(block.begin(), block.end());
        blocks.push_back(std::move(block));
    }
    return blocks;
}

FieldHandle character_field(const Character& chi) {
    const ConjClasses& cls = *chi.classes();
    long n = cls.group->exponent();
    std::vector<long> stab;
    for (long k : units_mod(n)) {
        auto pmap = power_class_map(cls, k);
        bool fixes = true;
        for (size_t c = 0; c < pmap.size() && fixes; ++c)
            fixes = chi.values()[static_cast<size_t>(pmap[c])] == chi.values()[c];
        if (fixes) stab.push_back(k);
    }
    return stabilizer_field(n, stab);
}

} // namespace pglab
