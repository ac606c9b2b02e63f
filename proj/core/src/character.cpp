#include "pglab/character.hpp"

#include "pglab/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace pglab {

ClassesPtr classes_of(const GroupPtr& g) {
    return std::make_shared<const ConjClasses>(conjugacy_classes(g));
}

long Character::degree() const {
    const CycNum& v = values_[0];
    require(v.is_integer(), Err::NonIntegral, "character degree is not an integer");
    return to_i64(v.rational_value());
}

Character Character::operator+(const Character& o) const {
    std::vector<CycNum> v = values_;
    for (size_t i = 0; i < v.size(); ++i) v[i] += o.values_[i];
    return Character(cls_, std::move(v));
}

Character Character::operator*(long k) const {
    std::vector<CycNum> v = values_;
    for (auto& x : v) x = x * Rational(k);
    return Character(cls_, std::move(v));
}

bool Character::is_zero() const {
    return std::all_of(values_.begin(), values_.end(), [](const CycNum& v) { return v.is_zero(); });
}

Character trivial_character(const ClassesPtr& cls) {
    return Character(cls, std::vector<CycNum>(cls->classes.size(), CycNum(1)));
}

Character conjugate_character(const Character& chi) {
    std::vector<CycNum> v;
    v.reserve(chi.values().size());
    for (const auto& x : chi.values()) v.push_back(conjugate(x));
    return Character(chi.classes(), std::move(v));
}

std::vector<Character> linear_characters(const ClassesPtr& cls) {
    const GroupPtr& g = cls->group;
    Subgroup derived = derived_subgroup(g);
    Quotient ab = quotient(g, derived);
    const GroupPtr& a = ab.group;
    long n = a->order();
    long N = std::max<long>(a->exponent(), 1);

    // Exponent maps e : A -> Z/N with chi(x) = zeta_N^{e(x)}, built by
    // extending along a chain of cyclic steps.
    std::vector<std::vector<long>> chars{std::vector<long>(static_cast<size_t>(n), 0)};
    std::vector<char> in_span(static_cast<size_t>(n), 0);
    std::vector<long> span{0};
    in_span[0] = 1;

    while (static_cast<long>(span.size()) < n) {
        long gen = 0;
        while (in_span[static_cast<size_t>(gen)]) ++gen;
        // Least d with gen^d in the current span; a p-power.
        long d = 1, x = gen;
        while (!in_span[static_cast<size_t>(x)]) {
            x = a->mul(x, gen);
            ++d;
        }
        std::vector<std::vector<long>> next;
        next.reserve(chars.size() * static_cast<size_t>(d));
        std::vector<long> new_span;
        for (const auto& e : chars) {
            long c = e[static_cast<size_t>(a->pow(gen, d))];
            require(c % d == 0, Err::NonIntegral, "abelian character extension failed");
            for (long k = 0; k < d; ++k) {
                long w = (c / d + k * (N / d)) % N;
                std::vector<long> e2 = e;
                long pw = 0;
                for (long i = 0; i < d; ++i) {
                    for (long s : span) {
                        long idx = a->mul(s, pw);
                        e2[static_cast<size_t>(idx)] = (e[static_cast<size_t>(s)] + i * w) % N;
                        if (next.empty() && k == 0) {
                            // Collect the enlarged span once.
                            if (!in_span[static_cast<size_t>(idx)]) new_span.push_back(idx);
                        }
                    }
                    pw = a->mul(pw, gen);
                }
                next.push_back(std::move(e2));
            }
        }
        for (long idx : new_span) in_span[static_cast<size_t>(idx)] = 1;
        span.insert(span.end(), new_span.begin(), new_span.end());
        chars = std::move(next);
    }

    std::vector<Character> out;
    out.reserve(chars.size());
    for (const auto& e : chars) {
        std::vector<CycNum> vals;
        vals.reserve(cls->classes.size());
        for (long rep : cls->reps)
            vals.push_back(CycNum::root_of_unity(N, e[static_cast<size_t>(ab.proj[static_cast<size_t>(rep)])]));
        out.emplace_back(cls, std::move(vals));
    }
    std::sort(out.begin(), out.end(),
              [](const Character& x, const Character& y) { return x.values() < y.values(); });
    return out;
}

Character induce(const ClassesPtr& g_cls, const std::vector<long>& h_elems,
                 const std::function<const CycNum&(long)>& phi_at_parent) {
    const GroupPtr& g = g_cls->group;
    Mask hm = mask_of(h_elems);
    Rational scale(1, static_cast<long>(h_elems.size()));
    std::vector<CycNum> vals;
    vals.reserve(g_cls->classes.size());
    for (long rep : g_cls->reps) {
        CycNum sum;
        for (long x = 0; x < g->order(); ++x) {
            long y = g->conj(rep, x);
            if (hm.test(y)) sum += phi_at_parent(y);
        }
        vals.push_back(sum * scale);
    }
    return Character(g_cls, std::move(vals));
}

Character induce(const ClassesPtr& g_cls, const EmbeddedGroup& h, const Character& phi) {
    std::vector<long> pos(static_cast<size_t>(g_cls->group->order()), -1);
    for (size_t i = 0; i < h.to_parent.size(); ++i)
        pos[static_cast<size_t>(h.to_parent[i])] = static_cast<long>(i);
    return induce(g_cls, h.to_parent, [&](long y) -> const CycNum& {
        return phi.value_at(pos[static_cast<size_t>(y)]);
    });
}

Character induce(const ClassesPtr& g_cls, const Subquotient& sq, const Character& phi) {
    return induce(g_cls, sq.H.elems, [&](long y) -> const CycNum& {
        return phi.value_at(sq.proj[static_cast<size_t>(y)]);
    });
}

Character restrict_to(const Character& psi, const EmbeddedGroup& h, const ClassesPtr& h_cls) {
    std::vector<CycNum> vals;
    vals.reserve(h_cls->classes.size());
    for (long rep : h_cls->reps)
        vals.push_back(psi.value_at(h.to_parent[static_cast<size_t>(rep)]));
    return Character(h_cls, std::move(vals));
}

Character deflate(const Character& phi_on_h, const EmbeddedGroup& h, const Subquotient& sq,
                  const ClassesPtr& q_cls) {
    // phi must be constant on K-cosets; pick any preimage of each class rep.
    std::vector<long> pre(static_cast<size_t>(sq.group->order()), -1);
    for (size_t i = 0; i < h.to_parent.size(); ++i) {
        long q = sq.proj[static_cast<size_t>(h.to_parent[i])];
        if (pre[static_cast<size_t>(q)] < 0) pre[static_cast<size_t>(q)] = static_cast<long>(i);
    }
    std::vector<CycNum> vals;
    vals.reserve(q_cls->classes.size());
    for (long rep : q_cls->reps)
        vals.push_back(phi_on_h.value_at(pre[static_cast<size_t>(rep)]));
    return Character(q_cls, std::move(vals));
}

Rational inner_product(const Character& a, const Character& b) {
    const ConjClasses& cls = *a.classes();
    CycNum sum;
    for (size_t c = 0; c < cls.classes.size(); ++c) {
        CycNum term = a.values()[c] * conjugate(b.values()[c]);
        sum += term * Rational(static_cast<long>(cls.classes[c].size()));
    }
    sum = sum / Rational(cls.group->order());
    require(sum.is_rational(), Err::NonIntegral, "inner product is not rational");
    return sum.rational_value();
}

long fixed_point_dim(const Character& psi, const Subgroup& h) {
    CycNum sum;
    for (long e : h.elems) sum += psi.value_at(e);
    sum = sum / Rational(h.size());
    require(sum.is_integer(), Err::NonIntegerMultiplicity,
            "trivial-constituent multiplicity is not an integer");
    long d = to_i64(sum.rational_value());
    require(d >= 0, Err::NonIntegerMultiplicity, "negative fixed-point dimension");
    return d;
}

Subgroup character_kernel(const Character& psi) {
    const ConjClasses& cls = *psi.classes();
    std::vector<long> elems;
    const CycNum& deg = psi.values()[0];
    for (size_t c = 0; c < cls.classes.size(); ++c) {
        if (psi.values()[c] == deg)
            elems.insert(elems.end(), cls.classes[c].begin(), cls.classes[c].end());
    }
    std::sort(elems.begin(), elems.end());
    return Subgroup{cls.group, std::move(elems)};
}

Rational frobenius_schur_raw(const Character& chi) {
    const ConjClasses& cls = *chi.classes();
    const GroupPtr& g = cls.group;
    CycNum sum;
    for (long a = 0; a < g->order(); ++a) sum += chi.value_at(g->mul(a, a));
    sum = sum / Rational(g->order());
    require(sum.is_rational(), Err::NonIntegral, "indicator sum is not rational");
    return sum.rational_value();
}

int frobenius_schur(const Character& psi) {
    Rational fs = frobenius_schur_raw(psi);
    require(is_integer(fs), Err::NonIntegral, "Frobenius-Schur indicator is not an integer");
    long v = to_i64(fs);
    require(v >= -1 && v <= 1, Err::NonIntegral,
            "indicator of an irreducible must lie in {-1,0,1}");
    return static_cast<int>(v);
}

CharacterTable character_table(const GroupPtr& g) {
    require(g->order() <= 128, Err::GroupTooLarge, "character tables limited to order <= 128");
    ClassesPtr cls = classes_of(g);
    SubgroupClassTable lattice = subgroup_classes(g);
    return character_table(cls, lattice);
}

CharacterTable character_table(const ClassesPtr& cls, const SubgroupClassTable& lattice) {
    const GroupPtr& g = cls->group;
    long order = g->order();

    std::map<std::vector<CycNum>, Character> found;
    long sum_sq = 0;

    // Largest subgroups first; an irreducible of a p-group has degree at
    // most sqrt(|G|), so subgroups of larger index cannot contribute.
    for (long ci = lattice.size() - 1; ci >= 0 && sum_sq < order; --ci) {
        const SubgroupClass& sc = lattice.classes[static_cast<size_t>(ci)];
        long index = order / sc.rep.size();
        if (index * index > order) continue;
        EmbeddedGroup h = subgroup_as_group(sc.rep);
        ClassesPtr h_cls = classes_of(h.group);
        for (const Character& lam : linear_characters(h_cls)) {
            Character ind = induce(cls, h, lam);
            if (inner_product(ind, ind) != 1) continue;
            if (found.emplace(ind.values(), ind).second) {
                long d = ind.degree();
                sum_sq += d * d;
                if (sum_sq == order) break;
            }
        }
    }
    require(sum_sq == order, Err::IncompleteTable, "monomial search did not complete the table");
    require(found.size() == cls->classes.size(), Err::IncompleteTable,
            "irreducible count does not match class count");

    CharacterTable table;
    table.cls = cls;
    Character triv = trivial_character(cls);
    table.irreps.push_back(triv);
    std::vector<Character> rest;
    for (auto& [vals, chi] : found) {
        if (chi == triv) continue;
        rest.push_back(std::move(chi));
    }
    std::sort(rest.begin(), rest.end(), [](const Character& x, const Character& y) {
        if (x.values()[0] != y.values()[0]) return x.values()[0] < y.values()[0];
        return x.values() < y.values();
    });
    for (auto& chi : rest) table.irreps.push_back(std::move(chi));

    for (const Character& chi : table.irreps) {
        long d = chi.degree();
        long p = g->prime();
        bool ppow = d >= 1;
        long dd = d;
        while (dd % p == 0) dd /= p;
        ppow = ppow && dd == 1;
        require(ppow, Err::IncompleteTable, "irreducible degree is not a power of p");
    }
    return table;
}

std::vector<long> decompose(const Character& psi, const CharacterTable& table) {
    std::vector<long> mult;
    mult.reserve(table.irreps.size());
    for (const Character& chi : table.irreps) {
        Rational m = inner_product(psi, chi);
        require(is_integer(m), Err::NonIntegerMultiplicity, "non-integer multiplicity");
        mult.push_back(to_i64(m));
    }
    return mult;
}

} // namespace pglab
