#include "pglab/group.hpp"

#include "pglab/cyclotomic.hpp"
#include "pglab/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace pglab {

namespace {

bool is_power_of(long n, long p) {
    if (n < 1) return false;
    while (n % p == 0) n /= p;
    return n == 1;
}

std::vector<std::string> default_labels(long n) {
    std::vector<std::string> out(static_cast<size_t>(n));
    out[0] = "1";
    for (long i = 1; i < n; ++i) out[static_cast<size_t>(i)] = "g" + std::to_string(i);
    return out;
}

} // namespace

long FiniteGroup::pow(long g, long k) const {
    long ord = elt_order_[static_cast<size_t>(g)];
    k %= ord;
    if (k < 0) k += ord;
    long acc = 0;
    long base = g;
    while (k > 0) {
        if (k & 1) acc = mul(acc, base);
        base = mul(base, base);
        k >>= 1;
    }
    return acc;
}

bool FiniteGroup::is_abelian() const {
    for (long a = 0; a < order_; ++a)
        for (long b = a + 1; b < order_; ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

bool FiniteGroup::is_cyclic() const {
    return std::any_of(elt_order_.begin(), elt_order_.end(),
                       [this](long o) { return o == order_; });
}

GroupPtr build_group(const std::vector<std::vector<long>>& mul, long p,
                     std::vector<std::string> labels) {
    long n = static_cast<long>(mul.size());
    require(n >= 1, Err::NoIdentity, "empty multiplication table");
    require(is_prime(p), Err::OrderNotPPower, std::to_string(p) + " is not prime");
    require(is_power_of(n, p) || n == 1, Err::OrderNotPPower,
            "order " + std::to_string(n) + " is not a power of " + std::to_string(p));

    auto g = std::make_shared<FiniteGroup>();
    g->order_ = n;
    g->p_ = p;
    g->mul_.resize(static_cast<size_t>(n * n));
    for (long a = 0; a < n; ++a) {
        require(static_cast<long>(mul[static_cast<size_t>(a)].size()) == n, Err::NotAssociative,
                "table is not square");
        for (long b = 0; b < n; ++b) {
            long v = mul[static_cast<size_t>(a)][static_cast<size_t>(b)];
            require(v >= 0 && v < n, Err::NotAssociative, "table entry out of range");
            g->mul_[static_cast<size_t>(a * n + b)] = v;
        }
    }
    for (long a = 0; a < n; ++a)
        require(g->mul(0, a) == a && g->mul(a, 0) == a, Err::NoIdentity,
                "element 0 is not a two-sided identity");
    for (long a = 0; a < n; ++a)
        for (long b = 0; b < n; ++b)
            for (long c = 0; c < n; ++c)
                require(g->mul(g->mul(a, b), c) == g->mul(a, g->mul(b, c)), Err::NotAssociative,
                        "table is not associative");
    g->inv_.assign(static_cast<size_t>(n), -1);
    for (long a = 0; a < n; ++a) {
        for (long b = 0; b < n; ++b) {
            if (g->mul(a, b) == 0 && g->mul(b, a) == 0) {
                g->inv_[static_cast<size_t>(a)] = b;
                break;
            }
        }
        require(g->inv_[static_cast<size_t>(a)] >= 0, Err::NoInverse,
                "element " + std::to_string(a) + " has no inverse");
    }
    g->elt_order_.assign(static_cast<size_t>(n), 1);
    for (long a = 0; a < n; ++a) {
        long x = a, ord = 1;
        while (x != 0) {
            x = g->mul(x, a);
            ++ord;
        }
        g->elt_order_[static_cast<size_t>(a)] = ord;
        g->exponent_ = std::lcm(g->exponent_, ord);
    }
    g->labels_ = labels.empty() ? default_labels(n) : std::move(labels);
    require(static_cast<long>(g->labels_.size()) == n, Err::NoIdentity, "bad label count");
    return g;
}

const char* family_name(Family f) {
    switch (f) {
        case Family::C: return "C";
        case Family::D: return "D";
        case Family::Q: return "Q";
        case Family::SD: return "SD";
        case Family::Mod: return "Mod";
        case Family::DD: return "DD";
        case Family::V: return "V";
    }
    return "?";
}

namespace {

GroupPtr cyclic_group(long m, long p) {
    std::vector<std::vector<long>> t(static_cast<size_t>(m), std::vector<long>(static_cast<size_t>(m)));
    for (long i = 0; i < m; ++i)
        for (long j = 0; j < m; ++j) t[static_cast<size_t>(i)][static_cast<size_t>(j)] = (i + j) % m;
    std::vector<std::string> labels(static_cast<size_t>(m));
    labels[0] = "1";
    for (long i = 1; i < m; ++i) labels[static_cast<size_t>(i)] = i == 1 ? "a" : "a" + std::to_string(i);
    return build_group(t, p, std::move(labels));
}

// Semidirect product C_M x| H where H acts by exponents: element (i, h) has
// id h*M + i and (i1,h1)(i2,h2) = (i1 + act[h1]*i2 mod M, h1 h2).
GroupPtr semidirect_cyclic(long M, const GroupPtr& h, const std::vector<long>& act, long p,
                           const std::vector<std::string>& hlabels) {
    long H = h->order();
    long n = M * H;
    std::vector<std::vector<long>> t(static_cast<size_t>(n), std::vector<long>(static_cast<size_t>(n)));
    for (long h1 = 0; h1 < H; ++h1)
        for (long i1 = 0; i1 < M; ++i1)
            for (long h2 = 0; h2 < H; ++h2)
                for (long i2 = 0; i2 < M; ++i2) {
                    long i = (i1 + act[static_cast<size_t>(h1)] % M * i2) % M;
                    long hh = h->mul(h1, h2);
                    t[static_cast<size_t>(h1 * M + i1)][static_cast<size_t>(h2 * M + i2)] =
                        hh * M + i;
                }
    std::vector<std::string> labels(static_cast<size_t>(n));
    for (long hh = 0; hh < H; ++hh)
        for (long i = 0; i < M; ++i) {
            std::string a = i == 0 ? "" : (i == 1 ? "a" : "a" + std::to_string(i));
            std::string s = a + hlabels[static_cast<size_t>(hh)];
            labels[static_cast<size_t>(hh * M + i)] = s.empty() ? "1" : s;
        }
    return build_group(t, p, std::move(labels));
}

GroupPtr dihedral(long order) {
    long M = order / 2;
    auto c2 = cyclic_group(2, 2);
    return semidirect_cyclic(M, c2, {1, M - 1}, 2, {"", "b"});
}

GroupPtr semidihedral(long order) {
    long M = order / 2;
    auto c2 = cyclic_group(2, 2);
    return semidirect_cyclic(M, c2, {1, M / 2 - 1}, 2, {"", "d"});
}

GroupPtr modular(long order, long p) {
    long M = order / p;
    auto cp = cyclic_group(p, p);
    std::vector<long> act(static_cast<size_t>(p));
    std::vector<std::string> labels(static_cast<size_t>(p));
    long e = M / p + 1; // a -> a^{p^{m-2}+1}
    long cur = 1;
    for (long j = 0; j < p; ++j) {
        act[static_cast<size_t>(j)] = cur;
        cur = cur * e % M;
        labels[static_cast<size_t>(j)] = j == 0 ? "" : (j == 1 ? "c" : "c" + std::to_string(j));
    }
    return semidirect_cyclic(M, cp, act, p, labels);
}

// Q_{2^m} as Z/2^{m-1} x Z/2 with the nonsplit twist x^2 = a^{2^{m-2}},
// x a x^-1 = a^-1. Element (i, t) has id t*M + i.
GroupPtr quaternion(long order) {
    long M = order / 2;
    long q = M / 2;
    long n = order;
    std::vector<std::vector<long>> t(static_cast<size_t>(n), std::vector<long>(static_cast<size_t>(n)));
    for (long t1 = 0; t1 < 2; ++t1)
        for (long i1 = 0; i1 < M; ++i1)
            for (long t2 = 0; t2 < 2; ++t2)
                for (long i2 = 0; i2 < M; ++i2) {
                    long i = t1 == 0 ? (i1 + i2) % M : ((i1 - i2) % M + M) % M;
                    if (t1 == 1 && t2 == 1) i = (i + q) % M;
                    t[static_cast<size_t>(t1 * M + i1)][static_cast<size_t>(t2 * M + i2)] =
                        ((t1 + t2) % 2) * M + i;
                }
    std::vector<std::string> labels(static_cast<size_t>(n));
    for (long tt = 0; tt < 2; ++tt)
        for (long i = 0; i < M; ++i) {
            std::string a = i == 0 ? "" : (i == 1 ? "a" : "a" + std::to_string(i));
            std::string s = a + (tt ? "x" : "");
            labels[static_cast<size_t>(tt * M + i)] = s.empty() ? "1" : s;
        }
    return build_group(t, 2, std::move(labels));
}

// DD_{2^n} = C_{4u} x| V4 where the three involutions of V4 = {1,b,c,d=bc}
// act as a -> a^-1, a^{2u+1}, a^{2u-1}.
GroupPtr double_dihedral(long order) {
    long M = order / 4; // 4u
    long u = M / 4;
    auto v4 = direct_product(cyclic_group(2, 2), cyclic_group(2, 2));
    // v4 ids: (g,h) -> 2g+h: 0 = 1, 1 = second factor, 2 = first factor, 3 = product.
    std::vector<long> act = {1, 2 * u + 1, ((M - 1) % M), (2 * u - 1 + M) % M};
    return semidirect_cyclic(M, v4, act, 2, {"", "c", "b", "d"});
}

} // namespace

GroupPtr make_named(Family family, long order) {
    long p = prime_of(order);
    if (order == 1) p = 2;
    require(order == 1 || p != 0, Err::IllegalOrderForFamily,
            "order " + std::to_string(order) + " is not a prime power");
    switch (family) {
        case Family::C:
            return cyclic_group(order, p);
        case Family::V: {
            GroupPtr g = cyclic_group(1, p);
            for (long m = order; m > 1; m /= p) g = direct_product(g, cyclic_group(p, p));
            return g;
        }
        case Family::D:
            require(p == 2 && order >= 8, Err::IllegalOrderForFamily,
                    "D needs a 2-power order >= 8");
            return dihedral(order);
        case Family::Q:
            require(p == 2 && order >= 8, Err::IllegalOrderForFamily,
                    "Q needs a 2-power order >= 8");
            return quaternion(order);
        case Family::SD:
            require(p == 2 && order >= 16, Err::IllegalOrderForFamily,
                    "SD needs a 2-power order >= 16");
            return semidihedral(order);
        case Family::Mod:
            require(order >= p * p * p && (p != 2 || order >= 16), Err::IllegalOrderForFamily,
                    "Mod needs order >= p^3 (>= 16 when p = 2)");
            return modular(order, p);
        case Family::DD:
            require(p == 2 && order >= 32, Err::IllegalOrderForFamily,
                    "DD needs a 2-power order >= 32");
            return double_dihedral(order);
    }
    fail(Err::UnknownFamily, "bad family");
}

GroupPtr direct_product(const GroupPtr& g, const GroupPtr& h) {
    require(g->order() == 1 || h->order() == 1 || g->prime() == h->prime(), Err::OrderNotPPower,
            "direct product of groups for different primes");
    long p = g->order() > 1 ? g->prime() : h->prime();
    long n = g->order() * h->order();
    long H = h->order();
    std::vector<std::vector<long>> t(static_cast<size_t>(n), std::vector<long>(static_cast<size_t>(n)));
    for (long a1 = 0; a1 < g->order(); ++a1)
        for (long b1 = 0; b1 < H; ++b1)
            for (long a2 = 0; a2 < g->order(); ++a2)
                for (long b2 = 0; b2 < H; ++b2)
                    t[static_cast<size_t>(a1 * H + b1)][static_cast<size_t>(a2 * H + b2)] =
                        g->mul(a1, a2) * H + h->mul(b1, b2);
    std::vector<std::string> labels(static_cast<size_t>(n));
    for (long a = 0; a < g->order(); ++a)
        for (long b = 0; b < H; ++b) {
            std::string s;
            if (a != 0) s += g->label(a);
            if (b != 0) {
                if (!s.empty()) s += "*";
                s += h->label(b);
            }
            labels[static_cast<size_t>(a * H + b)] = s.empty() ? "1" : s;
        }
    return build_group(t, p, std::move(labels));
}

namespace {

// The unique central element of order 2, or -1 when none or several exist.
long unique_central_involution(const GroupPtr& g) {
    Subgroup z = center(g);
    std::vector<long> invs;
    for (long e : z.elems)
        if (g->element_order(e) == 2) invs.push_back(e);
    return invs.size() == 1 ? invs[0] : -1;
}

} // namespace

GroupPtr central_product(const GroupPtr& g, const GroupPtr& h) {
    long zg = unique_central_involution(g);
    long zh = unique_central_involution(h);
    require(zg >= 0 && zh >= 0, Err::AmbiguousCenter,
            "central product needs a unique central subgroup of order 2 in each factor");
    GroupPtr prod = direct_product(g, h);
    long zz = zg * h->order() + zh;
    Quotient q = quotient(prod, generated_subgroup(prod, {zz}));
    return q.group;
}

bool Subgroup::contains(long g) const {
    return std::binary_search(elems.begin(), elems.end(), g);
}

Subgroup whole_group(const GroupPtr& g) {
    Subgroup s{g, {}};
    s.elems.resize(static_cast<size_t>(g->order()));
    std::iota(s.elems.begin(), s.elems.end(), 0);
    return s;
}

Subgroup trivial_subgroup(const GroupPtr& g) { return Subgroup{g, {0}}; }

Subgroup generated_subgroup(const GroupPtr& g, const std::vector<long>& gens) {
    std::set<long> s{0};
    std::vector<long> frontier{0};
    while (!frontier.empty()) {
        std::vector<long> next;
        for (long a : frontier) {
            for (long x : gens) {
                for (long v : {g->mul(a, x), g->mul(a, g->inv(x))}) {
                    if (s.insert(v).second) next.push_back(v);
                }
            }
        }
        frontier = std::move(next);
    }
    return Subgroup{g, {s.begin(), s.end()}};
}

bool is_subgroup(const GroupPtr& g, const std::vector<long>& elems) {
    std::set<long> s(elems.begin(), elems.end());
    if (!s.count(0)) return false;
    for (long a : s) {
        if (!s.count(g->inv(a))) return false;
        for (long b : s)
            if (!s.count(g->mul(a, b))) return false;
    }
    return true;
}

bool is_normal(const Subgroup& s) {
    const GroupPtr& g = s.parent;
    for (long x = 0; x < g->order(); ++x)
        for (long a : s.elems)
            if (!s.contains(g->conj(a, x))) return false;
    return true;
}

Subgroup centralizer(const GroupPtr& g, const Subgroup& s) {
    std::vector<long> out;
    for (long x = 0; x < g->order(); ++x) {
        bool ok = true;
        for (long a : s.elems)
            if (g->mul(x, a) != g->mul(a, x)) { ok = false; break; }
        if (ok) out.push_back(x);
    }
    return Subgroup{g, std::move(out)};
}

Subgroup center(const GroupPtr& g) { return centralizer(g, whole_group(g)); }

Subgroup derived_subgroup(const GroupPtr& g) {
    std::set<long> comms;
    for (long a = 0; a < g->order(); ++a)
        for (long b = 0; b < g->order(); ++b)
            comms.insert(g->mul(g->mul(g->inv(a), g->inv(b)), g->mul(a, b)));
    return generated_subgroup(g, {comms.begin(), comms.end()});
}

Subgroup normalizer(const GroupPtr& g, const Subgroup& s) {
    std::vector<long> out;
    for (long x = 0; x < g->order(); ++x) {
        if (conjugate_subgroup(g, s.elems, x) == s.elems) out.push_back(x);
    }
    return Subgroup{g, std::move(out)};
}

bool is_abelian_subgroup(const Subgroup& s) {
    for (long a : s.elems)
        for (long b : s.elems)
            if (s.parent->mul(a, b) != s.parent->mul(b, a)) return false;
    return true;
}

bool is_cyclic_subgroup(const Subgroup& s) {
    return std::any_of(s.elems.begin(), s.elems.end(), [&](long a) {
        return s.parent->element_order(a) == s.size();
    });
}

bool is_elementary_abelian(const Subgroup& s) {
    if (!is_abelian_subgroup(s)) return false;
    long p = s.parent->prime();
    return std::all_of(s.elems.begin(), s.elems.end(), [&](long a) {
        return a == 0 || s.parent->element_order(a) == p;
    });
}

std::vector<long> conjugate_subgroup(const GroupPtr& g, const std::vector<long>& elems, long x) {
    std::vector<long> out;
    out.reserve(elems.size());
    for (long a : elems) out.push_back(g->conj(a, x));
    std::sort(out.begin(), out.end());
    return out;
}

Quotient quotient(const GroupPtr& g, const Subgroup& n) {
    require(is_normal(n), Err::NotNormal, "quotient by a non-normal subgroup");
    long ord = g->order();
    std::vector<long> coset_min(static_cast<size_t>(ord), -1);
    std::vector<long> reps;
    for (long a = 0; a < ord; ++a) {
        if (coset_min[static_cast<size_t>(a)] >= 0) continue;
        long least = a;
        std::vector<long> members;
        for (long k : n.elems) members.push_back(g->mul(a, k));
        for (long m : members) least = std::min(least, m);
        for (long m : members) coset_min[static_cast<size_t>(m)] = least;
        reps.push_back(least);
    }
    std::sort(reps.begin(), reps.end());
    std::vector<long> index_of(static_cast<size_t>(ord), -1);
    for (size_t i = 0; i < reps.size(); ++i) index_of[static_cast<size_t>(reps[i])] = static_cast<long>(i);

    long m = static_cast<long>(reps.size());
    std::vector<std::vector<long>> t(static_cast<size_t>(m), std::vector<long>(static_cast<size_t>(m)));
    for (long i = 0; i < m; ++i)
        for (long j = 0; j < m; ++j) {
            long prod = g->mul(reps[static_cast<size_t>(i)], reps[static_cast<size_t>(j)]);
            t[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                index_of[static_cast<size_t>(coset_min[static_cast<size_t>(prod)])];
        }
    std::vector<std::string> labels;
    labels.reserve(reps.size());
    for (long r : reps) labels.push_back("[" + g->label(r) + "]");
    Quotient q;
    q.group = build_group(t, g->prime(), std::move(labels));
    q.proj.resize(static_cast<size_t>(ord));
    for (long a = 0; a < ord; ++a)
        q.proj[static_cast<size_t>(a)] = index_of[static_cast<size_t>(coset_min[static_cast<size_t>(a)])];
    return q;
}

EmbeddedGroup subgroup_as_group(const Subgroup& s) {
    const GroupPtr& g = s.parent;
    std::vector<long> index_of(static_cast<size_t>(g->order()), -1);
    for (size_t i = 0; i < s.elems.size(); ++i)
        index_of[static_cast<size_t>(s.elems[i])] = static_cast<long>(i);
    long m = s.size();
    std::vector<std::vector<long>> t(static_cast<size_t>(m), std::vector<long>(static_cast<size_t>(m)));
    for (long i = 0; i < m; ++i)
        for (long j = 0; j < m; ++j) {
            long prod = g->mul(s.elems[static_cast<size_t>(i)], s.elems[static_cast<size_t>(j)]);
            long idx = index_of[static_cast<size_t>(prod)];
            require(idx >= 0, Err::NotASubgroup, "element set is not closed");
            t[static_cast<size_t>(i)][static_cast<size_t>(j)] = idx;
        }
    std::vector<std::string> labels;
    labels.reserve(s.elems.size());
    for (long e : s.elems) labels.push_back(g->label(e));
    EmbeddedGroup out;
    out.group = build_group(t, g->prime(), std::move(labels));
    out.to_parent = s.elems;
    return out;
}

ConjClasses conjugacy_classes(const GroupPtr& g) {
    long n = g->order();
    std::vector<long> cls(static_cast<size_t>(n), -1);
    std::vector<std::vector<long>> classes;
    for (long a = 0; a < n; ++a) {
        if (cls[static_cast<size_t>(a)] >= 0) continue;
        std::set<long> orbit;
        for (long x = 0; x < n; ++x) orbit.insert(g->conj(a, x));
        long id = static_cast<long>(classes.size());
        classes.emplace_back(orbit.begin(), orbit.end());
        for (long m : orbit) cls[static_cast<size_t>(m)] = id;
    }
    // Canonical order: element order of the representative, then least id.
    std::vector<long> perm(classes.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](long i, long j) {
        long oi = g->element_order(classes[static_cast<size_t>(i)][0]);
        long oj = g->element_order(classes[static_cast<size_t>(j)][0]);
        if (oi != oj) return oi < oj;
        return classes[static_cast<size_t>(i)][0] < classes[static_cast<size_t>(j)][0];
    });
    ConjClasses out;
    out.group = g;
    out.classes.reserve(classes.size());
    for (long i : perm) out.classes.push_back(std::move(classes[static_cast<size_t>(i)]));
    out.class_of.assign(static_cast<size_t>(n), -1);
    out.reps.reserve(out.classes.size());
    for (size_t c = 0; c < out.classes.size(); ++c) {
        out.reps.push_back(out.classes[c][0]);
        for (long m : out.classes[c]) out.class_of[static_cast<size_t>(m)] = static_cast<long>(c);
    }
    return out;
}

} // namespace pglab
