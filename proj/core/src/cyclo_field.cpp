#include "pglab/cyclo_field.hpp"

#include "pglab/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace pglab {

std::vector<long> units_mod(long n) {
    if (n <= 2) return {1};
    std::vector<long> u;
    for (long k = 1; k < n; ++k)
        if (std::gcd(k, n) == 1) u.push_back(k);
    return u;
}

std::vector<long> unit_subgroup(long n, const std::vector<long>& gens) {
    std::set<long> s{1};
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<long> snapshot(s.begin(), s.end());
        for (long a : snapshot) {
            for (long g : gens) {
                long v = n <= 1 ? 1 : (a * g) % n;
                if (s.insert(v).second) grew = true;
            }
        }
    }
    return {s.begin(), s.end()};
}

bool is_unit_subgroup(long n, const std::vector<long>& s) {
    if (s.empty()) return false;
    std::set<long> set(s.begin(), s.end());
    if (!set.count(1)) return false;
    for (long a : set) {
        if (n > 1 && std::gcd(a, n) != 1) return false;
        for (long b : set)
            if (!set.count(n <= 1 ? 1 : (a * b) % n)) return false;
    }
    return true;
}

std::vector<std::vector<long>> unit_subgroups(long n) {
    std::vector<long> all = units_mod(n);
    std::set<std::vector<long>> found;
    found.insert({1});
    bool grew = true;
    while (grew) {
        grew = false;
        std::set<std::vector<long>> next = found;
        for (const auto& s : found) {
            for (long g : all) {
                std::vector<long> gens = s;
                gens.push_back(g);
                auto t = unit_subgroup(n, gens);
                if (next.insert(t).second) grew = true;
            }
        }
        found = std::move(next);
    }
    std::vector<std::vector<long>> out(found.begin(), found.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

namespace {

// Image of a unit subgroup under (Z/n)^x -> (Z/m)^x, m | n.
std::vector<long> project_subgroup(long n, const std::vector<long>& stab, long m) {
    std::set<long> img;
    for (long k : stab) img.insert(m <= 2 ? 1 : k % m);
    (void)n;
    return {img.begin(), img.end()};
}

// Kernel of (Z/n)^x -> (Z/m)^x.
std::vector<long> reduction_kernel(long n, long m) {
    std::vector<long> ker;
    for (long k : units_mod(n))
        if (m <= 2 || k % m == 1) ker.push_back(k);
    return ker;
}

std::string field_name(long conductor, const std::vector<long>& stab_at_conductor) {
    long m = conductor;
    if (m <= 2) return "Q";
    std::vector<long> full = units_mod(m);
    if (stab_at_conductor.size() == full.size()) return "Q";
    if (stab_at_conductor == std::vector<long>{1}) return "Q_" + std::to_string(m);
    if (stab_at_conductor == std::vector<long>{1, m - 1}) return "Q_" + std::to_string(m) + "^R";
    if (m % 2 == 0 && stab_at_conductor == std::vector<long>{1, m / 2 - 1})
        return "Q_" + std::to_string(m) + "^I";
    return "";
}

} // namespace

FieldHandle stabilizer_field(long n, std::vector<long> stab) {
    require(n == 1 || prime_of(n) != 0, Err::BadLevel,
            "level must be 1 or a prime power, got " + std::to_string(n));
    std::sort(stab.begin(), stab.end());
    stab.erase(std::unique(stab.begin(), stab.end()), stab.end());
    if (n <= 2) stab = {1};
    require(is_unit_subgroup(n, stab), Err::NotASubgroup,
            "stabilizer is not a subgroup of (Z/" + std::to_string(n) + ")^x");

    FieldHandle f;
    f.n = n;
    f.stab = stab;
    long phi = n <= 2 ? 1 : euler_phi(n);
    f.degree = phi / static_cast<long>(stab.size());
    f.is_real = n <= 2 || std::binary_search(stab.begin(), stab.end(), n - 1);

    // Conductor: smallest divisor m of n whose reduction kernel lies in stab.
    f.conductor = n;
    long p = n > 1 ? prime_of(n) : 0;
    for (long m = 1; m < n; m *= p) {
        std::vector<long> ker = reduction_kernel(n, m);
        bool inside = std::all_of(ker.begin(), ker.end(), [&](long k) {
            return std::binary_search(stab.begin(), stab.end(), k);
        });
        if (inside) { f.conductor = m; break; }
        if (p == 0) break;
    }
    if (f.conductor == 2) f.conductor = 1; // Q(zeta_2) = Q
    f.name = field_name(f.conductor, project_subgroup(n, stab, f.conductor));
    return f;
}

FieldHandle rational_field() { return stabilizer_field(1, {1}); }

FieldHandle cyclotomic_field(long n) { return stabilizer_field(n, {1}); }

FieldHandle real_subfield(long n) { return stabilizer_field(n, {1, n - 1}); }

FieldHandle imaginary_subfield(long n) {
    require(n >= 8 && prime_of(n) == 2, Err::BadLevel,
            "imaginary subfield needs a 2-power level >= 8");
    return stabilizer_field(n, {1, n / 2 - 1});
}

FieldHandle FieldHandle::canonical() const {
    if (conductor == n) return *this;
    return stabilizer_field(conductor, project_subgroup(n, stab, conductor));
}

bool FieldHandle::operator==(const FieldHandle& o) const {
    FieldHandle a = canonical(), b = o.canonical();
    return a.n == b.n && a.stab == b.stab;
}

bool FieldHandle::contained_in(const FieldHandle& o) const {
    FieldHandle a = canonical(), b = o.canonical();
    if (a.n == 1) return true;
    if (b.n == 1) return a.n == 1;
    if (prime_of(a.n) != prime_of(b.n)) return false;
    long common = std::max(a.n, b.n);
    if (common % a.n != 0 || common % b.n != 0) return false;
    // Lift both stabilizers to the common level; containment of fields is
    // reverse containment of stabilizers.
    auto lift = [common](const FieldHandle& f) {
        std::set<long> s;
        for (long k : units_mod(common))
            if (std::binary_search(f.stab.begin(), f.stab.end(), f.n <= 2 ? 1 : k % f.n))
                s.insert(k);
        return s;
    };
    std::set<long> sa = lift(a), sb = lift(b);
    return std::includes(sa.begin(), sa.end(), sb.begin(), sb.end());
}

bool FieldHandle::contains_value(const CycNum& x) const {
    if (x.level() == 1) return true;
    if (n % x.level() != 0) return false;
    for (long k : stab)
        if (galois_apply(k, x) != x) return false;
    return true;
}

Involutions involutions(long four_v) {
    long v = four_v / 4;
    require(four_v >= 8 && four_v % 4 == 0 && prime_of(four_v) == 2, Err::BadLevel,
            "need 4v with v >= 2 a power of 2, got " + std::to_string(four_v));
    return {four_v - 1, 2 * v + 1, 2 * v - 1};
}

} // namespace pglab
