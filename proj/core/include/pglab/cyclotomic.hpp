#pragma once

#include "pglab/rational.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace pglab {

// Euler phi and prime-power predicates for the small levels we use.
long euler_phi(long n);
bool is_prime(long n);
// Returns the prime p with n = p^a (a >= 1), or 0 if n is 1 or not a prime power.
long prime_of(long n);

// An element of Q(zeta_n) for a prime-power level n, stored as a Rational
// vector over the power basis {zeta_n^j : 0 <= j < phi(n)}. Values are kept
// in canonical form: the level is always minimized (a rational is level 1),
// so structural equality is value equality. Reduction out of the basis uses
// the relation sum_{k=0}^{p-1} zeta^{k n/p} = 0.
class CycNum {
public:
    CycNum() : n_(1), c_(1, Rational(0)) {}
    CycNum(const Rational& q) : n_(1), c_(1, q) {}
    CycNum(long v) : n_(1), c_(1, Rational(v)) {}

    // zeta_n^j, reduced and level-minimized. n must be 1 or a prime power.
    static CycNum root_of_unity(long n, long j);

    // Builds from exponent/coefficient pairs at level n (exponents mod n).
    static CycNum from_terms(long n, const std::vector<std::pair<long, Rational>>& terms);

    long level() const { return n_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const { return n_ == 1; }
    const Rational& rational_value() const; // requires is_rational()
    bool is_integer() const { return n_ == 1 && pglab::is_integer(c_[0]); }

    CycNum operator+(const CycNum& o) const;
    CycNum operator-(const CycNum& o) const;
    CycNum operator-() const;
    CycNum operator*(const CycNum& o) const;
    CycNum& operator+=(const CycNum& o) { return *this = *this + o; }
    CycNum& operator-=(const CycNum& o) { return *this = *this - o; }
    CycNum& operator*=(const CycNum& o) { return *this = *this * o; }

    CycNum operator*(const Rational& q) const;
    CycNum operator/(const Rational& q) const;

    bool operator==(const CycNum& o) const { return n_ == o.n_ && c_ == o.c_; }
    bool operator!=(const CycNum& o) const { return !(*this == o); }

    // Total order by (level, coefficient vector); used for canonical sorting,
    // not for any numeric meaning.
    std::strong_ordering operator<=>(const CycNum& o) const;

    std::string str() const;

private:
    friend CycNum galois_apply(long k, const CycNum& x);

    CycNum(long n, std::vector<Rational> c) : n_(n), c_(std::move(c)) {}
    void minimize();

    long n_;
    std::vector<Rational> c_;
};

// The field automorphism zeta_n -> zeta_n^k for gcd(k, n) = 1. Identity on
// rationals. Throws NotAUnit otherwise.
CycNum galois_apply(long k, const CycNum& x);

// galois_apply(-1): complex conjugation.
CycNum conjugate(const CycNum& x);

} // namespace pglab
