#include "pglab/cyclotomic.hpp"

#include "pglab/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace pglab {

std::int64_t to_i64(const BigInt& n) {
    require(n >= std::numeric_limits<std::int64_t>::min() &&
                n <= std::numeric_limits<std::int64_t>::max(),
            Err::NonIntegral, "value out of int64 range");
    return static_cast<std::int64_t>(n);
}

std::int64_t to_i64(const Rational& q) {
    require(is_integer(q), Err::NonIntegral, "expected an integer, got " + to_string(q));
    return to_i64(num(q));
}

std::string to_string(const Rational& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

long prime_of(long n) {
    if (n < 2) return 0;
    long p = 2;
    while (n % p != 0) {
        ++p;
        if (p * p > n) { p = n; break; }
    }
    long m = n;
    while (m % p == 0) m /= p;
    return m == 1 ? p : 0;
}

long euler_phi(long n) {
    long result = n;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

namespace {

long check_level(long n) {
    require(n == 1 || prime_of(n) != 0, Err::BadLevel,
            "cyclotomic level must be 1 or a prime power, got " + std::to_string(n));
    return n;
}

// Reduces an exponent-indexed vector (length n) to the power basis of length
// phi(n). Exponents e = q*p^{a-1} + r with q = p-1 are rewritten through the
// vanishing sum of p-th roots.
std::vector<Rational> reduce_to_basis(long n, std::vector<Rational> full) {
    if (n == 1) return full;
    long p = prime_of(n);
    long step = n / p;        // p^{a-1}
    long phi = step * (p - 1);
    for (long e = phi; e < n; ++e) {
        if (full[e] == 0) continue;
        Rational v = full[e];
        full[e] = 0;
        long r = e % step;
        for (long k = 0; k + 1 < p; ++k) full[k * step + r] -= v;
    }
    full.resize(phi);
    return full;
}

} // namespace

void CycNum::minimize() {
    while (n_ > 1) {
        long p = prime_of(n_);
        bool descends = true;
        for (size_t j = 0; j < c_.size(); ++j) {
            if (j % static_cast<size_t>(p) != 0 && c_[j] != 0) { descends = false; break; }
        }
        if (!descends) return;
        long m = n_ / p;
        std::vector<Rational> d(static_cast<size_t>(m == 1 ? 1 : euler_phi(m)));
        for (size_t j = 0; j < d.size(); ++j) d[j] = c_[j * static_cast<size_t>(p)];
        n_ = m;
        c_ = std::move(d);
    }
}

CycNum CycNum::root_of_unity(long n, long j) {
    check_level(n);
    j %= n;
    if (j < 0) j += n;
    std::vector<Rational> full(static_cast<size_t>(n));
    full[static_cast<size_t>(j)] = 1;
    CycNum x(n, reduce_to_basis(n, std::move(full)));
    x.minimize();
    return x;
}

CycNum CycNum::from_terms(long n, const std::vector<std::pair<long, Rational>>& terms) {
    check_level(n);
    std::vector<Rational> full(static_cast<size_t>(n));
    for (const auto& [e, q] : terms) {
        long j = e % n;
        if (j < 0) j += n;
        full[static_cast<size_t>(j)] += q;
    }
    CycNum x(n, reduce_to_basis(n, std::move(full)));
    x.minimize();
    return x;
}

bool CycNum::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& q) { return q == 0; });
}

const Rational& CycNum::rational_value() const {
    require(n_ == 1, Err::NonIntegral, "not a rational cyclotomic");
    return c_[0];
}

namespace {

// Common-level lift. Levels are powers of the same prime (or one side is
// rational), so the smaller level divides the larger.
std::pair<CycNum, CycNum> unify(const CycNum& a, const CycNum& b, long& n_out,
                                std::vector<Rational>& fa, std::vector<Rational>& fb) {
    long na = a.level(), nb = b.level();
    long n = std::max(na, nb);
    if (na > 1 && nb > 1 && prime_of(na) != prime_of(nb))
        fail(Err::MixedPrimeLevels, "cannot mix levels " + std::to_string(na) + " and " +
                                        std::to_string(nb));
    n_out = n;
    auto lift = [n](const CycNum& x) {
        std::vector<Rational> full(static_cast<size_t>(n));
        long stride = n / x.level();
        for (size_t j = 0; j < x.coeffs().size(); ++j)
            full[j * static_cast<size_t>(stride)] += x.coeffs()[j];
        return full;
    };
    fa = lift(a);
    fb = lift(b);
    return {a, b};
}

} // namespace

CycNum CycNum::operator+(const CycNum& o) const {
    long n;
    std::vector<Rational> fa, fb;
    unify(*this, o, n, fa, fb);
    for (size_t j = 0; j < fa.size(); ++j) fa[j] += fb[j];
    CycNum x(n, reduce_to_basis(n, std::move(fa)));
    x.minimize();
    return x;
}

CycNum CycNum::operator-(const CycNum& o) const { return *this + (-o); }

CycNum CycNum::operator-() const {
    CycNum x = *this;
    for (auto& q : x.c_) q = -q;
    return x;
}

CycNum CycNum::operator*(const CycNum& o) const {
    long n;
    std::vector<Rational> fa, fb;
    unify(*this, o, n, fa, fb);
    std::vector<Rational> prod(static_cast<size_t>(n));
    for (size_t i = 0; i < fa.size(); ++i) {
        if (fa[i] == 0) continue;
        for (size_t j = 0; j < fb.size(); ++j) {
            if (fb[j] == 0) continue;
            prod[(i + j) % static_cast<size_t>(n)] += fa[i] * fb[j];
        }
    }
    CycNum x(n, reduce_to_basis(n, std::move(prod)));
    x.minimize();
    return x;
}

CycNum CycNum::operator*(const Rational& q) const {
    CycNum x = *this;
    for (auto& v : x.c_) v *= q;
    x.minimize();
    return x;
}

CycNum CycNum::operator/(const Rational& q) const {
    require(q != 0, Err::NonIntegral, "division by zero");
    CycNum x = *this;
    for (auto& v : x.c_) v /= q;
    return x;
}

std::strong_ordering CycNum::operator<=>(const CycNum& o) const {
    if (n_ != o.n_) return n_ <=> o.n_;
    for (size_t j = 0; j < c_.size(); ++j) {
        if (c_[j] != o.c_[j]) return c_[j] < o.c_[j] ? std::strong_ordering::less
                                                     : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

std::string CycNum::str() const {
    if (is_rational()) return to_string(c_[0]);
    std::ostringstream os;
    bool first = true;
    for (size_t j = 0; j < c_.size(); ++j) {
        if (c_[j] == 0) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << c_[j] << ")z" << n_ << "^" << j;
    }
    return os.str();
}

CycNum galois_apply(long k, const CycNum& x) {
    long n = x.level();
    if (n == 1) return x;
    long kk = k % n;
    if (kk < 0) kk += n;
    require(std::gcd(kk, n) == 1, Err::NotAUnit,
            std::to_string(k) + " is not a unit mod " + std::to_string(n));
    std::vector<std::pair<long, Rational>> terms;
    for (size_t j = 0; j < x.coeffs().size(); ++j) {
        if (x.coeffs()[j] == 0) continue;
        terms.emplace_back(static_cast<long>(j) * kk % n, x.coeffs()[j]);
    }
    return CycNum::from_terms(n, terms);
}

CycNum conjugate(const CycNum& x) {
    if (x.level() == 1) return x;
    return galois_apply(x.level() - 1, x);
}

} // namespace pglab
