#pragma once

#include "vvmf/rational.hpp"

#include <complex>
#include <map>
#include <string>
#include <vector>

namespace vvmf {

/// Exact element of a cyclotomic field Q(zeta_M), written as a rational linear
/// combination of roots of unity z(j/M) = e(j/M). The representation is kept
/// canonical (tensor power basis over the prime-power factors of M), so
/// equality is decidable by coefficient comparison. Conductors of operands are
/// merged by lcm.
class Cyclotomic {
public:
    Cyclotomic() : cond_(1) {}
    Cyclotomic(const Rational& q) : cond_(1) { if (q != 0) coeffs_[0] = q; }
    Cyclotomic(const Integer& n) : Cyclotomic(Rational(n)) {}
    Cyclotomic(long n) : Cyclotomic(Rational(n)) {}
    Cyclotomic(int n) : Cyclotomic(Rational(n)) {}

    /// e(q) = exp(2 pi i q) as an exact root of unity.
    static Cyclotomic e_frac(const Rational& q);
    /// Positive real square root of n >= 1, realized via quadratic Gauss sums.
    static Cyclotomic sqrt_nat(const Integer& n);
    /// p^(k/2) for integer k (possibly negative).
    static Cyclotomic half_power(const Integer& p, long k);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_rational() const { return coeffs_.empty() || (cond_ == 1); }
    /// Requires is_rational().
    Rational to_rational() const;

    const Integer& conductor() const { return cond_; }
    const std::map<Integer, Rational>& coeffs() const { return coeffs_; }

    Cyclotomic operator-() const;
    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic& operator-=(const Cyclotomic& o);
    Cyclotomic& operator*=(const Cyclotomic& o);
    Cyclotomic& operator/=(const Cyclotomic& o);

    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { a += b; return a; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { a -= b; return a; }
    friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { a *= b; return a; }
    friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { a /= b; return a; }

    bool operator==(const Cyclotomic& o) const;
    bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

    /// Complex conjugate, conj(e(q)) = e(-q).
    Cyclotomic conj() const;
    /// Galois twist e(j/M) -> e(t j/M), gcd(t, M) = 1.
    Cyclotomic galois(const Integer& t) const;
    /// a * conj(a); totally real.
    Cyclotomic abs2() const { return *this * conj(); }
    /// Multiplicative inverse of a nonzero element.
    Cyclotomic inverse() const;

    Cyclotomic pow(long e) const;

    /// Embedding z(j/M) -> exp(2 pi i j/M). precision >= 53 is honoured by
    /// evaluating in extended precision; see embed_error_bound().
    std::complex<double> to_complex(unsigned precision = 64) const;
    /// Bound 2^(1-precision) * sum |coeff| on the embedding error.
    double embed_error_bound(unsigned precision = 64) const;

    /// Sum-of-terms format "c * z(j/M)"; parse_cyclotomic is the inverse.
    std::string str() const;

    /// Total order (conductor, then coefficient table); for container keys.
    bool less(const Cyclotomic& o) const;

private:
    Integer cond_;                      // conductor, never 2 mod 4
    std::map<Integer, Rational> coeffs_; // canonical exponent -> coefficient

    void normalize();
    static void add_canonical(std::map<Integer, Rational>& acc, const Integer& M,
                              const Integer& e, const Rational& c);
    Cyclotomic promoted(const Integer& L) const;
    friend struct CyclotomicTestAccess;
};

Cyclotomic parse_cyclotomic(const std::string& s);

inline Cyclotomic conj(const Cyclotomic& a) { return a.conj(); }

} // namespace vvmf
