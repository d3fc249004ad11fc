#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace vvmf {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer den(const Rational& q) { return boost::multiprecision::denominator(q); }

inline Integer igcd(Integer a, Integer b) { return boost::multiprecision::gcd(a, b); }
inline Integer ilcm(Integer a, Integer b) { return boost::multiprecision::lcm(a, b); }

// Floor of a/b for arbitrary signs.
inline Integer floor_div(const Integer& a, const Integer& b) {
    Integer q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

inline Integer floor_int(const Rational& q) { return floor_div(num(q), den(q)); }
inline Integer ceil_int(const Rational& q) { return -floor_int(-q); }

// Representative of q mod 1 in [0, 1).
inline Rational mod1(const Rational& q) {
    Rational r = q - Rational(floor_int(q));
    return r;
}

inline bool is_integer(const Rational& q) { return den(q) == 1; }

// Nonnegative residue of a mod m (m > 0).
inline Integer imod(const Integer& a, const Integer& m) {
    Integer r = a % m;
    if (r < 0) r += m;
    return r;
}

inline std::int64_t to_i64(const Integer& a) { return a.convert_to<std::int64_t>(); }

// Modular inverse; throws if not invertible.
inline Integer inv_mod(const Integer& a, const Integer& m) {
    Integer g, x;
    // extended euclid
    Integer r0 = imod(a, m), r1 = m, x0 = 1, x1 = 0;
    while (r1 != 0) {
        Integer q = r0 / r1;
        Integer r2 = r0 - q * r1;
        Integer x2 = x0 - q * x1;
        r0 = r1; r1 = r2; x0 = x1; x1 = x2;
    }
    if (r0 != 1) throw std::domain_error("inv_mod: not invertible");
    return imod(x0, m);
}

inline Integer pow_int(Integer base, unsigned long e) {
    Integer r = 1;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

inline Rational pow_rat(const Rational& base, long e) {
    if (e >= 0) {
        Rational r = 1;
        for (long i = 0; i < e; ++i) r *= base;
        return r;
    }
    if (base == 0) throw std::domain_error("pow_rat: zero to negative power");
    Rational r = 1;
    for (long i = 0; i < -e; ++i) r /= base;
    return r;
}

// v_p(a) for a != 0.
inline long p_valuation(Integer a, const Integer& p) {
    if (a == 0) throw std::domain_error("p_valuation of zero");
    long v = 0;
    while (a % p == 0) { a /= p; ++v; }
    return v;
}

inline Integer isqrt_floor(const Integer& n) { return boost::multiprecision::sqrt(n); }

// Prime factorization by trial division (desk-scale inputs).
inline std::vector<std::pair<Integer, unsigned>> factorize(Integer n) {
    if (n < 0) n = -n;
    std::vector<std::pair<Integer, unsigned>> f;
    if (n <= 1) return f;
    for (Integer p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            unsigned e = 0;
            while (n % p == 0) { n /= p; ++e; }
            f.emplace_back(p, e);
        }
    }
    if (n > 1) f.emplace_back(n, 1);
    return f;
}

inline bool is_prime(const Integer& n) {
    if (n < 2) return false;
    for (Integer p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

// n = a^2 * b with b squarefree; returns (a, b).
inline std::pair<Integer, Integer> split_square(const Integer& n) {
    Integer a = 1, b = 1;
    for (auto& [p, e] : factorize(n)) {
        a *= pow_int(p, e / 2);
        if (e % 2) b *= p;
    }
    return {a, b};
}

inline std::string rat_str(const Rational& q) {
    if (is_integer(q)) return num(q).str();
    return num(q).str() + "/" + den(q).str();
}

inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(Integer(s));
    return Rational(Integer(s.substr(0, slash)), Integer(s.substr(slash + 1)));
}

} // namespace vvmf
