#pragma once

#include "vvmf/fqm.hpp"

namespace vvmf {

/// Legendre symbol (a/p), p an odd prime.
int legendre(const Integer& a, const Integer& p);
/// Kronecker symbol (a/b) for arbitrary b (Shimura's convention at b < 0:
/// (a/-1) = sign(a), (a/0) = [|a| = 1], (a/2) via a mod 8).
int kronecker(const Integer& a, const Integer& b);
/// eps_d = 1 for d = 1 mod 4, i for d = 3 mod 4 (d odd).
Cyclotomic eps_d(const Integer& d);
/// (n/p) for rational n with denominator coprime to p: clears the denominator
/// by its square.
int legendre_of_rational(const Rational& n, const Integer& p);
/// chi_Df(p) = eps_p^(sig8 + (-1/|Df|)) * (p / |Df| 2^sig8), p odd.
Cyclotomic chi_Df(const FiniteQuadraticModule& A, const Integer& p);

/// Brute-force lattice Gauss sum over L/p^n L: sum of e(h q(v)/p^n).
/// Throws when the p^(n rank) enumeration exceeds the cap.
Cyclotomic G_Lp(const Lattice& L, const Integer& p, unsigned n, const Integer& h,
                const Integer& enumeration_cap = Integer(20000000));

enum class CharKind { TrivialModPn, LegendreModP };
/// Reduce a Legendre power R: even exponents give the trivial character.
inline CharKind char_power(long R) {
    return (R % 2 == 0) ? CharKind::TrivialModPn : CharKind::LegendreModP;
}

enum class GpMode { Brute, Closed };
/// Character Gauss sum g_p[n, chi, h] = sum over units k mod p^n of
/// chi(k) e(h k / p^n), p odd.
Cyclotomic g_p(const Integer& p, unsigned n, CharKind chi, const Integer& h, GpMode mode);

/// G_Lp(n,h) = (h/p)^R G_Lp(n,1) with R from jordan_counts; p odd, p coprime h.
bool twist_reduction_check(const Lattice& L, const Integer& p, unsigned n, const Integer& h);

/// Discriminant-form Gauss sum sum of e(d q(lambda)).
Cyclotomic G_Df(const FiniteQuadraticModule& A, const Integer& d);

/// G_Df(1)/G_Df(d) for gcd(d, level) = 1; a root of unity, multiplicative in d.
Cyclotomic gauss_quotient(const FiniteQuadraticModule& A, const Integer& d);

/// Both equalities relating G_Df(1)/G_Df(p) to the lattice sum G_Lp(1,1) at a
/// prime p coprime to the level.
bool barnard_quotient_check(const Lattice& L, const Integer& p);

/// K_Lp = p^(-m/2) G_Lp(1,1).
Cyclotomic K_Lp(const Lattice& L, const Integer& p);

/// The dual-lattice expression for G_Df(d), in the minus-sign and plus-sign
/// readings: G_Df(d) =? sqrt|Df| e(sig8/8) d^(-m/2) sum_{v in L/dL} e(-+ q(v)/d).
/// Returns (minus reading holds, plus reading holds).
std::pair<bool, bool> gdf_dual_reading(const Lattice& L, const Integer& d);

} // namespace vvmf
