#include "vvmf/gauss.hpp"

#include <stdexcept>

namespace vvmf {

int legendre(const Integer& a, const Integer& p) {
    Integer r = imod(a, p);
    if (r == 0) return 0;
    // Euler criterion by fast modular exponentiation
    Integer e = (p - 1) / 2, base = r, acc = 1;
    while (e > 0) {
        if (e % 2 == 1) acc = imod(acc * base, p);
        base = imod(base * base, p);
        e /= 2;
    }
    return acc == 1 ? 1 : -1;
}

int kronecker(const Integer& a, const Integer& b) {
    if (b == 0) return (a == 1 || a == -1) ? 1 : 0;
    Integer bb = b;
    int result = 1;
    if (bb < 0) {
        if (a < 0) result = -result;
        bb = -bb;
    }
    Integer aa = a;
    while (bb % 2 == 0) {
        bb /= 2;
        // (a/2): 0 for even a, +1 for a = +-1 mod 8, -1 for a = +-3 mod 8
        Integer m = imod(aa, 8);
        if (m % 2 == 0) return 0;
        if (m == 3 || m == 5) result = -result;
    }
    if (bb == 1) return result;
    aa = imod(aa, bb);
    // Jacobi symbol by quadratic reciprocity
    while (aa != 0) {
        while (aa % 2 == 0) {
            aa /= 2;
            Integer m = imod(bb, 8);
            if (m == 3 || m == 5) result = -result;
        }
        std::swap(aa, bb);
        if (imod(aa, 4) == 3 && imod(bb, 4) == 3) result = -result;
        aa = imod(aa, bb);
    }
    return bb == 1 ? result : 0;
}

Cyclotomic eps_d(const Integer& d) {
    if (d % 2 == 0) throw std::domain_error("eps_d: even argument");
    return imod(d, 4) == 1 ? Cyclotomic(1) : Cyclotomic::e_frac(Rational(1, 4));
}

int legendre_of_rational(const Rational& n, const Integer& p) {
    Integer dn = den(n);
    if (dn % p == 0) throw std::domain_error("legendre_of_rational: denominator divisible by p");
    return legendre(num(n) * dn, p);
}

Cyclotomic chi_Df(const FiniteQuadraticModule& A, const Integer& p) {
    if (p % 2 == 0) throw std::domain_error("chi_Df: p must be odd");
    Integer modulus = A.size() * pow_int(2, static_cast<unsigned long>(A.sig8()));
    long e = A.sig8() + kronecker(-1, A.size());
    Cyclotomic eps = eps_d(p);
    Cyclotomic val = eps.pow(e);
    return val * Cyclotomic(Rational(kronecker(p, modulus)));
}

Cyclotomic G_Lp(const Lattice& L, const Integer& p, unsigned n, const Integer& h,
                const Integer& enumeration_cap) {
    const Eigen::Index m = L.rank();
    Integer pn = pow_int(p, n);
    Integer total = 1;
    for (Eigen::Index i = 0; i < m; ++i) {
        total *= pn;
        if (total > enumeration_cap)
            throw std::domain_error("G_Lp: enumeration too large");
    }
    Cyclotomic sum(0);
    IVector v;
    v.setZero(m);
    // accumulate by residues of h q(v) mod p^n to keep the term count small
    std::map<Integer, Integer> counts;
    for (;;) {
        counts[imod(h * L.q_int(v), pn)] += 1;
        Eigen::Index i = 0;
        while (i < m && ++v(i) == pn) v(i++) = 0;
        if (i == m) break;
    }
    for (auto& [res, cnt] : counts)
        sum += Cyclotomic(Rational(cnt)) * Cyclotomic::e_frac(Rational(res, pn));
    return sum;
}

Cyclotomic g_p(const Integer& p, unsigned n, CharKind chi, const Integer& h, GpMode mode) {
    if (p % 2 == 0) throw std::domain_error("g_p: p must be odd");
    Integer pn = pow_int(p, n);
    if (mode == GpMode::Brute) {
        Cyclotomic sum(0);
        for (Integer k = 0; k < pn; ++k) {
            if (k % p == 0) continue;
            int c = chi == CharKind::TrivialModPn ? 1 : legendre(k, p);
            if (c == 0) continue;
            sum += Cyclotomic(Rational(c)) * Cyclotomic::e_frac(Rational(h * k, pn));
        }
        return sum;
    }
    long vh = imod(h, pn) == 0 ? static_cast<long>(n) : p_valuation(imod(h, pn), p);
    if (chi == CharKind::TrivialModPn) {
        if (vh >= static_cast<long>(n))
            return Cyclotomic(Rational(pow_int(p, n - 1) * (p - 1)));
        if (vh == static_cast<long>(n) - 1)
            return Cyclotomic(Rational(-pow_int(p, n - 1)));
        return Cyclotomic(0);
    }
    // Legendre character: nonzero only at v_p(h) = n-1
    if (vh != static_cast<long>(n) - 1) return Cyclotomic(0);
    Integer hu = imod(h, pn) / pow_int(p, n - 1);
    Cyclotomic val = Cyclotomic(Rational(pow_int(p, n - 1))) * Cyclotomic::sqrt_nat(p);
    return val * Cyclotomic(Rational(legendre(hu, p))) * eps_d(p);
}

bool twist_reduction_check(const Lattice& L, const Integer& p, unsigned n, const Integer& h) {
    if (p % 2 == 0 || h % p == 0) throw std::domain_error("twist_reduction_check: need odd p, p coprime h");
    JordanCounts jc = jordan_counts(L, p, n);
    Cyclotomic lhs = G_Lp(L, p, n, h);
    int twist = (jc.R % 2 == 0) ? 1 : legendre(h, p);
    Cyclotomic rhs = Cyclotomic(Rational(twist)) * G_Lp(L, p, n, 1);
    return lhs == rhs;
}

Cyclotomic G_Df(const FiniteQuadraticModule& A, const Integer& d) {
    Cyclotomic sum(0);
    std::map<Rational, Integer> counts;
    for (const FqElement& lam : A.elements())
        counts[mod1(Rational(d) * A.qbar(lam))] += 1;
    for (auto& [res, cnt] : counts)
        sum += Cyclotomic(Rational(cnt)) * Cyclotomic::e_frac(res);
    return sum;
}

Cyclotomic gauss_quotient(const FiniteQuadraticModule& A, const Integer& d) {
    if (igcd(imod(d, A.level()) + (imod(d, A.level()) == 0 ? A.level() : 0), A.level()) != 1)
        throw std::domain_error("gauss_quotient: d not coprime to the level");
    Cyclotomic gd = G_Df(A, d);
    if (gd.is_zero()) throw std::domain_error("gauss_quotient: zero denominator");
    return G_Df(A, 1) / gd;
}

bool barnard_quotient_check(const Lattice& L, const Integer& p) {
    DiscriminantForm df = discriminant_form(L);
    const FiniteQuadraticModule& A = df.module;
    if (A.level() % p == 0) throw std::domain_error("barnard_quotient_check: p divides level");
    Cyclotomic lhs = gauss_quotient(A, p);
    Cyclotomic g = G_Lp(L, p, 1, 1);
    const int m = L.rank();
    Cyclotomic pm2 = Cyclotomic::half_power(p, m);
    // p^{m/2} / conj(G_Lp(1,1))
    Cyclotomic rhs1 = pm2 / g.conj();
    // p^{-m/2} G_Lp(1,1) / |Df[p]|
    Integer torsion = Integer(A.torsion(p).size());
    Cyclotomic rhs2 = Cyclotomic::half_power(p, -m) * g / Cyclotomic(Rational(torsion));
    return lhs == rhs1 && lhs == rhs2;
}

Cyclotomic K_Lp(const Lattice& L, const Integer& p) {
    if (p % 2 == 0) throw std::domain_error("K_Lp: p must be odd");
    return Cyclotomic::half_power(p, -L.rank()) * G_Lp(L, p, 1, 1);
}

std::pair<bool, bool> gdf_dual_reading(const Lattice& L, const Integer& d) {
    DiscriminantForm df = discriminant_form(L);
    const FiniteQuadraticModule& A = df.module;
    Cyclotomic lhs = G_Df(A, d);
    const Eigen::Index m = L.rank();
    Cyclotomic pre = Cyclotomic::sqrt_nat(A.size()) * Cyclotomic::e_frac(Rational(A.sig8(), 8));
    // d^{-m/2}
    Cyclotomic dm2(1);
    {
        auto [a, b] = split_square(d);
        Cyclotomic dm = Cyclotomic(Rational(a)).pow(static_cast<long>(m));
        Cyclotomic sq = Cyclotomic::sqrt_nat(b).pow(static_cast<long>(m));
        dm2 = (dm * sq).inverse();
    }
    Cyclotomic sminus(0), splus(0);
    IVector v;
    v.setZero(m);
    for (;;) {
        Rational qq = Rational(L.q_int(v), d);
        sminus += Cyclotomic::e_frac(-qq);
        splus += Cyclotomic::e_frac(qq);
        Eigen::Index i = 0;
        while (i < m && ++v(i) == d) v(i++) = 0;
        if (i == m) break;
    }
    return {lhs == pre * dm2 * sminus, lhs == pre * dm2 * splus};
}

} // namespace vvmf
