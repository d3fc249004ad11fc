#include "vvmf/kloosterman.hpp"

#include <cmath>
#include <stdexcept>

namespace vvmf {

KloostermanQuery make_query(const FiniteQuadraticModule& A, FqElement lam, Rational m,
                            FqElement mu, Rational n, Integer c, int k2) {
    lam = A.reduce(lam.x);
    mu = A.reduce(mu.x);
    if (!is_integer(m - A.qbar(lam)) || !is_integer(n - A.qbar(mu)))
        throw std::domain_error("make_query: index residue mismatch");
    if (c == 0) throw std::domain_error("make_query: c must be nonzero");
    return {std::move(lam), std::move(mu), std::move(m), std::move(n), std::move(c), k2};
}

MetaplecticElement complete_to_sl2(const Integer& c, const Integer& d) {
    if (c == 0) throw std::domain_error("complete_to_sl2: c must be nonzero");
    Integer ac = c < 0 ? -c : c;
    if (igcd(ac, d) != 1) throw std::domain_error("complete_to_sl2: row not coprime");
    Integer a;
    if (ac == 1) {
        a = 0;
    } else {
        Integer a0 = inv_mod(d, ac); // in [0, |c|)
        a = (2 * a0 > ac) ? a0 - ac : a0;
    }
    Integer b = (a * d - 1) / c;
    return mp_make(a, b, c, d, 1);
}

Cyclotomic H_c(const WeilRep& W, const KloostermanQuery& q) {
    const Integer ac = q.c < 0 ? -q.c : q.c;
    const int sgn = q.c < 0 ? -1 : 1;
    Cyclotomic sum(0);
    for (Integer d = 0; d < ac; ++d) {
        if (igcd(d, ac) != 1 && ac != 1) continue;
        MetaplecticElement g = complete_to_sl2(q.c, d);
        Cyclotomic rho = W.rho_coeff(q.mu, q.lam, g).conj();
        if (rho.is_zero()) continue;
        Rational phase = mod1((Rational(g.a) * q.m + q.n * Rational(d)) / Rational(q.c));
        sum += rho * Cyclotomic::e_frac(phase);
    }
    Cyclotomic front = Cyclotomic::e_frac(mod1(Rational(-sgn * q.k2, 8)));
    return front * sum / Cyclotomic(Rational(ac));
}

ZetaResult kloosterman_zeta(const WeilRep& W, int k2, const FqElement& lam,
                            const FqElement& mu, const Rational& n, std::complex<double> s,
                            long c_cut, CWeight w) {
    const double k = k2 / 2.0;
    const double expo = 1.0 - k - 2.0 * s.real();
    if (k + 2.0 * s.real() <= 2.0)
        throw std::domain_error("kloosterman_zeta: k + 2 Re(s) must exceed 2");
    ZetaResult r;
    r.value = 0;
    for (long cc = 1; cc <= c_cut; ++cc) {
        for (int sg : {1, -1}) {
            KloostermanQuery q =
                make_query(W.module(), lam, Rational(0), mu, n, Integer(sg * cc), k2);
            double base = (w == CWeight::AbsC) ? double(cc) : 2.0 * double(cc);
            std::complex<double> weight =
                std::exp((std::complex<double>(1.0 - k, 0) - 2.0 * s) * std::log(base));
            r.value += weight * H_c(W, q).to_complex();
        }
    }
    // integral tail estimate for both signs of c
    double scale = (w == CWeight::AbsC) ? 1.0 : std::pow(2.0, expo);
    r.tail_bound = 2.0 * scale * std::pow(double(c_cut), expo + 1.0) / (-(expo + 1.0));
    return r;
}

} // namespace vvmf
