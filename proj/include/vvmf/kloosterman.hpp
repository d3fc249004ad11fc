#pragma once

#include "vvmf/weil.hpp"

#include <complex>

namespace vvmf {

/// Index data of a generalized Kloosterman sum; make_query validates the
/// residue contract m = qbar(lam) mod 1, n = qbar(mu) mod 1.
struct KloostermanQuery {
    FqElement lam, mu;
    Rational m, n;
    Integer c;
    int k2 = 0; // 2k
};

KloostermanQuery make_query(const FiniteQuadraticModule& A, FqElement lam, Rational m,
                            FqElement mu, Rational n, Integer c, int k2);

/// Completes a coprime bottom row (c, d) to an SL2(Z) element with the
/// smallest |a| (branch +1).
MetaplecticElement complete_to_sl2(const Integer& c, const Integer& d);

/// H_c(lam, m, mu, n) = e(-sgn(c) k/4)/|c| * sum over d mod c coprime to c of
/// conj(rho(gamma))_{mu,lam} e((a m + n d)/c).
Cyclotomic H_c(const WeilRep& W, const KloostermanQuery& q);

enum class CWeight { AbsC, TwoAbsC };

struct ZetaResult {
    std::complex<double> value;
    double tail_bound = 0;
};

/// Truncated sum over 0 < |c| <= c_cut of w(c)^{1-k-2s} H_c(lam, 0, mu, n)
/// with w(c) = |c| or |2c|; the reported tail bound is the integral estimate
/// of the dropped range and requires k + 2 Re(s) > 2.
ZetaResult kloosterman_zeta(const WeilRep& W, int k2, const FqElement& lam,
                            const FqElement& mu, const Rational& n, std::complex<double> s,
                            long c_cut, CWeight w = CWeight::AbsC);

} // namespace vvmf
