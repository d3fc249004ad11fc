#pragma once

#include "vvmf/fourier.hpp"
#include "vvmf/gauss.hpp"
#include "vvmf/xseries.hpp"

#include <complex>
#include <functional>

namespace vvmf {

/// Coefficient stream a(n lambda, n^2 t) of the symmetric-square series,
/// restricted to indices n coprime to N.
struct SeriesTruncation {
    FqElement lam;
    Rational t;
    Integer N;
    long n_cut = 0;
    std::vector<std::pair<Integer, Cyclotomic>> terms;
};

SeriesTruncation series_coeffs(const FourierExpansion& f, const FqElement& lam,
                               const Rational& t, const Integer& N, long n_cut);

/// Stream assembled from an external coefficient source (for index ranges far
/// beyond what an expansion object can hold).
SeriesTruncation make_series(FqElement lam, Rational t, const Integer& N, long n_cut,
                             const std::function<Cyclotomic(const Integer&)>& coeff);

/// Series over a definite splitting sublattice: terms (q(l), a(lbar + eta,
/// t q(l))) for 0 != l in L1' with q(l) <= norm_cut, aggregated by the norm.
/// L1 is the leading rank1 x rank1 Gram block of L.
std::vector<std::pair<Rational, Cyclotomic>> sublattice_series(
    const FourierExpansion& f, const DiscriminantForm& df, const Lattice& L, int rank1,
    const FqElement& eta, const Rational& t, const Rational& norm_cut);

/// Local factor Q(x) = R(x)/P(x) in x = p^{-s}; the weight powers p^{k-1} are
/// folded into the coefficients, so eval substitutes x = p^{-s} directly.
struct EulerFactor {
    Integer p;
    int k2 = 0;
    XPolynomial R, P;
    bool odd_parity = false, bad = false, p_div_t = false, lam_p_zero = false;

    std::complex<double> eval(std::complex<double> s) const;
};

/// Sign of the C(lambda_p) x^2 term in the bad-prime numerator.
enum class X2Sign { Plus, Minus };

/// Factor at p coprime to the level; the parity of the signature selects the
/// display. eig must be a certified eigenvalue of the p^2 Hecke operator.
EulerFactor euler_factor_good(const Integer& p, int k2, const Cyclotomic& eig,
                              const FiniteQuadraticModule& A, const Rational& t);

/// Factor at an arbitrary odd prime; K is K_{L,p}, Rp the Legendre-power count
/// of L at p, C the orbit constant of lambda_p (zero when lambda_p = 0).
EulerFactor euler_factor_bad(const Integer& p, int k2, const Cyclotomic& eig,
                             const Cyclotomic& K, long Rp, bool lam_p_zero, const Integer& C,
                             const Rational& t, X2Sign sign = X2Sign::Minus);

/// Exact identity H_n(x) P(x) = a(n lambda, n^2 t) R(x) through x^K, where
/// H_n(x) = sum_m a(p^m n lambda, (p^m n)^2 t) x^m and n is the first index
/// coprime to p with nonzero leading coefficient.
bool hn_identity_check(const FourierExpansion& f, const FqElement& lam, const Rational& t,
                       const Integer& p, std::size_t K, const EulerFactor& factor);

struct ProductComparison {
    std::complex<double> series, product;
    double gap = 0;       // |series - product|
    double tail_diag = 0; // sum over supplied factors of |Q_p - 1|
};

/// Truncated Dirichlet series against prefactor * prod Q_p at a complex s with
/// Re(s) > k + 1; the prefactor is a(lambda, t) for odd level, else the
/// caller-evaluated 2-power subseries.
ProductComparison product_vs_series(const SeriesTruncation& series,
                                    std::complex<double> prefactor,
                                    const std::vector<EulerFactor>& factors,
                                    std::complex<double> s, int k2);

} // namespace vvmf
