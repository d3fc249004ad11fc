#include "vvmf/lseries.hpp"

#include <stdexcept>

namespace vvmf {

SeriesTruncation series_coeffs(const FourierExpansion& f, const FqElement& lam,
                               const Rational& t, const Integer& N, long n_cut) {
    const FiniteQuadraticModule& A = f.module();
    if (!is_integer(t - A.qbar(lam)))
        throw std::domain_error("series_coeffs: t does not match the residue of lambda");
    if (Rational(n_cut) * Rational(n_cut) * t > f.n_max())
        throw TruncationExceeded("series_coeffs: n_cut exceeds the stored range");
    SeriesTruncation s{A.reduce(lam.x), t, N, n_cut, {}};
    for (long n = 1; n <= n_cut; ++n) {
        if (igcd(Integer(n), N) != 1) continue;
        s.terms.emplace_back(Integer(n),
                             f.coeff(A.smul(n, lam), Rational(n) * Rational(n) * t));
    }
    return s;
}

SeriesTruncation make_series(FqElement lam, Rational t, const Integer& N, long n_cut,
                             const std::function<Cyclotomic(const Integer&)>& coeff) {
    SeriesTruncation s{std::move(lam), std::move(t), N, n_cut, {}};
    for (long n = 1; n <= n_cut; ++n) {
        if (igcd(Integer(n), N) != 1) continue;
        s.terms.emplace_back(Integer(n), coeff(Integer(n)));
    }
    return s;
}

std::vector<std::pair<Rational, Cyclotomic>> sublattice_series(
    const FourierExpansion& f, const DiscriminantForm& df, const Lattice& L, int rank1,
    const FqElement& eta, const Rational& t, const Rational& norm_cut) {
    const int r = L.rank();
    if (rank1 <= 0 || rank1 >= r) throw std::domain_error("sublattice_series: bad split rank");
    for (int i = 0; i < rank1; ++i)
        for (int j = rank1; j < r; ++j)
            if (L.gram()(i, j) != 0)
                throw std::domain_error("sublattice_series: Gram is not block diagonal");
    IMatrix g1;
    g1.setZero(rank1, rank1);
    for (int i = 0; i < rank1; ++i)
        for (int j = 0; j < rank1; ++j) g1(i, j) = L.gram()(i, j);
    Lattice L1(g1);
    if (!L1.is_positive_definite())
        throw std::domain_error("sublattice_series: leading block not positive definite");
    const FiniteQuadraticModule& A = f.module();
    if (A.qbar(eta) != 0) throw std::domain_error("sublattice_series: eta not isotropic");
    {
        QVector le;
        le = df.lift(eta);
        for (int i = 0; i < rank1; ++i)
            if (!is_integer(le(i)))
                throw std::domain_error("sublattice_series: eta not in the complement part");
    }
    if (t > 0 && t * norm_cut > f.n_max())
        throw TruncationExceeded("sublattice_series: norm_cut exceeds the stored range");
    DiscriminantForm d1 = discriminant_form(L1);
    std::map<Rational, Cyclotomic> acc;
    for (const FqElement& mu : d1.module.elements()) {
        QVector shift;
        shift = d1.lift(mu);
        for (const auto& [v, norm] : L1.short_vectors(shift, norm_cut)) {
            bool zero = true;
            for (int i = 0; i < rank1 && zero; ++i) zero = (v(i) == 0);
            if (zero) continue;
            QVector full;
            full.setZero(r);
            for (int i = 0; i < rank1; ++i) full(i) = v(i);
            FqElement lam = A.add(df.project(full), eta);
            Cyclotomic c = f.coeff(lam, t * norm);
            if (!c.is_zero()) acc[norm] += c;
        }
    }
    return {acc.begin(), acc.end()};
}

std::complex<double> EulerFactor::eval(std::complex<double> s) const {
    std::complex<double> x = std::exp(-s * std::log(p.convert_to<double>()));
    return R.eval(x) / P.eval(x);
}

EulerFactor euler_factor_good(const Integer& p, int k2, const Cyclotomic& eig,
                              const FiniteQuadraticModule& A, const Rational& t) {
    if (igcd(p, A.level()) != 1)
        throw std::domain_error("euler_factor_good: p divides the level");
    EulerFactor ef;
    ef.p = p;
    ef.k2 = k2;
    ef.p_div_t = (imod(num(t), p) == 0 && imod(den(t), p) != 0);
    Cyclotomic pk1 = Cyclotomic::half_power(p, k2 - 2);
    Cyclotomic p2k2(pow_rat(Rational(p), k2 - 2));
    if (A.sig8() % 2 == 0) {
        Cyclotomic gq = gauss_quotient(A, p);
        ef.R = XPolynomial({Cyclotomic(1), ef.p_div_t ? Cyclotomic(0) : gq * pk1});
        ef.P = XPolynomial(
            {Cyclotomic(1), -(eig - Cyclotomic(Rational(1) - Rational(1, p)) * gq * pk1), p2k2});
    } else {
        ef.odd_parity = true;
        if (imod(p, 2) == 0) throw std::domain_error("euler_factor_good: odd parity needs odd p");
        Cyclotomic mid = chi_Df(A, p) * Cyclotomic(Rational(legendre_of_rational(-t, p))) *
                         Cyclotomic::half_power(p, k2 - 3);
        ef.R = XPolynomial({Cyclotomic(1), -mid});
        ef.P = XPolynomial({Cyclotomic(1), -eig, p2k2});
    }
    return ef;
}

EulerFactor euler_factor_bad(const Integer& p, int k2, const Cyclotomic& eig,
                             const Cyclotomic& K, long Rp, bool lam_p_zero, const Integer& C,
                             const Rational& t, X2Sign sign) {
    if (imod(p, 2) == 0) throw std::domain_error("euler_factor_bad: p must be odd");
    if (lam_p_zero && C != 0)
        throw std::domain_error("euler_factor_bad: C must vanish with lambda_p");
    EulerFactor ef;
    ef.p = p;
    ef.k2 = k2;
    ef.bad = true;
    ef.lam_p_zero = lam_p_zero;
    ef.p_div_t = (imod(num(t), p) == 0 && imod(den(t), p) != 0);
    Cyclotomic pk1 = Cyclotomic::half_power(p, k2 - 2);
    Cyclotomic p2k2(pow_rat(Rational(p), k2 - 2));
    Cyclotomic casev(0);
    if (Rp % 2 == 0) {
        if (!lam_p_zero)
            casev = Cyclotomic(Rational(1) - Rational(1, p));
        else if (!ef.p_div_t)
            casev = Cyclotomic(1);
    } else if (lam_p_zero) {
        casev = -Cyclotomic::half_power(p, -1) *
                Cyclotomic(Rational(legendre_of_rational(-t, p))) * eps_d(p);
    }
    Cyclotomic x2 = Cyclotomic(Rational(C)) * p2k2;
    if (sign == X2Sign::Minus) x2 = -x2;
    ef.R = XPolynomial({Cyclotomic(1), K * casev * pk1, x2});
    Cyclotomic pmid(0);
    if (Rp % 2 == 0) pmid = Cyclotomic(Rational(1) - Rational(1, p)) * K * pk1;
    ef.P = XPolynomial({Cyclotomic(1), -(eig - pmid), p2k2});
    return ef;
}

bool hn_identity_check(const FourierExpansion& f, const FqElement& lam, const Rational& t,
                       const Integer& p, std::size_t K, const EulerFactor& factor) {
    const FiniteQuadraticModule& A = f.module();
    Rational top = pow_rat(Rational(p), 2 * static_cast<long>(K));
    Integer n = 0;
    Cyclotomic lead(0);
    for (Integer m = 1;; ++m) {
        if (imod(m, p) == 0) continue;
        Rational idx = Rational(m) * Rational(m) * t;
        if (idx * top > f.n_max())
            throw std::domain_error("hn_identity_check: no usable nonzero coefficient");
        lead = f.coeff(A.smul(m, lam), idx);
        if (!lead.is_zero()) {
            n = m;
            break;
        }
    }
    XSeries H(K);
    for (std::size_t m = 0; m <= K; ++m) {
        Integer pm = pow_int(p, static_cast<unsigned long>(m)) * n;
        H.coeff(m) = f.coeff(A.smul(pm, lam), Rational(pm) * Rational(pm) * t);
    }
    XSeries lhs = H * XSeries(factor.P, K);
    XSeries rhs(factor.R, K);
    for (std::size_t i = 0; i <= K; ++i)
        if (lhs.coeff(i) != lead * rhs.coeff(i)) return false;
    return true;
}

ProductComparison product_vs_series(const SeriesTruncation& series,
                                    std::complex<double> prefactor,
                                    const std::vector<EulerFactor>& factors,
                                    std::complex<double> s, int k2) {
    if (s.real() <= k2 / 2.0 + 1.0)
        throw std::domain_error("product_vs_series: Re(s) must exceed k + 1");
    ProductComparison r;
    r.series = 0;
    for (const auto& [n, c] : series.terms)
        r.series += c.to_complex() * std::exp(-s * std::log(n.convert_to<double>()));
    r.product = prefactor;
    for (const EulerFactor& ef : factors) {
        std::complex<double> q = ef.eval(s);
        r.product *= q;
        r.tail_diag += std::abs(q - std::complex<double>(1, 0));
    }
    r.gap = std::abs(r.series - r.product);
    return r;
}

} // namespace vvmf
