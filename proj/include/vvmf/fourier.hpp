#pragma once

#include "vvmf/fqm.hpp"

#include <map>

namespace vvmf {

/// Query past the stored range: callers must not treat missing data as zero.
struct TruncationExceeded : std::domain_error {
    using std::domain_error::domain_error;
};

/// Truncated Fourier expansion of a vector-valued modular form. Indices are
/// (lambda, n) with n = q(lambda) mod 1 and n <= n_max; an absent in-range
/// index is a zero coefficient.
class FourierExpansion {
public:
    FourierExpansion(FiniteQuadraticModule A, int k2, Rational n_max);

    const FiniteQuadraticModule& module() const { return module_; }
    int k2() const { return k2_; }
    const Rational& n_max() const { return n_max_; }

    void set(const FqElement& lam, const Rational& n, Cyclotomic c);
    void add(const FqElement& lam, const Rational& n, const Cyclotomic& c);
    Cyclotomic coeff(const FqElement& lam, const Rational& n) const;

    const std::map<std::pair<FqElement, Rational>, Cyclotomic>& coeffs() const {
        return coeffs_;
    }

    FourierExpansion truncated(const Rational& new_n_max) const;
    FourierExpansion operator+(const FourierExpansion& o) const;
    FourierExpansion scaled(const Cyclotomic& s) const;
    bool operator==(const FourierExpansion& o) const;
    bool is_zero() const;

private:
    FiniteQuadraticModule module_;
    int k2_; // 2k
    Rational n_max_;
    std::map<std::pair<FqElement, Rational>, Cyclotomic> coeffs_;
};

/// Theta series of a positive definite even lattice: weight rank/2,
/// a(lambda, n) counts vectors of norm n in L + lift(lambda).
FourierExpansion theta_series(const DiscriminantForm& df, const Lattice& L,
                              const Rational& n_max);

/// Lift along a finite-index sublattice M <= L with basis columns B (in
/// L-coordinates): component at mu in M'/M copies the L'/L component when mu
/// lies in L'/M, else vanishes.
FourierExpansion uplift(const FourierExpansion& f, const DiscriminantForm& df_L,
                        const DiscriminantForm& df_M, const IMatrix& B);

/// Ramanujan tau via the eta product, with the standard multiplicative
/// extension for indices beyond the dense range.
class TauTable {
public:
    explicit TauTable(long dense_limit = 700);
    Integer tau(const Integer& n) const;

private:
    std::vector<Integer> dense_;
    mutable std::map<Integer, Integer> memo_;
    Integer tau_prime_power(const Integer& p, unsigned a) const;
};

/// Delta as a weight-12 expansion over the trivial module.
FourierExpansion delta24(const Rational& n_max);

/// Coefficients of the r-th power of eta without the q^{r/24} prefactor:
/// prod (1 - q^m)^r through q^limit.
std::vector<Integer> eta_power(unsigned r, long limit);

/// Convergence abscissa sigma of the symmetric-square L-series (series
/// converges for Re(s) > k + 1 - 2 sigma).
Rational abscissa_sigma(bool even_rank, bool level_support_only);

} // namespace vvmf
