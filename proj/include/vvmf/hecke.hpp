#pragma once

#include "vvmf/fourier.hpp"
#include "vvmf/gauss.hpp"
#include "vvmf/weil.hpp"

#include <array>

namespace vvmf {

/// Right-coset representatives of the double coset of diag(p^2, 1):
/// g(p^2), beta_h = (p,h;0,p) for units h mod p, gamma_b = (1,b;0,p^2).
enum class RepTag { Gp2, BetaH, GammaB };
struct CosetRep {
    RepTag tag;
    Integer p;
    Integer par; // h for BetaH, b for GammaB, unused for Gp2
};
std::vector<CosetRep> coset_reps(const Integer& p);

/// Action of a representative on the group-algebra basis vector e_lam,
/// returned over A.elements(). BetaH on a nontrivial module needs the parent
/// lattice (df, L) and an odd p.
CycVector act_rep(const FiniteQuadraticModule& A, const CosetRep& rep, const FqElement& lam,
                  const DiscriminantForm* df, const Lattice* L);

/// Independent evaluation of the beta_h action through the rescaled-lattice
/// sum; compares with act_rep and returns the verdict.
bool creutzig_crosscheck(const DiscriminantForm& df, const Lattice& L, const Integer& p,
                         const Integer& h, const FqElement& lam);

/// e_lam | g*(m^2) = sum of e_sigma over m sigma = lam; checks the matrix
/// adjoint relation and the torsion-sum identity
/// e_lam | g(m^2) | g*(m^2) = sum over sigma in Df[m] of e_{lam+sigma}.
bool gstar_adjointness(const FiniteQuadraticModule& A, const Integer& m);

/// Reading of the middle-term phase in the bad-prime coefficient formula:
/// the g_p argument is n - q(p l) (QOfPLift) or n - p q(l) (PTimesQLift).
enum class MiddlePhase { QOfPLift, PTimesQLift };

/// Hecke operator on coefficients by summing the three coset branches
/// formally; output truncated to n_max / p^2. df/L may be null for the
/// trivial module.
FourierExpansion hecke_direct(const FourierExpansion& f, const Integer& p,
                              const DiscriminantForm* df, const Lattice* L);

/// Closed coefficient formula for even signature and p coprime to the level.
FourierExpansion hecke_closed_even(const FourierExpansion& f, const Integer& p);

/// Closed coefficient formula for odd signature, odd p coprime to the level.
FourierExpansion hecke_closed_odd(const FourierExpansion& f, const Integer& p);

/// Closed coefficient formula for arbitrary odd p (bad primes allowed).
FourierExpansion hecke_closed_bad(const FourierExpansion& f, const Integer& p,
                                  const DiscriminantForm* df, const Lattice* L,
                                  MiddlePhase phase = MiddlePhase::QOfPLift);

struct EigenReport {
    Cyclotomic eigenvalue;
    bool exact = false;      // residual identically zero over all tested indices
    long indices_tested = 0;
};

/// Certifies g = eigenvalue * f on the common truncation range.
EigenReport eigenvalue_extract(const FourierExpansion& f, const FourierExpansion& g);

/// Strict bound |lam_m| < m^{k-2} p(p+1) |Df[m]|, compared through squares.
bool kohnen_bound_check(const Cyclotomic& eigenvalue, const Integer& m, int k2,
                        const FiniteQuadraticModule& A);

/// Formal sum of right cosets, each labelled by its Hermite normal form
/// (a, b; 0, d) with a, d > 0 and 0 <= b < d; rational multiplicities.
struct DoubleCosetSum {
    std::map<std::array<Integer, 3>, Rational> terms;

    bool operator==(const DoubleCosetSum& o) const { return terms == o.terms; }
};

std::array<Integer, 3> hnf_label(Integer a, Integer b, Integer c, Integer d);
DoubleCosetSum dc_H(const Integer& p, unsigned r); // cosets of det p^r, content 1
DoubleCosetSum dc_TpI(const Integer& p);
DoubleCosetSum dc_add(const DoubleCosetSum& x, const DoubleCosetSum& y);
DoubleCosetSum dc_scale(const Rational& s, const DoubleCosetSum& x);
DoubleCosetSum dc_mul(const DoubleCosetSum& x, const DoubleCosetSum& y);
Rational dc_degree(const DoubleCosetSum& x); // total multiplicity

/// Verifies the two recursion identities at (p, r): the step relation for
/// H(p^{r+1}) (r >= 1) and the square relation for H(p^{r+2}) (r >= 2).
bool recursion_check(const Integer& p, unsigned r);

} // namespace vvmf
