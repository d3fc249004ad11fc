#pragma once

#include "vvmf/fqm.hpp"
#include "vvmf/gauss.hpp"

namespace vvmf {

/// Element of the metaplectic double cover: an SL2(Z) matrix together with a
/// branch bit, phi = branch * principal sqrt of j(gamma, tau).
struct MetaplecticElement {
    Integer a = 1, b = 0, c = 0, d = 1;
    int branch = 1; // +1 or -1

    bool operator==(const MetaplecticElement& o) const {
        return a == o.a && b == o.b && c == o.c && d == o.d && branch == o.branch;
    }
};

MetaplecticElement mp_identity();
MetaplecticElement mp_T(const Integer& power = 1);
MetaplecticElement mp_S();
/// Z = (S)^2 = (-I, phi(tau) = i), encoded with branch +1.
MetaplecticElement mp_Z();
MetaplecticElement mp_make(const Integer& a, const Integer& b, const Integer& c,
                           const Integer& d, int branch);

/// Exact +-1 cocycle: phi1(g2 tau) phi2(tau) = sigma * principal sqrt of
/// j(g1 g2, tau), decided by quadrant bookkeeping at tau = i.
int mp_cocycle(const MetaplecticElement& g1, const MetaplecticElement& g2);

MetaplecticElement mp_compose(const MetaplecticElement& g1, const MetaplecticElement& g2);
MetaplecticElement mp_inverse(const MetaplecticElement& g);

/// Word over the generators: 'S' steps and 'T'-power steps whose ordered
/// product reproduces the input matrix (with some branch).
struct WordStep {
    bool is_S = false;
    Integer t_power = 0;
};
std::vector<WordStep> word_decompose(const Integer& a, const Integer& b, const Integer& c,
                                     const Integer& d);

/// Section on matrices with c = 0 mod 4 and d = 1 mod 4: branch is the
/// quadratic character eps_d^{-1} (c/d). Other odd d would need a branch
/// outside {+-1} and are rejected.
MetaplecticElement section_s(const Integer& a, const Integer& b, const Integer& c,
                             const Integer& d);

/// Weil representation of Mp2(Z) on the group algebra of a finite quadratic
/// module, fixed by the generator matrices.
class WeilRep {
public:
    explicit WeilRep(FiniteQuadraticModule A);

    const FiniteQuadraticModule& module() const { return module_; }
    Eigen::Index dim() const { return static_cast<Eigen::Index>(elements_.size()); }
    const std::vector<FqElement>& basis() const { return elements_; }

    const CycMatrix& rho_T() const { return rhoT_; }
    const CycMatrix& rho_S() const { return rhoS_; }
    const CycMatrix& rho_Z() const { return rhoZ_; }

    /// Diagonal rho(T)^a.
    CycMatrix rho_T_power(const Integer& a) const;

    /// rho(g) via word decomposition; a homomorphism, independent of the word.
    CycMatrix rho_of(const MetaplecticElement& g) const;

    /// <rho(g) e_lam, e_mu>: the (mu, lam) entry of rho_of(g).
    Cyclotomic rho_coeff(const FqElement& lam, const FqElement& mu,
                         const MetaplecticElement& g) const;

    /// Verifies rho(g) = chi * (lambda -> d lambda) for b = c = 0 mod N;
    /// returns (chi, d). Throws when the matrix has a different shape.
    std::pair<Cyclotomic, Integer> borcherds_shape_check(const MetaplecticElement& g) const;

private:
    FiniteQuadraticModule module_;
    std::vector<FqElement> elements_;
    CycMatrix rhoT_, rhoS_, rhoZ_;
    Cyclotomic deck_; // rho((I,-1)) = e(-sig8/2), scalar
};

} // namespace vvmf
