#pragma once

#include "vvmf/lattice.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace vvmf {

/// Element of a finite quadratic module: coordinates with respect to the
/// invariant-factor generators, reduced mod the orders.
struct FqElement {
    std::vector<Integer> x;
    bool operator==(const FqElement& o) const { return x == o.x; }
    bool operator<(const FqElement& o) const { return x < o.x; }
};

class FiniteQuadraticModule;
struct DiscriminantForm;
DiscriminantForm discriminant_form(const Lattice& L);

/// Finite abelian group with Q/Z-valued quadratic form: cyclic generator
/// orders (all > 1, invariant factors when built from a lattice), q on
/// generators, and the bilinear form b(x,y) = q(x+y) - q(x) - q(y) mod 1.
class FiniteQuadraticModule {
public:
    /// Trivial module (also what trivial() returns).
    FiniteQuadraticModule() = default;

    /// Direct construction from generator data; validates well-definedness
    /// and non-degeneracy, and derives sig8 from the Gauss sum.
    FiniteQuadraticModule(std::vector<Integer> orders, std::vector<Rational> q_gens,
                          QMatrix b_gens);

    static FiniteQuadraticModule trivial();
    static FiniteQuadraticModule direct_sum(const FiniteQuadraticModule& a,
                                            const FiniteQuadraticModule& b);

    std::size_t ngens() const { return orders_.size(); }
    const std::vector<Integer>& orders() const { return orders_; }
    const Integer& size() const { return size_; }
    const Integer& level() const { return level_; }
    int sig8() const { return sig8_; }

    FqElement zero() const { return FqElement{std::vector<Integer>(ngens(), 0)}; }
    FqElement reduce(std::vector<Integer> raw) const;
    FqElement add(const FqElement& a, const FqElement& b) const;
    FqElement neg(const FqElement& a) const;
    FqElement smul(const Integer& n, const FqElement& a) const;
    bool is_zero(const FqElement& a) const;

    Rational qbar(const FqElement& a) const;                    // in [0,1)
    Rational bbar(const FqElement& a, const FqElement& b) const; // in [0,1)

    /// Enumeration in a fixed canonical order; index_of inverts element_at.
    std::vector<FqElement> elements() const;
    std::size_t index_of(const FqElement& a) const;
    FqElement element_at(std::size_t idx) const;

    std::vector<FqElement> torsion(const Integer& n) const;   // Df[n]
    std::vector<FqElement> multiples(const Integer& n) const; // Df^n
    std::vector<FqElement> isotropic_elements() const;

    /// Solutions y of n*y = a (empty when a is not an n-th multiple).
    std::vector<FqElement> divide_by(const Integer& n, const FqElement& a) const;

    /// Sum of e(q(lambda)) over the module; equals sqrt(|Df|) e(sig8/8).
    Cyclotomic gauss_sum_total() const;

    bool operator==(const FiniteQuadraticModule& o) const {
        return orders_ == o.orders_ && qdiag_ == o.qdiag_;
    }

private:
    std::vector<Integer> orders_;
    std::vector<Rational> qdiag_; // q(g_i) mod 1
    QMatrix bmat_;                // b(g_i, g_j) mod 1
    Integer size_ = 1, level_ = 1;
    int sig8_ = 0;

    void finish(std::optional<int> known_sig8);
    friend struct DiscriminantForm;
    friend DiscriminantForm discriminant_form(const Lattice& L);
};

/// Discriminant form L'/L with round-tripping projection and lift.
struct DiscriminantForm {
    FiniteQuadraticModule module;
    /// lift(generator i) as a dual vector in rational lattice-basis coordinates.
    QMatrix gen_lifts; // rank x ngens
    IMatrix gram;      // parent Gram, for projection

    /// v must be a dual vector (G v integral).
    FqElement project(const QVector& v) const;
    QVector lift(const FqElement& a) const;

private:
    friend DiscriminantForm discriminant_form(const Lattice& L);
    IMatrix umat; // SNF row transform, projection bookkeeping
    std::vector<Eigen::Index> kept; // indices of nontrivial invariant factors
};

DiscriminantForm discriminant_form(const Lattice& L);

/// Sylow p-part as an orthogonal summand, with the projection lambda -> lambda_p.
struct SylowComponent {
    FiniteQuadraticModule sub;
    std::vector<std::size_t> parent_gen; // parent index per sub generator
    std::vector<Integer> mult;           // prime-to-p part m_i of the parent order
    std::vector<Integer> proj_unit;      // m_i^{-1} mod p^{a_i}

    FqElement project(const FqElement& parent_elt) const;
    /// Embed a sub element back into the parent module.
    FqElement embed(const FiniteQuadraticModule& parent, const FqElement& sub_elt) const;
};

SylowComponent p_component(const FiniteQuadraticModule& A, const Integer& p);

/// C with C+1 = #{mu : q(mu) = q(lambda)}; C = 0 at lambda = 0. Requires the
/// module anisotropic (only 0 is isotropic) when require_anisotropic is set.
long orbit_count_norm(const FiniteQuadraticModule& Ap, const FqElement& lam,
                      bool require_anisotropic = true);

/// All group automorphisms preserving q; throws when |A|^ngens exceeds the cap.
std::vector<std::vector<FqElement>> automorphisms_bruteforce(
    const FiniteQuadraticModule& A, const Integer& size_cap);

/// Orbit of lam under a list of automorphisms (given as generator images).
std::vector<FqElement> orbit_of(const FiniteQuadraticModule& A, const FqElement& lam,
                                const std::vector<std::vector<FqElement>>& autos);

} // namespace vvmf
