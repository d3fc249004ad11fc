#pragma once

#include "vvmf/cyc_matrix.hpp"

#include <vector>

namespace vvmf {

struct SmithDecomposition {
    IMatrix U, D, V; // U * A * V = D, U and V unimodular, D diagonal with d1 | d2 | ...
};

SmithDecomposition smith_normal_form(const IMatrix& A);

/// Even integral lattice given by its Gram matrix; beta(x,y) = x^T G y and
/// q(x) = beta(x,x)/2.
class Lattice {
public:
    explicit Lattice(IMatrix gram);

    int rank() const { return static_cast<int>(gram_.rows()); }
    const IMatrix& gram() const { return gram_; }
    Integer det() const;

    /// (b+, b-) computed by exact rational diagonalization.
    std::pair<int, int> signature() const;
    bool is_positive_definite() const { return signature().first == rank(); }

    Rational q(const QVector& v) const;       // v^T G v / 2
    Rational beta(const QVector& v, const QVector& w) const;
    Integer q_int(const IVector& v) const;

    /// L(n): same group, form scaled by n.
    Lattice rescale(const Integer& n) const;

    /// All l in L + shift with q(l) <= bound, shift in lattice-basis rational
    /// coordinates. Output sorted lexicographically by integer part.
    std::vector<std::pair<QVector, Rational>> short_vectors(const QVector& shift,
                                                            const Rational& bound) const;

private:
    IMatrix gram_;
};

/// Jordan-type counts of L/p^n L for odd p: n_k vectors of diagonal valuation
/// k (0 <= k <= n-1) after orthogonal splitting, and R = sum (n-k) n_k.
struct JordanCounts {
    Integer p;
    unsigned n = 0;
    std::vector<long> n_k; // size n
    long R = 0;
};

JordanCounts jordan_counts(const Lattice& L, const Integer& p, unsigned n);

} // namespace vvmf
