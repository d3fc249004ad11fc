#pragma once

#include "vvmf/cyclotomic.hpp"

#include <Eigen/Core>

namespace Eigen {

// Treat Cyclotomic as an exact real-coded scalar; conjugation and products are
// done through explicit free functions, not Eigen's expression kernels.
template <>
struct NumTraits<vvmf::Cyclotomic> {
    using Real = vvmf::Cyclotomic;
    using NonInteger = vvmf::Cyclotomic;
    using Nested = vvmf::Cyclotomic;
    using Literal = vvmf::Cyclotomic;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 64,
        MulCost = 256
    };
    static inline Real epsilon() { return vvmf::Cyclotomic(0); }
    static inline Real dummy_precision() { return vvmf::Cyclotomic(0); }
    static inline int digits10() { return 0; }
};

} // namespace Eigen

namespace vvmf {

using CycMatrix = Eigen::Matrix<Cyclotomic, Eigen::Dynamic, Eigen::Dynamic>;
using CycVector = Eigen::Matrix<Cyclotomic, Eigen::Dynamic, 1>;
using IMatrix = Eigen::Matrix<Integer, Eigen::Dynamic, Eigen::Dynamic>;
using IVector = Eigen::Matrix<Integer, Eigen::Dynamic, 1>;
using QMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using QVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

/// Plain-loop matrix product. Eigen's product kernels are avoided for
/// multiprecision scalars (greedy boost constructors break the scalar-arg
/// promotion traits on this toolchain).
template <typename S>
Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>
exact_mul(const Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>& a,
          const Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>& b) {
    Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic> r;
    r.setZero(a.rows(), b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index k = 0; k < a.cols(); ++k)
            for (Eigen::Index j = 0; j < b.cols(); ++j)
                r(i, j) += a(i, k) * b(k, j);
    return r;
}

template <typename S>
Eigen::Matrix<S, Eigen::Dynamic, 1>
exact_mul_vec(const Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>& a,
              const Eigen::Matrix<S, Eigen::Dynamic, 1>& v) {
    Eigen::Matrix<S, Eigen::Dynamic, 1> r;
    r.setZero(a.rows());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index k = 0; k < a.cols(); ++k)
            r(i) += a(i, k) * v(k);
    return r;
}

inline CycMatrix cyc_identity(Eigen::Index n) {
    CycMatrix m = CycMatrix::Constant(n, n, Cyclotomic(0));
    for (Eigen::Index i = 0; i < n; ++i) m(i, i) = Cyclotomic(1);
    return m;
}

inline CycMatrix cyc_zero(Eigen::Index r, Eigen::Index c) {
    return CycMatrix::Constant(r, c, Cyclotomic(0));
}

inline CycMatrix cyc_mul(const CycMatrix& a, const CycMatrix& b) {
    CycMatrix r = cyc_zero(a.rows(), b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index k = 0; k < a.cols(); ++k) {
            if (a(i, k).is_zero()) continue;
            for (Eigen::Index j = 0; j < b.cols(); ++j)
                r(i, j) += a(i, k) * b(k, j);
        }
    return r;
}

/// Conjugate transpose.
inline CycMatrix cyc_adjoint(const CycMatrix& a) {
    CycMatrix r = cyc_zero(a.cols(), a.rows());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            r(j, i) = a(i, j).conj();
    return r;
}

inline CycMatrix cyc_scale(const Cyclotomic& s, const CycMatrix& a) {
    CycMatrix r = a;
    for (Eigen::Index i = 0; i < r.rows(); ++i)
        for (Eigen::Index j = 0; j < r.cols(); ++j)
            r(i, j) *= s;
    return r;
}

inline bool cyc_equal(const CycMatrix& a, const CycMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            if (a(i, j) != b(i, j)) return false;
    return true;
}

inline bool cyc_is_identity(const CycMatrix& a) {
    return cyc_equal(a, cyc_identity(a.rows()));
}

} // namespace vvmf
