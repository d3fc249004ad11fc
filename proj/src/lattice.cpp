#include "vvmf/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace vvmf {

namespace {

Eigen::Index pivot_search(const IMatrix& D, Eigen::Index t) {
    // smallest nonzero absolute value in the trailing block
    Eigen::Index bi = -1, bj = -1;
    Integer best = 0;
    for (Eigen::Index i = t; i < D.rows(); ++i)
        for (Eigen::Index j = t; j < D.cols(); ++j) {
            if (D(i, j) == 0) continue;
            Integer a = abs(D(i, j));
            if (bi < 0 || a < best) { best = a; bi = i; bj = j; }
        }
    return bi < 0 ? -1 : bi * D.cols() + bj;
}

} // namespace

SmithDecomposition smith_normal_form(const IMatrix& A) {
    const Eigen::Index m = A.rows(), n = A.cols();
    SmithDecomposition S;
    S.D = A;
    S.U = IMatrix::Zero(m, m);
    S.V = IMatrix::Zero(n, n);
    for (Eigen::Index i = 0; i < m; ++i) S.U(i, i) = 1;
    for (Eigen::Index i = 0; i < n; ++i) S.V(i, i) = 1;
    IMatrix& D = S.D;

    for (Eigen::Index t = 0; t < std::min(m, n); ++t) {
        for (;;) {
            Eigen::Index loc = pivot_search(D, t);
            if (loc < 0) break;
            Eigen::Index pi = loc / n, pj = loc % n;
            if (pi != t) { D.row(pi).swap(D.row(t)); S.U.row(pi).swap(S.U.row(t)); }
            if (pj != t) { D.col(pj).swap(D.col(t)); S.V.col(pj).swap(S.V.col(t)); }
            bool clean = true;
            for (Eigen::Index i = t + 1; i < m; ++i) {
                Integer f = floor_div(D(i, t), D(t, t));
                if (f != 0) {
                    D.row(i) -= f * D.row(t);
                    S.U.row(i) -= f * S.U.row(t);
                }
                if (D(i, t) != 0) clean = false;
            }
            for (Eigen::Index j = t + 1; j < n; ++j) {
                Integer f = floor_div(D(t, j), D(t, t));
                if (f != 0) {
                    D.col(j) -= f * D.col(t);
                    S.V.col(j) -= f * S.V.col(t);
                }
                if (D(t, j) != 0) clean = false;
            }
            if (!clean) continue;
            // divisibility: fold any non-multiple into column t and restart
            bool fixed = true;
            for (Eigen::Index i = t + 1; i < m && fixed; ++i)
                for (Eigen::Index j = t + 1; j < n && fixed; ++j)
                    if (D(i, j) % D(t, t) != 0) {
                        D.col(t) += D.col(j);
                        S.V.col(t) += S.V.col(j);
                        fixed = false;
                    }
            if (fixed) break;
        }
        if (D(t, t) < 0) { D.row(t) = -D.row(t); S.U.row(t) = -S.U.row(t); }
    }
    return S;
}

Lattice::Lattice(IMatrix gram) : gram_(std::move(gram)) {
    if (gram_.rows() != gram_.cols()) throw std::invalid_argument("Lattice: gram not square");
    for (Eigen::Index i = 0; i < gram_.rows(); ++i) {
        if (gram_(i, i) % 2 != 0) throw std::invalid_argument("Lattice: diagonal must be even");
        for (Eigen::Index j = 0; j < i; ++j)
            if (gram_(i, j) != gram_(j, i)) throw std::invalid_argument("Lattice: gram not symmetric");
    }
    if (det() == 0) throw std::invalid_argument("Lattice: degenerate gram");
}

Integer Lattice::det() const {
    // fraction-free Gaussian elimination (Bareiss)
    IMatrix M = gram_;
    const Eigen::Index n = M.rows();
    if (n == 0) return 1;
    Integer prev = 1;
    int sign = 1;
    for (Eigen::Index t = 0; t < n - 1; ++t) {
        if (M(t, t) == 0) {
            Eigen::Index r = -1;
            for (Eigen::Index i = t + 1; i < n; ++i)
                if (M(i, t) != 0) { r = i; break; }
            if (r < 0) return 0;
            M.row(t).swap(M.row(r));
            sign = -sign;
        }
        for (Eigen::Index i = t + 1; i < n; ++i)
            for (Eigen::Index j = t + 1; j < n; ++j)
                M(i, j) = (M(i, j) * M(t, t) - M(i, t) * M(t, j)) / prev;
        prev = M(t, t);
    }
    return sign * M(n - 1, n - 1);
}

std::pair<int, int> Lattice::signature() const {
    const Eigen::Index n = gram_.rows();
    QMatrix M(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            M(i, j) = Rational(gram_(i, j));
    int pos = 0, neg = 0;
    for (Eigen::Index t = 0; t < n; ++t) {
        if (M(t, t) == 0) {
            Eigen::Index r = -1;
            for (Eigen::Index i = t; i < n; ++i)
                if (M(i, i) != 0) { r = i; break; }
            if (r < 0) {
                // all diagonal zero; make one via e_t += e_j
                Eigen::Index jj = -1;
                for (Eigen::Index i = t; i < n && jj < 0; ++i)
                    for (Eigen::Index j = t; j < n; ++j)
                        if (i != j && M(i, j) != 0) { r = i; jj = j; break; }
                if (r < 0) throw std::logic_error("signature: degenerate block");
                M.row(r) += M.row(jj);
                M.col(r) += M.col(jj);
            }
            if (r != t) {
                M.row(r).swap(M.row(t));
                M.col(r).swap(M.col(t));
            }
        }
        Rational piv = M(t, t);
        (piv > 0 ? pos : neg)++;
        for (Eigen::Index i = t + 1; i < n; ++i) {
            if (M(i, t) == 0) continue;
            Rational f = M(i, t) / piv;
            M.row(i) -= f * M.row(t);
            M.col(i) -= f * M.col(t);
        }
    }
    return {pos, neg};
}

Rational Lattice::q(const QVector& v) const { return beta(v, v) / 2; }

Rational Lattice::beta(const QVector& v, const QVector& w) const {
    Rational r = 0;
    for (Eigen::Index i = 0; i < gram_.rows(); ++i)
        for (Eigen::Index j = 0; j < gram_.cols(); ++j)
            r += v(i) * Rational(gram_(i, j)) * w(j);
    return r;
}

Integer Lattice::q_int(const IVector& v) const {
    Integer r = 0;
    for (Eigen::Index i = 0; i < gram_.rows(); ++i)
        for (Eigen::Index j = 0; j < gram_.cols(); ++j)
            r += v(i) * gram_(i, j) * v(j);
    return r / 2;
}

Lattice Lattice::rescale(const Integer& n) const {
    IMatrix g = gram_;
    for (Eigen::Index i = 0; i < g.rows(); ++i)
        for (Eigen::Index j = 0; j < g.cols(); ++j)
            g(i, j) *= n;
    return Lattice(g);
}

std::vector<std::pair<QVector, Rational>>
Lattice::short_vectors(const QVector& shift, const Rational& bound) const {
    if (!is_positive_definite()) throw std::domain_error("short_vectors: lattice not positive definite");
    if (bound < 0) return {};
    const Eigen::Index n = gram_.rows();

    // exact Cholesky-style split: q(v) = sum_i d_i (v_i + sum_{j>i} r_ij v_j)^2
    QMatrix M(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            M(i, j) = Rational(gram_(i, j)) / 2;
    QMatrix R;
    R.setZero(n, n);
    QVector d(n);
    for (Eigen::Index t = 0; t < n; ++t) {
        d(t) = M(t, t);
        for (Eigen::Index j = t; j < n; ++j) R(t, j) = M(t, j) / d(t);
        for (Eigen::Index i = t + 1; i < n; ++i)
            for (Eigen::Index j = t + 1; j < n; ++j)
                M(i, j) -= M(t, i) * M(t, j) / d(t);
    }

    std::vector<std::pair<QVector, Rational>> out;
    IVector x;
    x.setZero(n);
    // descend from coordinate n-1; T = weight consumed by processed coords
    auto bound_range = [](const Rational& c, const Rational& cap,
                          Integer& lo, Integer& hi, bool& empty) {
        // integer range for (x + c)^2 <= cap: float guess, exact adjustment
        double approx = std::sqrt(std::max(0.0, cap.convert_to<double>()));
        double cd = c.convert_to<double>();
        auto ok = [&](const Integer& v) {
            Rational t = Rational(v) + c;
            return t * t <= cap;
        };
        hi = Integer(static_cast<long long>(std::floor(-cd + approx)));
        while (ok(hi + 1)) ++hi;
        while (!ok(hi) && Rational(hi) + c > 0) --hi;
        lo = Integer(static_cast<long long>(std::ceil(-cd - approx)));
        while (ok(lo - 1)) --lo;
        while (!ok(lo) && Rational(lo) + c < 0) ++lo;
        empty = lo > hi || !ok(lo) || !ok(hi);
    };

    std::function<void(Eigen::Index, Rational)> rec = [&](Eigen::Index t, Rational used) {
        if (t < 0) {
            QVector v(n);
            Rational qv;
            for (Eigen::Index i = 0; i < n; ++i) v(i) = Rational(x(i)) + shift(i);
            qv = q(v);
            if (qv <= bound) out.emplace_back(v, qv);
            return;
        }
        Rational c = shift(t);
        for (Eigen::Index j = t + 1; j < n; ++j)
            c += R(t, j) * (Rational(x(j)) + shift(j));
        Rational cap = (bound - used) / d(t);
        if (cap < 0) return;
        Integer lo, hi;
        bool empty = false;
        bound_range(c, cap, lo, hi, empty);
        if (empty) return;
        for (Integer xi = lo; xi <= hi; ++xi) {
            x(t) = xi;
            Rational term = Rational(xi) + c;
            rec(t - 1, used + d(t) * term * term);
        }
    };
    rec(n - 1, 0);

    std::sort(out.begin(), out.end(), [n](const auto& a, const auto& b) {
        for (Eigen::Index i = 0; i < n; ++i) {
            if (a.first(i) != b.first(i)) return a.first(i) < b.first(i);
        }
        return false;
    });
    return out;
}

JordanCounts jordan_counts(const Lattice& L, const Integer& p, unsigned n) {
    if (p == 2) throw std::domain_error("jordan_counts: p must be odd");
    JordanCounts jc;
    jc.p = p;
    jc.n = n;
    jc.n_k.assign(n, 0);
    const Eigen::Index m = L.rank();
    Integer pn = pow_int(p, n);
    IMatrix B(m, m); // bilinear form mod p^n
    for (Eigen::Index i = 0; i < m; ++i)
        for (Eigen::Index j = 0; j < m; ++j)
            B(i, j) = imod(L.gram()(i, j), pn);

    auto val = [&](const Integer& a) -> long {
        if (imod(a, pn) == 0) return n; // capped
        return p_valuation(imod(a, pn), p);
    };

    std::vector<Eigen::Index> live(m);
    for (Eigen::Index i = 0; i < m; ++i) live[i] = i;

    while (!live.empty()) {
        // best diagonal and best off-diagonal valuation
        long best_d = n + 1, best_o = n + 1;
        std::size_t di = 0;
        std::size_t oi = 0, oj = 0;
        for (std::size_t a = 0; a < live.size(); ++a) {
            long v = val(B(live[a], live[a]));
            if (v < best_d) { best_d = v; di = a; }
            for (std::size_t b = a + 1; b < live.size(); ++b) {
                long w = val(B(live[a], live[b]));
                if (w < best_o) { best_o = w; oi = a; oj = b; }
            }
        }
        if (best_d >= static_cast<long>(n) && best_o >= static_cast<long>(n)) break;
        if (best_o < best_d) {
            // e_i += e_j moves the small off-diagonal valuation onto the diagonal
            Eigen::Index i = live[oi], j = live[oj];
            for (Eigen::Index t = 0; t < m; ++t)
                B(i, t) = imod(B(i, t) + B(j, t), pn);
            for (Eigen::Index t = 0; t < m; ++t)
                B(t, i) = imod(B(t, i) + B(t, j), pn);
            continue;
        }
        Eigen::Index piv = live[di];
        long k = best_d;
        ++jc.n_k[k];
        Integer pk = pow_int(p, k);
        Integer unit = B(piv, piv) / pk;
        Integer mod_rest = pn / pk;
        Integer uinv = inv_mod(unit, mod_rest);
        std::vector<Eigen::Index> next;
        for (std::size_t a = 0; a < live.size(); ++a) {
            if (a == di) continue;
            Eigen::Index w = live[a];
            Integer bw = B(piv, w);
            if (imod(bw, pn) != 0) {
                // v_p(bw) >= k since the pivot realizes the minimum valuation
                Integer c = imod((bw / pk) * uinv, mod_rest);
                for (Eigen::Index t = 0; t < m; ++t)
                    B(w, t) = imod(B(w, t) - c * B(piv, t), pn);
                for (Eigen::Index t = 0; t < m; ++t)
                    B(t, w) = imod(B(t, w) - c * B(t, piv), pn);
            }
            next.push_back(w);
        }
        live = std::move(next);
    }
    for (unsigned k = 0; k < n; ++k)
        jc.R += static_cast<long>(n - k) * jc.n_k[k];
    return jc;
}

} // namespace vvmf
