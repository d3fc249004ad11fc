#include "vvmf/fourier.hpp"

#include <stdexcept>

namespace vvmf {

FourierExpansion::FourierExpansion(FiniteQuadraticModule A, int k2, Rational n_max)
    : module_(std::move(A)), k2_(k2), n_max_(std::move(n_max)) {
    if (n_max_ < 0) throw std::domain_error("FourierExpansion: negative n_max");
}

void FourierExpansion::set(const FqElement& lam, const Rational& n, Cyclotomic c) {
    if (lam.x.size() != module_.ngens())
        throw std::domain_error("FourierExpansion: wrong coordinate count");
    if (n > n_max_) throw TruncationExceeded("FourierExpansion: index beyond n_max");
    if (!is_integer(n - module_.qbar(lam)))
        throw std::domain_error("FourierExpansion: index residue mismatch");
    auto key = std::make_pair(module_.reduce(lam.x), n);
    if (c.is_zero())
        coeffs_.erase(key);
    else
        coeffs_[key] = std::move(c);
}

void FourierExpansion::add(const FqElement& lam, const Rational& n, const Cyclotomic& c) {
    set(lam, n, coeff(lam, n) + c);
}

Cyclotomic FourierExpansion::coeff(const FqElement& lam, const Rational& n) const {
    if (n > n_max_) throw TruncationExceeded("FourierExpansion: query beyond n_max");
    auto it = coeffs_.find(std::make_pair(module_.reduce(lam.x), n));
    return it == coeffs_.end() ? Cyclotomic(0) : it->second;
}

FourierExpansion FourierExpansion::truncated(const Rational& new_n_max) const {
    if (new_n_max > n_max_) throw TruncationExceeded("truncated: cannot extend");
    FourierExpansion r(module_, k2_, new_n_max);
    for (const auto& [key, c] : coeffs_)
        if (key.second <= new_n_max) r.coeffs_[key] = c;
    return r;
}

FourierExpansion FourierExpansion::operator+(const FourierExpansion& o) const {
    if (!(module_ == o.module_) || k2_ != o.k2_)
        throw std::domain_error("FourierExpansion: mismatched operands");
    FourierExpansion r(module_, k2_, n_max_ < o.n_max_ ? n_max_ : o.n_max_);
    for (const auto& [key, c] : coeffs_)
        if (key.second <= r.n_max_) r.add(key.first, key.second, c);
    for (const auto& [key, c] : o.coeffs_)
        if (key.second <= r.n_max_) r.add(key.first, key.second, c);
    return r;
}

FourierExpansion FourierExpansion::scaled(const Cyclotomic& s) const {
    FourierExpansion r(module_, k2_, n_max_);
    for (const auto& [key, c] : coeffs_) r.set(key.first, key.second, c * s);
    return r;
}

bool FourierExpansion::operator==(const FourierExpansion& o) const {
    return module_ == o.module_ && k2_ == o.k2_ && n_max_ == o.n_max_ &&
           coeffs_ == o.coeffs_;
}

bool FourierExpansion::is_zero() const { return coeffs_.empty(); }

FourierExpansion theta_series(const DiscriminantForm& df, const Lattice& L,
                              const Rational& n_max) {
    if (!L.is_positive_definite())
        throw std::domain_error("theta_series: lattice not positive definite");
    FourierExpansion f(df.module, static_cast<int>(L.rank()), n_max);
    for (const FqElement& lam : df.module.elements()) {
        QVector shift;
        shift = df.lift(lam);
        std::map<Rational, Integer> counts;
        for (const auto& [v, norm] : L.short_vectors(shift, n_max)) counts[norm] += 1;
        for (const auto& [norm, cnt] : counts)
            f.set(lam, norm, Cyclotomic(Rational(cnt)));
    }
    return f;
}

FourierExpansion uplift(const FourierExpansion& f, const DiscriminantForm& df_L,
                        const DiscriminantForm& df_M, const IMatrix& B) {
    if (!(f.module() == df_L.module)) throw std::domain_error("uplift: module mismatch");
    const Eigen::Index r = B.rows();
    // B columns are the sublattice basis in L-coordinates; the Gram of M must
    // be B^T G B.
    IMatrix check;
    {
        IMatrix gb = exact_mul(df_L.gram, B);
        IMatrix bt;
        bt.setZero(B.cols(), B.rows());
        for (Eigen::Index i = 0; i < B.rows(); ++i)
            for (Eigen::Index j = 0; j < B.cols(); ++j) bt(j, i) = B(i, j);
        check = exact_mul(bt, gb);
    }
    for (Eigen::Index i = 0; i < r; ++i)
        for (Eigen::Index j = 0; j < r; ++j)
            if (check(i, j) != df_M.gram(i, j))
                throw std::domain_error("uplift: basis does not present the sublattice");
    FourierExpansion g(df_M.module, f.k2(), f.n_max());
    for (const FqElement& mu : df_M.module.elements()) {
        QVector vm;
        vm = df_M.lift(mu);
        // coordinates of the lift with respect to L
        QVector x;
        x.setZero(r);
        for (Eigen::Index i = 0; i < r; ++i)
            for (Eigen::Index j = 0; j < r; ++j) x(i) += Rational(B(i, j)) * vm(j);
        bool in_Ldual = true;
        for (Eigen::Index i = 0; i < r && in_Ldual; ++i) {
            Rational s(0);
            for (Eigen::Index j = 0; j < r; ++j) s += Rational(df_L.gram(i, j)) * x(j);
            if (!is_integer(s)) in_Ldual = false;
        }
        if (!in_Ldual) continue;
        FqElement lam = df_L.project(x);
        for (const auto& [key, c] : f.coeffs())
            if (key.first == lam) g.set(mu, key.second, c);
    }
    return g;
}

std::vector<Integer> eta_power(unsigned r, long limit) {
    if (limit < 0) throw std::domain_error("eta_power: negative limit");
    const std::size_t n = static_cast<std::size_t>(limit) + 1;
    // pentagonal number expansion of prod (1 - q^m)
    std::vector<Integer> base(n, 0);
    for (long j = 0;; ++j) {
        long e1 = j * (3 * j - 1) / 2, e2 = j * (3 * j + 1) / 2;
        if (e1 > limit && e2 > limit) break;
        Integer s = (j % 2 == 0) ? 1 : -1;
        if (e1 <= limit) base[static_cast<std::size_t>(e1)] += s;
        if (e2 <= limit && j > 0) base[static_cast<std::size_t>(e2)] += s;
    }
    auto mul = [n](const std::vector<Integer>& a, const std::vector<Integer>& b) {
        std::vector<Integer> c(n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            if (a[i] == 0) continue;
            for (std::size_t j = 0; i + j < n; ++j)
                if (b[j] != 0) c[i + j] += a[i] * b[j];
        }
        return c;
    };
    std::vector<Integer> acc(n, 0), sq = base;
    acc[0] = 1;
    unsigned e = r;
    while (e > 0) {
        if (e & 1u) acc = mul(acc, sq);
        e >>= 1u;
        if (e > 0) sq = mul(sq, sq);
    }
    return acc;
}

TauTable::TauTable(long dense_limit) {
    auto e24 = eta_power(24, dense_limit);
    dense_.resize(static_cast<std::size_t>(dense_limit) + 1, 0);
    // tau(n) is the coefficient of q^{n-1} in eta(q)^24 / q-shift convention
    for (long m = 1; m <= dense_limit; ++m)
        dense_[static_cast<std::size_t>(m)] = e24[static_cast<std::size_t>(m - 1)];
}

Integer TauTable::tau_prime_power(const Integer& p, unsigned a) const {
    Integer p11 = pow_int(p, 11);
    Integer tm1 = 1, t0 = tau(p);
    if (a == 0) return 1;
    for (unsigned j = 1; j < a; ++j) {
        Integer t1 = tau(p) * t0 - p11 * tm1;
        tm1 = t0;
        t0 = t1;
    }
    return t0;
}

Integer TauTable::tau(const Integer& n) const {
    if (n <= 0) throw std::domain_error("tau: positive index required");
    if (n < Integer(dense_.size())) return dense_[static_cast<std::size_t>(to_i64(n))];
    auto it = memo_.find(n);
    if (it != memo_.end()) return it->second;
    Integer r = 1;
    for (const auto& [p, a] : factorize(n)) {
        if (p >= Integer(dense_.size()))
            throw std::domain_error("tau: prime beyond dense range");
        r *= tau_prime_power(p, static_cast<unsigned>(a));
    }
    memo_[n] = r;
    return r;
}

FourierExpansion delta24(const Rational& n_max) {
    if (!is_integer(n_max)) throw std::domain_error("delta24: integral n_max expected");
    long N = to_i64(num(n_max));
    auto e24 = eta_power(24, N > 0 ? N - 1 : 0);
    FiniteQuadraticModule triv = FiniteQuadraticModule::trivial();
    FourierExpansion f(triv, 24, n_max);
    FqElement z = triv.zero();
    for (long m = 1; m <= N; ++m)
        f.set(z, Rational(m), Cyclotomic(Rational(e24[static_cast<std::size_t>(m - 1)])));
    return f;
}

Rational abscissa_sigma(bool even_rank, bool level_support_only) {
    if (even_rank) return Rational(1, 2);
    return level_support_only ? Rational(5, 16) : Rational(1, 4);
}

} // namespace vvmf
