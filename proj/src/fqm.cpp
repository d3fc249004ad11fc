#include "vvmf/fqm.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace vvmf {

namespace {

// Exact inverse of a nonsingular integer matrix, as rationals.
QMatrix qinverse(const IMatrix& M) {
    const Eigen::Index n = M.rows();
    QMatrix A(n, 2 * n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) A(i, j) = Rational(M(i, j));
        for (Eigen::Index j = 0; j < n; ++j) A(i, n + j) = Rational(i == j ? 1 : 0);
    }
    for (Eigen::Index t = 0; t < n; ++t) {
        Eigen::Index piv = -1;
        for (Eigen::Index i = t; i < n; ++i)
            if (A(i, t) != 0) { piv = i; break; }
        if (piv < 0) throw std::domain_error("qinverse: singular matrix");
        if (piv != t) A.row(piv).swap(A.row(t));
        Rational d = A(t, t);
        for (Eigen::Index j = 0; j < 2 * n; ++j) A(t, j) /= d;
        for (Eigen::Index i = 0; i < n; ++i) {
            if (i == t || A(i, t) == 0) continue;
            Rational f = A(i, t);
            A.row(i) -= f * A.row(t);
        }
    }
    QMatrix res;
    res = A.rightCols(n);
    return res;
}

} // namespace

FiniteQuadraticModule::FiniteQuadraticModule(std::vector<Integer> orders,
                                             std::vector<Rational> q_gens, QMatrix b_gens)
    : orders_(std::move(orders)), qdiag_(std::move(q_gens)), bmat_(std::move(b_gens)) {
    const std::size_t r = orders_.size();
    if (qdiag_.size() != r || bmat_.rows() != static_cast<Eigen::Index>(r) ||
        bmat_.cols() != static_cast<Eigen::Index>(r))
        throw std::invalid_argument("FiniteQuadraticModule: shape mismatch");
    for (std::size_t i = 0; i < r; ++i) {
        if (orders_[i] < 2) throw std::invalid_argument("FiniteQuadraticModule: order < 2");
        qdiag_[i] = mod1(qdiag_[i]);
        for (std::size_t j = 0; j < r; ++j)
            bmat_(i, j) = mod1(bmat_(i, j));
    }
    finish(std::nullopt);
}

FiniteQuadraticModule FiniteQuadraticModule::trivial() { return {}; }

FiniteQuadraticModule FiniteQuadraticModule::direct_sum(const FiniteQuadraticModule& a,
                                                        const FiniteQuadraticModule& b) {
    FiniteQuadraticModule s;
    s.orders_ = a.orders_;
    s.orders_.insert(s.orders_.end(), b.orders_.begin(), b.orders_.end());
    s.qdiag_ = a.qdiag_;
    s.qdiag_.insert(s.qdiag_.end(), b.qdiag_.begin(), b.qdiag_.end());
    const Eigen::Index ra = a.bmat_.rows(), rb = b.bmat_.rows();
    s.bmat_ = QMatrix::Zero(ra + rb, ra + rb);
    s.bmat_.topLeftCorner(ra, ra) = a.bmat_;
    s.bmat_.bottomRightCorner(rb, rb) = b.bmat_;
    s.finish((a.sig8_ + b.sig8_) % 8);
    return s;
}

void FiniteQuadraticModule::finish(std::optional<int> known_sig8) {
    const std::size_t r = orders_.size();
    size_ = 1;
    level_ = 1;
    for (std::size_t i = 0; i < r; ++i) {
        size_ *= orders_[i];
        level_ = ilcm(level_, den(qdiag_[i]));
        // well-definedness of q on Z/d coordinates
        if (!is_integer(qdiag_[i] * orders_[i] * orders_[i]))
            throw std::invalid_argument("FiniteQuadraticModule: q not defined mod order");
        if (mod1(bmat_(i, i) - 2 * qdiag_[i]) != 0)
            throw std::invalid_argument("FiniteQuadraticModule: b(g,g) != 2 q(g)");
        for (std::size_t j = 0; j < r; ++j) {
            level_ = ilcm(level_, den(bmat_(i, j)));
            if (bmat_(i, j) != bmat_(j, i))
                throw std::invalid_argument("FiniteQuadraticModule: b not symmetric");
            if (!is_integer(bmat_(i, j) * orders_[i]))
                throw std::invalid_argument("FiniteQuadraticModule: b not defined mod order");
        }
    }
    // non-degeneracy of the bilinear form
    for (const FqElement& x : elements()) {
        if (is_zero(x)) continue;
        bool radical = true;
        for (std::size_t j = 0; j < r && radical; ++j) {
            FqElement g = zero();
            g.x[j] = 1;
            if (bbar(x, g) != 0) radical = false;
        }
        if (radical) throw std::invalid_argument("FiniteQuadraticModule: degenerate form");
    }
    if (known_sig8) {
        sig8_ = ((*known_sig8) % 8 + 8) % 8;
        return;
    }
    Cyclotomic S = gauss_sum_total();
    for (int s = 0; s < 8; ++s) {
        Cyclotomic T = S * Cyclotomic::e_frac(Rational(-s, 8));
        if (T != T.conj()) continue;
        if (T * T != Cyclotomic(size_)) continue;
        if (T.to_complex().real() <= 0) continue;
        sig8_ = s;
        return;
    }
    throw std::invalid_argument("FiniteQuadraticModule: Milgram signature not found");
}

FqElement FiniteQuadraticModule::reduce(std::vector<Integer> raw) const {
    if (raw.size() != ngens()) throw std::invalid_argument("FqElement: wrong length");
    for (std::size_t i = 0; i < raw.size(); ++i) raw[i] = imod(raw[i], orders_[i]);
    return FqElement{std::move(raw)};
}

FqElement FiniteQuadraticModule::add(const FqElement& a, const FqElement& b) const {
    std::vector<Integer> r(ngens());
    for (std::size_t i = 0; i < ngens(); ++i) r[i] = imod(a.x[i] + b.x[i], orders_[i]);
    return FqElement{std::move(r)};
}

FqElement FiniteQuadraticModule::neg(const FqElement& a) const {
    std::vector<Integer> r(ngens());
    for (std::size_t i = 0; i < ngens(); ++i) r[i] = imod(-a.x[i], orders_[i]);
    return FqElement{std::move(r)};
}

FqElement FiniteQuadraticModule::smul(const Integer& n, const FqElement& a) const {
    std::vector<Integer> r(ngens());
    for (std::size_t i = 0; i < ngens(); ++i) r[i] = imod(n * a.x[i], orders_[i]);
    return FqElement{std::move(r)};
}

bool FiniteQuadraticModule::is_zero(const FqElement& a) const {
    for (auto& c : a.x)
        if (c != 0) return false;
    return true;
}

Rational FiniteQuadraticModule::qbar(const FqElement& a) const {
    Rational r = 0;
    for (std::size_t i = 0; i < ngens(); ++i) {
        r += qdiag_[i] * a.x[i] * a.x[i];
        for (std::size_t j = i + 1; j < ngens(); ++j)
            r += bmat_(i, j) * a.x[i] * a.x[j];
    }
    return mod1(r);
}

Rational FiniteQuadraticModule::bbar(const FqElement& a, const FqElement& b) const {
    Rational r = 0;
    for (std::size_t i = 0; i < ngens(); ++i)
        for (std::size_t j = 0; j < ngens(); ++j)
            r += bmat_(i, j) * a.x[i] * b.x[j];
    return mod1(r);
}

std::vector<FqElement> FiniteQuadraticModule::elements() const {
    std::vector<FqElement> out;
    out.reserve(size_.convert_to<std::size_t>());
    FqElement cur = zero();
    for (;;) {
        out.push_back(cur);
        std::size_t i = 0;
        while (i < ngens() && ++cur.x[i] == orders_[i]) cur.x[i++] = 0;
        if (i == ngens()) break;
    }
    return out;
}

std::size_t FiniteQuadraticModule::index_of(const FqElement& a) const {
    std::size_t idx = 0, stride = 1;
    for (std::size_t i = 0; i < ngens(); ++i) {
        idx += a.x[i].convert_to<std::size_t>() * stride;
        stride *= orders_[i].convert_to<std::size_t>();
    }
    return idx;
}

FqElement FiniteQuadraticModule::element_at(std::size_t idx) const {
    FqElement a = zero();
    for (std::size_t i = 0; i < ngens(); ++i) {
        std::size_t d = orders_[i].convert_to<std::size_t>();
        a.x[i] = Integer(idx % d);
        idx /= d;
    }
    return a;
}

std::vector<FqElement> FiniteQuadraticModule::torsion(const Integer& n) const {
    std::vector<FqElement> out;
    for (const FqElement& x : elements())
        if (is_zero(smul(n, x))) out.push_back(x);
    return out;
}

std::vector<FqElement> FiniteQuadraticModule::multiples(const Integer& n) const {
    std::vector<FqElement> out;
    for (const FqElement& x : elements()) {
        bool ok = true;
        for (std::size_t i = 0; i < ngens() && ok; ++i)
            if (x.x[i] % igcd(n, orders_[i]) != 0) ok = false;
        if (ok) out.push_back(x);
    }
    return out;
}

std::vector<FqElement> FiniteQuadraticModule::isotropic_elements() const {
    std::vector<FqElement> out;
    for (const FqElement& x : elements())
        if (qbar(x) == 0) out.push_back(x);
    return out;
}

std::vector<FqElement> FiniteQuadraticModule::divide_by(const Integer& n,
                                                        const FqElement& a) const {
    // coordinatewise congruences n y_i = a_i mod d_i
    std::vector<std::vector<Integer>> opts(ngens());
    for (std::size_t i = 0; i < ngens(); ++i) {
        Integer d = orders_[i], g = igcd(imod(n, d), d);
        if (a.x[i] % g != 0) return {};
        Integer d2 = d / g;
        Integer base = imod((a.x[i] / g) * inv_mod(imod(n, d) / g == 0 ? 1 : imod(n, d) / g, d2), d2);
        if (d2 == 1) base = 0;
        for (Integer t = 0; t < g; ++t) opts[i].push_back(imod(base + t * d2, d));
    }
    std::vector<FqElement> out;
    std::vector<std::size_t> idx(ngens(), 0);
    for (;;) {
        FqElement y = zero();
        for (std::size_t i = 0; i < ngens(); ++i) y.x[i] = opts[i][idx[i]];
        out.push_back(y);
        std::size_t i = 0;
        while (i < ngens() && ++idx[i] == opts[i].size()) idx[i++] = 0;
        if (i == ngens()) break;
    }
    return out;
}

Cyclotomic FiniteQuadraticModule::gauss_sum_total() const {
    Cyclotomic s(0);
    for (const FqElement& x : elements())
        s += Cyclotomic::e_frac(qbar(x));
    return s;
}

FqElement DiscriminantForm::project(const QVector& v) const {
    const Eigen::Index m = gram.rows();
    IVector x(m);
    for (Eigen::Index i = 0; i < m; ++i) {
        Rational gi = 0;
        for (Eigen::Index j = 0; j < m; ++j) gi += Rational(gram(i, j)) * v(j);
        if (!is_integer(gi)) throw std::invalid_argument("project: not a dual vector");
        x(i) = num(gi);
    }
    std::vector<Integer> t(kept.size());
    for (std::size_t a = 0; a < kept.size(); ++a) {
        Integer s = 0;
        for (Eigen::Index j = 0; j < m; ++j) s += umat(kept[a], j) * x(j);
        t[a] = imod(s, module.orders()[a]);
    }
    return FqElement{std::move(t)};
}

QVector DiscriminantForm::lift(const FqElement& a) const {
    QVector v;
    v.setZero(gram.rows());
    for (std::size_t i = 0; i < kept.size(); ++i)
        for (Eigen::Index j = 0; j < gram.rows(); ++j)
            v(j) += gen_lifts(j, static_cast<Eigen::Index>(i)) * a.x[i];
    return v;
}

DiscriminantForm discriminant_form(const Lattice& L) {
    const Eigen::Index m = L.rank();
    SmithDecomposition S = smith_normal_form(L.gram());
    DiscriminantForm df;
    df.gram = L.gram();
    df.umat = S.U;
    std::vector<Integer> orders;
    for (Eigen::Index i = 0; i < m; ++i)
        if (S.D(i, i) > 1) {
            df.kept.push_back(i);
            orders.push_back(S.D(i, i));
        }
    QMatrix Uinv = qinverse(S.U);
    QMatrix Ginv = qinverse(L.gram());
    QMatrix lifts(m, static_cast<Eigen::Index>(df.kept.size()));
    for (std::size_t a = 0; a < df.kept.size(); ++a) {
        QVector uc;
        uc = Uinv.col(df.kept[a]);
        lifts.col(static_cast<Eigen::Index>(a)) = exact_mul_vec(Ginv, uc);
    }
    df.gen_lifts = lifts;

    const std::size_t r = orders.size();
    std::vector<Rational> qg(r);
    QMatrix bg;
    bg.setZero(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(r));
    for (std::size_t i = 0; i < r; ++i) {
        QVector vi;
        vi = lifts.col(static_cast<Eigen::Index>(i));
        qg[i] = mod1(L.q(vi));
        for (std::size_t j = 0; j < r; ++j)
            bg(i, j) = mod1(L.beta(vi, lifts.col(static_cast<Eigen::Index>(j))));
    }
    auto [bp, bm] = L.signature();
    FiniteQuadraticModule A;
    A.orders_ = orders;
    A.qdiag_ = qg;
    A.bmat_ = bg;
    A.finish(((bp - bm) % 8 + 8) % 8);
    df.module = std::move(A);
    return df;
}

FqElement SylowComponent::project(const FqElement& parent_elt) const {
    std::vector<Integer> s(parent_gen.size());
    for (std::size_t j = 0; j < parent_gen.size(); ++j)
        s[j] = imod(proj_unit[j] * parent_elt.x[parent_gen[j]], sub.orders()[j]);
    return FqElement{std::move(s)};
}

FqElement SylowComponent::embed(const FiniteQuadraticModule& parent,
                                const FqElement& sub_elt) const {
    FqElement r = parent.zero();
    for (std::size_t j = 0; j < parent_gen.size(); ++j)
        r.x[parent_gen[j]] =
            imod(r.x[parent_gen[j]] + mult[j] * sub_elt.x[j], parent.orders()[parent_gen[j]]);
    return r;
}

SylowComponent p_component(const FiniteQuadraticModule& A, const Integer& p) {
    struct Gen { std::size_t idx; Integer pa; Integer m; };
    std::vector<Gen> gens;
    for (std::size_t i = 0; i < A.ngens(); ++i) {
        Integer d = A.orders()[i], pa = 1;
        while (d % p == 0) { d /= p; pa *= p; }
        if (pa > 1) gens.push_back({i, pa, d});
    }
    std::stable_sort(gens.begin(), gens.end(),
                     [](const Gen& a, const Gen& b) { return a.pa < b.pa; });
    SylowComponent sc;
    const std::size_t r = gens.size();
    std::vector<Integer> orders(r);
    std::vector<Rational> qg(r);
    QMatrix bg;
    bg.setZero(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(r));
    for (std::size_t a = 0; a < r; ++a) {
        orders[a] = gens[a].pa;
        sc.parent_gen.push_back(gens[a].idx);
        sc.mult.push_back(gens[a].m);
        sc.proj_unit.push_back(inv_mod(imod(gens[a].m, gens[a].pa), gens[a].pa));
        FqElement ga = A.zero();
        ga.x[gens[a].idx] = gens[a].m;
        qg[a] = A.qbar(ga);
        for (std::size_t b = 0; b < r; ++b) {
            FqElement gb = A.zero();
            gb.x[gens[b].idx] = gens[b].m;
            bg(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = A.bbar(ga, gb);
        }
    }
    if (r == 0) {
        sc.sub = FiniteQuadraticModule::trivial();
        return sc;
    }
    sc.sub = FiniteQuadraticModule(std::move(orders), std::move(qg), std::move(bg));
    return sc;
}

long orbit_count_norm(const FiniteQuadraticModule& Ap, const FqElement& lam,
                      bool require_anisotropic) {
    if (require_anisotropic && Ap.isotropic_elements().size() != 1 && Ap.ngens() > 0)
        throw std::domain_error("orbit_count_norm: module not anisotropic");
    if (Ap.is_zero(lam)) return 0;
    Rational target = Ap.qbar(lam);
    long count = 0;
    for (const FqElement& mu : Ap.elements())
        if (Ap.qbar(mu) == target) ++count;
    return count - 1;
}

std::vector<std::vector<FqElement>> automorphisms_bruteforce(const FiniteQuadraticModule& A,
                                                             const Integer& size_cap) {
    const std::size_t r = A.ngens();
    if (r == 0) return {{}};
    Integer work = 1;
    for (std::size_t i = 0; i < r; ++i) work *= A.size();
    if (work > size_cap) throw std::domain_error("automorphisms_bruteforce: too large");

    std::vector<FqElement> all = A.elements();
    // per-generator candidates: same order constraint and same q value
    std::vector<std::vector<FqElement>> cands(r);
    for (std::size_t i = 0; i < r; ++i)
        for (const FqElement& h : all)
            if (A.is_zero(A.smul(A.orders()[i], h)) && A.qbar(h) == A.qbar([&] {
                    FqElement g = A.zero();
                    g.x[i] = 1;
                    return g;
                }()))
                cands[i].push_back(h);

    std::vector<std::vector<FqElement>> autos;
    std::vector<std::size_t> idx(r, 0);
    std::vector<FqElement> gens_img(r, A.zero());
    auto bilinear_ok = [&](const std::vector<FqElement>& img) {
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = i + 1; j < r; ++j) {
                FqElement gi = A.zero(), gj = A.zero();
                gi.x[i] = 1;
                gj.x[j] = 1;
                if (A.bbar(img[i], img[j]) != A.bbar(gi, gj)) return false;
            }
        return true;
    };
    for (;;) {
        for (std::size_t i = 0; i < r; ++i) gens_img[i] = cands[i][idx[i]];
        if (bilinear_ok(gens_img)) {
            // bijectivity: all images distinct
            std::vector<FqElement> images;
            images.reserve(all.size());
            for (const FqElement& x : all) {
                FqElement y = A.zero();
                for (std::size_t i = 0; i < r; ++i)
                    y = A.add(y, A.smul(x.x[i], gens_img[i]));
                images.push_back(y);
            }
            std::sort(images.begin(), images.end());
            if (std::adjacent_find(images.begin(), images.end()) == images.end())
                autos.push_back(gens_img);
        }
        std::size_t i = 0;
        while (i < r && ++idx[i] == cands[i].size()) idx[i++] = 0;
        if (i == r) break;
    }
    return autos;
}

std::vector<FqElement> orbit_of(const FiniteQuadraticModule& A, const FqElement& lam,
                                const std::vector<std::vector<FqElement>>& autos) {
    std::vector<FqElement> orbit{lam};
    std::vector<FqElement> frontier{lam};
    auto contains = [&](const FqElement& e) {
        return std::find(orbit.begin(), orbit.end(), e) != orbit.end();
    };
    while (!frontier.empty()) {
        std::vector<FqElement> next;
        for (const FqElement& x : frontier)
            for (const auto& img : autos) {
                FqElement y = A.zero();
                for (std::size_t i = 0; i < A.ngens(); ++i)
                    y = A.add(y, A.smul(x.x[i], img[i]));
                if (!contains(y)) {
                    orbit.push_back(y);
                    next.push_back(y);
                }
            }
        frontier = std::move(next);
    }
    std::sort(orbit.begin(), orbit.end());
    return orbit;
}

} // namespace vvmf
