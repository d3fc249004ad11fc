#include "vvmf/weil.hpp"

#include <stdexcept>

namespace vvmf {

MetaplecticElement mp_identity() { return {}; }

MetaplecticElement mp_T(const Integer& power) { return {1, power, 0, 1, 1}; }

MetaplecticElement mp_S() { return {0, -1, 1, 0, 1}; }

MetaplecticElement mp_Z() { return {-1, 0, 0, -1, 1}; }

MetaplecticElement mp_make(const Integer& a, const Integer& b, const Integer& c,
                           const Integer& d, int branch) {
    if (a * d - b * c != 1) throw std::domain_error("mp_make: determinant is not 1");
    if (branch != 1 && branch != -1) throw std::domain_error("mp_make: branch must be +-1");
    return {a, b, c, d, branch};
}

namespace {

// Sign class of Arg(x + iy) in (-pi, pi]: +1 on (0, pi], 0 at 0, -1 on (-pi, 0).
int arg_class(const Integer& x, const Integer& y) {
    if (y > 0) return 1;
    if (y < 0) return -1;
    return x < 0 ? 1 : 0;
}

} // namespace

int mp_cocycle(const MetaplecticElement& g1, const MetaplecticElement& g2) {
    // Evaluate the three automorphy factors at tau = i. g2 i = (x + i)/D.
    Integer x = g2.a * g2.c + g2.b * g2.d;
    Integer D = g2.c * g2.c + g2.d * g2.d;
    // j(g1, g2 i) has sign data (c1 x + d1 D, c1), j(g2, i) = d2 + i c2,
    // j(g1 g2, i) = d12 + i c12.
    int a1 = arg_class(g1.c * x + g1.d * D, g1.c);
    int a2 = arg_class(g2.d, g2.c);
    Integer c12 = g1.c * g2.a + g1.d * g2.c;
    Integer d12 = g1.c * g2.b + g1.d * g2.d;
    int a12 = arg_class(d12, c12);
    // Arg wraps by -+2pi exactly when both inputs sit strictly on one side and
    // the product does not; each wrap flips the principal square root.
    bool wrap = (a1 > 0 && a2 > 0 && a12 <= 0) || (a1 < 0 && a2 < 0 && a12 >= 0);
    return wrap ? -1 : 1;
}

MetaplecticElement mp_compose(const MetaplecticElement& g1, const MetaplecticElement& g2) {
    MetaplecticElement r;
    r.a = g1.a * g2.a + g1.b * g2.c;
    r.b = g1.a * g2.b + g1.b * g2.d;
    r.c = g1.c * g2.a + g1.d * g2.c;
    r.d = g1.c * g2.b + g1.d * g2.d;
    r.branch = g1.branch * g2.branch * mp_cocycle(g1, g2);
    return r;
}

MetaplecticElement mp_inverse(const MetaplecticElement& g) {
    MetaplecticElement r{g.d, -g.b, -g.c, g.a, 1};
    r.branch = g.branch * mp_cocycle(g, r);
    return r;
}

std::vector<WordStep> word_decompose(const Integer& a0, const Integer& b0, const Integer& c0,
                                     const Integer& d0) {
    if (a0 * d0 - b0 * c0 != 1) throw std::domain_error("word_decompose: determinant is not 1");
    std::vector<WordStep> word;
    Integer a = a0, b = b0, c = c0, d = d0;
    while (c != 0) {
        // a = q c + r with 0 <= r < |c|
        Integer q = floor_div(a, c);
        Integer r = a - q * c;
        if (r < 0) {
            r -= c;
            q += 1;
        }
        if (q != 0) word.push_back({false, q});
        word.push_back({true, 0});
        // X -> S^{-1} T^{-q} X keeps the product invariant
        Integer nb = -(b - q * d);
        a = c;
        b = d;
        c = -r;
        d = nb;
    }
    // here the matrix is (a, b; 0, a) with a = +-1
    if (a == 1) {
        if (b != 0) word.push_back({false, b});
    } else {
        word.push_back({true, 0});
        word.push_back({true, 0});
        if (b != 0) word.push_back({false, -b});
    }
    return word;
}

MetaplecticElement section_s(const Integer& a, const Integer& b, const Integer& c,
                             const Integer& d) {
    if (a * d - b * c != 1) throw std::domain_error("section_s: determinant is not 1");
    if (imod(c, 4) != 0 || imod(d, 4) != 1)
        throw std::domain_error("section_s: needs c = 0 mod 4 and d = 1 mod 4");
    return {a, b, c, d, kronecker(c, d)};
}

WeilRep::WeilRep(FiniteQuadraticModule A) : module_(std::move(A)) {
    elements_ = module_.elements();
    const Eigen::Index n = dim();
    rhoT_ = cyc_zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        rhoT_(i, i) = Cyclotomic::e_frac(module_.qbar(elements_[i]));
    const int s8 = module_.sig8();
    Cyclotomic front = Cyclotomic::e_frac(Rational(-s8, 8)) / Cyclotomic::sqrt_nat(module_.size());
    rhoS_ = cyc_zero(n, n);
    for (Eigen::Index mu = 0; mu < n; ++mu)
        for (Eigen::Index lam = 0; lam < n; ++lam)
            rhoS_(mu, lam) =
                front * Cyclotomic::e_frac(-module_.bbar(elements_[lam], elements_[mu]));
    rhoZ_ = cyc_zero(n, n);
    Cyclotomic zc = Cyclotomic::e_frac(Rational(-s8, 4));
    for (Eigen::Index lam = 0; lam < n; ++lam) {
        auto neg = module_.neg(elements_[lam]);
        rhoZ_(static_cast<Eigen::Index>(module_.index_of(neg)), lam) = zc;
    }
    deck_ = Cyclotomic::e_frac(Rational(-s8, 2));
}

CycMatrix WeilRep::rho_T_power(const Integer& a) const {
    const Eigen::Index n = dim();
    CycMatrix m = cyc_zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        m(i, i) = Cyclotomic::e_frac(Rational(a) * module_.qbar(elements_[i]));
    return m;
}

CycMatrix WeilRep::rho_of(const MetaplecticElement& g) const {
    auto word = word_decompose(g.a, g.b, g.c, g.d);
    CycMatrix R = cyc_identity(dim());
    MetaplecticElement acc = mp_identity();
    for (const WordStep& w : word) {
        if (w.is_S) {
            R = cyc_mul(R, rhoS_);
            acc = mp_compose(acc, mp_S());
        } else {
            R = cyc_mul(R, rho_T_power(w.t_power));
            acc = mp_compose(acc, mp_T(w.t_power));
        }
    }
    if (acc.a != g.a || acc.b != g.b || acc.c != g.c || acc.d != g.d)
        throw std::logic_error("rho_of: word does not reproduce the matrix");
    if (acc.branch != g.branch) R = cyc_scale(deck_, R);
    return R;
}

Cyclotomic WeilRep::rho_coeff(const FqElement& lam, const FqElement& mu,
                              const MetaplecticElement& g) const {
    CycMatrix R = rho_of(g);
    return R(static_cast<Eigen::Index>(module_.index_of(mu)),
             static_cast<Eigen::Index>(module_.index_of(lam)));
}

std::pair<Cyclotomic, Integer> WeilRep::borcherds_shape_check(const MetaplecticElement& g) const {
    const Integer N = module_.level();
    if (imod(g.b, N) != 0 || imod(g.c, N) != 0)
        throw std::domain_error("borcherds_shape_check: b, c must vanish mod the level");
    CycMatrix R = rho_of(g);
    Integer dmod = imod(g.d, N);
    Cyclotomic chi(0);
    for (Eigen::Index lam = 0; lam < dim(); ++lam) {
        auto target = module_.smul(dmod, elements_[lam]);
        Eigen::Index row = static_cast<Eigen::Index>(module_.index_of(target));
        for (Eigen::Index mu = 0; mu < dim(); ++mu) {
            if (mu == row) continue;
            if (!R(mu, lam).is_zero())
                throw std::domain_error("borcherds_shape_check: not a scaled permutation");
        }
        if (lam == 0)
            chi = R(row, lam);
        else if (R(row, lam) != chi)
            throw std::domain_error("borcherds_shape_check: column scalars disagree");
    }
    return {chi, dmod};
}

} // namespace vvmf
