#include "vvmf/hecke.hpp"

#include <set>
#include <stdexcept>

namespace vvmf {

std::vector<CosetRep> coset_reps(const Integer& p) {
    if (p < 2) throw std::domain_error("coset_reps: prime required");
    std::vector<CosetRep> reps;
    reps.push_back({RepTag::Gp2, p, 0});
    for (Integer h = 1; h < p; ++h) reps.push_back({RepTag::BetaH, p, h});
    for (Integer b = 0; b < p * p; ++b) reps.push_back({RepTag::GammaB, p, b});
    return reps;
}

namespace {

// p^{-m/2} e(-h p q(l_{lam/p})) G_{L,p}(1,-h), zero off Df^p. l is any p-th
// root lift; the value does not depend on the choice.
Cyclotomic beta_scalar(const FiniteQuadraticModule& A, const Integer& p, const Integer& h,
                       const FqElement& lam, const DiscriminantForm* df, const Lattice* L) {
    auto roots = A.divide_by(p, lam);
    if (roots.empty()) return Cyclotomic(0);
    if (A.size() == 1) return Cyclotomic(1);
    if (!df || !L) throw std::domain_error("beta action needs the parent lattice");
    if (p == 2 || imod(p, 2) == 0) throw std::domain_error("beta action needs an odd prime");
    QVector l;
    l = df->lift(roots.front());
    Rational ql = L->q(l);
    Cyclotomic phase = Cyclotomic::e_frac(mod1(-Rational(h) * Rational(p) * ql));
    return Cyclotomic::half_power(p, -L->rank()) * phase * G_Lp(*L, p, 1, -h);
}

} // namespace

CycVector act_rep(const FiniteQuadraticModule& A, const CosetRep& rep, const FqElement& lam,
                  const DiscriminantForm* df, const Lattice* L) {
    const Eigen::Index n = static_cast<Eigen::Index>(to_i64(A.size()));
    CycVector v;
    v = CycVector::Constant(n, Cyclotomic(0));
    switch (rep.tag) {
    case RepTag::Gp2:
        v(static_cast<Eigen::Index>(A.index_of(A.smul(rep.p, lam)))) = Cyclotomic(1);
        break;
    case RepTag::BetaH:
        v(static_cast<Eigen::Index>(A.index_of(lam))) = beta_scalar(A, rep.p, rep.par, lam, df, L);
        break;
    case RepTag::GammaB:
        for (const FqElement& nu : A.divide_by(rep.p, lam))
            v(static_cast<Eigen::Index>(A.index_of(nu))) =
                Cyclotomic::e_frac(mod1(-Rational(rep.par) * A.qbar(nu)));
        break;
    }
    return v;
}

bool creutzig_crosscheck(const DiscriminantForm& df, const Lattice& L, const Integer& p,
                         const Integer& h, const FqElement& lam) {
    const FiniteQuadraticModule& A = df.module;
    // independent route: p^{-m/2} sum over mu in L' / pL with mu = lam mod L
    // of e(-h q(mu)/p), representatives l_lam + v with v running over L/pL
    QVector base;
    base = df.lift(lam);
    const int m = L.rank();
    Cyclotomic sum(0);
    std::vector<Integer> idx(static_cast<std::size_t>(m), 0);
    for (;;) {
        QVector mu = base;
        for (int i = 0; i < m; ++i) mu(i) += Rational(idx[static_cast<std::size_t>(i)]);
        sum += Cyclotomic::e_frac(mod1(-Rational(h) * L.q(mu) / Rational(p)));
        int carry = 0;
        while (carry < m) {
            idx[static_cast<std::size_t>(carry)] += 1;
            if (idx[static_cast<std::size_t>(carry)] < p) break;
            idx[static_cast<std::size_t>(carry)] = 0;
            ++carry;
        }
        if (carry == m) break;
    }
    Cyclotomic brute = Cyclotomic::half_power(p, -m) * sum;
    return brute == beta_scalar(A, p, h, lam, &df, &L);
}

bool gstar_adjointness(const FiniteQuadraticModule& A, const Integer& m) {
    const auto elems = A.elements();
    const Eigen::Index n = static_cast<Eigen::Index>(elems.size());
    CycMatrix G = cyc_zero(n, n), Gs = cyc_zero(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
        G(static_cast<Eigen::Index>(A.index_of(A.smul(m, elems[static_cast<std::size_t>(j)]))),
          j) += Cyclotomic(1);
        for (const FqElement& s : A.divide_by(m, elems[static_cast<std::size_t>(j)]))
            Gs(static_cast<Eigen::Index>(A.index_of(s)), j) += Cyclotomic(1);
    }
    if (!cyc_equal(Gs, cyc_adjoint(G))) return false;
    // torsion-sum identity for the round trip
    CycMatrix P = cyc_mul(Gs, G);
    CycMatrix E = cyc_zero(n, n);
    const auto tor = A.torsion(m);
    for (Eigen::Index j = 0; j < n; ++j)
        for (const FqElement& s : tor)
            E(static_cast<Eigen::Index>(A.index_of(A.add(elems[static_cast<std::size_t>(j)], s))),
              j) += Cyclotomic(1);
    return cyc_equal(P, E);
}

namespace {

Rational out_n_max(const FourierExpansion& f, const Integer& p) {
    return f.n_max() / Rational(p * p);
}

// shared first and third terms: b(p lam, p^2 n) += s1 a(lam, n) and
// b(nu, n/p^2) += a(p nu, p^2 (n/p^2)) over p-th roots nu with matching residue
void spread_outer_terms(const FourierExpansion& f, const Integer& p, const Rational& s1,
                        FourierExpansion& out) {
    const FiniteQuadraticModule& A = f.module();
    const Rational p2(p * p);
    for (const auto& [key, c] : f.coeffs()) {
        const FqElement& lam = key.first;
        const Rational& n = key.second;
        Rational up = p2 * n;
        if (up <= out.n_max()) out.add(A.smul(p, lam), up, c * Cyclotomic(s1));
        Rational down = n / p2;
        for (const FqElement& nu : A.divide_by(p, lam))
            if (is_integer(down - A.qbar(nu))) out.add(nu, down, c);
    }
}

} // namespace

FourierExpansion hecke_direct(const FourierExpansion& f, const Integer& p,
                              const DiscriminantForm* df, const Lattice* L) {
    const FiniteQuadraticModule& A = f.module();
    FourierExpansion out(A, f.k2(), out_n_max(f, p));
    spread_outer_terms(f, p, pow_rat(Rational(p), f.k2() - 2), out);
    // middle branch: sum over the beta_h cosets
    Cyclotomic scale = Cyclotomic::half_power(p, f.k2() - 4);
    std::map<FqElement, Cyclotomic> bcache; // beta scalar without the e(nh/p) twist
    for (const auto& [key, c] : f.coeffs()) {
        const FqElement& lam = key.first;
        const Rational& n = key.second;
        if (n > out.n_max()) continue;
        Cyclotomic acc(0);
        for (Integer h = 1; h < p; ++h) {
            Cyclotomic s = beta_scalar(A, p, h, lam, df, L);
            if (s.is_zero()) continue;
            acc += Cyclotomic::e_frac(mod1(n * Rational(h) / Rational(p))) * s;
        }
        if (!acc.is_zero()) out.add(lam, n, c * scale * acc);
    }
    return out;
}

FourierExpansion hecke_closed_even(const FourierExpansion& f, const Integer& p) {
    const FiniteQuadraticModule& A = f.module();
    if (A.sig8() % 2 != 0) throw std::domain_error("hecke_closed_even: odd signature");
    if (igcd(p, A.level()) != 1) throw std::domain_error("hecke_closed_even: p divides the level");
    FourierExpansion out(A, f.k2(), out_n_max(f, p));
    spread_outer_terms(f, p, pow_rat(Rational(p), f.k2() - 2), out);
    Cyclotomic gq = gauss_quotient(A, p);
    Cyclotomic scale = Cyclotomic::half_power(p, f.k2() - 4);
    for (const auto& [key, c] : f.coeffs()) {
        const Rational& n = key.second;
        if (n > out.n_max()) continue;
        Integer delta = (imod(num(n), p) == 0) ? 1 : 0;
        Cyclotomic mid = gq * scale * Cyclotomic(Rational(p * delta - 1));
        if (!mid.is_zero()) out.add(key.first, n, c * mid);
    }
    return out;
}

FourierExpansion hecke_closed_odd(const FourierExpansion& f, const Integer& p) {
    const FiniteQuadraticModule& A = f.module();
    if (A.sig8() % 2 == 0) throw std::domain_error("hecke_closed_odd: even signature");
    if (imod(p, 2) == 0) throw std::domain_error("hecke_closed_odd: p must be odd");
    if (igcd(p, A.level()) != 1) throw std::domain_error("hecke_closed_odd: p divides the level");
    FourierExpansion out(A, f.k2(), out_n_max(f, p));
    spread_outer_terms(f, p, pow_rat(Rational(p), f.k2() - 2), out);
    Cyclotomic chi = chi_Df(A, p);
    Cyclotomic scale = Cyclotomic::half_power(p, f.k2() - 3);
    for (const auto& [key, c] : f.coeffs()) {
        const Rational& n = key.second;
        if (n > out.n_max()) continue;
        int sym = legendre_of_rational(-n, p);
        if (sym == 0) continue;
        out.add(key.first, n, c * chi * scale * Cyclotomic(Rational(sym)));
    }
    return out;
}

FourierExpansion hecke_closed_bad(const FourierExpansion& f, const Integer& p,
                                  const DiscriminantForm* df, const Lattice* L,
                                  MiddlePhase phase) {
    const FiniteQuadraticModule& A = f.module();
    const bool trivial = (A.size() == 1);
    if (!trivial && (!df || !L))
        throw std::domain_error("hecke_closed_bad: needs the parent lattice");
    if (!trivial && imod(p, 2) == 0)
        throw std::domain_error("hecke_closed_bad: p must be odd");
    FourierExpansion out(A, f.k2(), out_n_max(f, p));
    spread_outer_terms(f, p, pow_rat(Rational(p), f.k2() - 2), out);
    Cyclotomic K = trivial ? Cyclotomic(1) : K_Lp(*L, p);
    long R = trivial ? 0 : jordan_counts(*L, p, 1).R;
    Cyclotomic scale = Cyclotomic::half_power(p, f.k2() - 4);
    std::map<FqElement, Rational> root_q; // q(l_{lam/p}) per lam in Df^p
    for (const FqElement& lam : A.multiples(p)) {
        if (trivial) {
            root_q[lam] = Rational(0);
            continue;
        }
        QVector l;
        l = df->lift(A.divide_by(p, lam).front());
        root_q[lam] = L->q(l);
    }
    for (const auto& [key, c] : f.coeffs()) {
        const FqElement& lam = key.first;
        const Rational& n = key.second;
        if (n > out.n_max()) continue;
        auto it = root_q.find(lam);
        if (it == root_q.end()) continue;
        Rational x = (phase == MiddlePhase::QOfPLift) ? n - Rational(p * p) * it->second
                                                      : n - Rational(p) * it->second;
        Cyclotomic g(0);
        for (Integer h = 1; h < p; ++h) {
            Rational e = mod1(Rational(h) * x / Rational(p));
            Cyclotomic term = Cyclotomic::e_frac(e);
            if (R % 2 != 0) term *= Cyclotomic(Rational(legendre(p - h, p)));
            g += term;
        }
        Cyclotomic mid = scale * K * g;
        if (!mid.is_zero()) out.add(lam, n, c * mid);
    }
    return out;
}

EigenReport eigenvalue_extract(const FourierExpansion& f, const FourierExpansion& g) {
    if (!(f.module() == g.module()))
        throw std::domain_error("eigenvalue_extract: module mismatch");
    if (g.n_max() > f.n_max())
        throw std::domain_error("eigenvalue_extract: transformed range exceeds source");
    FourierExpansion ft = f.truncated(g.n_max());
    EigenReport rep;
    bool found = false;
    for (const auto& [key, c] : ft.coeffs()) {
        if (c.is_zero()) continue;
        rep.eigenvalue = g.coeff(key.first, key.second) / c;
        found = true;
        break;
    }
    if (!found) throw std::domain_error("eigenvalue_extract: source vanishes on the range");
    std::set<std::pair<FqElement, Rational>> keys;
    for (const auto& [key, c] : ft.coeffs()) keys.insert(key);
    for (const auto& [key, c] : g.coeffs()) keys.insert(key);
    rep.exact = true;
    for (const auto& key : keys) {
        ++rep.indices_tested;
        if (g.coeff(key.first, key.second) != rep.eigenvalue * ft.coeff(key.first, key.second))
            rep.exact = false;
    }
    return rep;
}

bool kohnen_bound_check(const Cyclotomic& eigenvalue, const Integer& m, int k2,
                        const FiniteQuadraticModule& A) {
    Integer p = isqrt_floor(m);
    if (p * p != m) throw std::domain_error("kohnen_bound_check: index must be a square");
    Cyclotomic lhs = eigenvalue.abs2();
    if (!lhs.is_rational())
        throw std::domain_error("kohnen_bound_check: eigenvalue norm is irrational");
    Integer ct = p * (p + 1) * Integer(A.torsion(m).size());
    Rational rhs = pow_rat(Rational(m), k2 - 4) * Rational(ct * ct);
    return lhs.to_rational() < rhs;
}

std::array<Integer, 3> hnf_label(Integer a, Integer b, Integer c, Integer d) {
    if (a * d - b * c <= 0) throw std::domain_error("hnf_label: determinant must be positive");
    while (c != 0) {
        Integer q = floor_div(a, c);
        a -= q * c;
        b -= q * d;
        std::swap(a, c);
        std::swap(b, d);
        a = -a;
        b = -b;
    }
    if (a < 0) {
        a = -a;
        b = -b;
        d = -d;
    }
    b = imod(b, d);
    return {a, b, d};
}

DoubleCosetSum dc_H(const Integer& p, unsigned r) {
    DoubleCosetSum s;
    for (unsigned i = 0; i <= r; ++i) {
        Integer a = pow_int(p, i), d = pow_int(p, r - i);
        for (Integer b = 0; b < d; ++b) {
            if (i > 0 && i < r && imod(b, p) == 0) continue; // content must be 1
            s.terms[{a, b, d}] = Rational(1);
        }
    }
    return s;
}

DoubleCosetSum dc_TpI(const Integer& p) {
    DoubleCosetSum s;
    s.terms[{p, 0, p}] = Rational(1);
    return s;
}

DoubleCosetSum dc_add(const DoubleCosetSum& x, const DoubleCosetSum& y) {
    DoubleCosetSum s = x;
    for (const auto& [k, m] : y.terms) {
        Rational v = s.terms[k] + m;
        if (v == 0)
            s.terms.erase(k);
        else
            s.terms[k] = v;
    }
    return s;
}

DoubleCosetSum dc_scale(const Rational& c, const DoubleCosetSum& x) {
    DoubleCosetSum s;
    if (c == 0) return s;
    for (const auto& [k, m] : x.terms) s.terms[k] = c * m;
    return s;
}

DoubleCosetSum dc_mul(const DoubleCosetSum& x, const DoubleCosetSum& y) {
    DoubleCosetSum s;
    for (const auto& [kx, mx] : x.terms)
        for (const auto& [ky, my] : y.terms) {
            auto lbl = hnf_label(kx[0] * ky[0], kx[0] * ky[1] + kx[1] * ky[2], 0, kx[2] * ky[2]);
            Rational v = s.terms[lbl] + mx * my;
            if (v == 0)
                s.terms.erase(lbl);
            else
                s.terms[lbl] = v;
        }
    return s;
}

Rational dc_degree(const DoubleCosetSum& x) {
    Rational t(0);
    for (const auto& [k, m] : x.terms) t += m;
    return t;
}

bool recursion_check(const Integer& p, unsigned r) {
    if (r < 1) throw std::domain_error("recursion_check: r >= 1 required");
    // step relation H(p^{r+1}) = H(p)H(p^r) - p T H(p^{r-1}) - [r=1] T
    DoubleCosetSum lhs1 = dc_H(p, r + 1);
    DoubleCosetSum rhs1 = dc_mul(dc_H(p, 1), dc_H(p, r));
    rhs1 = dc_add(rhs1, dc_scale(Rational(-p), dc_mul(dc_TpI(p), dc_H(p, r - 1))));
    if (r == 1) rhs1 = dc_add(rhs1, dc_scale(Rational(-1), dc_TpI(p)));
    bool ok = (lhs1 == rhs1);
    if (r < 2) return ok;
    // square relation H(p^{r+2}) =
    //   [H(p^2) + (1-p) T] H(p^r) - (1 + [r=2]/p) (p T)^2 H(p^{r-2})
    DoubleCosetSum lhs2 = dc_H(p, r + 2);
    DoubleCosetSum head = dc_add(dc_H(p, 2), dc_scale(Rational(1 - p), dc_TpI(p)));
    DoubleCosetSum rhs2 = dc_mul(head, dc_H(p, r));
    Rational coef = Rational(1) + (r == 2 ? Rational(1, p) : Rational(0));
    DoubleCosetSum tsq = dc_mul(dc_TpI(p), dc_TpI(p));
    rhs2 = dc_add(rhs2, dc_scale(-coef * Rational(p * p), dc_mul(tsq, dc_H(p, r - 2))));
    return ok && (lhs2 == rhs2);
}

} // namespace vvmf
