#include "vvmf/hecke.hpp"
#include "vvmf/lseries.hpp"

#include <doctest.h>

using namespace vvmf;

TEST_CASE("good Euler factors and the H_n identity at discriminant 1") {
    FiniteQuadraticModule triv = FiniteQuadraticModule::trivial();
    Cyclotomic lam2(-2496);
    EulerFactor f2 = euler_factor_good(2, 24, lam2, triv, Rational(1));
    CHECK(f2.R == XPolynomial({Cyclotomic(1), Cyclotomic(2048)}));
    CHECK(f2.P == XPolynomial({Cyclotomic(1), Cyclotomic(3520), Cyclotomic(4194304)}));
    FourierExpansion d = delta24(Rational(64));
    CHECK(hn_identity_check(d, triv.zero(), Rational(1), 2, 3, f2));

    FourierExpansion d3 = delta24(Rational(81));
    EulerFactor f3 = euler_factor_good(3, 24, Cyclotomic(-172692), triv, Rational(1));
    CHECK(hn_identity_check(d3, triv.zero(), Rational(1), 3, 2, f3));
}

TEST_CASE("bad-prime factor: the x^2 term enters with a minus sign") {
    IMatrix g2;
    g2.setZero(2, 2);
    g2(0, 0) = 2;
    g2(0, 1) = 1;
    g2(1, 0) = 1;
    g2(1, 1) = 2;
    Lattice L2(g2);
    DiscriminantForm d2 = discriminant_form(L2);
    FourierExpansion th = theta_series(d2, L2, Rational(85, 3));
    FourierExpansion big = theta_series(d2, L2, Rational(255));
    EigenReport rep = eigenvalue_extract(big, hecke_direct(big, 3, &d2, &L2));
    REQUIRE(rep.exact);
    FqElement lam = d2.module.zero();
    bool found = false;
    for (const auto& e : d2.module.elements())
        if (d2.module.qbar(e) == Rational(1, 3)) {
            lam = e;
            found = true;
            break;
        }
    REQUIRE(found);
    auto syl = p_component(d2.module, 3);
    long C = orbit_count_norm(syl.sub, syl.project(lam));
    REQUIRE(C == 1); // the discriminating fixture needs C >= 1
    long Rp = jordan_counts(L2, 3, 1).R;
    Cyclotomic K = K_Lp(L2, 3);
    EulerFactor bm = euler_factor_bad(3, 2, rep.eigenvalue, K, Rp, false, Integer(C),
                                      Rational(1, 3), X2Sign::Minus);
    EulerFactor bp = euler_factor_bad(3, 2, rep.eigenvalue, K, Rp, false, Integer(C),
                                      Rational(1, 3), X2Sign::Plus);
    CHECK(hn_identity_check(th, lam, Rational(1, 3), 3, 2, bm));
    CHECK_FALSE(hn_identity_check(th, lam, Rational(1, 3), 3, 2, bp));
}

TEST_CASE("bad factor recovers the even display at odd good primes") {
    IMatrix g2;
    g2.setZero(2, 2);
    g2(0, 0) = 2;
    g2(0, 1) = 1;
    g2(1, 0) = 1;
    g2(1, 1) = 2;
    Lattice L2(g2);
    DiscriminantForm d2 = discriminant_form(L2);
    FourierExpansion big = theta_series(d2, L2, Rational(700));
    EigenReport rep = eigenvalue_extract(big, hecke_direct(big, 5, &d2, &L2));
    REQUIRE(rep.exact);
    for (Rational t : {Rational(1), Rational(5), Rational(1, 3)}) {
        EulerFactor good = euler_factor_good(5, 2, rep.eigenvalue, d2.module, t);
        EulerFactor bad = euler_factor_bad(5, 2, rep.eigenvalue, K_Lp(L2, 5),
                                           jordan_counts(L2, 5, 1).R, true, 0, t);
        CHECK(good.R == bad.R);
        CHECK(good.P == bad.P);
    }
}

TEST_CASE("restricted coefficient stream") {
    FiniteQuadraticModule triv = FiniteQuadraticModule::trivial();
    TauTable tt;
    FourierExpansion d = delta24(Rational(25));
    SeriesTruncation s = series_coeffs(d, triv.zero(), Rational(1), 1, 5);
    REQUIRE(s.terms.size() == 5);
    CHECK(s.terms[1].second == Cyclotomic(Rational(tt.tau(4))));
    CHECK(s.terms[4].second == Cyclotomic(Rational(tt.tau(25))));
}

TEST_CASE("truncated product matches the truncated series") {
    FiniteQuadraticModule triv = FiniteQuadraticModule::trivial();
    TauTable tt;
    SeriesTruncation s = make_series(triv.zero(), Rational(1), 1, 500, [&](const Integer& n) {
        return Cyclotomic(Rational(tt.tau(n * n)));
    });
    std::vector<EulerFactor> fs;
    for (Integer p = 2; p <= 100; ++p) {
        if (!is_prime(p)) continue;
        Cyclotomic eig(Rational(tt.tau(p * p)) - Rational(pow_int(p, 10)));
        fs.push_back(euler_factor_good(p, 24, eig, triv, Rational(1)));
    }
    ProductComparison pc = product_vs_series(s, {1, 0}, fs, {16, 0}, 24);
    CHECK(pc.gap / std::abs(pc.series) < 1e-3);
    CHECK(pc.tail_diag < 0.1);
}
