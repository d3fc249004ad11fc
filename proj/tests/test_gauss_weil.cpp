#include "vvmf/gauss.hpp"
#include "vvmf/weil.hpp"

#include <doctest.h>

#include <random>

using namespace vvmf;

namespace {
Lattice latA1() {
    IMatrix g;
    g.setZero(1, 1);
    g(0, 0) = 2;
    return Lattice(g);
}
Lattice latA2() {
    IMatrix g;
    g.setZero(2, 2);
    g(0, 0) = 2;
    g(0, 1) = 1;
    g(1, 0) = 1;
    g(1, 1) = 2;
    return Lattice(g);
}
} // namespace

TEST_CASE("lattice and character Gauss sum fixtures") {
    Cyclotomic i4 = Cyclotomic::e_frac(Rational(1, 4));
    Cyclotomic s3 = Cyclotomic::sqrt_nat(3);
    Lattice L1 = latA1(), L2 = latA2();
    CHECK(G_Lp(L1, 3, 1, 1) == i4 * s3);
    CHECK(G_Lp(L1, 3, 1, 2) == Cyclotomic(-1) * i4 * s3);
    CHECK(G_Lp(L1, 3, 1, 9) == Cyclotomic(3));
    CHECK(g_p(3, 1, CharKind::TrivialModPn, 1, GpMode::Closed) == Cyclotomic(-1));
    CHECK(g_p(3, 1, CharKind::LegendreModP, 1, GpMode::Closed) == i4 * s3);
    CHECK(g_p(5, 2, CharKind::TrivialModPn, 25, GpMode::Closed) == Cyclotomic(20));
    for (Integer p : {Integer(3), Integer(5)})
        for (unsigned n = 1; n <= 2; ++n)
            for (Integer h = 0; h < pow_int(p, n); ++h)
                for (CharKind chi : {CharKind::TrivialModPn, CharKind::LegendreModP})
                    CHECK(g_p(p, n, chi, h, GpMode::Brute) == g_p(p, n, chi, h, GpMode::Closed));
    CHECK(twist_reduction_check(L1, 3, 1, 2));
    CHECK(twist_reduction_check(L2, 5, 1, 3));
    CHECK(twist_reduction_check(L2, 3, 2, 7));
}

TEST_CASE("discriminant Gauss sums and quotients") {
    Cyclotomic i4 = Cyclotomic::e_frac(Rational(1, 4));
    Cyclotomic s3 = Cyclotomic::sqrt_nat(3);
    Lattice L1 = latA1(), L2 = latA2();
    DiscriminantForm dfA2 = discriminant_form(L2);
    CHECK(G_Df(dfA2.module, 1) == i4 * s3);
    CHECK(G_Df(dfA2.module, 3) == Cyclotomic(3));
    QMatrix b;
    b.setZero(1, 1);
    b(0, 0) = Rational(1, 2);
    FiniteQuadraticModule z2({Integer(2)}, {Rational(1, 4)}, b);
    CHECK(G_Df(z2, 2).is_zero());
    CHECK(gauss_quotient(z2, 3) == i4);
    CHECK(gauss_quotient(dfA2.module, 2) * gauss_quotient(dfA2.module, 2) ==
          gauss_quotient(dfA2.module, 4));
    CHECK(barnard_quotient_check(L1, 3));
    CHECK(gauss_quotient(discriminant_form(L1).module, 3) == i4);
    CHECK(barnard_quotient_check(L2, 5));
    CHECK(K_Lp(L2, 3) == i4 * s3);
}

TEST_CASE("metaplectic group structure") {
    MetaplecticElement S = mp_S(), Z = mp_Z();
    CHECK(mp_compose(S, S) == Z);
    MetaplecticElement Z2 = mp_compose(Z, Z);
    CHECK(Z2.a == 1);
    CHECK(Z2.b == 0);
    CHECK(Z2.c == 0);
    CHECK(Z2.d == 1);
    CHECK(Z2.branch == -1); // Z^2 is the deck transform, not the identity
    CHECK(mp_compose(Z2, Z2) == mp_identity());

    std::mt19937 rng(7);
    auto rand_mp = [&] {
        MetaplecticElement g = mp_identity();
        for (int k = 0; k < 6; ++k)
            g = (rng() % 2) ? mp_compose(g, mp_S())
                            : mp_compose(g, mp_T(Integer((long)(rng() % 9) - 4)));
        return g;
    };
    for (int t = 0; t < 200; ++t) {
        MetaplecticElement g1 = rand_mp(), g2 = rand_mp(), g3 = rand_mp();
        CHECK(mp_compose(mp_compose(g1, g2), g3) == mp_compose(g1, mp_compose(g2, g3)));
        CHECK(mp_compose(g1, mp_inverse(g1)) == mp_identity());
        CHECK(mp_compose(mp_inverse(g1), g1) == mp_identity());
    }
}

TEST_CASE("Weil representation relations and homomorphism") {
    Lattice L1 = latA1(), L2 = latA2();
    std::mt19937 rng(7);
    auto rand_mp = [&] {
        MetaplecticElement g = mp_identity();
        for (int k = 0; k < 6; ++k)
            g = (rng() % 2) ? mp_compose(g, mp_S())
                            : mp_compose(g, mp_T(Integer((long)(rng() % 9) - 4)));
        return g;
    };
    for (const Lattice* Lp : {&L1, &L2}) {
        WeilRep W(discriminant_form(*Lp).module);
        CHECK(cyc_equal(cyc_mul(W.rho_S(), W.rho_S()), W.rho_Z()));
        CycMatrix ST = cyc_mul(W.rho_S(), W.rho_T());
        CHECK(cyc_equal(cyc_mul(ST, cyc_mul(ST, ST)), W.rho_Z()));
        CycMatrix Z4 = cyc_mul(W.rho_Z(), W.rho_Z());
        CHECK(cyc_equal(cyc_mul(Z4, Z4), cyc_identity(W.dim())));
        for (int t = 0; t < 12; ++t) {
            MetaplecticElement g1 = rand_mp(), g2 = rand_mp();
            CHECK(cyc_equal(W.rho_of(mp_compose(g1, g2)),
                            cyc_mul(W.rho_of(g1), W.rho_of(g2))));
        }
        CHECK(cyc_equal(W.rho_of(mp_S()), W.rho_S()));
        CHECK(cyc_equal(W.rho_of(mp_T(1)), W.rho_T()));
        CHECK(cyc_equal(W.rho_of(mp_Z()), W.rho_Z()));
    }
}

TEST_CASE("section on c = 0 mod 4, d = 1 mod 4 is a homomorphism") {
    auto g1 = section_s(1, 0, 4, 1);
    auto g3 = section_s(5, 1, 24, 5);
    auto prod = [&](const MetaplecticElement& x, const MetaplecticElement& y) {
        MetaplecticElement m = mp_compose(x, y);
        return section_s(m.a, m.b, m.c, m.d) == m;
    };
    CHECK(prod(g1, g3));
    CHECK(prod(g3, g1));
    CHECK(prod(g1, g1));
    CHECK(prod(g3, g3));
}

TEST_CASE("scaling shape of rho on level-congruent matrices") {
    WeilRep W(discriminant_form(latA2()).module);
    auto [chi, d] = W.borcherds_shape_check(mp_make(2, 3, 3, 5, 1));
    CHECK(chi.abs2() == Cyclotomic(1));
    CHECK(imod(d, 3) == imod(5, 3));
}
