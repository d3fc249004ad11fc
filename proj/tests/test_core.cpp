#include "vvmf/fqm.hpp"

#include <doctest.h>

using namespace vvmf;
using C = Cyclotomic;

TEST_CASE("cyclotomic arithmetic") {
    CHECK(C::e_frac(Rational(1, 2)) == C(-1));
    CHECK(C::e_frac(Rational(0)) == C(1));
    CHECK(C::e_frac(Rational(1, 3)) + C::e_frac(Rational(2, 3)) == C(-1));
    CHECK(C::e_frac(Rational(1, 8)).conj() == C::e_frac(Rational(7, 8)));
    for (int a = 0; a < 12; ++a)
        for (int b = 0; b < 12; ++b)
            CHECK(C::e_frac(Rational(a, 12)) * C::e_frac(Rational(b, 5)) ==
                  C::e_frac(Rational(a, 12) + Rational(b, 5)));
}

TEST_CASE("square roots of naturals") {
    C s3 = C::sqrt_nat(3);
    CHECK(s3 * s3 == C(3));
    CHECK(std::abs(s3.to_complex().real() - 1.7320508) < 1e-6);
    C s2 = C::sqrt_nat(2);
    CHECK(s2 * s2 == C(2));
    CHECK(C::sqrt_nat(12) == C(2) * s3);
    C s6 = C::sqrt_nat(6);
    CHECK(s6 * s6 == C(6));
    CHECK(s6.to_complex().real() > 0); // principal branch
}

TEST_CASE("inverse, abs2, parsing, powers") {
    C x = C::e_frac(Rational(1, 5)) + C(2);
    CHECK(x * x.inverse() == C(1));
    C y = C::e_frac(Rational(3, 7));
    CHECK(y * y.inverse() == C(1));
    C u = (C(1) + C::e_frac(Rational(1, 4))) * C::sqrt_nat(2).inverse();
    CHECK(u.abs2() == C(1));
    C z = C(Rational(3, 2)) * C::e_frac(Rational(5, 7)) - C::e_frac(Rational(1, 3));
    CHECK(parse_cyclotomic(z.str()) == z);
    CHECK(C::e_frac(Rational(1, 7)).pow(-3) == C::e_frac(Rational(-3, 7)));
}

TEST_CASE("discriminant forms of small lattices") {
    IMatrix g(1, 1);
    g(0, 0) = 2;
    Lattice L(g);
    auto df = discriminant_form(L);
    CHECK(df.module.size() == 2);
    CHECK(df.module.qbar(df.module.reduce({1})) == Rational(1, 4));
    CHECK(df.module.sig8() == 1);
    CHECK(df.module.level() == 4);

    IMatrix a2(2, 2);
    a2 << 2, 1, 1, 2;
    Lattice LA2(a2);
    auto dfa = discriminant_form(LA2);
    CHECK(dfa.module.size() == 3);
    CHECK(dfa.module.qbar(dfa.module.reduce({1})) == Rational(1, 3));
    CHECK(dfa.module.qbar(dfa.module.reduce({2})) == Rational(1, 3));
    CHECK(dfa.module.sig8() == 2);
    CHECK(dfa.module.level() == 3);
    // total Gauss sum = sqrt|Df| e(sig8/8)
    CHECK(dfa.module.gauss_sum_total() == C::sqrt_nat(3) * C::e_frac(Rational(2, 8)));

    QVector sh;
    sh.setZero(2);
    CHECK(LA2.short_vectors(sh, 1).size() == 7); // 0 plus the 6 roots
}

TEST_CASE("jordan counts and sylow components") {
    IMatrix g(1, 1);
    g(0, 0) = 2;
    Lattice L(g);
    IMatrix a2(2, 2);
    a2 << 2, 1, 1, 2;
    Lattice LA2(a2);

    auto jc = jordan_counts(L, 3, 1);
    CHECK(jc.n_k[0] == 1);
    CHECK(jc.R == 1);
    auto jc2 = jordan_counts(LA2, 3, 1);
    CHECK(jc2.n_k[0] == 1);
    CHECK(jc2.R == 1);
    auto jc3 = jordan_counts(L, 5, 2);
    CHECK(jc3.n_k[0] == 1);
    CHECK(jc3.R == 2);

    IMatrix g6(1, 1);
    g6(0, 0) = 6;
    Lattice L6(g6);
    auto df6 = discriminant_form(L6);
    CHECK(df6.module.size() == 6);
    CHECK(p_component(df6.module, 3).sub.size() == 3);
    CHECK(p_component(df6.module, 2).sub.size() == 2);
}

TEST_CASE("orbit constants on Z/3") {
    IMatrix a2(2, 2);
    a2 << 2, 1, 1, 2;
    auto dfa = discriminant_form(Lattice(a2));
    CHECK(orbit_count_norm(dfa.module, dfa.module.reduce({1})) == 1);
    CHECK(orbit_count_norm(dfa.module, dfa.module.zero()) == 0);
    CHECK(automorphisms_bruteforce(dfa.module, Integer(100000)).size() == 2);
}
