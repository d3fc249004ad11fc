#include "vvmf/serialize.hpp"

#include <doctest.h>

using namespace vvmf;

TEST_CASE("JSON round trips") {
    IMatrix g;
    g.setZero(2, 2);
    g(0, 0) = 2;
    g(0, 1) = 1;
    g(1, 0) = 1;
    g(1, 1) = 2;
    Lattice L(g);
    DiscriminantForm df = discriminant_form(L);

    CHECK(module_from_json(module_to_json(df.module)) == df.module);
    auto triv = FiniteQuadraticModule::trivial();
    CHECK(module_from_json(module_to_json(triv)) == triv);

    FourierExpansion th = theta_series(df, L, Rational(4));
    CHECK(expansion_from_json(expansion_to_json(th)) == th);
    FourierExpansion d = delta24(Rational(10));
    CHECK(expansion_from_json(expansion_to_json(d)) == d);

    auto m = mp_make(2, 3, 3, 5, -1);
    CHECK(mp_from_json(mp_to_json(m)) == m);

    IMatrix g2 = gram_from_json(gram_to_json(g));
    for (int i = 0; i < 2; ++i)
        for (int k = 0; k < 2; ++k) CHECK(g2(i, k) == g(i, k));
}

TEST_CASE("serialization is deterministic") {
    IMatrix g;
    g.setZero(1, 1);
    g(0, 0) = 2;
    Lattice L(g);
    DiscriminantForm df = discriminant_form(L);
    FourierExpansion th = theta_series(df, L, Rational(6));
    CHECK(expansion_to_json(th).dump() == expansion_to_json(th).dump());
    CHECK(module_to_json(df.module).dump() == module_to_json(df.module).dump());
}
