#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "slicecalc/multivector.hpp"
#include "slicecalc/sampling.hpp"

using namespace slicecalc;

namespace {

MvQ e(int n, unsigned mask) { return MvQ::basis(n, mask); }
MvQ sc(int n, int v) { return MvQ::scalar(n, Rat(v)); }

} // namespace

TEST_CASE("generator relations") {
    const int n = 3;
    CHECK(product(e(n, 0b001), e(n, 0b001)) == sc(n, -1));
    CHECK(product(e(n, 0b001), e(n, 0b010)) == e(n, 0b011));
    CHECK(product(e(n, 0b010), e(n, 0b001)) == -e(n, 0b011));
    for (unsigned i = 0; i < 3; ++i)
        for (unsigned j = 0; j < 3; ++j) {
            MvQ lhs = product(e(n, 1u << i), e(n, 1u << j)) +
                      product(e(n, 1u << j), e(n, 1u << i));
            CHECK(lhs == sc(n, i == j ? -2 : 0));
        }
}

TEST_CASE("product distributes over blades") {
    // (1 + e1)(1 + e2) = 1 + e1 + e2 + e12
    MvQ a = sc(3, 1) + e(3, 0b001);
    MvQ b = sc(3, 1) + e(3, 0b010);
    MvQ expect = sc(3, 1) + e(3, 0b001) + e(3, 0b010) + e(3, 0b011);
    CHECK(product(a, b) == expect);
}

TEST_CASE("associativity on random triples") {
    Rng rng(20240811);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 2 + trial % 3;
        MvQ a = sample_rational_mv(rng, n, 6, 2);
        MvQ b = sample_rational_mv(rng, n, 6, 2);
        MvQ c = sample_rational_mv(rng, n, 6, 2);
        CHECK(product(product(a, b), c) == product(a, product(b, c)));
    }
}

TEST_CASE("conjugation is an antiinvolution") {
    CHECK(conjugate(e(3, 0b001)) == -e(3, 0b001));
    CHECK(conjugate(sc(3, 5)) == sc(3, 5));
    // e123 is fixed: (e1 e2 e3)^c = (-e3)(-e2)(-e1)
    MvQ e123 = product(product(e(3, 0b001), e(3, 0b010)), e(3, 0b100));
    MvQ manual = product(product(-e(3, 0b100), -e(3, 0b010)), -e(3, 0b001));
    CHECK(conjugate(e123) == manual);
    CHECK(conjugate(e123) == e123);

    Rng rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 2 + trial % 3;
        MvQ a = sample_rational_mv(rng, n, 6, 2);
        MvQ b = sample_rational_mv(rng, n, 6, 2);
        CHECK(conjugate(product(a, b)) == product(conjugate(b), conjugate(a)));
        CHECK(conjugate(conjugate(a)) == a);
    }
}

TEST_CASE("trace and norm of paravectors") {
    MvQ x = MvQ::paravector(3, {Rat(2), Rat(1), Rat(-1), Rat(3)});
    CHECK(trace(x) == sc(3, 4));
    CHECK(norm(x) == sc(3, 4 + 1 + 1 + 9));
    MvQ zero(3);
    CHECK(trace(zero).is_zero());
    CHECK(norm(zero).is_zero());
    // non-real trace away from the cone-adjacent grades
    MvQ e123 = e(3, 0b111);
    CHECK(trace(e123) == e123.scaled(Rat(2)));
}

TEST_CASE("quadratic cone membership") {
    Rng rng(11);
    for (int i = 0; i < 20; ++i) CHECK(in_quadratic_cone(sample_rational_paravector(rng, 3, 8, 4)));
    CHECK_FALSE(in_quadratic_cone(e(3, 0b111)));
    // x1 e1 + x23 e23 with x1*x23 != 0 violates the cone quadric
    MvQ bad = e(3, 0b001).scaled(Rat(2)) + e(3, 0b110).scaled(Rat(3));
    CHECK_FALSE(in_quadratic_cone(bad));
    // the solved quadric produces genuine cone elements with bivector part
    for (int i = 0; i < 20; ++i) {
        MvQ x = sample_cone_r3(rng);
        CHECK(in_quadratic_cone(x));
    }
}

TEST_CASE("cone decomposition") {
    MvQ x = sc(3, 1) + e(3, 0b001).scaled(Rat(2));
    auto d = decompose(x);
    CHECK(d.alpha == Rat(1));
    CHECK(d.beta == Rat(2));
    REQUIRE(d.unit_imaginary.has_value());
    CHECK(*d.unit_imaginary == e(3, 0b001));

    auto real_pt = decompose(sc(3, 7));
    CHECK(real_pt.alpha == Rat(7));
    CHECK(real_pt.beta == Rat(0));
    CHECK_FALSE(real_pt.unit_imaginary.has_value());

    // floating regime handles irrational radii: x = 3 + 4 (e1+e2)/sqrt(2)
    MvD xf(3);
    xf[0] = 3.0;
    xf[0b001] = 4.0 / std::sqrt(2.0);
    xf[0b010] = 4.0 / std::sqrt(2.0);
    auto df = decompose(xf);
    CHECK(df.alpha == doctest::Approx(3.0));
    CHECK(df.beta == doctest::Approx(4.0));
    REQUIRE(df.unit_imaginary.has_value());
    CHECK((*df.unit_imaginary)[0b001] == doctest::Approx(1.0 / std::sqrt(2.0)));

    // irrational radius is refused in the exact regime
    MvQ xq = sc(3, 1) + e(3, 0b001) + e(3, 0b010);
    CHECK_THROWS_AS((void)decompose(xq), error);

    // reconstruction round-trip on rational-radius samples
    Rng rng(5);
    for (int i = 0; i < 20; ++i) {
        std::vector<Rat> dir = {Rat(3, 5), Rat(4, 5), Rat(0)};
        Rat alpha = sample_rat(rng, 8, 4);
        Rat beta = Rat(rng.uniform_int(1, 8), 2);
        MvQ j(3);
        j[0b001] = dir[0];
        j[0b010] = dir[1];
        j[0b100] = dir[2];
        MvQ x2 = MvQ::scalar(3, alpha) + j.scaled(beta);
        auto dd = decompose(x2);
        CHECK(dd.alpha == alpha);
        CHECK(dd.beta == beta);
        REQUIRE(dd.unit_imaginary.has_value());
        CHECK(MvQ::scalar(3, dd.alpha) + dd.unit_imaginary->scaled(dd.beta) == x2);
    }
}

TEST_CASE("inverse on the cone") {
    CHECK(inverse(e(3, 0b001)) == -e(3, 0b001));
    MvQ x = sc(3, 1) + e(3, 0b001);
    CHECK(inverse(x) == (sc(3, 1) - e(3, 0b001)).scaled(Rat(1, 2)));
    CHECK_THROWS_AS((void)inverse(MvQ(3)), error);

    Rng rng(13);
    int checked = 0;
    for (int i = 0; i < 40 && checked < 20; ++i) {
        MvQ s = sample_cone_r3(rng);
        if (norm(s).scalar_part() == 0) continue;
        ++checked;
        CHECK(product(s, inverse(s)) == sc(3, 1));
        CHECK(product(inverse(s), s) == sc(3, 1));
    }
    CHECK(checked >= 10);
}

TEST_CASE("powers") {
    // paravector square: x0^2 - |Im|^2 + 2 x0 Im(x)
    MvQ x = MvQ::paravector(3, {Rat(2), Rat(1), Rat(2), Rat(-2)});
    MvQ expect = sc(3, 4 - 9) + imaginary_part(x).scaled(Rat(4));
    CHECK(power(x, 2) == expect);
    CHECK(power(e(3, 0b001), 4) == sc(3, 1));
    CHECK(power(sc(3, 2), -1) == MvQ::scalar(3, Rat(1, 2)));
    CHECK(power(x, 0) == sc(3, 1));
}

TEST_CASE("signature mismatch is rejected") {
    CHECK_THROWS_AS((void)product(sc(2, 1), sc(3, 1)), error);
}

TEST_CASE("rational parsing and printing") {
    CHECK(rat_from_string("3/4") == Rat(3, 4));
    CHECK(rat_from_string("-3/4") == Rat(-3, 4));
    CHECK(rat_from_string("0.25") == Rat(1, 4));
    CHECK(rat_from_string("-1.5") == Rat(-3, 2));
    CHECK(rat_from_string("7") == Rat(7));
    CHECK(rat_to_string(Rat(-3, 4)) == "-3/4");
    CHECK(rat_to_string(Rat(5)) == "5");
    CHECK_THROWS_AS((void)rat_from_string("x"), error);
    CHECK(exact_sqrt(Rat(9, 4)).value() == Rat(3, 2));
    CHECK_FALSE(exact_sqrt(Rat(2)).has_value());
}
