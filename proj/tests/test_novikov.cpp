#include <doctest.h>

#include "mnk/novikov.hpp"
#include "test_util.hpp"

using namespace mnk;

namespace {

Matrix<Rational> tribonacci_companion() {
    return {{Rational(0), Rational(0), Rational(1)},
            {Rational(1), Rational(0), Rational(1)},
            {Rational(0), Rational(1), Rational(1)}};
}

}  // namespace

TEST_CASE("novikov invariants of the tribonacci mapping torus") {
    MappingTorus mt = build_mapping_torus(tribonacci_companion());
    NovikovInvariants inv = novikov_invariants(mt);
    CHECK(inv.betti == std::vector<int>{0, 0, 0, 0, 0});
    CHECK(inv.free_generators == 1);
    // degree-1 torsion divisor: det(tA - I) normalized, t^3 + t^2 + t - 1
    Poly expect({Rational(-1), Rational(1), Rational(1), Rational(1)});
    REQUIRE(inv.torsion[1].size() >= 1);
    CHECK(inv.torsion[1].back() == expect);
}

TEST_CASE("novikov invariants of the identity: powers of (t-1)") {
    MappingTorus mt = build_mapping_torus(Matrix<Rational>::identity(3, Rational(1)));
    NovikovInvariants inv = novikov_invariants(mt);
    CHECK(inv.betti == std::vector<int>{0, 0, 0, 0, 0});
    Poly tm1({Rational(-1), Rational(1)});
    for (int k = 0; k <= 3; ++k) {
        // W_k = (t-1) I of size C(3,k): each divisor is t-1
        int c = (k == 0 || k == 3) ? 1 : 3;
        REQUIRE(static_cast<int>(inv.torsion[k].size()) == c);
        for (const auto& d : inv.torsion[k]) CHECK(d == tm1);
    }
}

TEST_CASE("wang matrix determinant has unit value at t = 0") {
    auto rng = test::seeded_rng(40);
    for (int iter = 0; iter < 12; ++iter) {
        int n = 2 + (iter % 3);
        MappingTorus mt = build_mapping_torus(test::random_unimodular(rng, n, 6, true));
        for (int k = 0; k <= n; ++k) {
            LaurentPoly d = bareiss_det(wang_matrix(mt, k));
            REQUIRE(!d.is_zero());
            Rational c0 = d.coeff(0);
            CHECK((c0 == 1 || c0 == -1));
        }
    }
}

TEST_CASE("torsion divisor product equals det(t Lambda^k A - I) up to a unit") {
    auto rng = test::seeded_rng(41);
    for (int iter = 0; iter < 10; ++iter) {
        int n = 2 + (iter % 2);
        MappingTorus mt = build_mapping_torus(test::random_unimodular(rng, n, 6, true));
        NovikovInvariants inv = novikov_invariants(mt);
        for (int k = 0; k <= n; ++k) {
            LaurentPoly d = bareiss_det(wang_matrix(mt, k));
            Poly prod = Poly::one();
            for (const auto& f : inv.torsion[k]) prod *= f;
            CHECK(laurent_normalize(d).primitive == prod.monic());
        }
    }
}

TEST_CASE("pajitnov consistency: examples") {
    CHECK(pajitnov_consistency(build_mapping_torus(tribonacci_companion())).pass);

    Matrix<Rational> cat = {{Rational(2), Rational(1)}, {Rational(1), Rational(1)}};
    CHECK(pajitnov_consistency(build_mapping_torus(cat)).pass);

    CHECK(pajitnov_consistency(build_mapping_torus(Matrix<Rational>::identity(3, Rational(1))))
              .pass);
}

TEST_CASE("pajitnov consistency on random monodromies") {
    auto rng = test::seeded_rng(42);
    for (int iter = 0; iter < 8; ++iter) {
        int n = 2 + (iter % 3);
        MappingTorus mt = build_mapping_torus(test::random_unimodular(rng, n, 6, true));
        CHECK(pajitnov_consistency(mt).pass);
    }
}
