#include <doctest.h>

#include "mnk/mv_engine.hpp"
#include "test_util.hpp"

using namespace mnk;

namespace {

Matrix<Rational> tribonacci_companion() {
    return {{Rational(0), Rational(0), Rational(1)},
            {Rational(1), Rational(0), Rational(1)},
            {Rational(0), Rational(1), Rational(1)}};
}

std::vector<int> dims_of(const Matrix<Rational>& a, const TwistSpec& tw) {
    return twisted_cohomology(build_mapping_torus(a), tw).dims;
}

}  // namespace

TEST_CASE("Lee-eigenvalue twist on the tribonacci mapping torus") {
    MappingTorus mt = build_mapping_torus(tribonacci_companion());
    CohomologyReport r = twisted_cohomology(mt, TwistSpec::lee());
    CHECK(r.dims == std::vector<int>{0, 0, 1, 1, 0});
    CHECK(r.nullities == std::vector<int>{0, 0, 1, 0});
    CHECK(r.euler == 0);
    REQUIRE(r.alpha_approx.has_value());
    CHECK(*r.alpha_approx == "1.8392");
}

TEST_CASE("untwisted identity gives the Betti numbers of T^4") {
    CHECK(dims_of(Matrix<Rational>::identity(3, Rational(1)), TwistSpec::untwisted()) ==
          std::vector<int>{1, 4, 6, 4, 1});
}

TEST_CASE("transcendental twist vanishes identically") {
    CHECK(dims_of(tribonacci_companion(), TwistSpec::transcendental()) ==
          std::vector<int>{0, 0, 0, 0, 0});
}

TEST_CASE("transcendental twist vanishes for random unimodular monodromy") {
    auto rng = test::seeded_rng(30);
    for (int n : {2, 3, 4}) {
        for (int iter = 0; iter < 5; ++iter) {
            Matrix<Rational> a = test::random_unimodular(rng, n, 6, true);
            auto dims = dims_of(a, TwistSpec::transcendental());
            for (int d : dims) CHECK(d == 0);
        }
    }
}

TEST_CASE("gamma block matrices reproduce the stated ranks") {
    MappingTorus mt = build_mapping_torus(tribonacci_companion());
    TwistSpec lee = TwistSpec::lee();

    GammaAudit g1 = gamma_matrix(mt, lee, 1);
    CHECK(g1.size == 6);
    CHECK(g1.rank == 6);

    GammaAudit g2 = gamma_matrix(mt, lee, 2);
    CHECK(g2.size == 6);
    CHECK(g2.rank == 5);

    GammaAudit g3 = gamma_matrix(mt, lee, 3);
    CHECK(g3.size == 2);
    CHECK(g3.rank == 2);
    // the displayed 2x2 matrix [[1, -1], [1, -alpha]]
    CHECK(g3.entries[0] == "1");
    CHECK(g3.entries[1] == "-1");
    CHECK(g3.entries[2] == "1");
    CHECK(g3.entries[3] == "-alpha");

    CHECK_THROWS_AS(gamma_matrix(mt, lee, 4), DegreeOutOfRange);
}

TEST_CASE("gamma rank equals 2 C(n,k) - nu_k for every degree") {
    MappingTorus mt = build_mapping_torus(tribonacci_companion());
    for (const TwistSpec& tw :
         {TwistSpec::lee(), TwistSpec::untwisted(), TwistSpec::rational(Rational(2))}) {
        CohomologyReport r = twisted_cohomology(mt, tw);
        for (int k = 0; k <= mt.n; ++k) {
            GammaAudit g = gamma_matrix(mt, tw, k);
            CHECK(g.rank == g.size - r.nullities[k]);
        }
    }
}

TEST_CASE("vanishing_check: examples") {
    MappingTorus tri = build_mapping_torus(tribonacci_companion());
    CHECK(vanishing_check(twisted_cohomology(tri, TwistSpec::lee())).pass);

    MappingTorus id3 = build_mapping_torus(Matrix<Rational>::identity(3, Rational(1)));
    CHECK(vanishing_check(twisted_cohomology(id3, TwistSpec::untwisted())).pass);

    CohomologyReport r = twisted_cohomology(id3, TwistSpec::rational(Rational(2)));
    CHECK(r.dims == std::vector<int>{0, 0, 0, 0, 0});
    CHECK(vanishing_check(r).pass);
}

TEST_CASE("dims[i] = nu_{i-1} + nu_i and Euler characteristic zero") {
    auto rng = test::seeded_rng(31);
    for (int iter = 0; iter < 10; ++iter) {
        Matrix<Rational> a = test::random_unimodular(rng, 3, 6, true);
        MappingTorus mt = build_mapping_torus(a);
        for (const TwistSpec& tw : {TwistSpec::untwisted(), TwistSpec::rational(Rational(1, 3)),
                                    TwistSpec::rational(Rational(7))}) {
            CohomologyReport r = twisted_cohomology(mt, tw);
            CHECK(r.euler == 0);
            for (size_t i = 0; i < r.dims.size(); ++i) {
                int prev = (i > 0) ? r.nullities[i - 1] : 0;
                int cur = (i < r.nullities.size()) ? r.nullities[i] : 0;
                CHECK(r.dims[i] == prev + cur);
            }
        }
    }
}

TEST_CASE("duality: dims(lambda)[i] = dims(1/lambda)[n+1-i]") {
    auto rng = test::seeded_rng(32);
    for (int iter = 0; iter < 20; ++iter) {
        int n = 2 + (iter % 3);
        Matrix<Rational> a = test::random_unimodular(rng, n, 6, true);
        Rational lambda = test::random_nonzero_rational(rng);
        auto d1 = dims_of(a, TwistSpec::rational(lambda));
        auto d2 = dims_of(a, TwistSpec::rational(inv(lambda)));
        for (size_t i = 0; i < d1.size(); ++i) CHECK(d1[i] == d2[d1.size() - 1 - i]);
    }
}

TEST_CASE("dims depend only on lambda, not on the basis presentation") {
    auto rng = test::seeded_rng(33);
    for (int iter = 0; iter < 8; ++iter) {
        Matrix<Rational> a = test::random_unimodular(rng, 3);
        // conjugate by a permutation matrix
        std::vector<int> perm = {0, 1, 2};
        std::shuffle(perm.begin(), perm.end(), rng);
        Matrix<Rational> p(3, 3, Rational(0));
        for (int i = 0; i < 3; ++i) p.at(i, perm[i]) = Rational(1);
        Matrix<Rational> pinv = p.transpose();
        Matrix<Rational> b = p * a * pinv;
        for (const TwistSpec& tw :
             {TwistSpec::rational(Rational(2)), TwistSpec::rational(Rational(1, 3))})
            CHECK(dims_of(a, tw) == dims_of(b, tw));
    }
}

TEST_CASE("Lee mode needs a labeled real root") {
    MappingTorus id3 = build_mapping_torus(Matrix<Rational>::identity(3, Rational(1)));
    CHECK_THROWS_AS(twisted_cohomology(id3, TwistSpec::lee()), ModeUnavailable);
}

TEST_CASE("determinant -1 monodromy is accepted with a warning") {
    Matrix<Rational> a = {{Rational(0), Rational(1)}, {Rational(1), Rational(0)}};
    MappingTorus mt = build_mapping_torus(a);
    CohomologyReport r = twisted_cohomology(mt, TwistSpec::rational(Rational(2)));
    REQUIRE(r.warnings.size() == 1);
    CHECK(vanishing_check(r).pass);
}
