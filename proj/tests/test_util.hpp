// Shared helpers for the randomized suites. The seed comes from the
// MNK_SEED environment variable so failures can be replayed.

#ifndef MNK_TEST_UTIL_HPP
#define MNK_TEST_UTIL_HPP

#include <cstdlib>
#include <random>
#include <vector>

#include "mnk/matrix.hpp"
#include "mnk/poly.hpp"
#include "mnk/rational.hpp"

namespace mnk::test {

inline std::mt19937_64 seeded_rng(uint64_t salt = 0) {
    uint64_t seed = 0x9e3779b97f4a7c15ull;
    if (const char* env = std::getenv("MNK_SEED")) seed = std::strtoull(env, nullptr, 10);
    return std::mt19937_64(seed ^ salt);
}

inline Rational random_rational(std::mt19937_64& rng, int num_range = 20, int den_range = 9) {
    std::uniform_int_distribution<int> num(-num_range, num_range);
    std::uniform_int_distribution<int> den(1, den_range);
    return Rational(num(rng), den(rng));
}

inline Rational random_nonzero_rational(std::mt19937_64& rng) {
    Rational r;
    do {
        r = random_rational(rng);
    } while (r.is_zero());
    return r;
}

inline Poly random_poly(std::mt19937_64& rng, int max_degree = 4) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    int d = deg(rng);
    std::vector<Rational> c(static_cast<size_t>(d) + 1);
    for (auto& x : c) x = random_rational(rng, 9, 4);
    return Poly(std::move(c));
}

inline Matrix<Rational> random_int_matrix(std::mt19937_64& rng, int n, int range = 4) {
    std::uniform_int_distribution<int> e(-range, range);
    Matrix<Rational> m(n, n, Rational(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = Rational(e(rng));
    return m;
}

// Random element of SL_n(Z) (or GL_n(Z) with allow_reflection) as a
// product of elementary shears; entries stay modest.
inline Matrix<Rational> random_unimodular(std::mt19937_64& rng, int n, int shears = 6,
                                          bool allow_reflection = false) {
    Matrix<Rational> m = Matrix<Rational>::identity(n, Rational(1));
    std::uniform_int_distribution<int> idx(0, n - 1);
    std::uniform_int_distribution<int> coef(-2, 2);
    for (int s = 0; s < shears; ++s) {
        int i = idx(rng), j = idx(rng);
        if (i == j) continue;
        Rational c(coef(rng));
        for (int k = 0; k < n; ++k) m.at(i, k) += c * m.at(j, k);
    }
    if (allow_reflection && (rng() & 1)) {
        for (int k = 0; k < n; ++k) m.at(0, k) = -m.at(0, k);
    }
    return m;
}

}  // namespace mnk::test

#endif
