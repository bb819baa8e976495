// Definition-level verification path: the twisted cellular cochain
// complex of the mapping torus, with cohomology read off by rank-nullity.
// Shares exterior_power with the closed-form engine but nothing else;
// ranks here go through the fraction-free Bareiss kernel, the engine
// uses Gaussian elimination.

#ifndef MNK_CELL_ORACLE_HPP
#define MNK_CELL_ORACLE_HPP

#include <stdexcept>
#include <vector>

#include "mnk/mapping_torus.hpp"
#include "mnk/matrix.hpp"
#include "mnk/mv_engine.hpp"
#include "mnk/number_field.hpp"
#include "mnk/poly_fraction.hpp"

namespace mnk {

struct NotAComplex : std::domain_error {
    NotAComplex() : std::domain_error("coboundaries do not compose to zero") {}
};

template <class S>
struct TwistedComplex {
    std::vector<int> dims;             // cochain space dimension per degree 0 .. n+1
    std::vector<Matrix<S>> coboundary; // coboundary[i]: degree i -> i+1

    void check_d_squared() const {
        for (size_t i = 0; i + 1 < coboundary.size(); ++i) {
            Matrix<S> prod = coboundary[i + 1] * coboundary[i];
            for (const auto& e : prod.entries())
                if (!is_zero(e)) throw NotAComplex();
        }
    }
};

namespace detail {

inline int binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return static_cast<int>(r);
}

// Cells: D^k = C^k(T^n) + C^{k-1}(T^n), minimal CW structure on the
// fiber torus (zero internal differentials). The only nonzero block of
// the coboundary is the connecting (-1)^k (lambda M_k - I).
template <class S, class Embed>
TwistedComplex<S> build_complex(const MappingTorus& mt, const S& lambda, Embed embed) {
    int n = mt.n;
    InducedMaps im = induced_maps(mt);
    TwistedComplex<S> cx;
    for (int k = 0; k <= n + 1; ++k) cx.dims.push_back(binom(n, k) + binom(n, k - 1));
    for (int k = 0; k <= n; ++k) {
        Matrix<S> d(cx.dims[k + 1], cx.dims[k], zero_like(lambda));
        const Matrix<Rational>& mk = im.maps[k];
        int c = mk.rows();        // C(n, k)
        int top = binom(n, k + 1);  // row offset of the connecting block
        for (int i = 0; i < c; ++i)
            for (int j = 0; j < c; ++j) {
                S v = lambda * embed(mk.at(i, j));
                if (i == j) v -= one_like(lambda);
                if (k % 2 == 1) v = -v;
                d.at(top + i, j) = v;
            }
        cx.coboundary.push_back(std::move(d));
    }
    return cx;
}

template <class S>
std::vector<int> cohomology_dims(const TwistedComplex<S>& cx) {
    cx.check_d_squared();
    int top = static_cast<int>(cx.dims.size()) - 1;
    std::vector<int> rank(top + 1, 0);
    for (int i = 0; i < top; ++i) rank[i] = bareiss_rank(cx.coboundary[i]);
    std::vector<int> h(top + 1, 0);
    for (int i = 0; i <= top; ++i) {
        int ker = cx.dims[i] - ((i < top) ? rank[i] : 0);
        int im = (i > 0) ? rank[i - 1] : 0;
        h[i] = ker - im;
    }
    return h;
}

}  // namespace detail

template <class S>
std::vector<int> complex_cohomology(const TwistedComplex<S>& cx) {
    return detail::cohomology_dims(cx);
}

inline TwistedComplex<Rational> build_mapping_torus_complex(const MappingTorus& mt,
                                                            const Rational& lambda) {
    return detail::build_complex<Rational>(mt, lambda, [](const Rational& x) { return x; });
}

// Oracle dimensions for an arbitrary twist mode.
inline std::vector<int> oracle_dims(const MappingTorus& mt, const TwistSpec& tw) {
    switch (tw.mode) {
        case TwistMode::Untwisted:
            return complex_cohomology(build_mapping_torus_complex(mt, Rational(1)));
        case TwistMode::RationalWeight:
            return complex_cohomology(build_mapping_torus_complex(mt, tw.lambda));
        case TwistMode::LeeEigenvalue: {
            auto q = mt.modulus_ptr();
            auto cx = detail::build_complex<NumberFieldElement>(
                mt, NumberFieldElement::generator(q),
                [&](const Rational& x) { return NumberFieldElement::from_rational(x, q); });
            return complex_cohomology(cx);
        }
        case TwistMode::Transcendental: {
            auto cx = detail::build_complex<PolyFraction>(
                mt, PolyFraction::indeterminate(),
                [](const Rational& x) { return PolyFraction::from_rational(x); });
            return complex_cohomology(cx);
        }
    }
    throw std::logic_error("unreachable twist mode");
}

inline CheckResult cross_check(const MappingTorus& mt, const TwistSpec& tw) {
    CheckResult c;
    std::vector<int> oracle = oracle_dims(mt, tw);
    std::vector<int> engine = twisted_cohomology(mt, tw).dims;
    if (oracle.size() != engine.size()) {
        c.require(false, "dimension vector length mismatch");
        return c;
    }
    for (size_t i = 0; i < oracle.size(); ++i)
        c.require(oracle[i] == engine[i],
                  "degree " + std::to_string(i) + ": oracle " + std::to_string(oracle[i]) +
                      " vs engine " + std::to_string(engine[i]));
    return c;
}

}  // namespace mnk

#endif
