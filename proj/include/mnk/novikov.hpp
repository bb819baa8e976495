// Novikov homology of the mapping torus through the Laurent-polynomial
// Wang complex: free ranks over the fraction field Q(t), torsion from
// the Smith normal form over Q[t, t^-1].

#ifndef MNK_NOVIKOV_HPP
#define MNK_NOVIKOV_HPP

#include <string>
#include <vector>

#include "mnk/laurent.hpp"
#include "mnk/mapping_torus.hpp"
#include "mnk/matrix.hpp"
#include "mnk/mv_engine.hpp"
#include "mnk/poly_fraction.hpp"
#include "mnk/smith.hpp"

namespace mnk {

struct NovikovInvariants {
    std::vector<int> betti;                  // b_i^Nov, i = 0 .. n+1
    std::vector<std::vector<Poly>> torsion;  // normalized elementary divisors per degree
    // period group of the twist is s*Z: rank 1, a single free generator
    std::string period_generator = "s*Z";
    int free_generators = 1;
    std::vector<std::string> notes;
};

// t * Lambda^k A - I over Q[t, t^-1].
inline Matrix<LaurentPoly> wang_matrix(const MappingTorus& mt, int k) {
    Matrix<Rational> mk = exterior_power(mt.monodromy, k);
    int d = mk.rows();
    Matrix<LaurentPoly> w(d, d, LaurentPoly::zero());
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            w.at(i, j) = LaurentPoly::monomial(1, mk.at(i, j));
            if (i == j) w.at(i, j) -= LaurentPoly::one();
        }
    return w;
}

namespace detail {

inline Matrix<PolyFraction> to_fraction_field(const Matrix<LaurentPoly>& w) {
    return w.map<PolyFraction>([](const LaurentPoly& e) {
        if (e.is_zero()) return PolyFraction::zero();
        Poly num = e.mantissa();
        int k = e.low_exp();
        if (k >= 0) return PolyFraction(num * Poly::monomial(k));
        return PolyFraction(num, Poly::monomial(-k));
    });
}

}  // namespace detail

// H_i over the Laurent ring is coker(W_i) + ker(W_{i-1}); ranks are read
// off over Q(t), torsion comes from the elementary divisors of W_i.
// Interpreted over Nov(Gamma) via flatness of Q[t,t^-1] -> Nov(Gamma).
inline NovikovInvariants novikov_invariants(const MappingTorus& mt) {
    NovikovInvariants inv;
    std::vector<int> corank(mt.n + 1), nullity(mt.n + 1);
    inv.torsion.resize(static_cast<size_t>(mt.n) + 2);
    for (int k = 0; k <= mt.n; ++k) {
        Matrix<LaurentPoly> w = wang_matrix(mt, k);
        auto [rank, nul] = rank_nullity(detail::to_fraction_field(w));
        corank[k] = w.rows() - rank;
        nullity[k] = nul;
        inv.torsion[k] = elementary_divisors(smith_normal_form(w));
    }
    for (int i = 0; i <= mt.n + 1; ++i) {
        int b = 0;
        if (i <= mt.n) b += corank[i];
        if (i >= 1) b += nullity[i - 1];
        inv.betti.push_back(b);
    }
    inv.notes.push_back(
        "computed over Q[t,t^-1]; Q-ranks coincide with Nov(Gamma)-ranks, "
        "Z-coefficient torsion not tracked");
    return inv;
}

// The algebraic shadow of the transcendental-twist theorem: Novikov
// Betti numbers equal the generic twisted cohomology dimensions.
inline CheckResult pajitnov_consistency(const MappingTorus& mt) {
    CheckResult c;
    NovikovInvariants inv = novikov_invariants(mt);
    CohomologyReport r = twisted_cohomology(mt, TwistSpec::transcendental());
    if (inv.betti.size() != r.dims.size()) {
        c.require(false, "length mismatch between Novikov and twisted reports");
        return c;
    }
    for (size_t i = 0; i < inv.betti.size(); ++i)
        c.require(inv.betti[i] == r.dims[i],
                  "degree " + std::to_string(i) + ": b^Nov = " + std::to_string(inv.betti[i]) +
                      " but generic dim = " + std::to_string(r.dims[i]));
    return c;
}

}  // namespace mnk

#endif
