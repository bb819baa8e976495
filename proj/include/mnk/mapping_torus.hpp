// Algebraic model of the mapping torus T^n x_phi S^1: the integer
// monodromy A acting on H^1 of the fiber torus, its characteristic
// polynomial, and the induced maps Lambda^k A on H^k.

#ifndef MNK_MAPPING_TORUS_HPP
#define MNK_MAPPING_TORUS_HPP

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mnk/matrix.hpp"
#include "mnk/poly.hpp"
#include "mnk/poly_factor.hpp"
#include "mnk/rational.hpp"
#include "mnk/sturm.hpp"

namespace mnk {

struct NotUnimodular : std::domain_error {
    NotUnimodular() : std::domain_error("monodromy matrix must have determinant +-1") {}
};

struct ModeUnavailable : std::domain_error {
    explicit ModeUnavailable(const std::string& what) : std::domain_error(what) {}
};

enum class TwistMode { Untwisted, RationalWeight, LeeEigenvalue, Transcendental };

// theta = s * p^* (circle volume form), encoded by lambda = e^s.
// Untwisted: lambda = 1. RationalWeight: lambda given. LeeEigenvalue:
// lambda = alpha, the selected real eigenvalue > 1 of the monodromy.
// Transcendental: lambda is an honest indeterminate over Q.
struct TwistSpec {
    TwistMode mode = TwistMode::Untwisted;
    Rational lambda = Rational(1);  // RationalWeight only

    static TwistSpec untwisted() { return {TwistMode::Untwisted, Rational(1)}; }
    static TwistSpec rational(Rational l) {
        if (l.is_zero()) throw std::invalid_argument("rational twist weight must be nonzero");
        return {TwistMode::RationalWeight, std::move(l)};
    }
    static TwistSpec lee() { return {TwistMode::LeeEigenvalue, Rational(1)}; }
    static TwistSpec transcendental() { return {TwistMode::Transcendental, Rational(1)}; }

    // true when theta is exact (lambda = 1): the H^0 / H^top vanishing
    // statement does not apply there
    bool is_exact() const {
        return mode == TwistMode::Untwisted ||
               (mode == TwistMode::RationalWeight && lambda == 1);
    }
};

struct MappingTorus {
    int n = 0;
    Matrix<Rational> monodromy;  // integer entries, det = +-1
    Poly charpoly;               // det(xI - A), monic
    int det_sign = 1;
    // irreducible factor of charpoly carrying the selected real root > 1
    std::optional<Poly> modulus;
    std::optional<RealRootLabel> alpha_label;

    bool lee_available() const { return modulus.has_value(); }

    std::shared_ptr<const Poly> modulus_ptr() const {
        if (!modulus) throw ModeUnavailable("no real eigenvalue > 1: Lee mode unavailable");
        return std::make_shared<const Poly>(*modulus);
    }
};

struct InducedMaps {
    std::vector<Matrix<Rational>> maps;  // maps[k] = Lambda^k A, lex wedge basis
};

namespace detail {

inline Poly charpoly_of(const Matrix<Rational>& a) {
    int n = a.rows();
    Matrix<Poly> xi(n, n, Poly::zero());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            xi.at(i, j) = -Poly(a.at(i, j));
            if (i == j) xi.at(i, j) += Poly::monomial(1);
        }
    return bareiss_det(xi);
}

}  // namespace detail

// Builds the mapping-torus model. When several irreducible factors of
// the characteristic polynomial have real roots > 1, the factor holding
// the largest such root is selected; root_select overrides by index into
// the increasing list of all roots > 1.
inline MappingTorus build_mapping_torus(const Matrix<Rational>& a,
                                        std::optional<int> root_select = std::nullopt) {
    if (a.rows() != a.cols()) throw NonSquare();
    for (const auto& e : a.entries())
        if (boost::multiprecision::denominator(e) != 1)
            throw std::invalid_argument("monodromy matrix must have integer entries");
    Rational d = bareiss_det(a);
    if (!(d == 1 || d == -1)) throw NotUnimodular();

    MappingTorus mt;
    mt.n = a.rows();
    mt.monodromy = a;
    mt.det_sign = (d == 1) ? 1 : -1;
    mt.charpoly = detail::charpoly_of(a);

    // collect roots > 1 across irreducible factors
    struct Candidate {
        Poly factor;
        RealRootLabel label;
    };
    std::vector<Candidate> candidates;
    for (const auto& [f, mult] : poly_factor(mt.charpoly)) {
        (void)mult;
        if (f.degree() < 1) continue;
        for (const auto& root : isolate_real_roots(f)) {
            RealRootLabel lab = root;
            lab.refine(Rational(1, 1024));
            if (lab.hi <= 1) continue;
            if (lab.lo <= 1) {
                // interval touches 1: since f(1) != 0 would let us split;
                // shrink until it clears 1 or is discarded
                while (lab.lo <= 1 && lab.hi > 1 && !f.eval(Rational(1)).is_zero())
                    lab.refine((lab.hi - lab.lo) / 2);
                if (lab.lo <= 1) continue;
            }
            candidates.push_back({f, lab});
        }
    }
    std::sort(candidates.begin(), candidates.end(),
              [](const Candidate& x, const Candidate& y) { return x.label.lo < y.label.lo; });
    if (!candidates.empty()) {
        size_t pick = candidates.size() - 1;  // largest root by default
        if (root_select) {
            if (*root_select < 0 || *root_select >= static_cast<int>(candidates.size()))
                throw std::out_of_range("root selection index out of range");
            pick = static_cast<size_t>(*root_select);
        }
        mt.modulus = candidates[pick].factor;
        mt.alpha_label = candidates[pick].label;
    }
    return mt;
}

inline InducedMaps induced_maps(const MappingTorus& mt) {
    InducedMaps im;
    for (int k = 0; k <= mt.n; ++k) im.maps.push_back(exterior_power(mt.monodromy, k));
    return im;
}

// Rewrites a degree-2 induced map from the lex wedge basis
// {e1^e2, e1^e3, e2^e3} to the cyclic basis {e2^e3, e3^e1, e1^e2};
// e3^e1 = -(e1^e3) carries a sign. For A in SL_3 this exhibits
// Lambda^2 A as the transposed adjugate.
template <class S>
Matrix<S> to_cyclic_h2_basis(const Matrix<S>& m) {
    if (m.rows() != 3 || m.cols() != 3)
        throw std::invalid_argument("cyclic H^2 basis needs a 3x3 matrix");
    static const int perm[3] = {2, 1, 0};
    static const int sign[3] = {1, -1, 1};
    Matrix<S> out = m;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            S v = m.at(perm[i], perm[j]);
            out.at(i, j) = (sign[i] * sign[j] < 0) ? -v : v;
        }
    return out;
}

}  // namespace mnk

#endif
