// Closed-form twisted cohomology of the mapping torus from the twisted
// Mayer-Vietoris sequence: dim H^i = nu_{i-1} + nu_i with
// nu_k = nullity(I - lambda * Lambda^k A) over the active field.

#ifndef MNK_MV_ENGINE_HPP
#define MNK_MV_ENGINE_HPP

#include <optional>
#include <string>
#include <vector>

#include "mnk/mapping_torus.hpp"
#include "mnk/matrix.hpp"
#include "mnk/number_field.hpp"
#include "mnk/poly_fraction.hpp"

namespace mnk {

struct CohomologyReport {
    std::vector<int> dims;       // i = 0 .. n+1
    std::vector<int> nullities;  // k = 0 .. n
    int euler = 0;
    TwistSpec twist;
    std::string field;
    std::optional<std::string> alpha_approx;
    std::vector<std::string> warnings;
};

namespace detail {

// nu_k for all k, over any exact field S. lambda is the twist weight as
// an element of S, embed lifts rational matrix entries into S.
template <class S, class Embed>
std::vector<int> mv_nullities(const MappingTorus& mt, const S& lambda, Embed embed) {
    std::vector<int> nu;
    InducedMaps im = induced_maps(mt);
    for (int k = 0; k <= mt.n; ++k) {
        const Matrix<Rational>& mk = im.maps[k];
        int d = mk.rows();
        Matrix<S> a(d, d, zero_like(lambda));
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                a.at(i, j) = -(lambda * embed(mk.at(i, j)));
                if (i == j) a.at(i, j) += one_like(lambda);
            }
        nu.push_back(rank_nullity(a).second);
    }
    return nu;
}

inline CohomologyReport assemble(const MappingTorus& mt, const TwistSpec& tw,
                                 std::vector<int> nu, std::string field) {
    CohomologyReport r;
    r.twist = tw;
    r.field = std::move(field);
    r.nullities = std::move(nu);
    r.dims.resize(static_cast<size_t>(mt.n) + 2, 0);
    for (int i = 0; i <= mt.n + 1; ++i) {
        int prev = (i > 0) ? r.nullities[i - 1] : 0;
        int cur = (i <= mt.n) ? r.nullities[i] : 0;
        r.dims[i] = prev + cur;
    }
    r.euler = 0;
    for (int i = 0; i < static_cast<int>(r.dims.size()); ++i)
        r.euler += (i % 2 == 0) ? r.dims[i] : -r.dims[i];
    if (mt.det_sign < 0)
        r.warnings.push_back("monodromy has determinant -1 (GL_n(Z), not SL_n(Z))");
    return r;
}

}  // namespace detail

inline CohomologyReport twisted_cohomology(const MappingTorus& mt, const TwistSpec& tw,
                                           int alpha_digits = 4) {
    switch (tw.mode) {
        case TwistMode::Untwisted:
        case TwistMode::RationalWeight: {
            Rational lambda = (tw.mode == TwistMode::Untwisted) ? Rational(1) : tw.lambda;
            auto nu = detail::mv_nullities<Rational>(mt, lambda,
                                                     [](const Rational& x) { return x; });
            return detail::assemble(mt, tw, std::move(nu), "Q");
        }
        case TwistMode::LeeEigenvalue: {
            auto q = mt.modulus_ptr();
            NumberFieldElement lambda = NumberFieldElement::generator(q);
            auto nu = detail::mv_nullities<NumberFieldElement>(
                mt, lambda,
                [&](const Rational& x) { return NumberFieldElement::from_rational(x, q); });
            CohomologyReport r = detail::assemble(
                mt, tw, std::move(nu), "Q(alpha), alpha root of " + to_string(*mt.modulus));
            RealRootLabel lab = *mt.alpha_label;
            Rational width(1);
            for (int i = 0; i < alpha_digits + 2; ++i) width /= 10;
            lab.refine(width);
            r.alpha_approx = decimal_string((lab.lo + lab.hi) / 2, alpha_digits);
            return r;
        }
        case TwistMode::Transcendental: {
            PolyFraction lambda = PolyFraction::indeterminate();
            auto nu = detail::mv_nullities<PolyFraction>(
                mt, lambda, [](const Rational& x) { return PolyFraction::from_rational(x); });
            return detail::assemble(mt, tw, std::move(nu), "Q(lambda), lambda transcendental");
        }
    }
    throw std::logic_error("unreachable twist mode");
}

// Audit object: the block matrix [[I, -I], [I, -lambda M_k]] and its rank,
// rendered entrywise for display.
struct GammaAudit {
    int degree = 0;
    int size = 0;  // 2 * C(n, k)
    int rank = 0;
    std::vector<std::string> entries;  // row-major, size x size
};

namespace detail {

template <class S, class Embed>
GammaAudit gamma_audit(const MappingTorus& mt, const S& lambda, Embed embed, int k,
                       const std::string& var) {
    InducedMaps im = induced_maps(mt);
    const Matrix<Rational>& mk = im.maps[k];
    int d = mk.rows();
    Matrix<S> g(2 * d, 2 * d, zero_like(lambda));
    for (int i = 0; i < d; ++i) {
        g.at(i, i) = one_like(lambda);
        g.at(i, d + i) = -one_like(lambda);
        g.at(d + i, i) = one_like(lambda);
        for (int j = 0; j < d; ++j) g.at(d + i, d + j) = -(lambda * embed(mk.at(i, j)));
    }
    GammaAudit a;
    a.degree = k;
    a.size = 2 * d;
    a.rank = gaussian_rank(g);
    for (const auto& e : g.entries()) a.entries.push_back(to_string(e, var));
    return a;
}

}  // namespace detail

inline GammaAudit gamma_matrix(const MappingTorus& mt, const TwistSpec& tw, int k) {
    if (k < 0 || k > mt.n) throw DegreeOutOfRange();
    switch (tw.mode) {
        case TwistMode::Untwisted:
        case TwistMode::RationalWeight: {
            Rational lambda = (tw.mode == TwistMode::Untwisted) ? Rational(1) : tw.lambda;
            return detail::gamma_audit<Rational>(
                mt, lambda, [](const Rational& x) { return x; }, k, "");
        }
        case TwistMode::LeeEigenvalue: {
            auto q = mt.modulus_ptr();
            return detail::gamma_audit<NumberFieldElement>(
                mt, NumberFieldElement::generator(q),
                [&](const Rational& x) { return NumberFieldElement::from_rational(x, q); }, k,
                "alpha");
        }
        case TwistMode::Transcendental:
            return detail::gamma_audit<PolyFraction>(
                mt, PolyFraction::indeterminate(),
                [](const Rational& x) { return PolyFraction::from_rational(x); }, k, "lambda");
    }
    throw std::logic_error("unreachable twist mode");
}

struct CheckResult {
    bool pass = true;
    std::vector<std::string> violations;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            violations.push_back(what);
        }
    }
};

// Structural assertions: Euler characteristic 0 always; H^0 and H^top
// vanish whenever the twist is not exact (lambda != 1).
inline CheckResult vanishing_check(const CohomologyReport& r) {
    CheckResult c;
    c.require(r.euler == 0, "Euler characteristic is " + std::to_string(r.euler) + ", expected 0");
    if (!r.twist.is_exact()) {
        c.require(r.dims.front() == 0, "H^0 nonzero for a non-exact twist");
        c.require(r.dims.back() == 0, "H^top nonzero for a non-exact twist");
    }
    return c;
}

}  // namespace mnk

#endif
