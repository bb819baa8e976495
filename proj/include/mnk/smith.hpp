// Smith normal form over Q[t] (Euclidean by degree) and over the Laurent
// ring Q[t, t^-1], which differs from Q[t] only by the units c*t^k.

#ifndef MNK_SMITH_HPP
#define MNK_SMITH_HPP

#include <utility>
#include <vector>

#include "mnk/laurent.hpp"
#include "mnk/matrix.hpp"
#include "mnk/poly.hpp"

namespace mnk {

template <class S>
struct SmithForm {
    Matrix<S> left;      // U, unit determinant
    Matrix<S> diagonal;  // D = U * A * V, divisibility chain d1 | d2 | ...
    Matrix<S> right;     // V, unit determinant
};

namespace detail {

template <class S>
void add_row_multiple(Matrix<S>& m, int dst, int src, const S& f) {
    for (int j = 0; j < m.cols(); ++j) m.at(dst, j) += f * m.at(src, j);
}
template <class S>
void add_col_multiple(Matrix<S>& m, int dst, int src, const S& f) {
    for (int i = 0; i < m.rows(); ++i) m.at(i, dst) += f * m.at(i, src);
}
template <class S>
void swap_rows(Matrix<S>& m, int a, int b) {
    for (int j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}
template <class S>
void swap_cols(Matrix<S>& m, int a, int b) {
    for (int i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}

}  // namespace detail

// SNF over Q[t]. Pivot selection: entry of minimal degree in the working
// block, reduced by Euclidean division until it divides its whole row,
// column, and eventually the remaining block. Divisors come out monic.
inline SmithForm<Poly> smith_normal_form_poly(const Matrix<Poly>& a) {
    using detail::add_col_multiple;
    using detail::add_row_multiple;
    int r = a.rows(), c = a.cols();
    Matrix<Poly> d = a;
    Matrix<Poly> u = Matrix<Poly>::identity(r, Poly::one());
    Matrix<Poly> v = Matrix<Poly>::identity(c, Poly::one());

    auto find_min_degree = [&](int start, int& pi, int& pj) -> bool {
        pi = pj = -1;
        for (int i = start; i < r; ++i)
            for (int j = start; j < c; ++j)
                if (!d.at(i, j).is_zero() &&
                    (pi < 0 || d.at(i, j).degree() < d.at(pi, pj).degree())) {
                    pi = i;
                    pj = j;
                }
        return pi >= 0;
    };

    for (int k = 0; k < std::min(r, c); ++k) {
        int pi, pj;
        if (!find_min_degree(k, pi, pj)) break;
        detail::swap_rows(d, k, pi);
        detail::swap_rows(u, k, pi);
        detail::swap_cols(d, k, pj);
        detail::swap_cols(v, k, pj);

        for (bool dirty = true; dirty;) {
            dirty = false;
            // clear column k by division with remainder
            for (int i = k + 1; i < r; ++i) {
                if (d.at(i, k).is_zero()) continue;
                auto [q, rem] = divmod(d.at(i, k), d.at(k, k));
                add_row_multiple(d, i, k, -q);
                add_row_multiple(u, i, k, -q);
                if (!rem.is_zero()) {
                    detail::swap_rows(d, k, i);
                    detail::swap_rows(u, k, i);
                    dirty = true;
                }
            }
            if (dirty) continue;
            for (int j = k + 1; j < c; ++j) {
                if (d.at(k, j).is_zero()) continue;
                auto [q, rem] = divmod(d.at(k, j), d.at(k, k));
                add_col_multiple(d, j, k, -q);
                add_col_multiple(v, j, k, -q);
                if (!rem.is_zero()) {
                    detail::swap_cols(d, k, j);
                    detail::swap_cols(v, k, j);
                    dirty = true;
                }
            }
            if (dirty) continue;
            // pivot must divide the rest of the block for the chain
            for (int i = k + 1; i < r && !dirty; ++i)
                for (int j = k + 1; j < c && !dirty; ++j) {
                    if (d.at(i, j).is_zero()) continue;
                    if (!(d.at(i, j) % d.at(k, k)).is_zero()) {
                        add_row_multiple(d, k, i, Poly::one());
                        add_row_multiple(u, k, i, Poly::one());
                        dirty = true;
                    }
                }
        }
        // make the divisor monic; fold the unit into U
        Rational lead = d.at(k, k).leading();
        if (!(lead == 1)) {
            Rational s = inv(lead);
            for (int j = 0; j < c; ++j) d.at(k, j) = s * d.at(k, j);
            for (int j = 0; j < r; ++j) u.at(k, j) = s * u.at(k, j);
        }
    }
    return {u, d, v};
}

// SNF over the Laurent ring. Each row is scaled by the unit t^-m (m the
// lowest exponent in the row) to land in Q[t]; that is a left unit
// transform, folded into U. The resulting divisors are normalized to be
// monic with nonzero constant term, again through U.
inline SmithForm<LaurentPoly> smith_normal_form(const Matrix<LaurentPoly>& a) {
    int r = a.rows(), c = a.cols();
    Matrix<Poly> ap(r, c, Poly::zero());
    std::vector<int> row_shift(r, 0);
    for (int i = 0; i < r; ++i) {
        int m = 0;
        bool any = false;
        for (int j = 0; j < c; ++j) {
            if (a.at(i, j).is_zero()) continue;
            int lo = a.at(i, j).low_exp();
            m = any ? std::min(m, lo) : lo;
            any = true;
        }
        row_shift[i] = any ? m : 0;
        for (int j = 0; j < c; ++j) {
            const LaurentPoly& e = a.at(i, j);
            if (e.is_zero()) continue;
            ap.at(i, j) = e.mantissa() * Poly::monomial(e.low_exp() - row_shift[i]);
        }
    }
    SmithForm<Poly> s = smith_normal_form_poly(ap);

    auto lift = [](const Matrix<Poly>& m) {
        return m.template map<LaurentPoly>(
            [](const Poly& p) { return LaurentPoly::from_poly(p); });
    };
    SmithForm<LaurentPoly> out{lift(s.left), lift(s.diagonal), lift(s.right)};
    // U := U_poly * diag(t^-shift), so that out.left * a * out.right = D
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            out.left.at(i, j) = out.left.at(i, j) * LaurentPoly::monomial(-row_shift[j]);
    // strip t^k from the divisors (units in the Laurent ring)
    for (int k = 0; k < std::min(r, c); ++k) {
        const LaurentPoly& dk = out.diagonal.at(k, k);
        if (dk.is_zero() || dk.low_exp() == 0) continue;
        LaurentPoly unit = LaurentPoly::monomial(-dk.low_exp());
        for (int j = 0; j < c; ++j) out.diagonal.at(k, j) = unit * out.diagonal.at(k, j);
        for (int j = 0; j < r; ++j) out.left.at(k, j) = unit * out.left.at(k, j);
    }
    return out;
}

// The nontrivial (non-unit) diagonal entries as monic polynomials with
// nonzero constant term.
inline std::vector<Poly> elementary_divisors(const SmithForm<LaurentPoly>& s) {
    std::vector<Poly> out;
    for (int k = 0; k < std::min(s.diagonal.rows(), s.diagonal.cols()); ++k) {
        const LaurentPoly& d = s.diagonal.at(k, k);
        if (d.is_zero() || d.is_unit()) continue;
        out.push_back(laurent_normalize(d).primitive);
    }
    return out;
}

}  // namespace mnk

#endif
