// Generic exact matrices over the scalar tower, with two independent
// elimination kernels: ordinary Gaussian elimination with exact division
// (fields) and fraction-free Bareiss (any integral domain with exact
// division). The two double as cross-checks of one another.

#ifndef MNK_MATRIX_HPP
#define MNK_MATRIX_HPP

#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mnk/rational.hpp"

namespace mnk {

struct NonSquare : std::domain_error {
    NonSquare() : std::domain_error("matrix is not square") {}
};

struct DegreeOutOfRange : std::out_of_range {
    DegreeOutOfRange() : std::out_of_range("exterior power degree out of range") {}
};

template <class S>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols, const S& fill)
        : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols, fill) {}
    Matrix(int rows, int cols, std::vector<S> entries)
        : rows_(rows), cols_(cols), e_(std::move(entries)) {
        if (e_.size() != static_cast<size_t>(rows) * cols)
            throw std::invalid_argument("entry count does not match matrix shape");
    }
    Matrix(std::initializer_list<std::initializer_list<S>> rows) {
        rows_ = static_cast<int>(rows.size());
        cols_ = rows_ ? static_cast<int>(rows.begin()->size()) : 0;
        for (const auto& r : rows) {
            if (static_cast<int>(r.size()) != cols_)
                throw std::invalid_argument("ragged initializer");
            for (const auto& x : r) e_.push_back(x);
        }
    }

    static Matrix identity(int n, const S& one) {
        Matrix m(n, n, zero_like(one));
        for (int i = 0; i < n; ++i) m.at(i, i) = one;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool empty() const { return e_.empty(); }

    S& at(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
    const S& at(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }
    const std::vector<S>& entries() const { return e_; }

    Matrix transpose() const {
        if (empty()) return Matrix(cols_, rows_, e_);
        Matrix t(cols_, rows_, zero_like(e_.front()));
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    template <class T>
    Matrix<T> map(const std::function<T(const S&)>& f) const {
        std::vector<T> out;
        out.reserve(e_.size());
        for (const auto& x : e_) out.push_back(f(x));
        return Matrix<T>(rows_, cols_, std::move(out));
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        require_same_shape(a, b);
        Matrix r = a;
        for (size_t i = 0; i < r.e_.size(); ++i) r.e_[i] += b.e_[i];
        return r;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        require_same_shape(a, b);
        Matrix r = a;
        for (size_t i = 0; i < r.e_.size(); ++i) r.e_[i] -= b.e_[i];
        return r;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("shape mismatch in product");
        if (a.empty() || b.empty()) return Matrix(a.rows_, b.cols_, std::vector<S>{});
        Matrix r(a.rows_, b.cols_, zero_like(a.e_.front()));
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k)
                for (int j = 0; j < b.cols_; ++j) r.at(i, j) += a.at(i, k) * b.at(k, j);
        return r;
    }
    friend Matrix operator*(const S& s, const Matrix& m) {
        Matrix r = m;
        for (auto& x : r.e_) x = s * x;
        return r;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }

private:
    static void require_same_shape(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("shape mismatch");
    }
    int rows_, cols_;
    std::vector<S> e_;
};

// ---------------------------------------------------------------------
// Gaussian elimination over a field (exact pivots, first-nonzero pivot
// choice in row-major scan: deterministic, no magnitude pivoting).

template <class S>
int gaussian_rank(Matrix<S> m) {
    int rank = 0;
    for (int col = 0; col < m.cols() && rank < m.rows(); ++col) {
        int pivot = -1;
        for (int i = rank; i < m.rows(); ++i) {
            if (!is_zero(m.at(i, col))) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) continue;
        for (int j = 0; j < m.cols(); ++j) std::swap(m.at(rank, j), m.at(pivot, j));
        S pinv = inv(m.at(rank, col));
        for (int i = rank + 1; i < m.rows(); ++i) {
            if (is_zero(m.at(i, col))) continue;
            S f = m.at(i, col) * pinv;
            for (int j = col; j < m.cols(); ++j)
                m.at(i, j) -= f * m.at(rank, j);
        }
        ++rank;
    }
    return rank;
}

template <class S>
std::pair<int, int> rank_nullity(const Matrix<S>& m) {
    int r = gaussian_rank(m);
    return {r, m.cols() - r};
}

// ---------------------------------------------------------------------
// Fraction-free Bareiss elimination. Works over any integral domain with
// exact_div; divisions are exact by the Sylvester identity.

template <class S>
S bareiss_det(Matrix<S> m) {
    if (m.rows() != m.cols()) throw NonSquare();
    int n = m.rows();
    if (n == 0) throw std::invalid_argument("determinant of empty matrix needs a scalar exemplar");
    S prev = one_like(m.at(0, 0));
    bool negate = false;
    for (int k = 0; k < n - 1; ++k) {
        if (is_zero(m.at(k, k))) {
            int swap_row = -1;
            for (int i = k + 1; i < n; ++i)
                if (!is_zero(m.at(i, k))) {
                    swap_row = i;
                    break;
                }
            if (swap_row < 0) return zero_like(prev);
            for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(swap_row, j));
            negate = !negate;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m.at(i, j) = exact_div(m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j), prev);
        prev = m.at(k, k);
    }
    S d = m.at(n - 1, n - 1);
    return negate ? -d : d;
}

template <class S>
int bareiss_rank(Matrix<S> m) {
    if (m.empty()) return 0;
    S prev = one_like(m.entries().front());
    int rank = 0;
    for (int col = 0; col < m.cols() && rank < m.rows(); ++col) {
        int pivot = -1;
        for (int i = rank; i < m.rows(); ++i)
            if (!is_zero(m.at(i, col))) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        for (int j = 0; j < m.cols(); ++j) std::swap(m.at(rank, j), m.at(pivot, j));
        for (int i = rank + 1; i < m.rows(); ++i) {
            for (int j = col + 1; j < m.cols(); ++j)
                m.at(i, j) =
                    exact_div(m.at(i, j) * m.at(rank, col) - m.at(i, col) * m.at(rank, j), prev);
            m.at(i, col) = zero_like(prev);
        }
        prev = m.at(rank, col);
        ++rank;
    }
    return rank;
}

// ---------------------------------------------------------------------
// Determinant by Laplace expansion; ring-safe (no divisions), used for
// the small minors of exterior powers.

template <class S>
S laplace_det(const Matrix<S>& m) {
    if (m.rows() != m.cols()) throw NonSquare();
    int n = m.rows();
    if (n == 1) return m.at(0, 0);
    S acc = zero_like(m.at(0, 0));
    for (int j = 0; j < n; ++j) {
        if (is_zero(m.at(0, j))) continue;
        Matrix<S> sub(n - 1, n - 1, zero_like(m.at(0, 0)));
        for (int i = 1; i < n; ++i) {
            int cc = 0;
            for (int c = 0; c < n; ++c) {
                if (c == j) continue;
                sub.at(i - 1, cc++) = m.at(i, c);
            }
        }
        S term = m.at(0, j) * laplace_det(sub);
        if (j % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

// ---------------------------------------------------------------------
// Exterior powers: rows/columns indexed by lexicographically ordered
// k-subsets; entries are the corresponding k x k minors.

inline std::vector<std::vector<int>> lex_subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int i = start; i < n; ++i) {
            cur.push_back(i);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

template <class S>
Matrix<S> exterior_power(const Matrix<S>& m, int k) {
    if (m.rows() != m.cols()) throw NonSquare();
    int n = m.rows();
    if (k < 0 || k > n) throw DegreeOutOfRange();
    if (n == 0) throw std::invalid_argument("exterior power of empty matrix");
    const S& exemplar = m.at(0, 0);
    if (k == 0) return Matrix<S>::identity(1, one_like(exemplar));
    auto subsets = lex_subsets(n, k);
    int d = static_cast<int>(subsets.size());
    Matrix<S> out(d, d, zero_like(exemplar));
    for (int r = 0; r < d; ++r) {
        for (int c = 0; c < d; ++c) {
            Matrix<S> minor(k, k, zero_like(exemplar));
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) minor.at(i, j) = m.at(subsets[r][i], subsets[c][j]);
            out.at(r, c) = laplace_det(minor);
        }
    }
    return out;
}

template <class S>
S det(const Matrix<S>& m) {
    return bareiss_det(m);
}

// Conjugation by the basis permutation sending lex order to a caller
// supplied order: entry (i, j) of the result is m(perm[i], perm[j]).
template <class S>
Matrix<S> permute_basis(const Matrix<S>& m, const std::vector<int>& perm) {
    if (m.rows() != m.cols() || static_cast<int>(perm.size()) != m.rows())
        throw std::invalid_argument("permutation size mismatch");
    Matrix<S> out = m;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out.at(i, j) = m.at(perm[i], perm[j]);
    return out;
}

}  // namespace mnk

#endif
