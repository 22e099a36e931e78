#ifndef TALEX_POLY_MATRIX_HPP
#define TALEX_POLY_MATRIX_HPP

#include <vector>

#include "talex/laurent.hpp"
#include "talex/matrix.hpp"

namespace talex {

/// Dense matrix over the Laurent ring.
template <ScalarField S>
class PolyMatrix {
public:
    PolyMatrix(int rows, int cols, int num_vars)
        : rows_(rows), cols_(cols), nvars_(num_vars),
          e_(static_cast<std::size_t>(rows) * cols, LaurentPoly<S>(num_vars)) {}

    static PolyMatrix identity(int n, int num_vars) {
        PolyMatrix m(n, n, num_vars);
        for (int i = 0; i < n; ++i)
            m.at(i, i) = LaurentPoly<S>::constant(num_vars, scalar_traits<S>::one());
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int num_vars() const { return nvars_; }

    LaurentPoly<S>& at(int i, int j) { return e_[static_cast<std::size_t>(i) * cols_ + j]; }
    const LaurentPoly<S>& at(int i, int j) const {
        return e_[static_cast<std::size_t>(i) * cols_ + j];
    }

    /// Writes the n x n scalar block times the monomial t^exp at (r0, c0).
    void set_block(int r0, int c0, const ScalarMatrix<S>& block, const std::vector<int>& exp) {
        for (int i = 0; i < block.dim(); ++i)
            for (int j = 0; j < block.dim(); ++j) {
                LaurentPoly<S> p(nvars_);
                p.add_term(exp, block.at(i, j));
                at(r0 + i, c0 + j) = std::move(p);
            }
    }

    /// Accumulates the block (as with set_block, but adding).
    void add_block(int r0, int c0, const ScalarMatrix<S>& block, const std::vector<int>& exp) {
        for (int i = 0; i < block.dim(); ++i)
            for (int j = 0; j < block.dim(); ++j)
                at(r0 + i, c0 + j).add_term(exp, block.at(i, j));
    }

    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
        if (a.cols_ != b.rows_ || a.nvars_ != b.nvars_)
            throw validation_error("matrix dimension mismatch");
        PolyMatrix r(a.rows_, b.cols_, a.nvars_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                if (a.at(i, k).is_zero()) continue;
                for (int j = 0; j < b.cols_; ++j)
                    r.at(i, j) += a.at(i, k) * b.at(k, j);
            }
        return r;
    }

    bool operator==(const PolyMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }

private:
    int rows_, cols_, nvars_;
    std::vector<LaurentPoly<S>> e_;
};

/// Fraction-free Bareiss determinant with exact division.  Pivots on the
/// nonzero column entry with the fewest terms (tie: lowest row index).
/// The empty matrix has determinant 1.
template <ScalarField S>
LaurentPoly<S> determinant(const PolyMatrix<S>& matrix) {
    if (matrix.rows() != matrix.cols()) throw validation_error("determinant of non-square matrix");
    const int n = matrix.rows();
    const int nv = matrix.num_vars();
    if (n == 0) return LaurentPoly<S>::constant(nv, scalar_traits<S>::one());

    PolyMatrix<S> m = matrix;
    BigFloat scale(1);
    if constexpr (!scalar_traits<S>::exact) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                scale = std::max(scale, m.at(i, j).max_coeff_magnitude());
    }

    bool negate = false;
    LaurentPoly<S> prev = LaurentPoly<S>::constant(nv, scalar_traits<S>::one());
    for (int k = 0; k < n; ++k) {
        int pivot = -1;
        std::size_t best_terms = 0;
        for (int i = k; i < n; ++i) {
            const auto& cand = m.at(i, k);
            if (cand.is_negligible(scale)) continue;
            if (pivot < 0 || cand.num_terms() < best_terms) {
                pivot = i;
                best_terms = cand.num_terms();
            }
        }
        if (pivot < 0) return LaurentPoly<S>(nv);
        if (pivot != k) {
            for (int j = 0; j < n; ++j) std::swap(m.at(pivot, j), m.at(k, j));
            negate = !negate;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                LaurentPoly<S> num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                m.at(i, j) = divexact(num, prev);
            }
            m.at(i, k) = LaurentPoly<S>(nv);
        }
        prev = m.at(k, k);
    }
    LaurentPoly<S> det = m.at(n - 1, n - 1);
    return negate ? -det : det;
}

}  // namespace talex

#endif
