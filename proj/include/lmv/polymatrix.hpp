#pragma once

#include "lmv/polynomial.hpp"

namespace lmv {

/// Dense matrix with polynomial entries, used for M(l) and the Phi matrices.
class PolyMatrix {
public:
    PolyMatrix(LayoutPtr layout, MonomialOrder order, int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Polynomial& at(int i, int j) const { return a_[i * cols_ + j]; }
    Polynomial& at(int i, int j) { return a_[i * cols_ + j]; }
    const LayoutPtr& layout_ptr() const { return layout_; }
    MonomialOrder order() const { return order_; }

    PolyMatrix submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const;

    /// Division-free determinant: Laplace expansion over columns with minors
    /// cached by row subset. For 3x3 inputs this reproduces expansion along
    /// the first row term by term.
    Polynomial det() const;

private:
    int rows_, cols_;
    LayoutPtr layout_;
    MonomialOrder order_;
    std::vector<Polynomial> a_;
};

}  // namespace lmv
