#pragma once

#include <cstdint>
#include <vector>

#include "lmv/rational.hpp"

namespace lmv {

using RatVec = std::vector<Rational>;

bool is_zero_vec(const RatVec& v);
Rational dot(const RatVec& a, const RatVec& b);
RatVec add(const RatVec& a, const RatVec& b);
RatVec sub(const RatVec& a, const RatVec& b);
RatVec scale(const RatVec& v, const Rational& c);
RatVec cross3(const RatVec& a, const RatVec& b);

/// Scales to coprime integer coordinates with the first nonzero one positive.
/// The canonical representative of a projective point. Zero vectors pass through.
RatVec primitive(const RatVec& v);

/// True when a = c*b for some nonzero scalar c (neither may be zero).
bool proportional(const RatVec& a, const RatVec& b);

/// Dense matrix of exact rationals, row-major.
class RationalMatrix {
public:
    RationalMatrix() : rows_(0), cols_(0) {}
    RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    RationalMatrix(int rows, int cols, std::vector<Rational> entries);

    static RationalMatrix identity(int n);
    static RationalMatrix from_rows(const std::vector<RatVec>& rows);
    static RationalMatrix from_cols(const std::vector<RatVec>& cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Rational& at(int i, int j) const { return a_[i * cols_ + j]; }
    Rational& at(int i, int j) { return a_[i * cols_ + j]; }

    RatVec row(int i) const;
    RatVec col(int j) const;
    RationalMatrix transpose() const;
    RationalMatrix submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const;

    friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
    friend RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
    friend RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);
    RationalMatrix scaled(const Rational& c) const;
    RatVec apply(const RatVec& x) const;

    friend bool operator==(const RationalMatrix& a, const RationalMatrix& b);

    /// Exact determinant via fraction-free Bareiss elimination (rows cleared
    /// to integers first, every interior division exact).
    Rational det() const;

    int rank() const;

    /// Basis of the right null space, each vector in primitive integer form.
    /// Empty exactly when the matrix has full column rank.
    std::vector<RatVec> kernel_basis() const;

    RationalMatrix inverse() const;

    /// One solution x of Ax = b, or throws InputError when inconsistent.
    RatVec solve(const RatVec& b) const;

    struct Minor {
        std::vector<int> row_set;
        std::vector<int> col_set;
        Rational value;
    };
    /// All k-by-k minors, index sets in lexicographic order of (rows, cols).
    std::vector<Minor> minors(int k) const;

private:
    int rows_, cols_;
    std::vector<Rational> a_;
};

/// Ascending k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<int>> subsets_of_size(int n, int k);

}  // namespace lmv
