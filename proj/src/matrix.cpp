#include "lmv/matrix.hpp"

#include <algorithm>

#include "lmv/errors.hpp"

namespace lmv {

bool is_zero_vec(const RatVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}

Rational dot(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw ShapeError("dot: size mismatch");
    Rational s;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

RatVec add(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw ShapeError("add: size mismatch");
    RatVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

RatVec sub(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw ShapeError("sub: size mismatch");
    RatVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

RatVec scale(const RatVec& v, const Rational& c) {
    RatVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] * c;
    return r;
}

RatVec cross3(const RatVec& a, const RatVec& b) {
    if (a.size() != 3 || b.size() != 3) throw ShapeError("cross3 needs 3-vectors");
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

RatVec primitive(const RatVec& v) {
    if (is_zero_vec(v)) return v;
    mpz_class den_lcm(1);
    for (const Rational& x : v) {
        mpz_class d = x.denominator();
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
        den_lcm = den_lcm / g * d;
    }
    std::vector<mpz_class> ints(v.size());
    mpz_class content(0);
    for (std::size_t i = 0; i < v.size(); ++i) {
        ints[i] = v[i].numerator() * (den_lcm / v[i].denominator());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), ints[i].get_mpz_t());
    }
    int lead_sign = 0;
    for (const auto& z : ints) {
        if (z != 0) {
            lead_sign = sgn(z);
            break;
        }
    }
    RatVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        mpz_class q = ints[i] / content;
        if (lead_sign < 0) q = -q;
        r[i] = Rational(q);
    }
    return r;
}

bool proportional(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) return false;
    if (is_zero_vec(a) || is_zero_vec(b)) return false;
    return primitive(a) == primitive(b);
}

RationalMatrix::RationalMatrix(int rows, int cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (static_cast<int>(a_.size()) != rows * cols) throw ShapeError("entry count != rows*cols");
}

RationalMatrix RationalMatrix::identity(int n) {
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<RatVec>& rows) {
    if (rows.empty()) return {};
    RationalMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows_; ++i) {
        if (rows[i].size() != rows[0].size()) throw ShapeError("ragged rows");
        for (int j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

RationalMatrix RationalMatrix::from_cols(const std::vector<RatVec>& cols) {
    return from_rows(cols).transpose();
}

RatVec RationalMatrix::row(int i) const {
    RatVec r(cols_);
    for (int j = 0; j < cols_; ++j) r[j] = at(i, j);
    return r;
}

RatVec RationalMatrix::col(int j) const {
    RatVec c(rows_);
    for (int i = 0; i < rows_; ++i) c[i] = at(i, j);
    return c;
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

RationalMatrix RationalMatrix::submatrix(const std::vector<int>& rows,
                                         const std::vector<int>& cols) const {
    RationalMatrix s(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) s.at(i, j) = at(rows[i], cols[j]);
    return s;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols_ != b.rows_) throw ShapeError("matmul shape mismatch");
    RationalMatrix c(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            const Rational& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < b.cols_; ++j) c.at(i, j) += aik * b.at(k, j);
        }
    return c;
}

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ShapeError("add shape mismatch");
    RationalMatrix c(a.rows_, a.cols_);
    for (int i = 0; i < a.rows_ * a.cols_; ++i) c.a_[i] = a.a_[i] + b.a_[i];
    return c;
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ShapeError("sub shape mismatch");
    RationalMatrix c(a.rows_, a.cols_);
    for (int i = 0; i < a.rows_ * a.cols_; ++i) c.a_[i] = a.a_[i] - b.a_[i];
    return c;
}

RationalMatrix RationalMatrix::scaled(const Rational& c) const {
    RationalMatrix r(rows_, cols_);
    for (int i = 0; i < rows_ * cols_; ++i) r.a_[i] = a_[i] * c;
    return r;
}

RatVec RationalMatrix::apply(const RatVec& x) const {
    if (static_cast<int>(x.size()) != cols_) throw ShapeError("apply: size mismatch");
    RatVec y(rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) y[i] += at(i, j) * x[j];
    return y;
}

bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

namespace {

// Rows scaled to integers; returns per-row factors applied.
void to_integer_rows(const RationalMatrix& m, std::vector<std::vector<mpz_class>>& out,
                     std::vector<Rational>& factors) {
    out.assign(m.rows(), std::vector<mpz_class>(m.cols()));
    factors.assign(m.rows(), Rational(1));
    for (int i = 0; i < m.rows(); ++i) {
        mpz_class den_lcm(1);
        for (int j = 0; j < m.cols(); ++j) {
            mpz_class d = m.at(i, j).denominator();
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
            den_lcm = den_lcm / g * d;
        }
        for (int j = 0; j < m.cols(); ++j)
            out[i][j] = m.at(i, j).numerator() * (den_lcm / m.at(i, j).denominator());
        factors[i] = Rational(mpq_class(den_lcm, 1));
    }
}

}  // namespace

Rational RationalMatrix::det() const {
    if (rows_ != cols_) throw ShapeError("determinant of non-square matrix");
    const int n = rows_;
    if (n == 0) return Rational(1);
    std::vector<std::vector<mpz_class>> a;
    std::vector<Rational> factors;
    to_integer_rows(*this, a, factors);

    // Bareiss: all divisions below are exact over the integers.
    mpz_class prev(1);
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k] == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (a[i][k] != 0) {
                    p = i;
                    break;
                }
            if (p < 0) return Rational(0);
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                mpz_class t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    Rational d{Rational(a[n - 1][n - 1])};
    if (sign < 0) d = -d;
    for (const Rational& f : factors) d /= f;
    return d;
}

namespace {

// Reduced row echelon form over the rationals; returns pivot columns.
std::vector<int> rref(std::vector<RatVec>& rows, int cols) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols && r < static_cast<int>(rows.size()); ++c) {
        int p = -1;
        for (int i = r; i < static_cast<int>(rows.size()); ++i)
            if (!rows[i][c].is_zero()) {
                p = i;
                break;
            }
        if (p < 0) continue;
        std::swap(rows[r], rows[p]);
        const Rational inv = rows[r][c].inverse();
        for (int j = c; j < cols; ++j) rows[r][j] *= inv;
        for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
            if (i == r || rows[i][c].is_zero()) continue;
            const Rational f = rows[i][c];
            for (int j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

int RationalMatrix::rank() const {
    std::vector<RatVec> rows;
    rows.reserve(rows_);
    for (int i = 0; i < rows_; ++i) rows.push_back(row(i));
    return static_cast<int>(rref(rows, cols_).size());
}

std::vector<RatVec> RationalMatrix::kernel_basis() const {
    std::vector<RatVec> rows;
    rows.reserve(rows_);
    for (int i = 0; i < rows_; ++i) rows.push_back(row(i));
    const std::vector<int> pivots = rref(rows, cols_);
    std::vector<bool> is_pivot(cols_, false);
    for (int c : pivots) is_pivot[c] = true;

    std::vector<RatVec> basis;
    for (int fc = 0; fc < cols_; ++fc) {
        if (is_pivot[fc]) continue;
        RatVec v(cols_);
        v[fc] = Rational(1);
        for (std::size_t pi = 0; pi < pivots.size(); ++pi) v[pivots[pi]] = -rows[pi][fc];
        basis.push_back(primitive(v));
    }
    return basis;
}

RationalMatrix RationalMatrix::inverse() const {
    if (rows_ != cols_) throw ShapeError("inverse of non-square matrix");
    std::vector<RatVec> rows;
    rows.reserve(rows_);
    for (int i = 0; i < rows_; ++i) {
        RatVec r = row(i);
        r.resize(2 * cols_);
        r[cols_ + i] = Rational(1);
        rows.push_back(std::move(r));
    }
    const std::vector<int> pivots = rref(rows, 2 * cols_);
    if (static_cast<int>(pivots.size()) != cols_ || pivots.back() >= cols_)
        throw InputError("matrix is singular");
    RationalMatrix inv(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) inv.at(i, j) = rows[i][cols_ + j];
    return inv;
}

RatVec RationalMatrix::solve(const RatVec& b) const {
    if (static_cast<int>(b.size()) != rows_) throw ShapeError("solve: rhs size mismatch");
    std::vector<RatVec> rows;
    rows.reserve(rows_);
    for (int i = 0; i < rows_; ++i) {
        RatVec r = row(i);
        r.push_back(b[i]);
        rows.push_back(std::move(r));
    }
    const std::vector<int> pivots = rref(rows, cols_ + 1);
    if (!pivots.empty() && pivots.back() == cols_) throw InputError("inconsistent linear system");
    RatVec x(cols_);
    for (std::size_t pi = 0; pi < pivots.size(); ++pi) x[pivots[pi]] = rows[pi][cols_];
    return x;
}

std::vector<std::vector<int>> subsets_of_size(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > n) return out;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        out.push_back(idx);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

std::vector<RationalMatrix::Minor> RationalMatrix::minors(int k) const {
    if (k > rows_ || k > cols_) throw ShapeError("minor size exceeds matrix dimensions");
    std::vector<Minor> out;
    for (const auto& rs : subsets_of_size(rows_, k))
        for (const auto& cs : subsets_of_size(cols_, k))
            out.push_back({rs, cs, submatrix(rs, cs).det()});
    return out;
}

}  // namespace lmv
