#include "lmv/polymatrix.hpp"

#include <unordered_map>

#include "lmv/errors.hpp"

namespace lmv {

PolyMatrix::PolyMatrix(LayoutPtr layout, MonomialOrder order, int rows, int cols)
    : rows_(rows), cols_(cols), layout_(std::move(layout)), order_(order) {
    a_.assign(static_cast<std::size_t>(rows) * cols, Polynomial::zero(layout_, order_));
}

PolyMatrix PolyMatrix::submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const {
    PolyMatrix s(layout_, order_, static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) s.at(static_cast<int>(i), static_cast<int>(j)) = at(rows[i], cols[j]);
    return s;
}

Polynomial PolyMatrix::det() const {
    if (rows_ != cols_) throw ShapeError("determinant of non-square matrix");
    const int n = rows_;
    if (n == 0) return Polynomial::constant(layout_, order_, Rational(1));
    if (n > 32) throw ShapeError("polynomial determinant limited to 32 rows");

    // minors[mask] = det of the submatrix on rows in mask, columns 0..|mask|-1
    std::unordered_map<std::uint32_t, Polynomial> cur;
    cur.emplace(0u, Polynomial::constant(layout_, order_, Rational(1)));
    for (int c = 0; c < n; ++c) {
        std::unordered_map<std::uint32_t, Polynomial> next;
        for (const auto& [mask, minor] : cur) {
            if (minor.is_zero()) continue;
            for (int r = 0; r < n; ++r) {
                if (mask & (1u << r)) continue;
                const Polynomial& entry = at(r, c);
                if (entry.is_zero()) continue;
                // cofactor sign for row r entering at sorted position p (0-based)
                // of the (c+1)-row submatrix: (-1)^(p + c)
                const int p = __builtin_popcount(mask & ((1u << r) - 1));
                Polynomial contrib = minor * entry;
                if ((p + c) % 2 != 0) contrib = -contrib;
                const std::uint32_t m2 = mask | (1u << r);
                auto it = next.find(m2);
                if (it == next.end()) next.emplace(m2, std::move(contrib));
                else it->second = it->second + contrib;
            }
        }
        cur = std::move(next);
    }
    const std::uint32_t full = n == 32 ? 0xffffffffu : ((1u << n) - 1);
    auto it = cur.find(full);
    if (it == cur.end()) return Polynomial::zero(layout_, order_);
    return it->second;
}

}  // namespace lmv
