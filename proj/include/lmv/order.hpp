#pragma once

#include <string>

#include "lmv/monomial.hpp"

namespace lmv {

enum class OrderKind {
    /// Graded reverse lexicographic over all variables: higher total degree
    /// wins; on ties the rightmost nonzero entry of the exponent difference
    /// being negative means greater.
    GRevLex,
    /// GRevLex on the line block; ties broken by GRevLex on the parameter
    /// block. On a single-block layout this coincides with GRevLex.
    BlockProduct,
};

struct MonomialOrder {
    OrderKind kind = OrderKind::GRevLex;

    friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
        return a.kind == b.kind;
    }
    friend bool operator!=(const MonomialOrder& a, const MonomialOrder& b) { return !(a == b); }
};

inline MonomialOrder grevlex_order() { return {OrderKind::GRevLex}; }
inline MonomialOrder block_product_order() { return {OrderKind::BlockProduct}; }

std::string order_name(const MonomialOrder& o);
MonomialOrder order_from_name(const std::string& name);

namespace detail {

// GRevLex on the index range [lo, hi): degrees assumed equal by the caller.
inline int grevlex_tiebreak(const Monomial& a, const Monomial& b, int lo, int hi) {
    for (int i = hi - 1; i >= lo; --i) {
        const int d = static_cast<int>(a.exp(i)) - static_cast<int>(b.exp(i));
        if (d != 0) return d < 0 ? 1 : -1;
    }
    return 0;
}

}  // namespace detail

/// Three-way compare: +1 when a > b under the order, 0 when equal, -1 when a < b.
inline int compare(const MonomialOrder& order, const Monomial& a, const Monomial& b) {
    if (a.nvars() != b.nvars() || a.split() != b.split())
        throw LayoutMismatch("monomial compare across layouts");
    if (order.kind == OrderKind::GRevLex) {
        const int da = a.degree(), db = b.degree();
        if (da != db) return da > db ? 1 : -1;
        return detail::grevlex_tiebreak(a, b, 0, a.nvars());
    }
    // Block product: line part first.
    if (a.block_degree(0) != b.block_degree(0)) return a.block_degree(0) > b.block_degree(0) ? 1 : -1;
    if (int c = detail::grevlex_tiebreak(a, b, 0, a.split()); c != 0) return c;
    if (a.block_degree(1) != b.block_degree(1)) return a.block_degree(1) > b.block_degree(1) ? 1 : -1;
    return detail::grevlex_tiebreak(a, b, a.split(), a.nvars());
}

inline bool greater(const MonomialOrder& order, const Monomial& a, const Monomial& b) {
    return compare(order, a, b) > 0;
}

}  // namespace lmv
