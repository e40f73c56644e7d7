#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <span>

#include "lmv/layout.hpp"

namespace lmv {

/// Exponent vector with cached per-block degrees. Fixed capacity keeps
/// monomials flat and copyable without heap traffic; every ring in this
/// project stays well under the cap.
class Monomial {
public:
    static constexpr int kMaxVars = 64;

    explicit Monomial(const VariableLayout& layout)
        : n_(static_cast<std::uint16_t>(layout.nvars())),
          split_(static_cast<std::uint16_t>(layout.first_block_end())) {
        if (layout.nvars() > kMaxVars) throw InputError("layout exceeds monomial capacity");
        e_.fill(0);
        deg_[0] = deg_[1] = 0;
    }

    Monomial(const VariableLayout& layout, std::span<const std::uint8_t> exps) : Monomial(layout) {
        if (static_cast<int>(exps.size()) != layout.nvars())
            throw ShapeError("exponent vector length != variable count");
        for (int i = 0; i < static_cast<int>(exps.size()); ++i) set_exp(i, exps[i]);
    }

    int nvars() const { return n_; }
    std::uint8_t exp(int i) const { return e_[i]; }
    void set_exp(int i, std::uint8_t v) {
        const int b = i < split_ ? 0 : 1;
        deg_[b] = static_cast<std::uint16_t>(deg_[b] - e_[i] + v);
        e_[i] = v;
    }

    int degree() const { return deg_[0] + deg_[1]; }
    int block_degree(int b) const { return deg_[b]; }
    bool is_one() const { return degree() == 0; }

    bool divides(const Monomial& o) const {
        for (int i = 0; i < n_; ++i)
            if (e_[i] > o.e_[i]) return false;
        return true;
    }

    bool coprime_with(const Monomial& o) const {
        for (int i = 0; i < n_; ++i)
            if (e_[i] != 0 && o.e_[i] != 0) return false;
        return true;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial r = a;
        for (int i = 0; i < a.n_; ++i) r.e_[i] = static_cast<std::uint8_t>(a.e_[i] + b.e_[i]);
        r.deg_[0] = static_cast<std::uint16_t>(a.deg_[0] + b.deg_[0]);
        r.deg_[1] = static_cast<std::uint16_t>(a.deg_[1] + b.deg_[1]);
        return r;
    }

    /// a / b; requires b.divides(a).
    static Monomial quotient(const Monomial& a, const Monomial& b) {
        Monomial r = a;
        for (int i = 0; i < a.n_; ++i) r.e_[i] = static_cast<std::uint8_t>(a.e_[i] - b.e_[i]);
        r.deg_[0] = static_cast<std::uint16_t>(a.deg_[0] - b.deg_[0]);
        r.deg_[1] = static_cast<std::uint16_t>(a.deg_[1] - b.deg_[1]);
        return r;
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r = a;
        r.deg_[0] = r.deg_[1] = 0;
        for (int i = 0; i < a.n_; ++i) {
            r.e_[i] = a.e_[i] > b.e_[i] ? a.e_[i] : b.e_[i];
            r.deg_[i < a.split_ ? 0 : 1] += r.e_[i];
        }
        return r;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.n_ == b.n_ && std::memcmp(a.e_.data(), b.e_.data(), a.n_) == 0;
    }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

    /// Plain lexicographic compare of exponent vectors; order-independent
    /// canonical tiebreak for serialization and hashing, not a monomial order.
    static int lex_compare(const Monomial& a, const Monomial& b) {
        return std::memcmp(a.e_.data(), b.e_.data(), a.n_);
    }

    std::size_t hash() const {
        std::size_t h = 1469598103934665603ull;
        for (int i = 0; i < n_; ++i) {
            h ^= e_[i];
            h *= 1099511628211ull;
        }
        return h;
    }

    std::uint16_t split() const { return split_; }

private:
    std::array<std::uint8_t, kMaxVars> e_;
    std::uint16_t n_;
    std::uint16_t split_;
    std::uint16_t deg_[2];
};

}  // namespace lmv
