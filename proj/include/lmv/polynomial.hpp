#pragma once

#include <span>
#include <string>
#include <vector>

#include "lmv/matrix.hpp"
#include "lmv/order.hpp"
#include "lmv/rational.hpp"

namespace lmv {

struct Term {
    Monomial mono;
    Rational coef;

    friend bool operator==(const Term& a, const Term& b) {
        return a.mono == b.mono && a.coef == b.coef;
    }
};

/// Multivariate polynomial over the rationals. Terms are kept strictly
/// descending under the order the polynomial was normalized with; no zero
/// coefficients are stored. Value type, immutable in spirit: all operations
/// return new polynomials.
class Polynomial {
public:
    Polynomial(LayoutPtr layout, MonomialOrder order) : layout_(std::move(layout)), order_(order) {}

    static Polynomial zero(LayoutPtr layout, MonomialOrder order) {
        return Polynomial(std::move(layout), order);
    }
    static Polynomial constant(LayoutPtr layout, MonomialOrder order, Rational c);
    static Polynomial variable(LayoutPtr layout, MonomialOrder order, int var, int exponent = 1);
    /// Sorts, merges equal monomials, drops zeros.
    static Polynomial from_terms(LayoutPtr layout, MonomialOrder order, std::vector<Term> terms);

    const VariableLayout& layout() const { return *layout_; }
    const LayoutPtr& layout_ptr() const { return layout_; }
    const MonomialOrder& order() const { return order_; }

    bool is_zero() const { return terms_.empty(); }
    std::size_t nterms() const { return terms_.size(); }
    std::span<const Term> terms() const { return terms_; }
    const Term& lead() const;
    const Monomial& lead_monomial() const { return lead().mono; }
    const Rational& lead_coef() const { return lead().coef; }

    /// Same polynomial re-sorted under a different order.
    Polynomial normalized(MonomialOrder order) const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    Polynomial operator-() const;
    Polynomial scaled(const Rational& c) const;
    /// Multiplication by c * x^m.
    Polynomial times_term(const Monomial& m, const Rational& c) const;
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

    int degree() const;
    int block_degree(int b) const;
    /// Total degree in the variable range [lo, hi); -1 for the zero polynomial.
    int max_degree_in_range(int lo, int hi) const;
    int min_degree_in_range(int lo, int hi) const;
    bool depends_on(int var) const;

    Rational evaluate(const RatVec& values) const;
    Polynomial derivative(int var) const;

    /// Positive rational c such that (1/c)*p has coprime integer coefficients.
    Rational content() const;
    /// p divided by +/- content, sign fixed so the leading coefficient is positive.
    Polynomial primitive_part() const;
    Polynomial monic() const;

    /// Canonical text form, terms descending under the stored order.
    std::string str() const;
    static Polynomial parse(LayoutPtr layout, MonomialOrder order, const std::string& text);

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    std::size_t hash() const;

private:
    LayoutPtr layout_;
    MonomialOrder order_;
    std::vector<Term> terms_;
};

struct VarImage {
    bool is_const = false;
    int var = -1;
    Rational value;

    static VarImage to_var(int v) { return {false, v, Rational(0)}; }
    static VarImage to_const(Rational c) { return {true, -1, std::move(c)}; }
};

/// Ring homomorphism sending each source variable to a target variable or a
/// constant; images.size() must equal the source variable count.
Polynomial substitute(const Polynomial& f, LayoutPtr target, MonomialOrder target_order,
                      const std::vector<VarImage>& images);

}  // namespace lmv
