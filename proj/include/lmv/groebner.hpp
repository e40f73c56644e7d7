#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "lmv/polynomial.hpp"

namespace lmv {

/// Reduced Groebner basis: every element monic, no leading term divides any
/// term of another element, elements ascending by leading monomial.
struct GroebnerBasis {
    LayoutPtr layout;
    MonomialOrder order;
    std::vector<Polynomial> elements;

    std::size_t size() const { return elements.size(); }
};

struct BuchbergerOptions {
    std::uint64_t max_pairs = 10'000'000;  ///< S-pairs processed before a budget error
    std::size_t max_terms = 10'000'000;    ///< term-count cap on intermediate polynomials
    int degree_cap = -1;                   ///< skip pairs with lcm degree above; exploratory only
    std::uint64_t selection_seed = 0;      ///< permutes tie-breaking among same-degree pairs
    bool strip_content = true;
    bool use_gm_criteria = true;           ///< Gebauer-Moeller pair elimination
};

struct BuchbergerStats {
    std::uint64_t pairs_enqueued = 0;
    std::uint64_t pairs_processed = 0;
    std::uint64_t reductions_to_zero = 0;
    std::uint64_t basis_additions = 0;
    bool truncated = false;
};

/// The unique reduced Groebner basis of <gens>. Deterministic; idempotent on
/// its own output.
GroebnerBasis buchberger(const std::vector<Polynomial>& gens, MonomialOrder order,
                         const BuchbergerOptions& opts = {}, BuchbergerStats* stats = nullptr);

/// Minimalizes and tail-reduces a basis in place: output generates the same
/// ideal, leads pairwise indivisible, every element monic and fully reduced
/// against the others, ascending by lead.
std::vector<Polynomial> interreduce(std::vector<Polynomial> polys, MonomialOrder order);

struct GroebnerCheckResult {
    bool ok = true;
    std::pair<int, int> failing_pair{-1, -1};
};

/// Buchberger criterion by brute force: reduces every S-pair, no skips.
/// Returns the lexicographically first failing pair when not a basis.
GroebnerCheckResult is_groebner(const std::vector<Polynomial>& basis, MonomialOrder order,
                                int threads = 0);

struct ReduceResult {
    Polynomial remainder;
    std::vector<Polynomial> quotients;
};

/// Exact division algorithm: f = sum quotients[i]*divisors[i] + remainder and
/// no remainder term is divisible by any divisor's leading term. Deterministic
/// in the divisor list order.
ReduceResult reduce(const Polynomial& f, const std::vector<Polynomial>& divisors,
                    MonomialOrder order);

/// Remainder only, computed fraction-free: returns the exact remainder up to a
/// positive scalar, in primitive integer form. Zero iff the exact remainder is.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& divisors,
                       MonomialOrder order);

Polynomial s_polynomial(const Polynomial& g, const Polynomial& h, MonomialOrder order);

/// True when f lies in the ideal presented by the (Groebner) basis.
bool reduces_to_zero(const Polynomial& f, const std::vector<Polynomial>& basis,
                     MonomialOrder order);

}  // namespace lmv
