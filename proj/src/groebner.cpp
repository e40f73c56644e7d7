#include "lmv/groebner.hpp"

#include <algorithm>
#include <future>
#include <thread>

namespace lmv {

namespace {

// ---------------------------------------------------------------------------
// Integer working representation. All reduction inside Buchberger runs over
// primitive integer polynomials; rationals only appear at the API boundary.
// ---------------------------------------------------------------------------

struct ZTerm {
    Monomial mono;
    mpz_class coef;
};

using ZPoly = std::vector<ZTerm>;  // strictly descending under the active order

ZPoly to_z(const Polynomial& p) {
    ZPoly out;
    out.reserve(p.nterms());
    if (p.is_zero()) return out;
    mpz_class den_lcm(1), num_gcd(0);
    for (const Term& t : p.terms()) {
        mpz_class d = t.coef.denominator();
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
        den_lcm = den_lcm / g * d;
        mpz_class n = t.coef.numerator();
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
    }
    for (const Term& t : p.terms())
        out.push_back({t.mono, t.coef.numerator() * (den_lcm / t.coef.denominator()) / num_gcd});
    return out;
}

Polynomial from_z(const LayoutPtr& layout, MonomialOrder order, const ZPoly& p) {
    std::vector<Term> terms;
    terms.reserve(p.size());
    for (const ZTerm& t : p) terms.push_back({t.mono, Rational(t.coef)});
    return Polynomial::from_terms(layout, order, std::move(terms));
}

void strip_content(ZPoly& p) {
    if (p.empty()) return;
    mpz_class g(0);
    for (const ZTerm& t : p) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coef.get_mpz_t());
        if (g == 1) return;
    }
    for (ZTerm& t : p) mpz_divexact(t.coef.get_mpz_t(), t.coef.get_mpz_t(), g.get_mpz_t());
}

void flip_to_positive_lead(ZPoly& p) {
    if (!p.empty() && sgn(p.front().coef) < 0)
        for (ZTerm& t : p) t.coef = -t.coef;
}

// out = a * x^sa * p - b * x^sb * q, operands descending, result descending.
void lin_comb(const MonomialOrder& order, const ZTerm* p, std::size_t np, const mpz_class& a,
              const Monomial& sa, const ZTerm* q, std::size_t nq, const mpz_class& b,
              const Monomial& sb, ZPoly& out) {
    out.clear();
    out.reserve(np + nq);
    const bool sa1 = sa.is_one();
    const bool sb1 = sb.is_one();
    std::size_t i = 0, j = 0;
    while (i < np && j < nq) {
        Monomial mi = sa1 ? p[i].mono : p[i].mono * sa;
        Monomial mj = sb1 ? q[j].mono : q[j].mono * sb;
        const int c = compare(order, mi, mj);
        if (c > 0) {
            out.push_back({mi, a * p[i].coef});
            ++i;
        } else if (c < 0) {
            out.push_back({mj, -b * q[j].coef});
            ++j;
        } else {
            mpz_class s = a * p[i].coef - b * q[j].coef;
            if (s != 0) out.push_back({mi, std::move(s)});
            ++i;
            ++j;
        }
    }
    for (; i < np; ++i) out.push_back({sa1 ? p[i].mono : p[i].mono * sa, a * p[i].coef});
    for (; j < nq; ++j) out.push_back({sb1 ? q[j].mono : q[j].mono * sb, -b * q[j].coef});
}

ZPoly spair_z(const MonomialOrder& order, const ZPoly& g, const ZPoly& h) {
    const Monomial l = Monomial::lcm(g.front().mono, h.front().mono);
    const Monomial sg = Monomial::quotient(l, g.front().mono);
    const Monomial sh = Monomial::quotient(l, h.front().mono);
    mpz_class d;
    mpz_gcd(d.get_mpz_t(), g.front().coef.get_mpz_t(), h.front().coef.get_mpz_t());
    mpz_class a = h.front().coef / d;
    mpz_class b = g.front().coef / d;
    ZPoly out;
    lin_comb(order, g.data(), g.size(), a, sg, h.data(), h.size(), b, sh, out);
    return out;
}

class ZDivisors {
public:
    void add(const ZPoly* p) {
        polys_.push_back(p);
        lead_degs_.push_back(p->front().mono.degree());
    }
    const ZPoly* find_divisor(const Monomial& m) const {
        const int md = m.degree();
        for (std::size_t k = 0; k < polys_.size(); ++k) {
            if (lead_degs_[k] > md) continue;
            if (polys_[k]->front().mono.divides(m)) return polys_[k];
        }
        return nullptr;
    }

private:
    std::vector<const ZPoly*> polys_;
    std::vector<int> lead_degs_;
};

// Fraction-free normal form. The result equals the exact remainder times a
// positive rational; returned primitive with positive lead.
ZPoly normal_form_z(const MonomialOrder& order, ZPoly f, const ZDivisors& divisors,
                    std::size_t max_terms = SIZE_MAX) {
    ZPoly rem;
    if (f.empty()) return rem;
    ZPoly buf;
    std::size_t start = 0;
    int steps_since_strip = 0;
    const Monomial ident = Monomial::quotient(f[0].mono, f[0].mono);
    while (start < f.size()) {
        const ZPoly* g = divisors.find_divisor(f[start].mono);
        if (g == nullptr) {
            rem.push_back(std::move(f[start]));
            ++start;
            continue;
        }
        mpz_class d;
        mpz_gcd(d.get_mpz_t(), f[start].coef.get_mpz_t(), g->front().coef.get_mpz_t());
        mpz_class a = g->front().coef / d;
        mpz_class b = f[start].coef / d;
        if (sgn(a) < 0) {
            a = -a;
            b = -b;
        }
        const Monomial shift = Monomial::quotient(f[start].mono, g->front().mono);
        lin_comb(order, f.data() + start, f.size() - start, a, ident, g->data(), g->size(), b,
                 shift, buf);
        f.swap(buf);
        start = 0;
        if (a != 1 && !rem.empty())
            for (ZTerm& t : rem) t.coef *= a;
        if (f.size() > max_terms) throw BudgetExceeded("term budget exceeded during reduction", 0);
        if (rem.empty() && ++steps_since_strip >= 8) {
            strip_content(f);
            steps_since_strip = 0;
        }
    }
    strip_content(rem);
    flip_to_positive_lead(rem);
    return rem;
}

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

struct Pair {
    int i, j;
    Monomial lcm;
    int deg;
    std::uint64_t tie;
};

}  // namespace

std::vector<Polynomial> interreduce(std::vector<Polynomial> polys, MonomialOrder order) {
    std::erase_if(polys, [](const Polynomial& p) { return p.is_zero(); });
    if (polys.empty()) return polys;
    for (Polynomial& p : polys) p = p.normalized(order);
    std::sort(polys.begin(), polys.end(), [&](const Polynomial& a, const Polynomial& b) {
        return compare(order, a.lead_monomial(), b.lead_monomial()) < 0;
    });
    // Minimalize: keep an element only when no kept lead divides its lead.
    std::vector<Polynomial> kept;
    for (Polynomial& p : polys) {
        bool redundant = false;
        for (const Polynomial& q : kept)
            if (q.lead_monomial().divides(p.lead_monomial())) {
                redundant = true;
                break;
            }
        if (!redundant) kept.push_back(std::move(p));
    }
    // Tail-reduce each element against the others; reducedness only depends
    // on the (fixed) leads, so one pass suffices.
    std::vector<Polynomial> out;
    for (std::size_t k = 0; k < kept.size(); ++k) {
        std::vector<Polynomial> others;
        others.reserve(kept.size() - 1);
        for (std::size_t j = 0; j < kept.size(); ++j)
            if (j != k) others.push_back(kept[j]);
        Polynomial r = normal_form(kept[k], others, order);
        if (!r.is_zero()) out.push_back(r.monic());
    }
    std::sort(out.begin(), out.end(), [&](const Polynomial& a, const Polynomial& b) {
        return compare(order, a.lead_monomial(), b.lead_monomial()) < 0;
    });
    return out;
}

GroebnerBasis buchberger(const std::vector<Polynomial>& gens, MonomialOrder order,
                         const BuchbergerOptions& opts, BuchbergerStats* stats) {
    BuchbergerStats local;
    BuchbergerStats& st = stats ? *stats : local;
    st = BuchbergerStats{};

    LayoutPtr layout;
    for (const Polynomial& g : gens) {
        if (!layout) layout = g.layout_ptr();
        else if (g.layout() != *layout) throw LayoutMismatch("generators in different layouts");
    }
    if (!layout) return GroebnerBasis{nullptr, order, {}};

    std::vector<ZPoly> basis;
    std::vector<Pair> pending;

    auto lead = [&](int i) -> const Monomial& { return basis[i].front().mono; };

    auto add_element = [&](ZPoly p) {
        const int t = static_cast<int>(basis.size());
        const Monomial lt = p.front().mono;
        if (opts.use_gm_criteria) {
            // Gebauer-Moeller: a strictly finer lcm through the new element
            // makes an old pair redundant.
            std::erase_if(pending, [&](const Pair& pr) {
                return lt.divides(pr.lcm) && Monomial::lcm(lead(pr.i), lt) != pr.lcm &&
                       Monomial::lcm(lead(pr.j), lt) != pr.lcm;
            });
        }
        struct Cand {
            int i;
            Monomial lcm;
            bool coprime;
        };
        std::vector<Cand> cands;
        cands.reserve(t);
        for (int i = 0; i < t; ++i)
            cands.push_back({i, Monomial::lcm(lead(i), lt), lead(i).coprime_with(lt)});
        for (std::size_t a = 0; a < cands.size(); ++a) {
            bool drop = false;
            if (opts.use_gm_criteria) {
                for (std::size_t b = 0; b < cands.size() && !drop; ++b) {
                    if (a == b) continue;
                    if (cands[b].lcm == cands[a].lcm) {
                        if (cands[b].coprime) drop = true;  // whole lcm class dies
                        else if (b < a) drop = true;        // keep first of the class
                    } else if (cands[b].lcm.divides(cands[a].lcm)) {
                        drop = true;
                    }
                }
                if (!drop && cands[a].coprime) drop = true;  // product criterion
            }
            if (!drop) {
                pending.push_back({cands[a].i, t, cands[a].lcm, cands[a].lcm.degree(),
                                   opts.selection_seed
                                       ? mix64(opts.selection_seed ^
                                               (static_cast<std::uint64_t>(cands[a].i) << 32 ^
                                                static_cast<std::uint64_t>(t)))
                                       : 0});
                ++st.pairs_enqueued;
            }
        }
        basis.push_back(std::move(p));
        ++st.basis_additions;
    };

    for (const Polynomial& g : gens) {
        if (g.is_zero()) continue;
        ZPoly z = to_z(g.normalized(order));
        ZDivisors divs;
        for (const ZPoly& b : basis) divs.add(&b);
        z = normal_form_z(order, std::move(z), divs, opts.max_terms);
        if (!z.empty()) add_element(std::move(z));
    }

    // Selection: lowest lcm total degree first, deterministic tie-breaking
    // (optionally permuted by the seed; the reduced result is seed-invariant).
    auto earlier = [&](const Pair& a, const Pair& b) {
        if (a.deg != b.deg) return a.deg < b.deg;
        if (a.tie != b.tie) return a.tie < b.tie;
        const int c = compare(order, a.lcm, b.lcm);
        if (c != 0) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    };

    while (!pending.empty()) {
        const auto it = std::min_element(pending.begin(), pending.end(), earlier);
        Pair pr = *it;
        pending.erase(it);
        if (opts.degree_cap >= 0 && pr.deg > opts.degree_cap) {
            st.truncated = true;
            continue;
        }
        if (++st.pairs_processed > opts.max_pairs)
            throw BudgetExceeded("S-pair budget exceeded", st.pairs_processed);
        ZPoly s = spair_z(order, basis[pr.i], basis[pr.j]);
        if (s.empty()) {
            ++st.reductions_to_zero;
            continue;
        }
        ZDivisors divs;
        for (const ZPoly& b : basis) divs.add(&b);
        ZPoly r = normal_form_z(order, std::move(s), divs, opts.max_terms);
        if (r.empty()) {
            ++st.reductions_to_zero;
            continue;
        }
        add_element(std::move(r));
    }

    std::vector<Polynomial> elems;
    elems.reserve(basis.size());
    for (const ZPoly& b : basis) elems.push_back(from_z(layout, order, b));
    elems = interreduce(std::move(elems), order);
    return GroebnerBasis{layout, order, std::move(elems)};
}

GroebnerCheckResult is_groebner(const std::vector<Polynomial>& basis, MonomialOrder order,
                                int threads) {
    GroebnerCheckResult res;
    const int n = static_cast<int>(basis.size());
    if (n <= 1) return res;
    std::vector<ZPoly> zb;
    zb.reserve(basis.size());
    for (const Polynomial& p : basis) {
        if (p.is_zero()) throw InputError("zero polynomial in basis");
        zb.push_back(to_z(p.normalized(order)));
    }
    ZDivisors divs;
    for (const ZPoly& b : zb) divs.add(&b);

    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);

    if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;
    threads = static_cast<int>(std::min<std::size_t>(threads, pairs.size() ? pairs.size() : 1));

    // Each worker scans a contiguous range and stops at its own first failure;
    // the minimum over ranges makes the reported witness deterministic.
    auto run_range = [&](std::size_t lo, std::size_t hi) -> std::pair<int, int> {
        for (std::size_t k = lo; k < hi; ++k) {
            const auto [i, j] = pairs[k];
            ZPoly s = spair_z(order, zb[i], zb[j]);
            if (s.empty()) continue;
            if (!normal_form_z(order, std::move(s), divs).empty()) return {i, j};
        }
        return {-1, -1};
    };

    std::pair<int, int> worst{-1, -1};
    if (threads == 1) {
        worst = run_range(0, pairs.size());
    } else {
        std::vector<std::future<std::pair<int, int>>> futs;
        const std::size_t chunk = (pairs.size() + threads - 1) / threads;
        for (int t = 0; t < threads; ++t) {
            const std::size_t lo = t * chunk;
            const std::size_t hi = std::min(pairs.size(), lo + chunk);
            if (lo >= hi) break;
            futs.push_back(std::async(std::launch::async, run_range, lo, hi));
        }
        for (auto& f : futs) {
            const auto r = f.get();
            if (r.first < 0) continue;
            if (worst.first < 0 || r < worst) worst = r;
        }
    }
    if (worst.first >= 0) {
        res.ok = false;
        res.failing_pair = worst;
    }
    return res;
}

ReduceResult reduce(const Polynomial& f, const std::vector<Polynomial>& divisors,
                    MonomialOrder order) {
    std::vector<Polynomial> divs;
    divs.reserve(divisors.size());
    for (const Polynomial& g : divisors) {
        if (g.layout() != f.layout()) throw LayoutMismatch("divisor in different layout");
        if (g.is_zero()) throw InputError("zero divisor");
        divs.push_back(g.normalized(order));
    }
    Polynomial p = f.normalized(order);
    ReduceResult out{Polynomial::zero(f.layout_ptr(), order), {}};
    out.quotients.assign(divisors.size(), Polynomial::zero(f.layout_ptr(), order));
    std::vector<Term> rem;
    while (!p.is_zero()) {
        bool divided = false;
        for (std::size_t k = 0; k < divs.size(); ++k) {
            const Polynomial& g = divs[k];
            if (!g.lead_monomial().divides(p.lead_monomial())) continue;
            const Monomial shift = Monomial::quotient(p.lead_monomial(), g.lead_monomial());
            const Rational c = p.lead_coef() / g.lead_coef();
            out.quotients[k] =
                out.quotients[k] + Polynomial::from_terms(f.layout_ptr(), order, {{shift, c}});
            p = p - g.times_term(shift, c);
            divided = true;
            break;
        }
        if (!divided) {
            rem.push_back(p.lead());
            p = p - Polynomial::from_terms(f.layout_ptr(), order, {p.lead()});
        }
    }
    out.remainder = Polynomial::from_terms(f.layout_ptr(), order, std::move(rem));
    return out;
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& divisors,
                       MonomialOrder order) {
    std::vector<ZPoly> zd;
    zd.reserve(divisors.size());
    ZDivisors divs;
    for (const Polynomial& g : divisors) {
        if (g.layout() != f.layout()) throw LayoutMismatch("divisor in different layout");
        if (g.is_zero()) throw InputError("zero divisor");
        zd.push_back(to_z(g.normalized(order)));
    }
    for (const ZPoly& z : zd) divs.add(&z);
    ZPoly r = normal_form_z(order, to_z(f.normalized(order)), divs);
    return from_z(f.layout_ptr(), order, r);
}

Polynomial s_polynomial(const Polynomial& g, const Polynomial& h, MonomialOrder order) {
    if (g.is_zero() || h.is_zero()) throw InputError("s-polynomial of zero polynomial");
    if (g.layout() != h.layout()) throw LayoutMismatch("s-polynomial across layouts");
    const Polynomial gn = g.normalized(order);
    const Polynomial hn = h.normalized(order);
    const Monomial l = Monomial::lcm(gn.lead_monomial(), hn.lead_monomial());
    const Monomial sg = Monomial::quotient(l, gn.lead_monomial());
    const Monomial sh = Monomial::quotient(l, hn.lead_monomial());
    return gn.times_term(sg, gn.lead_coef().inverse()) -
           hn.times_term(sh, hn.lead_coef().inverse());
}

bool reduces_to_zero(const Polynomial& f, const std::vector<Polynomial>& basis,
                     MonomialOrder order) {
    return normal_form(f, basis, order).is_zero();
}

}  // namespace lmv
