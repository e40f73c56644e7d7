#include "lmv/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_map>

namespace lmv {

namespace {

void check_same_ring(const Polynomial& a, const Polynomial& b) {
    if (a.layout() != b.layout()) throw LayoutMismatch("polynomials in different layouts");
    if (a.order() != b.order()) throw LayoutMismatch("polynomials normalized under different orders");
}

struct MonoHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace

Polynomial Polynomial::constant(LayoutPtr layout, MonomialOrder order, Rational c) {
    Polynomial p(layout, order);
    if (!c.is_zero()) p.terms_.push_back({Monomial(*layout), std::move(c)});
    return p;
}

Polynomial Polynomial::variable(LayoutPtr layout, MonomialOrder order, int var, int exponent) {
    if (var < 0 || var >= layout->nvars()) throw UnknownVariable("variable index out of range");
    Polynomial p(layout, order);
    Monomial m(*layout);
    m.set_exp(var, static_cast<std::uint8_t>(exponent));
    p.terms_.push_back({m, Rational(1)});
    return p;
}

Polynomial Polynomial::from_terms(LayoutPtr layout, MonomialOrder order, std::vector<Term> terms) {
    Polynomial p(layout, order);
    std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
        return compare(order, a.mono, b.mono) > 0;
    });
    for (Term& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
            p.terms_.back().coef += t.coef;
            if (p.terms_.back().coef.is_zero()) p.terms_.pop_back();
        } else if (!t.coef.is_zero()) {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

const Term& Polynomial::lead() const {
    if (terms_.empty()) throw InputError("leading term of the zero polynomial");
    return terms_.front();
}

Polynomial Polynomial::normalized(MonomialOrder order) const {
    if (order == order_) return *this;
    return from_terms(layout_, order, terms_);
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    check_same_ring(a, b);
    Polynomial r(a.layout_, a.order_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() && j < b.terms_.size()) {
        const int c = compare(a.order_, a.terms_[i].mono, b.terms_[j].mono);
        if (c > 0) {
            r.terms_.push_back(a.terms_[i++]);
        } else if (c < 0) {
            r.terms_.push_back(b.terms_[j++]);
        } else {
            Rational s = a.terms_[i].coef + b.terms_[j].coef;
            if (!s.is_zero()) r.terms_.push_back({a.terms_[i].mono, std::move(s)});
            ++i;
            ++j;
        }
    }
    for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
    for (; j < b.terms_.size(); ++j) r.terms_.push_back(b.terms_[j]);
    return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial Polynomial::operator-() const {
    Polynomial r(layout_, order_);
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_) r.terms_.push_back({t.mono, -t.coef});
    return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    if (c.is_zero()) return Polynomial(layout_, order_);
    Polynomial r(layout_, order_);
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_) r.terms_.push_back({t.mono, t.coef * c});
    return r;
}

Polynomial Polynomial::times_term(const Monomial& m, const Rational& c) const {
    if (c.is_zero()) return Polynomial(layout_, order_);
    Polynomial r(layout_, order_);
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_) r.terms_.push_back({t.mono * m, t.coef * c});
    return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    check_same_ring(a, b);
    std::unordered_map<Monomial, Rational, MonoHash> acc;
    acc.reserve(a.terms_.size() * b.terms_.size());
    for (const Term& ta : a.terms_)
        for (const Term& tb : b.terms_) acc[ta.mono * tb.mono] += ta.coef * tb.coef;
    std::vector<Term> terms;
    terms.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (!c.is_zero()) terms.push_back({m, std::move(c)});
    return Polynomial::from_terms(a.layout_, a.order_, std::move(terms));
}

int Polynomial::degree() const {
    int d = -1;
    for (const Term& t : terms_) d = std::max(d, t.mono.degree());
    return d;
}

int Polynomial::block_degree(int b) const {
    int d = -1;
    for (const Term& t : terms_) d = std::max(d, t.mono.block_degree(b));
    return d;
}

int Polynomial::max_degree_in_range(int lo, int hi) const {
    int d = -1;
    for (const Term& t : terms_) {
        int s = 0;
        for (int i = lo; i < hi; ++i) s += t.mono.exp(i);
        d = std::max(d, s);
    }
    return d;
}

int Polynomial::min_degree_in_range(int lo, int hi) const {
    int d = -1;
    for (const Term& t : terms_) {
        int s = 0;
        for (int i = lo; i < hi; ++i) s += t.mono.exp(i);
        d = d < 0 ? s : std::min(d, s);
    }
    return d;
}

bool Polynomial::depends_on(int var) const {
    for (const Term& t : terms_)
        if (t.mono.exp(var) != 0) return true;
    return false;
}

Rational Polynomial::evaluate(const RatVec& values) const {
    if (static_cast<int>(values.size()) != layout_->nvars())
        throw ShapeError("evaluate: value count != variable count");
    Rational sum;
    for (const Term& t : terms_) {
        Rational prod = t.coef;
        for (int i = 0; i < layout_->nvars(); ++i) {
            const int e = t.mono.exp(i);
            if (e > 0) prod *= values[i].pow(e);
        }
        sum += prod;
    }
    return sum;
}

Polynomial Polynomial::derivative(int var) const {
    std::vector<Term> out;
    for (const Term& t : terms_) {
        const int e = t.mono.exp(var);
        if (e == 0) continue;
        Monomial m = t.mono;
        m.set_exp(var, static_cast<std::uint8_t>(e - 1));
        out.push_back({m, t.coef * Rational(e)});
    }
    return from_terms(layout_, order_, std::move(out));
}

Rational Polynomial::content() const {
    if (terms_.empty()) return Rational(1);
    mpz_class num_gcd(0), den_lcm(1);
    for (const Term& t : terms_) {
        mpz_class n = t.coef.numerator();
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
        mpz_class d = t.coef.denominator();
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
        den_lcm = den_lcm / g * d;
    }
    mpq_class c(num_gcd, den_lcm);
    c.canonicalize();
    return Rational(std::move(c));
}

Polynomial Polynomial::primitive_part() const {
    if (terms_.empty()) return *this;
    Rational c = content();
    if (lead_coef().sign() < 0) c = -c;
    return scaled(c.inverse());
}

Polynomial Polynomial::monic() const {
    if (terms_.empty()) return *this;
    return scaled(lead_coef().inverse());
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const Term& t : terms_) {
        const Rational c = t.coef;
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        const Rational a = c.abs();
        std::string mono;
        for (int i = 0; i < layout_->nvars(); ++i) {
            const int e = t.mono.exp(i);
            if (e == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += layout_->var_name(i);
            if (e > 1) mono += "^" + std::to_string(e);
        }
        if (mono.empty()) {
            os << a.str();
        } else if (a.is_one()) {
            os << mono;
        } else {
            os << a.str() << "*" << mono;
        }
    }
    return os.str();
}

Polynomial Polynomial::parse(LayoutPtr layout, MonomialOrder order, const std::string& text) {
    std::vector<Term> terms;
    std::size_t i = 0;
    const auto skip_ws = [&] {
        while (i < text.size() && text[i] == ' ') ++i;
    };
    skip_ws();
    if (text.compare(i, 1, "0") == 0 && i + 1 == text.size()) return zero(layout, order);
    bool neg = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) neg = text[i++] == '-';
    while (i < text.size()) {
        skip_ws();
        Rational coef(1);
        Monomial mono(*layout);
        bool saw_factor = false;
        while (i < text.size()) {
            skip_ws();
            if (i >= text.size() || text[i] == '+' || text[i] == '-') break;
            if (text[i] == '*') {
                ++i;
                skip_ws();
            }
            std::size_t j = i;
            while (j < text.size() && text[j] != '*' && text[j] != '^' && text[j] != '+' &&
                   text[j] != '-' && text[j] != ' ')
                ++j;
            std::string tok = text.substr(i, j - i);
            if (tok.empty()) throw InputError("malformed polynomial text: " + text);
            if (std::isdigit(static_cast<unsigned char>(tok[0]))) {
                // number, possibly "p/q" (q may follow after the slash in tok already)
                if (j < text.size() && text[j] == '/') {
                    std::size_t k = j + 1;
                    while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) ++k;
                    tok = text.substr(i, k - i);
                    j = k;
                }
                coef *= Rational::parse(tok);
                i = j;
            } else {
                const int var = layout->index_of(tok);
                int e = 1;
                i = j;
                if (i < text.size() && text[i] == '^') {
                    ++i;
                    std::size_t k = i;
                    while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) ++k;
                    e = std::stoi(text.substr(i, k - i));
                    i = k;
                }
                mono.set_exp(var, static_cast<std::uint8_t>(mono.exp(var) + e));
            }
            saw_factor = true;
        }
        if (!saw_factor) throw InputError("malformed polynomial text: " + text);
        if (neg) coef = -coef;
        terms.push_back({mono, coef});
        skip_ws();
        if (i >= text.size()) break;
        if (text[i] == '+') neg = false;
        else if (text[i] == '-') neg = true;
        else throw InputError("malformed polynomial text: " + text);
        ++i;
    }
    return from_terms(layout, order, std::move(terms));
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (layout() != o.layout()) return false;
    if (terms_.size() != o.terms_.size()) return false;
    if (order_ == o.order_) return terms_ == o.terms_;
    auto canon = [](const Polynomial& p) {
        std::vector<Term> t(p.terms_.begin(), p.terms_.end());
        std::sort(t.begin(), t.end(), [](const Term& a, const Term& b) {
            return Monomial::lex_compare(a.mono, b.mono) < 0;
        });
        return t;
    };
    return canon(*this) == canon(o);
}

std::size_t Polynomial::hash() const {
    std::size_t h = 0;
    for (const Term& t : terms_) h ^= t.mono.hash() * 31 + t.coef.hash();
    return h;
}

Polynomial substitute(const Polynomial& f, LayoutPtr target, MonomialOrder target_order,
                      const std::vector<VarImage>& images) {
    if (static_cast<int>(images.size()) != f.layout().nvars())
        throw ShapeError("substitute: image count != variable count");
    for (const VarImage& im : images)
        if (!im.is_const && (im.var < 0 || im.var >= target->nvars()))
            throw UnknownVariable("substitution image variable out of range");
    std::vector<Term> out;
    out.reserve(f.nterms());
    for (const Term& t : f.terms()) {
        Rational c = t.coef;
        Monomial m(*target);
        for (int i = 0; i < f.layout().nvars() && !c.is_zero(); ++i) {
            const int e = t.mono.exp(i);
            if (e == 0) continue;
            const VarImage& im = images[i];
            if (im.is_const) {
                c *= im.value.pow(e);
            } else {
                m.set_exp(im.var, static_cast<std::uint8_t>(m.exp(im.var) + e));
            }
        }
        if (!c.is_zero()) out.push_back({m, std::move(c)});
    }
    return Polynomial::from_terms(std::move(target), target_order, std::move(out));
}

}  // namespace lmv
