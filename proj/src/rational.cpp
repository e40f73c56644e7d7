#include "lmv/rational.hpp"

#include "lmv/errors.hpp"

namespace lmv {

Rational::Rational(long num, long den) {
    if (den == 0) throw InputError("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::parse(std::string_view s) {
    const auto slash = s.find('/');
    try {
        if (slash == std::string_view::npos) {
            return Rational(mpq_class(mpz_class(std::string(s)), 1));
        }
        mpz_class num(std::string(s.substr(0, slash)));
        mpz_class den(std::string(s.substr(slash + 1)));
        if (den == 0) throw InputError("rational with zero denominator: " + std::string(s));
        mpq_class q(num, den);
        q.canonicalize();
        return Rational(std::move(q));
    } catch (const std::invalid_argument&) {
        throw InputError("malformed rational: " + std::string(s));
    }
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw InputError("rational division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::inverse() const {
    if (is_zero()) throw InputError("inverse of zero");
    return Rational(mpq_class(1) / v_);
}

Rational Rational::pow(int e) const {
    if (e == 0) return Rational(1);
    if (e < 0) return inverse().pow(-e);
    mpq_class r(1);
    mpq_class base = v_;
    int k = e;
    while (k > 0) {
        if (k & 1) r *= base;
        base *= base;
        k >>= 1;
    }
    return Rational(std::move(r));
}

std::string Rational::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::size_t Rational::hash() const {
    // FNV-1a over the decimal form; only used for hash containers in tests/dedup.
    std::size_t h = 1469598103934665603ull;
    for (char c : str()) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace lmv
