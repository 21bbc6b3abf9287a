#include "biquad/rational.hpp"

#include <cctype>
#include <ostream>

#include "biquad/errors.hpp"

namespace biquad {

Rat::Rat(long num, long den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
    auto bad = [&] { return DomainError("malformed rational '" + std::string(text) + "'"); };
    std::string_view s = text;
    std::string num, den = "1";
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        if (s.front() == '-') num = "-";
        s.remove_prefix(1);
    }
    std::size_t i = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == 0) throw bad();
    num += std::string(s.substr(0, i));
    s.remove_prefix(i);
    if (!s.empty()) {
        if (s.front() != '/') throw bad();
        s.remove_prefix(1);
        if (s.empty()) throw bad();
        for (char ch : s)
            if (!std::isdigit(static_cast<unsigned char>(ch))) throw bad();
        den = std::string(s);
    }
    mpq_class v;
    if (mpq_set_str(v.get_mpq_t(), (num + "/" + den).c_str(), 10) != 0) throw bad();
    if (mpz_sgn(mpq_denref(v.get_mpq_t())) == 0)
        throw DomainError("rational with zero denominator in '" + std::string(text) + "'");
    v.canonicalize();
    return Rat(std::move(v));
}

Rat Rat::operator-() const { return Rat(mpq_class(-v_)); }

Rat& Rat::operator+=(const Rat& o) {
    v_ += o.v_;
    return *this;
}

Rat& Rat::operator-=(const Rat& o) {
    v_ -= o.v_;
    return *this;
}

Rat& Rat::operator*=(const Rat& o) {
    v_ *= o.v_;
    return *this;
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw DomainError("division by zero");
    v_ /= o.v_;
    return *this;
}

Rat Rat::inverse() const {
    if (is_zero()) throw DomainError("inverse of zero");
    mpq_class r;
    mpq_inv(r.get_mpq_t(), v_.get_mpq_t());
    return Rat(std::move(r));
}

Rat Rat::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Rat base = *this, acc = 1;
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

Rat Rat::abs() const { return sign() < 0 ? -*this : *this; }

std::string Rat::str() const {
    if (is_integer()) return numerator_str();
    return numerator_str() + "/" + denominator_str();
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

}  // namespace biquad
