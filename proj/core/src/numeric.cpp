#include "chb/numeric.hpp"

#include <cctype>
#include <ostream>

namespace chb {

Integer ipow(const Integer& base, unsigned long exp) {
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
    return out;
}

Integer binom2(const Integer& n) {
    if (n < 0)
        throw DomainError("binom2: n must be >= 0, got " + str(n));
    return n * (n - 1) / 2;
}

Integer parse_integer(const std::string& text) {
    if (text.empty())
        throw DomainError("parse_integer: empty input");
    std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (i == text.size())
        throw DomainError("parse_integer: no digits in '" + text + "'");
    for (std::size_t j = i; j < text.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(text[j])))
            throw DomainError("parse_integer: invalid integer '" + text + "'");
    return Integer(text);
}

std::string str(const Integer& n) { return n.get_str(); }

Rational::Rational(const Integer& num, const Integer& den) {
    if (den == 0)
        throw DomainError("Rational: zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos)
        return Rational(parse_integer(text));
    Integer num = parse_integer(text.substr(0, slash));
    Integer den = parse_integer(text.substr(slash + 1));
    return Rational(num, den);
}

Integer Rational::floor() const {
    Integer out;
    mpz_fdiv_q(out.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return out;
}

std::string Rational::str() const {
    if (is_integer())
        return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational Rational::operator-() const {
    Rational out;
    out.q_ = -q_;
    return out;
}

Rational& Rational::operator+=(const Rational& rhs) {
    q_ += rhs.q_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    q_ -= rhs.q_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    q_ *= rhs.q_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.q_ == 0)
        throw DomainError("Rational: division by zero");
    q_ /= rhs.q_;
    return *this;
}

Rational abs(const Rational& r) {
    Rational out;
    out.q_ = abs(r.q_);
    return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

} // namespace chb
