#include "ncenter/rational.hpp"

#include <boost/multiprecision/integer.hpp>
#include <cctype>

namespace ncenter {

namespace mp = boost::multiprecision;

void Rational::reduce() {
    if (den_ == 0)
        throw ZeroDenominator("rational: zero denominator");
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    BigInt g = mp::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
    num_ /= g;
    den_ /= g;
}

namespace {

bool parse_integer(const std::string& s, size_t begin, size_t end, BigInt& out) {
    if (begin >= end)
        return false;
    size_t i = begin;
    if (s[i] == '+' || s[i] == '-')
        ++i;
    if (i >= end)
        return false;
    for (size_t j = i; j < end; ++j)
        if (!std::isdigit(static_cast<unsigned char>(s[j])))
            return false;
    out = BigInt(s.substr(begin, end - begin));
    return true;
}

}  // namespace

Rational Rational::parse(const std::string& text) {
    size_t slash = text.find('/');
    BigInt p, q(1);
    if (slash == std::string::npos) {
        if (!parse_integer(text, 0, text.size(), p))
            throw MalformedRational("rational: cannot parse \"" + text + "\"");
    } else {
        if (!parse_integer(text, 0, slash, p) ||
            !parse_integer(text, slash + 1, text.size(), q))
            throw MalformedRational("rational: cannot parse \"" + text + "\"");
        if (q == 0)
            throw ZeroDenominator("rational: zero denominator in \"" + text + "\"");
    }
    return Rational(std::move(p), std::move(q));
}

std::string Rational::str() const {
    std::string s = num_.str();
    if (den_ != 1)
        s += "/" + den_.str();
    return s;
}

double Rational::to_double() const {
    return num_.convert_to<double>() / den_.convert_to<double>();
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

Rational Rational::operator+(const Rational& o) const {
    return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator-(const Rational& o) const {
    return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator*(const Rational& o) const {
    return Rational(num_ * o.num_, den_ * o.den_);
}

Rational Rational::operator/(const Rational& o) const {
    if (o.num_ == 0)
        throw ZeroDenominator("rational: division by zero");
    return Rational(num_ * o.den_, den_ * o.num_);
}

std::optional<Rational> rat_sqrt(const Rational& s) {
    if (s.is_negative())
        return std::nullopt;
    BigInt rem;
    BigInt sn = mp::sqrt(s.num(), rem);
    if (rem != 0)
        return std::nullopt;
    BigInt sd = mp::sqrt(s.den(), rem);
    if (rem != 0)
        return std::nullopt;
    return Rational(std::move(sn), std::move(sd));
}

}  // namespace ncenter
