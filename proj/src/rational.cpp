#include "hankel/rational.hpp"

#include <ostream>

namespace hankel {

namespace {

bool valid_decimal(std::string_view s) {
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

} // namespace

Int parse_int(std::string_view s) {
    if (!valid_decimal(s))
        throw ParseError("not a decimal integer: '" + std::string(s) + "'");
    return Int(std::string(s), 10);
}

std::string int_str(const Int& v) {
    return v.get_str(10);
}

Rat::Rat(const Int& num, const Int& den) {
    if (sgn(den) == 0)
        throw ZeroDenominator("rational with zero denominator: " + int_str(num) + "/0");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rat Rat::parse(std::string_view s) {
    auto slash = s.find('/');
    if (slash == std::string_view::npos)
        return Rat(parse_int(s));
    return Rat(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
}

bool Rat::is_integer_at_most(long bound) const {
    return is_integer() && q_.get_num() <= bound;
}

bool Rat::is_nonneg_integer() const {
    return is_integer() && sgn(q_) >= 0;
}

long Rat::to_long() const {
    if (!is_integer() || !q_.get_num().fits_slong_p())
        throw Error("rational does not fit a machine integer: " + str());
    return q_.get_num().get_si();
}

Rat Rat::operator-() const {
    Rat r;
    r.q_ = -q_;
    return r;
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero())
        throw ZeroDenominator("division by zero");
    q_ /= o.q_;
    return *this;
}

Rat Rat::abs() const {
    Rat r;
    r.q_ = ::abs(q_);
    return r;
}

Rat Rat::inv() const {
    if (is_zero())
        throw ZeroDenominator("inverse of zero");
    Rat r;
    r.q_ = 1 / q_;
    return r;
}

Rat Rat::pow(long e) const {
    if (e == 0) return Rat(1);
    const Rat base = e < 0 ? inv() : *this;
    unsigned long ue = e < 0 ? -static_cast<unsigned long>(e) : static_cast<unsigned long>(e);
    Int num, den;
    mpz_pow_ui(num.get_mpz_t(), base.q_.get_num().get_mpz_t(), ue);
    mpz_pow_ui(den.get_mpz_t(), base.q_.get_den().get_mpz_t(), ue);
    Rat r;
    r.q_ = mpq_class(num, den); // already canonical: gcd(num,den)=1 is preserved by powers
    return r;
}

std::string Rat::str() const {
    if (is_integer()) return q_.get_num().get_str(10);
    return q_.get_num().get_str(10) + "/" + q_.get_den().get_str(10);
}

std::ostream& operator<<(std::ostream& os, const Rat& r) {
    return os << r.str();
}

Rat generalized_binomial(const Rat& lambda, long n) {
    Rat v(1);
    for (long i = 0; i < n; ++i)
        v *= (lambda - Rat(i)) / Rat(i + 1);
    return v;
}

Int factorial(long n) {
    Int f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

} // namespace hankel
