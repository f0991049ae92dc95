#include "witt/rational.hpp"

#include "witt/errors.hpp"

#include <cctype>
#include <ostream>

namespace witt {

Rational::Rational(long long num, long long den) {
    if (den == 0) throw PreconditionError("rational with zero denominator");
    q_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
    q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw PreconditionError("division by zero");
    q_ /= o.q_;
    return *this;
}

namespace {

bool valid_int_token(std::string_view s) {
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

} // namespace

Rational Rational::parse(std::string_view s) {
    auto slash = s.find('/');
    std::string_view num = s.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
    if (!valid_int_token(num) || !valid_int_token(den))
        throw ParseError("bad rational literal '" + std::string(s) + "'");
    if (num.front() == '+') num.remove_prefix(1);
    if (den.front() == '+') den.remove_prefix(1);
    mpz_class p(std::string(num), 10), q(std::string(den), 10);
    if (q == 0) throw ParseError("zero denominator in '" + std::string(s) + "'");
    mpq_class r(p, q);
    r.canonicalize();
    return Rational(std::move(r));
}

Rational Rational::binomial(unsigned long n, unsigned long k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rational(mpq_class(b));
}

std::string Rational::str() const {
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

} // namespace witt
