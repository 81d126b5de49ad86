#include "polyaut/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace polyaut {

Rational::Rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational::Rational(const mpq_class& v) : value_(v) {
    if (value_.get_den() == 0) throw std::invalid_argument("Rational: zero denominator");
    value_.canonicalize();
}

Rational Rational::from_string(const std::string& text) {
    mpq_class v;
    if (v.set_str(text, 10) != 0) {
        throw std::invalid_argument("Rational: cannot parse '" + text + "'");
    }
    if (v.get_den() == 0) throw std::invalid_argument("Rational: zero denominator in '" + text + "'");
    v.canonicalize();
    return Rational(v);
}

Rational Rational::reciprocal() const {
    if (is_zero()) throw std::invalid_argument("Rational: reciprocal of zero");
    return Rational(mpq_class(1) / value_);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
    value_ /= o.value_;
    return *this;
}

std::string Rational::to_string() const {
    return value_.get_str();
}

Rational Rational::pow(unsigned long e) const {
    mpq_class out;
    mpz_pow_ui(out.get_num_mpz_t(), value_.get_num_mpz_t(), e);
    mpz_pow_ui(out.get_den_mpz_t(), value_.get_den_mpz_t(), e);
    return Rational(out);  // already canonical when the base is canonical
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
}

}  // namespace polyaut
