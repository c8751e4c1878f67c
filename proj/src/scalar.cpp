#include "bhj/scalar.hpp"

#include "bhj/errors.hpp"

#include <ostream>

namespace bhj {

Scalar::Scalar(long num, long den) : v_(num, den) {
    if (den == 0) throw InvariantViolation("scalar with zero denominator");
    v_.canonicalize();
}

Scalar Scalar::parse(const std::string& text) {
    mpq_class v;
    if (v.set_str(text, 10) != 0)
        throw ParseError("not a rational: '" + text + "'");
    if (sgn(v.get_den()) == 0)
        throw InvariantViolation("scalar with zero denominator: '" + text + "'");
    v.canonicalize();
    return Scalar(std::move(v));
}

Scalar Scalar::parse_exact(const std::string& text) {
    Scalar s = parse(text);
    if (s.str() != text)
        throw InvariantViolation("scalar not in canonical lowest terms: '" + text +
                                 "' (expected '" + s.str() + "')");
    return s;
}

Scalar Scalar::operator-() const {
    mpq_class r;
    mpq_neg(r.get_mpq_t(), v_.get_mpq_t());
    return Scalar(std::move(r));
}

Scalar& Scalar::operator+=(const Scalar& o) {
    v_ += o.v_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    v_ -= o.v_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    v_ *= o.v_;
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.is_zero()) throw InvariantViolation("division by zero scalar");
    v_ /= o.v_;
    return *this;
}

Scalar Scalar::reciprocal() const {
    if (is_zero()) throw InvariantViolation("reciprocal of zero");
    mpq_class r;
    mpq_inv(r.get_mpq_t(), v_.get_mpq_t());
    return Scalar(std::move(r));
}

std::string Scalar::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

} // namespace bhj
