#include "tenseg/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

#include "tenseg/errors.hpp"

namespace tenseg {

Rational::Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_.canonicalize();
}

Rational::Rational(mpq_class q) : v_(std::move(q)) {
    if (v_.get_den() == 0) throw std::domain_error("Rational: zero denominator");
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.isZero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::fromString(const std::string& s) {
    // Accepts an optional leading '-', digits, and an optional "/digits"
    // part. Anything else is rejected before it reaches GMP.
    std::size_t i = 0;
    auto expectDigits = [&](std::size_t from) {
        std::size_t j = from;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        return j;
    };
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    std::size_t numEnd = expectDigits(i);
    if (numEnd == i) throw FormatError("invalid rational literal: '" + s + "'");
    i = numEnd;
    if (i != s.size()) {
        if (s[i] != '/') throw FormatError("invalid rational literal: '" + s + "'");
        ++i;
        if (i < s.size() && s[i] == '-') ++i;
        std::size_t denEnd = expectDigits(i);
        if (denEnd == i || denEnd != s.size())
            throw FormatError("invalid rational literal: '" + s + "'");
    }
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw FormatError("invalid rational literal: '" + s + "'");
    if (q.get_den() == 0) throw FormatError("zero denominator in rational literal: '" + s + "'");
    q.canonicalize();
    return Rational(std::move(q));
}

std::string Rational::str() const { return v_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace tenseg
