#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <compare>
#include <iosfwd>
#include <string>

namespace tenseg {

/// Exact rational scalar backed by GMP. Invariants: gcd(num, den) = 1 and
/// den > 0 at all times. All arithmetic is exact; there is no floating
/// point anywhere in the core.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: implicit by design, Scalar(1) etc.
    Rational(int n) : v_(n) {}   // NOLINT
    Rational(long num, long den);
    explicit Rational(mpq_class q);

    /// Parses "p" or "p/q" (q > 0 after canonicalization). Throws
    /// FormatError on anything else.
    static Rational fromString(const std::string& s);

    /// Renders as "p" or "p/q" with q > 1.
    std::string str() const;

    int sgn() const { return ::sgn(v_); }
    bool isZero() const { return sgn() == 0; }
    bool isOne() const { return v_ == 1; }

    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    /// Approximate double value. Only for human-readable output; never used
    /// in any decision.
    double approx() const { return v_.get_d(); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }
    Rational operator-() const { return Rational(mpq_class(-v_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

private:
    mpq_class v_;
};

inline Rational abs(const Rational& r) { return r.sgn() < 0 ? -r : r; }

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace tenseg

namespace Eigen {

template <>
struct NumTraits<tenseg::Rational> : GenericNumTraits<tenseg::Rational> {
    using Real = tenseg::Rational;
    using NonInteger = tenseg::Rational;
    using Nested = tenseg::Rational;
    using Literal = long;

    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 100,
        MulCost = 100,
    };

    static inline Real epsilon() { return tenseg::Rational(0); }
    static inline Real dummy_precision() { return tenseg::Rational(0); }
    static inline int digits10() { return 0; }
};

}  // namespace Eigen
