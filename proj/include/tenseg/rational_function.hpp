#pragma once

#include <map>

#include "tenseg/polynomial.hpp"

namespace tenseg {

/// Quotient of polynomials with the denominator kept as a multiset of monic
/// factors. Factors arising in the reconstruction are cofactor determinants,
/// so keeping them separate makes cancellation an exact-division test per
/// factor instead of a multivariate gcd.
class RationalFunction {
public:
    RationalFunction() = default;
    RationalFunction(Polynomial num) : num_(std::move(num)) {}  // NOLINT: implicit by design
    RationalFunction(Rational c) : num_(Polynomial::constant(std::move(c))) {}  // NOLINT

    const Polynomial& num() const { return num_; }
    const std::map<Polynomial, int>& denFactors() const { return den_; }
    Polynomial denExpanded() const;

    bool isZero() const { return num_.isZero(); }

    RationalFunction operator-() const;
    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator-(const RationalFunction& o) const { return *this + (-o); }
    RationalFunction operator*(const RationalFunction& o) const;

    /// Multiplies by a polynomial, cancelling against denominator factors.
    RationalFunction timesPoly(const Polynomial& p) const;
    /// Divides by a nonzero polynomial, recorded as a denominator factor
    /// (after trying to cancel it against the numerator).
    RationalFunction overPoly(const Polynomial& p) const;

    Rational evaluate(const std::map<Variable, Rational>& assignment) const;

    bool operator==(const RationalFunction& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }

private:
    void cancel();
    static std::pair<Polynomial, Rational> monicFactor(const Polynomial& p);

    Polynomial num_;                // carries all scalar content
    std::map<Polynomial, int> den_; // monic factor -> multiplicity
};

}  // namespace tenseg
