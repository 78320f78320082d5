#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tenseg/graph.hpp"
#include "tenseg/rational.hpp"

namespace tenseg {

/// A symbolic variable: a coordinate component of a vertex, an edge tension
/// (optionally tagged with the ordinal of the atom it belongs to), or an
/// auxiliary saturation variable.
struct Variable {
    enum class Kind : std::uint8_t { Coordinate, Tension, Auxiliary };

    Kind kind = Kind::Coordinate;
    std::int32_t a = 0;     // Coordinate: vertex id; Tension/Auxiliary: edge endpoint i (i<j)
    std::int32_t b = 0;     // Coordinate: component;  Tension/Auxiliary: edge endpoint j
    std::int32_t atom = -1; // Tension/Auxiliary only: atom ordinal, -1 when unique

    auto operator<=>(const Variable&) const = default;

    static Variable coordinate(VertexId v, int component);
    static Variable tension(const Edge& e, int atom = -1);
    static Variable auxiliary(const Edge& e, int atom = -1);

    /// "x6", "z12", "x4_7" (component >= 3), "w2_4", "w2_4_a1", "t2_4".
    std::string name() const;
    static std::optional<Variable> parse(const std::string& name);
};

/// Sparse monomial: sorted (variable, positive exponent) pairs. The default
/// comparison is a canonical storage order, not a monomial order.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<std::pair<Variable, int>> exps);
    static Monomial one() { return {}; }
    static Monomial of(const Variable& v, int exp = 1);

    const std::vector<std::pair<Variable, int>>& exponents() const { return exps_; }
    bool isOne() const { return exps_.empty(); }
    int totalDegree() const;
    int degreeOf(const Variable& v) const;

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    /// o / *this, when divisible.
    std::optional<Monomial> divideInto(const Monomial& o) const;
    Monomial lcm(const Monomial& o) const;
    bool coprimeWith(const Monomial& o) const;

    auto operator<=>(const Monomial&) const = default;

private:
    std::vector<std::pair<Variable, int>> exps_;
};

/// Multivariate polynomial with exact rational coefficients. Terms are kept
/// in a canonical map; no zero coefficient is ever stored. Rendering and
/// leading-term queries take the order as a parameter.
class Polynomial {
public:
    Polynomial() = default;

    static Polynomial zero() { return {}; }
    static Polynomial constant(Rational c);
    static Polynomial variable(const Variable& v);
    static Polynomial term(Rational c, Monomial m);

    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool isZero() const { return terms_.empty(); }
    bool isConstant() const;
    /// The constant coefficient (0 for the zero polynomial); only meaningful
    /// together with isConstant().
    Rational constantValue() const;
    int totalDegree() const;
    std::set<Variable> variables() const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { a += b; return a; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { a -= b; return a; }
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Rational& c) const;
    friend Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }
    Polynomial pow(int e) const;

    bool operator==(const Polynomial&) const = default;
    /// Canonical storage comparison, usable as a map key ordering.
    auto operator<=>(const Polynomial& o) const { return terms_ <=> o.terms_; }

    /// Full evaluation; throws Error if a variable has no assignment.
    Rational evaluate(const std::map<Variable, Rational>& assignment) const;
    /// Partial substitution of rationals for variables.
    Polynomial substitute(const std::map<Variable, Rational>& assignment) const;
    /// Substitution of polynomials for variables.
    Polynomial substitute(const std::map<Variable, Polynomial>& assignment) const;

    void addTerm(const Monomial& m, const Rational& c);

    /// Divides all coefficients by the leading grlex coefficient, making the
    /// polynomial monic in the canonical print order.
    Polynomial monicCanonical() const;

    /// Exact division: returns *this / div when the remainder is zero.
    std::optional<Polynomial> divideExact(const Polynomial& div) const;

    /// Canonical rendering: grlex-descending terms, variables in their
    /// natural order, e.g. "x6^2 - y6^2 - z6^2 - x6 + y6 + z6".
    std::string str() const;
    /// Parses the canonical rendering (sums of rational-coefficient
    /// monomials; no parentheses). Throws FormatError.
    static Polynomial parse(const std::string& text);

private:
    std::map<Monomial, Rational> terms_;
};

}  // namespace tenseg
