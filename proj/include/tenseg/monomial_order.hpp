#pragma once

#include <map>
#include <vector>

#include "tenseg/polynomial.hpp"

namespace tenseg {

/// Total well-order on monomials, compatible with multiplication. Supports
/// lexicographic, graded lexicographic and graded reverse lexicographic
/// schemes, plus two-block elimination orders (front block strictly larger
/// than the back block, each with its own inner scheme).
class MonomialOrder {
public:
    enum class Scheme { Lex, GrLex, GrevLex };

    /// Single-block orders; `vars` lists the variables from largest to
    /// smallest.
    static MonomialOrder lex(std::vector<Variable> vars);
    static MonomialOrder grlex(std::vector<Variable> vars);
    static MonomialOrder grevlex(std::vector<Variable> vars);

    /// Elimination order: any monomial containing a variable of
    /// `eliminated` is larger than every monomial in the kept variables
    /// only.
    static MonomialOrder blockElimination(std::vector<Variable> eliminated,
                                          std::vector<Variable> kept,
                                          Scheme eliminatedScheme = Scheme::GrevLex,
                                          Scheme keptScheme = Scheme::Lex);

    /// Strict comparison; throws Error if a monomial uses a variable the
    /// order does not cover.
    bool less(const Monomial& a, const Monomial& b) const;

    bool covers(const Monomial& m) const;
    bool covers(const Polynomial& p) const;

    std::vector<Variable> variables() const;

private:
    struct Block {
        Scheme scheme;
        std::vector<Variable> vars;  // largest first
    };

    std::vector<Block> blocks_;
    std::map<Variable, std::pair<std::size_t, std::size_t>> position_;

    void index();
    static int compareBlock(Scheme scheme, const std::vector<int>& a, const std::vector<int>& b);
};

/// Largest term of a nonzero polynomial under the given order.
std::pair<Monomial, Rational> leadingTerm(const Polynomial& p, const MonomialOrder& order);

}  // namespace tenseg
