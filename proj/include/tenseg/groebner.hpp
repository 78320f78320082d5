#pragma once

#include <set>
#include <vector>

#include "tenseg/monomial_order.hpp"

namespace tenseg {

struct GroebnerOptions {
    /// Upper bound on term reduction steps across one buchberger() call.
    /// Exceeding it throws BudgetExceededError. Defaults to the
    /// TENSEG_GB_BUDGET environment variable, or 20 million steps.
    long long stepBudget;

    GroebnerOptions();
};

/// Remainder of multivariate division of p by the basis: no term of the
/// result is divisible by any basis leading term.
Polynomial normalForm(const Polynomial& p, const std::vector<Polynomial>& basis,
                      const MonomialOrder& order);

/// Reduced Groebner basis by Buchberger's algorithm with the
/// coprime-leading-monomial criterion and final interreduction. Leading
/// coefficients are 1; the result is canonical for the order.
std::vector<Polynomial> buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& order,
                                   const GroebnerOptions& options = {});

struct EliminationOptions {
    MonomialOrder::Scheme eliminatedScheme = MonomialOrder::Scheme::GrevLex;
    MonomialOrder::Scheme keptScheme = MonomialOrder::Scheme::Lex;
    GroebnerOptions groebner;
};

/// Generators of the elimination ideal: Groebner basis under a block order
/// with the dropped variables largest, intersected with the polynomials
/// free of dropped variables.
std::vector<Polynomial> eliminate(const std::vector<Polynomial>& gens,
                                  const std::set<Variable>& drop,
                                  const EliminationOptions& options = {});

}  // namespace tenseg
