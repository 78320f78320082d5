#include "tenseg/groebner.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>

#include "tenseg/errors.hpp"

namespace tenseg {

GroebnerOptions::GroebnerOptions() : stepBudget(20'000'000) {
    if (const char* env = std::getenv("TENSEG_GB_BUDGET")) {
        char* end = nullptr;
        const long long v = std::strtoll(env, &end, 10);
        if (end && *end == '\0' && v > 0) stepBudget = v;
    }
}

namespace {

struct Budget {
    long long left;
    void spend() {
        if (--left < 0) throw BudgetExceededError("Groebner step budget exhausted");
    }
};

Polynomial reduceFully(const Polynomial& p, const std::vector<Polynomial>& basis,
                       const MonomialOrder& order, Budget& budget) {
    Polynomial rem;
    Polynomial work = p;
    // cache leading terms
    std::vector<std::pair<Monomial, Rational>> lts;
    lts.reserve(basis.size());
    for (const auto& g : basis) lts.push_back(leadingTerm(g, order));

    while (!work.isZero()) {
        const auto [wm, wc] = leadingTerm(work, order);
        bool reduced = false;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            if (auto q = lts[i].first.divideInto(wm)) {
                budget.spend();
                const Rational factor = wc / lts[i].second;
                work -= Polynomial::term(factor, *q) * basis[i];
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            budget.spend();
            rem.addTerm(wm, wc);
            work.addTerm(wm, -wc);
        }
    }
    return rem;
}

}  // namespace

Polynomial normalForm(const Polynomial& p, const std::vector<Polynomial>& basis,
                      const MonomialOrder& order) {
    std::vector<Polynomial> nonzero;
    for (const auto& g : basis)
        if (!g.isZero()) nonzero.push_back(g);
    if (nonzero.empty()) return p;
    Budget budget{GroebnerOptions().stepBudget};
    return reduceFully(p, nonzero, order, budget);
}

std::vector<Polynomial> buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& order,
                                   const GroebnerOptions& options) {
    Budget budget{options.stepBudget};

    std::vector<Polynomial> basis;
    for (const auto& g : gens) {
        if (g.isZero()) continue;
        if (!order.covers(g))
            throw Error("buchberger: generator uses a variable outside the order");
        const auto [m, c] = leadingTerm(g, order);
        basis.push_back(g * (Rational(1) / c));
    }
    if (basis.empty()) return {};

    auto lt = [&](const Polynomial& p) { return leadingTerm(p, order).first; };

    // pending S-pairs, processed smallest lcm first (normal strategy)
    std::deque<std::pair<std::size_t, std::size_t>> pairs;
    auto pushPairsWith = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);
    };
    for (std::size_t j = 1; j < basis.size(); ++j) pushPairsWith(j);

    while (!pairs.empty()) {
        auto bestIt = pairs.begin();
        Monomial bestLcm = lt(basis[bestIt->first]).lcm(lt(basis[bestIt->second]));
        for (auto it = std::next(pairs.begin()); it != pairs.end(); ++it) {
            Monomial l = lt(basis[it->first]).lcm(lt(basis[it->second]));
            if (order.less(l, bestLcm)) {
                bestIt = it;
                bestLcm = l;
            }
        }
        const auto [i, j] = *bestIt;
        pairs.erase(bestIt);

        const Monomial li = lt(basis[i]);
        const Monomial lj = lt(basis[j]);
        if (li.coprimeWith(lj)) continue;  // first Buchberger criterion

        const Monomial l = li.lcm(lj);
        const Polynomial s = Polynomial::term(Rational(1), li.divideInto(l).value()) * basis[i] -
                             Polynomial::term(Rational(1), lj.divideInto(l).value()) * basis[j];
        Polynomial r = reduceFully(s, basis, order, budget);
        if (r.isZero()) continue;
        const auto [rm, rc] = leadingTerm(r, order);
        basis.push_back(r * (Rational(1) / rc));
        pushPairsWith(basis.size() - 1);
    }

    // interreduce: drop members whose leading term another one divides, then
    // put every member in normal form against the others
    for (;;) {
        bool changed = false;
        for (std::size_t i = 0; i < basis.size();) {
            std::vector<Polynomial> others;
            for (std::size_t k = 0; k < basis.size(); ++k)
                if (k != i) others.push_back(basis[k]);
            if (others.empty()) break;
            Polynomial r = reduceFully(basis[i], others, order, budget);
            if (r.isZero()) {
                basis.erase(basis.begin() + static_cast<long>(i));
                changed = true;
                continue;
            }
            const auto [rm, rc] = leadingTerm(r, order);
            r = r * (Rational(1) / rc);
            if (!(r == basis[i])) {
                basis[i] = r;
                changed = true;
            }
            ++i;
        }
        if (!changed) break;
    }

    std::sort(basis.begin(), basis.end(),
              [&](const Polynomial& a, const Polynomial& b) { return order.less(lt(a), lt(b)); });
    return basis;
}

std::vector<Polynomial> eliminate(const std::vector<Polynomial>& gens,
                                  const std::set<Variable>& drop,
                                  const EliminationOptions& options) {
    std::set<Variable> all;
    for (const auto& g : gens)
        for (const auto& v : g.variables()) all.insert(v);
    std::vector<Variable> eliminated, kept;
    for (const auto& v : all)
        (drop.count(v) ? eliminated : kept).push_back(v);
    for (const auto& v : drop)
        if (!all.count(v)) eliminated.push_back(v);  // harmless: absent variables

    const MonomialOrder order = MonomialOrder::blockElimination(
        eliminated, kept, options.eliminatedScheme, options.keptScheme);
    const std::vector<Polynomial> gb = buchberger(gens, order, options.groebner);

    std::vector<Polynomial> out;
    for (const auto& g : gb) {
        bool free = true;
        for (const auto& v : g.variables())
            if (drop.count(v)) { free = false; break; }
        if (free) out.push_back(g);
    }
    return out;
}

}  // namespace tenseg
