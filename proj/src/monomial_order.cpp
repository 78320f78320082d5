#include "tenseg/monomial_order.hpp"

#include <numeric>

#include "tenseg/errors.hpp"

namespace tenseg {

void MonomialOrder::index() {
    position_.clear();
    for (std::size_t b = 0; b < blocks_.size(); ++b)
        for (std::size_t i = 0; i < blocks_[b].vars.size(); ++i) {
            auto [it, inserted] = position_.emplace(blocks_[b].vars[i], std::make_pair(b, i));
            if (!inserted) throw Error("MonomialOrder: duplicate variable " + blocks_[b].vars[i].name());
        }
}

MonomialOrder MonomialOrder::lex(std::vector<Variable> vars) {
    MonomialOrder o;
    o.blocks_.push_back({Scheme::Lex, std::move(vars)});
    o.index();
    return o;
}

MonomialOrder MonomialOrder::grlex(std::vector<Variable> vars) {
    MonomialOrder o;
    o.blocks_.push_back({Scheme::GrLex, std::move(vars)});
    o.index();
    return o;
}

MonomialOrder MonomialOrder::grevlex(std::vector<Variable> vars) {
    MonomialOrder o;
    o.blocks_.push_back({Scheme::GrevLex, std::move(vars)});
    o.index();
    return o;
}

MonomialOrder MonomialOrder::blockElimination(std::vector<Variable> eliminated,
                                              std::vector<Variable> kept,
                                              Scheme eliminatedScheme, Scheme keptScheme) {
    MonomialOrder o;
    o.blocks_.push_back({eliminatedScheme, std::move(eliminated)});
    o.blocks_.push_back({keptScheme, std::move(kept)});
    o.index();
    return o;
}

bool MonomialOrder::covers(const Monomial& m) const {
    for (const auto& [v, e] : m.exponents())
        if (!position_.count(v)) return false;
    return true;
}

bool MonomialOrder::covers(const Polynomial& p) const {
    for (const auto& [m, c] : p.terms())
        if (!covers(m)) return false;
    return true;
}

std::vector<Variable> MonomialOrder::variables() const {
    std::vector<Variable> out;
    for (const auto& b : blocks_) out.insert(out.end(), b.vars.begin(), b.vars.end());
    return out;
}

int MonomialOrder::compareBlock(Scheme scheme, const std::vector<int>& a, const std::vector<int>& b) {
    const int da = std::accumulate(a.begin(), a.end(), 0);
    const int db = std::accumulate(b.begin(), b.end(), 0);
    switch (scheme) {
        case Scheme::Lex:
            break;
        case Scheme::GrLex:
            if (da != db) return da < db ? -1 : 1;
            break;
        case Scheme::GrevLex: {
            if (da != db) return da < db ? -1 : 1;
            // last position where they differ: smaller exponent wins
            for (std::size_t i = a.size(); i-- > 0;) {
                if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
            }
            return 0;
        }
    }
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

bool MonomialOrder::less(const Monomial& a, const Monomial& b) const {
    // dense exponent vectors per block
    std::vector<std::vector<int>> ea(blocks_.size()), eb(blocks_.size());
    for (std::size_t k = 0; k < blocks_.size(); ++k) {
        ea[k].assign(blocks_[k].vars.size(), 0);
        eb[k].assign(blocks_[k].vars.size(), 0);
    }
    auto fill = [&](const Monomial& m, std::vector<std::vector<int>>& dst) {
        for (const auto& [v, e] : m.exponents()) {
            auto it = position_.find(v);
            if (it == position_.end())
                throw Error("MonomialOrder: variable " + v.name() + " not covered by the order");
            dst[it->second.first][it->second.second] = e;
        }
    };
    fill(a, ea);
    fill(b, eb);
    for (std::size_t k = 0; k < blocks_.size(); ++k) {
        const int c = compareBlock(blocks_[k].scheme, ea[k], eb[k]);
        if (c != 0) return c < 0;
    }
    return false;
}

std::pair<Monomial, Rational> leadingTerm(const Polynomial& p, const MonomialOrder& order) {
    if (p.isZero()) throw Error("leadingTerm: zero polynomial");
    auto best = p.terms().begin();
    for (auto it = std::next(p.terms().begin()); it != p.terms().end(); ++it)
        if (order.less(best->first, it->first)) best = it;
    return {best->first, best->second};
}

}  // namespace tenseg
