#include "tenseg/rational_function.hpp"

#include "tenseg/errors.hpp"

namespace tenseg {

Polynomial RationalFunction::denExpanded() const {
    Polynomial out = Polynomial::constant(1);
    for (const auto& [f, mult] : den_)
        for (int i = 0; i < mult; ++i) out = out * f;
    return out;
}

std::pair<Polynomial, Rational> RationalFunction::monicFactor(const Polynomial& p) {
    if (p.isZero()) throw Error("RationalFunction: zero denominator factor");
    const Polynomial monic = p.monicCanonical();
    // p = scale * monic
    for (const auto& [m, c] : p.terms()) {
        auto it = monic.terms().find(m);
        return {monic, c / it->second};
    }
    return {monic, Rational(1)};  // unreachable
}

void RationalFunction::cancel() {
    if (num_.isZero()) {
        den_.clear();
        return;
    }
    for (auto it = den_.begin(); it != den_.end();) {
        if (it->first.isConstant()) {
            // constants were folded into the numerator by the caller
            it = den_.erase(it);
            continue;
        }
        while (it->second > 0) {
            auto q = num_.divideExact(it->first);
            if (!q) break;
            num_ = std::move(*q);
            --it->second;
        }
        if (it->second == 0) it = den_.erase(it);
        else ++it;
    }
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction out = *this;
    out.num_ = -out.num_;
    return out;
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    RationalFunction out;
    out.num_ = num_ * o.num_;
    out.den_ = den_;
    for (const auto& [f, m] : o.den_) out.den_[f] += m;
    out.cancel();
    return out;
}

RationalFunction RationalFunction::timesPoly(const Polynomial& p) const {
    RationalFunction out = *this;
    out.num_ = out.num_ * p;
    out.cancel();
    return out;
}

RationalFunction RationalFunction::overPoly(const Polynomial& p) const {
    if (p.isZero()) throw Error("RationalFunction: division by zero polynomial");
    auto [monic, scale] = monicFactor(p);
    RationalFunction out = *this;
    out.num_ = out.num_ * (Rational(1) / scale);
    if (!monic.isConstant()) ++out.den_[monic];
    out.cancel();
    return out;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    // common denominator via factor multiset union
    RationalFunction out;
    out.den_ = den_;
    for (const auto& [f, m] : o.den_) {
        auto it = out.den_.find(f);
        if (it == out.den_.end()) out.den_[f] = m;
        else it->second = std::max(it->second, m);
    }
    Polynomial left = num_;
    Polynomial right = o.num_;
    for (const auto& [f, m] : out.den_) {
        const int mineL = [&] { auto it = den_.find(f); return it == den_.end() ? 0 : it->second; }();
        const int mineR = [&] { auto it = o.den_.find(f); return it == o.den_.end() ? 0 : it->second; }();
        for (int i = 0; i < m - mineL; ++i) left = left * f;
        for (int i = 0; i < m - mineR; ++i) right = right * f;
    }
    out.num_ = left + right;
    out.cancel();
    return out;
}

Rational RationalFunction::evaluate(const std::map<Variable, Rational>& assignment) const {
    Rational n = num_.evaluate(assignment);
    Rational d(1);
    for (const auto& [f, m] : den_) {
        const Rational v = f.evaluate(assignment);
        if (v.isZero()) throw Error("RationalFunction::evaluate: denominator vanishes");
        for (int i = 0; i < m; ++i) d *= v;
    }
    return n / d;
}

}  // namespace tenseg
