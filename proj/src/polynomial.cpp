#include "tenseg/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "tenseg/errors.hpp"

namespace tenseg {

// ---------------------------------------------------------------------------
// Variable

Variable Variable::coordinate(VertexId v, int component) {
    Variable out;
    out.kind = Kind::Coordinate;
    out.a = v;
    out.b = component;
    return out;
}

Variable Variable::tension(const Edge& e, int atom) {
    Variable out;
    out.kind = Kind::Tension;
    out.a = e.u;
    out.b = e.v;
    out.atom = atom;
    return out;
}

Variable Variable::auxiliary(const Edge& e, int atom) {
    Variable out;
    out.kind = Kind::Auxiliary;
    out.a = e.u;
    out.b = e.v;
    out.atom = atom;
    return out;
}

std::string Variable::name() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::Coordinate:
            if (b < 3) {
                os << "xyz"[b] << a;
            } else {
                os << 'x' << b << '_' << a;
            }
            break;
        case Kind::Tension:
        case Kind::Auxiliary:
            os << (kind == Kind::Tension ? 'w' : 't') << a << '_' << b;
            if (atom >= 0) os << "_a" << atom;
            break;
    }
    return os.str();
}

namespace {

bool parseInt(const std::string& s, std::size_t& i, int& out) {
    std::size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j == i) return false;
    out = std::stoi(s.substr(i, j - i));
    i = j;
    return true;
}

}  // namespace

std::optional<Variable> Variable::parse(const std::string& s) {
    if (s.empty()) return std::nullopt;
    const char c = s[0];
    std::size_t i = 1;
    int first = 0;
    if (!parseInt(s, i, first)) return std::nullopt;

    if (c == 'x' || c == 'y' || c == 'z') {
        if (i == s.size()) {
            const int comp = (c == 'x') ? 0 : (c == 'y') ? 1 : 2;
            return coordinate(first, comp);
        }
        if (c == 'x' && s[i] == '_') {
            ++i;
            int vertex = 0;
            if (!parseInt(s, i, vertex) || i != s.size() || first < 3) return std::nullopt;
            return coordinate(vertex, first);
        }
        return std::nullopt;
    }
    if (c == 'w' || c == 't') {
        if (i >= s.size() || s[i] != '_') return std::nullopt;
        ++i;
        int second = 0;
        if (!parseInt(s, i, second)) return std::nullopt;
        int atom = -1;
        if (i != s.size()) {
            if (i + 1 >= s.size() || s[i] != '_' || s[i + 1] != 'a') return std::nullopt;
            i += 2;
            if (!parseInt(s, i, atom) || i != s.size()) return std::nullopt;
        }
        if (first == second) return std::nullopt;
        const Edge e(first, second);
        return c == 'w' ? tension(e, atom) : auxiliary(e, atom);
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(std::vector<std::pair<Variable, int>> exps) : exps_(std::move(exps)) {
    std::sort(exps_.begin(), exps_.end());
    std::vector<std::pair<Variable, int>> merged;
    for (const auto& [v, e] : exps_) {
        if (e == 0) continue;
        if (e < 0) throw Error("Monomial: negative exponent");
        if (!merged.empty() && merged.back().first == v) merged.back().second += e;
        else merged.emplace_back(v, e);
    }
    exps_ = std::move(merged);
}

Monomial Monomial::of(const Variable& v, int exp) {
    return Monomial({{v, exp}});
}

int Monomial::totalDegree() const {
    int d = 0;
    for (const auto& [v, e] : exps_) d += e;
    return d;
}

int Monomial::degreeOf(const Variable& v) const {
    for (const auto& [u, e] : exps_)
        if (u == v) return e;
    return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
    std::vector<std::pair<Variable, int>> out;
    auto a = exps_.begin(), b = o.exps_.begin();
    while (a != exps_.end() || b != o.exps_.end()) {
        if (b == o.exps_.end() || (a != exps_.end() && a->first < b->first)) out.push_back(*a++);
        else if (a == exps_.end() || b->first < a->first) out.push_back(*b++);
        else {
            out.emplace_back(a->first, a->second + b->second);
            ++a;
            ++b;
        }
    }
    Monomial m;
    m.exps_ = std::move(out);
    return m;
}

bool Monomial::divides(const Monomial& o) const {
    auto a = exps_.begin();
    auto b = o.exps_.begin();
    while (a != exps_.end()) {
        while (b != o.exps_.end() && b->first < a->first) ++b;
        if (b == o.exps_.end() || !(b->first == a->first) || b->second < a->second) return false;
        ++a;
    }
    return true;
}

std::optional<Monomial> Monomial::divideInto(const Monomial& o) const {
    if (!divides(o)) return std::nullopt;
    std::vector<std::pair<Variable, int>> out;
    auto a = exps_.begin();
    for (const auto& [v, e] : o.exps_) {
        int sub = 0;
        if (a != exps_.end() && a->first == v) {
            sub = a->second;
            ++a;
        }
        if (e - sub > 0) out.emplace_back(v, e - sub);
    }
    Monomial m;
    m.exps_ = std::move(out);
    return m;
}

Monomial Monomial::lcm(const Monomial& o) const {
    std::vector<std::pair<Variable, int>> out;
    auto a = exps_.begin(), b = o.exps_.begin();
    while (a != exps_.end() || b != o.exps_.end()) {
        if (b == o.exps_.end() || (a != exps_.end() && a->first < b->first)) out.push_back(*a++);
        else if (a == exps_.end() || b->first < a->first) out.push_back(*b++);
        else {
            out.emplace_back(a->first, std::max(a->second, b->second));
            ++a;
            ++b;
        }
    }
    Monomial m;
    m.exps_ = std::move(out);
    return m;
}

bool Monomial::coprimeWith(const Monomial& o) const {
    auto a = exps_.begin(), b = o.exps_.begin();
    while (a != exps_.end() && b != o.exps_.end()) {
        if (a->first < b->first) ++a;
        else if (b->first < a->first) ++b;
        else return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Polynomial

namespace {

/// Graded lexicographic order over the natural variable order; fixed order
/// used for canonical rendering and exact division.
bool grlexNaturalLess(const Monomial& a, const Monomial& b) {
    const int da = a.totalDegree(), db = b.totalDegree();
    if (da != db) return da < db;
    auto ia = a.exponents().begin(), ea = a.exponents().end();
    auto ib = b.exponents().begin(), eb = b.exponents().end();
    while (ia != ea || ib != eb) {
        if (ib == eb) return false;  // a has an earlier variable -> a larger
        if (ia == ea) return true;
        if (ia->first < ib->first) return false;
        if (ib->first < ia->first) return true;
        if (ia->second != ib->second) return ia->second < ib->second;
        ++ia;
        ++ib;
    }
    return false;
}

std::pair<Monomial, Rational> leadingGrlexNatural(const Polynomial& p) {
    auto best = p.terms().begin();
    for (auto it = std::next(p.terms().begin()); it != p.terms().end(); ++it)
        if (grlexNaturalLess(best->first, it->first)) best = it;
    return {best->first, best->second};
}

}  // namespace

Polynomial Polynomial::constant(Rational c) {
    Polynomial p;
    p.addTerm(Monomial::one(), c);
    return p;
}

Polynomial Polynomial::variable(const Variable& v) {
    Polynomial p;
    p.addTerm(Monomial::of(v), Rational(1));
    return p;
}

Polynomial Polynomial::term(Rational c, Monomial m) {
    Polynomial p;
    p.addTerm(m, c);
    return p;
}

bool Polynomial::isConstant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.isOne());
}

Rational Polynomial::constantValue() const {
    auto it = terms_.find(Monomial::one());
    return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::totalDegree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.totalDegree());
    return d;
}

std::set<Variable> Polynomial::variables() const {
    std::set<Variable> out;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m.exponents()) out.insert(v);
    return out;
}

void Polynomial::addTerm(const Monomial& m, const Rational& c) {
    if (c.isZero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.isZero()) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) addTerm(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) addTerm(m, -c);
    return *this;
}

Polynomial Polynomial::operator-() const {
    Polynomial out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    Polynomial out;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) out.addTerm(ma * mb, ca * cb);
    return out;
}

Polynomial Polynomial::operator*(const Rational& c) const {
    if (c.isZero()) return {};
    Polynomial out;
    for (const auto& [m, k] : terms_) out.terms_.emplace(m, k * c);
    return out;
}

Polynomial Polynomial::pow(int e) const {
    if (e < 0) throw Error("Polynomial::pow: negative exponent");
    Polynomial out = constant(1);
    for (int i = 0; i < e; ++i) out = out * *this;
    return out;
}

Rational Polynomial::evaluate(const std::map<Variable, Rational>& assignment) const {
    Rational out(0);
    for (const auto& [m, c] : terms_) {
        Rational v = c;
        for (const auto& [var, e] : m.exponents()) {
            auto it = assignment.find(var);
            if (it == assignment.end())
                throw Error("Polynomial::evaluate: no value for variable " + var.name());
            for (int k = 0; k < e; ++k) v *= it->second;
        }
        out += v;
    }
    return out;
}

Polynomial Polynomial::substitute(const std::map<Variable, Rational>& assignment) const {
    Polynomial out;
    for (const auto& [m, c] : terms_) {
        Rational coeff = c;
        std::vector<std::pair<Variable, int>> rest;
        for (const auto& [var, e] : m.exponents()) {
            auto it = assignment.find(var);
            if (it == assignment.end()) {
                rest.emplace_back(var, e);
            } else {
                for (int k = 0; k < e; ++k) coeff *= it->second;
            }
        }
        out.addTerm(Monomial(std::move(rest)), coeff);
    }
    return out;
}

Polynomial Polynomial::substitute(const std::map<Variable, Polynomial>& assignment) const {
    Polynomial out;
    for (const auto& [m, c] : terms_) {
        Polynomial termValue = constant(c);
        std::vector<std::pair<Variable, int>> rest;
        for (const auto& [var, e] : m.exponents()) {
            auto it = assignment.find(var);
            if (it == assignment.end()) rest.emplace_back(var, e);
            else termValue = termValue * it->second.pow(e);
        }
        out += termValue * Polynomial::term(Rational(1), Monomial(std::move(rest)));
    }
    return out;
}

Polynomial Polynomial::monicCanonical() const {
    if (isZero()) return {};
    const auto [m, c] = leadingGrlexNatural(*this);
    return *this * (Rational(1) / c);
}

std::optional<Polynomial> Polynomial::divideExact(const Polynomial& div) const {
    if (div.isZero()) throw Error("Polynomial::divideExact: division by zero polynomial");
    Polynomial rem = *this;
    Polynomial quot;
    const auto [dm, dc] = leadingGrlexNatural(div);
    while (!rem.isZero()) {
        const auto [rm, rc] = leadingGrlexNatural(rem);
        auto q = dm.divideInto(rm);
        if (!q) return std::nullopt;
        const Rational qc = rc / dc;
        Polynomial t = Polynomial::term(qc, *q);
        quot += t;
        rem -= t * div;
    }
    return quot;
}

// ---------------------------------------------------------------------------
// Rendering and parsing

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<Monomial, Rational>> sorted(terms_.begin(), terms_.end());
    std::sort(sorted.begin(), sorted.end(),
              [](const auto& a, const auto& b) { return grlexNaturalLess(b.first, a.first); });

    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : sorted) {
        const Rational a = abs(c);
        if (first) {
            if (c.sgn() < 0) os << '-';
            first = false;
        } else {
            os << (c.sgn() < 0 ? " - " : " + ");
        }
        const bool coeffOne = a.isOne();
        if (!coeffOne || m.isOne()) os << a.str();
        bool needStar = !coeffOne && !m.isOne();
        for (const auto& [v, e] : m.exponents()) {
            if (needStar) os << '*';
            os << v.name();
            if (e > 1) os << '^' << e;
            needStar = true;
        }
    }
    return os.str();
}

namespace {

struct TermText {
    int sign = 1;
    std::string body;
};

std::vector<TermText> splitTerms(const std::string& text) {
    std::vector<TermText> terms;
    TermText cur;
    bool expectTerm = true;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (c == ' ' || c == '\t') continue;
        if ((c == '+' || c == '-')) {
            if (expectTerm && c == '-') {
                cur.sign = -cur.sign;
                continue;
            }
            if (expectTerm && c == '+') continue;
            terms.push_back(cur);
            cur = TermText{};
            cur.sign = (c == '-') ? -1 : 1;
            expectTerm = true;
            continue;
        }
        cur.body.push_back(c);
        expectTerm = false;
    }
    if (!cur.body.empty()) terms.push_back(cur);
    return terms;
}

}  // namespace

Polynomial Polynomial::parse(const std::string& text) {
    const auto terms = splitTerms(text);
    if (terms.empty()) throw FormatError("Polynomial::parse: empty input");
    if (terms.size() == 1 && terms[0].body == "0") return {};

    Polynomial out;
    for (const auto& t : terms) {
        if (t.body.empty()) throw FormatError("Polynomial::parse: dangling sign in '" + text + "'");
        Rational coeff(t.sign);
        std::vector<std::pair<Variable, int>> exps;
        std::size_t pos = 0;
        bool firstFactor = true;
        while (pos < t.body.size()) {
            std::size_t star = t.body.find('*', pos);
            std::string factor = t.body.substr(pos, star == std::string::npos ? star : star - pos);
            pos = (star == std::string::npos) ? t.body.size() : star + 1;
            if (factor.empty()) throw FormatError("Polynomial::parse: empty factor in '" + text + "'");

            if (std::isdigit(static_cast<unsigned char>(factor[0]))) {
                if (!firstFactor)
                    throw FormatError("Polynomial::parse: coefficient not leading in '" + text + "'");
                coeff *= Rational::fromString(factor);
            } else {
                int exp = 1;
                if (auto caret = factor.find('^'); caret != std::string::npos) {
                    const std::string expStr = factor.substr(caret + 1);
                    std::size_t i = 0;
                    if (!parseInt(expStr, i, exp) || i != expStr.size() || exp <= 0)
                        throw FormatError("Polynomial::parse: bad exponent in '" + text + "'");
                    factor = factor.substr(0, caret);
                }
                auto var = Variable::parse(factor);
                if (!var) throw FormatError("Polynomial::parse: unknown variable '" + factor + "'");
                exps.emplace_back(*var, exp);
            }
            firstFactor = false;
        }
        out.addTerm(Monomial(std::move(exps)), coeff);
    }
    return out;
}

}  // namespace tenseg
