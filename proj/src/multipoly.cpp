#include "ncsf/multipoly.hpp"

#include <sstream>
#include <stdexcept>

namespace ncsf {

MultiPoly MultiPoly::constant(const Rational& c, Truncation t) {
    MultiPoly f(t);
    f.insert(kUnitMonomial, c);
    return f;
}

MultiPoly MultiPoly::variable(Var v, int exp, Truncation t) {
    Monomial m = kUnitMonomial;
    m[static_cast<int>(v)] = exp;
    return monomial(m, 1, t);
}

MultiPoly MultiPoly::monomial(const Monomial& m, const Rational& c, Truncation t) {
    MultiPoly f(t);
    f.insert(m, c);
    return f;
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == kUnitMonomial);
}

Rational MultiPoly::constant_term() const { return coeff(kUnitMonomial); }

Rational MultiPoly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

MultiPoly MultiPoly::with_truncation(const Truncation& t) const {
    MultiPoly out(t);
    for (const auto& [m, c] : terms_) out.insert(m, c);
    return out;
}

MultiPoly MultiPoly::coeff_of(Var v, int k) const {
    const int vi = static_cast<int>(v);
    Truncation t = trunc_;
    t.bound[vi] = Truncation::kUnbounded;
    MultiPoly out(t);
    for (const auto& [m, c] : terms_) {
        if (m[vi] != k) continue;
        Monomial m2 = m;
        m2[vi] = 0;
        out.insert(m2, c);
    }
    return out;
}

int MultiPoly::max_degree(Var v) const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m[static_cast<int>(v)]);
    return d;
}

void MultiPoly::insert(const Monomial& m, const Rational& c) {
    if (c == 0 || !trunc_.admits(m)) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    Truncation t = trunc_.merged(o.trunc_);
    if (!(t == trunc_)) *this = with_truncation(t);
    for (const auto& [m, c] : o.terms_) insert(m, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    Truncation t = trunc_.merged(o.trunc_);
    if (!(t == trunc_)) *this = with_truncation(t);
    for (const auto& [m, c] : o.terms_) insert(m, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly out(a.trunc_.merged(b.trunc_));
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            Monomial m;
            bool ok = true;
            for (int i = 0; i < kNumVars; ++i) {
                m[i] = ma[i] + mb[i];
                if (m[i] > out.trunc_.bound[i]) {
                    ok = false;
                    break;
                }
            }
            if (ok) out.insert(m, ca * cb);
        }
    }
    return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

MultiPoly& MultiPoly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out = *this;
    for (auto& [m, v] : out.terms_) v = -v;
    return out;
}

std::string MultiPoly::monomial_string(const Monomial& m) {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < kNumVars; ++i) {
        if (m[i] == 0) continue;
        if (!first) os << '*';
        os << kVarNames[i];
        if (m[i] != 1) os << '^' << m[i];
        first = false;
    }
    if (first) os << '1';
    return os.str();
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational a = c;
        if (first) {
            if (a < 0) {
                os << '-';
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        const bool unit_mono = (m == kUnitMonomial);
        if (a != 1 || unit_mono) {
            os << ncsf::to_string(a);
            if (!unit_mono) os << '*';
        }
        if (!unit_mono) os << monomial_string(m);
        first = false;
    }
    return os.str();
}

void append_rendered_term(std::string& out, const MultiPoly& c, const std::string& symbol) {
    const bool first = out.empty();
    if (c.terms().size() == 1) {
        const auto& [m, r] = *c.terms().begin();
        const Rational mag = r < 0 ? Rational(-r) : r;
        out += first ? (r < 0 ? "-" : "") : (r < 0 ? " - " : " + ");
        const bool unit_mono = (m == kUnitMonomial);
        if (!unit_mono || mag != 1) {
            if (mag != 1) {
                out += to_string(mag);
                out += '*';
            }
            if (!unit_mono) {
                out += MultiPoly::monomial_string(m);
                out += '*';
            }
        }
        out += symbol;
        return;
    }
    if (!first) out += " + ";
    out += '(';
    out += c.to_string();
    out += ")*";
    out += symbol;
}

MultiPoly geometric_inverse(const MultiPoly& f) {
    const Rational c = f.constant_term();
    if (c == 0) throw std::domain_error("geometric_inverse: zero constant term");
    const Truncation& tr = f.truncation();

    // u = 1 - f/c has no constant term; f^{-1} = (1/c) * sum u^k.
    MultiPoly u = MultiPoly::one(tr) - f * Rational(denominator(c), numerator(c));
    long steps = 1;
    for (const auto& [m, coef] : u.terms()) {
        bool has_bounded = false;
        for (int i = 0; i < kNumVars; ++i)
            if (m[i] > 0 && tr.bound[i] != Truncation::kUnbounded) has_bounded = true;
        if (!has_bounded)
            throw std::domain_error(
                "geometric_inverse: series does not terminate under the given truncation");
    }
    for (int i = 0; i < kNumVars; ++i)
        if (tr.bound[i] != Truncation::kUnbounded) steps += tr.bound[i];

    MultiPoly g = MultiPoly::one(tr);
    for (long k = 0; k < steps; ++k) {
        MultiPoly next = MultiPoly::one(tr) + u * g;
        if (next == g) break;
        g = next;
    }
    return g * Rational(denominator(c), numerator(c));
}

MultiPoly qpochhammer(int n, Var v) {
    MultiPoly out = MultiPoly::one();
    for (int k = 1; k <= n; ++k)
        out *= MultiPoly::one() - MultiPoly::variable(v, k);
    return out;
}

MultiPoly pochhammer(Var base, Var step, int n, Truncation t) {
    MultiPoly out = MultiPoly::one(t);
    for (int k = 0; k < n; ++k) {
        Monomial m = kUnitMonomial;
        m[static_cast<int>(base)] = 1;
        m[static_cast<int>(step)] = k;
        out *= MultiPoly::one(t) - MultiPoly::monomial(m, 1, t);
    }
    return out;
}

}  // namespace ncsf
