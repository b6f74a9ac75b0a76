#include "ncsf/word.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

namespace ncsf {

std::string word_string(const Word& w) {
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) os << ' ';
        os << w[i];
    }
    os << ']';
    return os.str();
}

Relation::Relation(int m, bool value) : m_(m), rel_(m * m, value) {}

Relation Relation::greater(int m) {
    Relation r(m, false);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < a; ++b) r.set(a, b, true);
    return r;
}

Relation Relation::geq(int m) {
    Relation r = greater(m);
    for (int a = 0; a < m; ++a) r.set(a, a, true);
    return r;
}

Relation Relation::equal(int m) {
    Relation r(m, false);
    for (int a = 0; a < m; ++a) r.set(a, a, true);
    return r;
}

Relation Relation::random(int m, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    Relation r(m, false);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) r.set(a, b, rng() & 1u);
    return r;
}

Relation Relation::from_matrix(const std::vector<std::vector<bool>>& rows) {
    const int m = static_cast<int>(rows.size());
    Relation r(m, false);
    for (int a = 0; a < m; ++a) {
        if (static_cast<int>(rows[a].size()) != m)
            throw std::invalid_argument("Relation::from_matrix: matrix is not square");
        for (int b = 0; b < m; ++b) r.set(a, b, rows[a][b]);
    }
    return r;
}

Relation Relation::complement() const {
    Relation r(m_, false);
    for (int a = 0; a < m_; ++a)
        for (int b = 0; b < m_; ++b) r.set(a, b, !(*this)(a, b));
    return r;
}

bool Relation::chain(const Word& w) const {
    for (size_t i = 0; i + 1 < w.size(); ++i)
        if (!(*this)(w[i], w[i + 1])) return false;
    return true;
}

std::uint32_t Relation::adjacency_mask(const Word& w) const {
    std::uint32_t mask = 0;
    for (size_t i = 0; i + 1 < w.size(); ++i)
        if ((*this)(w[i], w[i + 1])) mask |= 1u << i;
    return mask;
}

int Relation::adjacency_count(const Word& w) const {
    int c = 0;
    for (size_t i = 0; i + 1 < w.size(); ++i)
        if ((*this)(w[i], w[i + 1])) ++c;
    return c;
}

int Relation::theta_maj(const Word& w) const {
    int s = 0;
    for (size_t i = 0; i + 1 < w.size(); ++i)
        if ((*this)(w[i], w[i + 1])) s += static_cast<int>(i) + 1;
    return s;
}

WordPoly WordPoly::unit(const MultiPoly& c, int max_len) {
    return term(Word{}, c, max_len);
}

WordPoly WordPoly::term(const Word& w, const MultiPoly& c, int max_len) {
    WordPoly f(max_len);
    f.add_term(w, c);
    return f;
}

MultiPoly WordPoly::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? MultiPoly() : it->second;
}

WordPoly WordPoly::length_component(int len) const {
    WordPoly out(max_len_);
    for (const auto& [w, c] : terms_)
        if (static_cast<int>(w.size()) == len) out.add_term(w, c);
    return out;
}

void WordPoly::add_term(const Word& w, const MultiPoly& c) {
    if (c.is_zero() || static_cast<int>(w.size()) > max_len_) return;
    auto [it, fresh] = terms_.emplace(w, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

WordPoly& WordPoly::operator+=(const WordPoly& o) {
    max_len_ = std::min(max_len_, o.max_len_);
    std::erase_if(terms_, [&](const auto& kv) {
        return static_cast<int>(kv.first.size()) > max_len_;
    });
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

WordPoly& WordPoly::operator-=(const WordPoly& o) {
    max_len_ = std::min(max_len_, o.max_len_);
    std::erase_if(terms_, [&](const auto& kv) {
        return static_cast<int>(kv.first.size()) > max_len_;
    });
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

WordPoly WordPoly::operator*(const WordPoly& o) const {
    WordPoly out(std::min(max_len_, o.max_len_));
    for (const auto& [wa, ca] : terms_) {
        for (const auto& [wb, cb] : o.terms_) {
            if (static_cast<int>(wa.size() + wb.size()) > out.max_len_) continue;
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            out.add_term(w, ca * cb);
        }
    }
    return out;
}

WordPoly WordPoly::operator*(const MultiPoly& c) const {
    WordPoly out(max_len_);
    for (const auto& [w, v] : terms_) out.add_term(w, v * c);
    return out;
}

std::string WordPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [w, c] : terms_) append_rendered_term(out, c, word_string(w));
    return out;
}

WordPoly partial_letter(const WordPoly& f, int c) {
    WordPoly out(f.max_len());
    for (const auto& [w, v] : f.terms()) {
        if (w.empty() || w.back() != c) continue;
        Word u(w.begin(), w.end() - 1);
        out.add_term(u, v);
    }
    return out;
}

WordPoly ending_projection(const WordPoly& f, const std::vector<int>& letters) {
    WordPoly out(f.max_len());
    for (const auto& [w, v] : f.terms()) {
        if (w.empty()) continue;
        for (int c : letters) {
            if (w.back() == c) {
                out.add_term(w, v);
                break;
            }
        }
    }
    return out;
}

WordPoly word_invert(const WordPoly& f, int max_len) {
    const MultiPoly c0 = f.coeff(Word{});
    if (c0.is_zero() || !c0.is_constant())
        throw std::domain_error("word_invert: constant term is not an invertible scalar");
    const Rational c = c0.constant_term();
    const Rational cinv = Rational(denominator(c), numerator(c));

    // f = c(1 - u); f^{-1} = (sum_k u^k) / c, graded by word length.
    WordPoly u = WordPoly::unit(MultiPoly::one(), max_len);
    u -= f * MultiPoly::constant(cinv);
    WordPoly g = WordPoly::unit(MultiPoly::one(), max_len);
    for (int k = 0; k < max_len; ++k) {
        WordPoly next = WordPoly::unit(MultiPoly::one(), max_len) + u * g;
        if (next == g) break;
        g = next;
    }
    return g * MultiPoly::constant(cinv);
}

MultiPoly word_specialize(const WordPoly& f,
                          const std::function<MultiPoly(int)>& value) {
    MultiPoly out;
    for (const auto& [w, c] : f.terms()) {
        MultiPoly m = c;
        for (int a : w) m *= value(a);
        out += m;
    }
    return out;
}

}  // namespace ncsf
