#include "ncsf/composition.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ncsf {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_) {
        if (p <= 0) throw std::domain_error("Composition: parts must be positive");
        degree_ += p;
    }
}

Composition Composition::from_descent_mask(std::uint32_t mask, int n) {
    if (n == 0) {
        if (mask != 0) throw std::domain_error("from_descents: descent outside {1..n-1}");
        return {};
    }
    if (n >= 1 && (mask >> (n - 1)) != 0)
        throw std::domain_error("from_descents: descent outside {1..n-1}");
    std::vector<int> parts;
    int prev = 0;
    for (int d = 1; d < n; ++d) {
        if (mask >> (d - 1) & 1u) {
            parts.push_back(d - prev);
            prev = d;
        }
    }
    parts.push_back(n - prev);
    return Composition(std::move(parts));
}

Composition Composition::from_descents(const std::vector<int>& descents, int n) {
    std::uint32_t mask = 0;
    for (int d : descents) {
        if (d < 1 || d > n - 1) throw std::domain_error("from_descents: descent outside {1..n-1}");
        mask |= 1u << (d - 1);
    }
    return from_descent_mask(mask, n);
}

std::uint32_t Composition::descent_mask() const {
    std::uint32_t mask = 0;
    int s = 0;
    for (size_t i = 0; i + 1 < parts_.size(); ++i) {
        s += parts_[i];
        mask |= 1u << (s - 1);
    }
    return mask;
}

std::vector<int> Composition::descents() const {
    std::vector<int> out;
    int s = 0;
    for (size_t i = 0; i + 1 < parts_.size(); ++i) {
        s += parts_[i];
        out.push_back(s);
    }
    return out;
}

int Composition::maj() const {
    int s = 0;
    for (int d : descents()) s += d;
    return s;
}

Composition Composition::complement() const {
    const int n = degree_;
    const std::uint32_t full = n >= 1 ? (1u << (n - 1)) - 1u : 0u;
    return from_descent_mask(full & ~descent_mask(), n);
}

Composition Composition::conjugate() const {
    const int n = degree_;
    const std::uint32_t full = n >= 1 ? (1u << (n - 1)) - 1u : 0u;
    const std::uint32_t co = full & ~descent_mask();
    std::uint32_t mask = 0;
    for (int d = 1; d < n; ++d)
        if (co >> (d - 1) & 1u) mask |= 1u << (n - d - 1);
    return from_descent_mask(mask, n);
}

Composition Composition::reversed() const {
    std::vector<int> p(parts_.rbegin(), parts_.rend());
    return Composition(std::move(p));
}

std::string Composition::to_string() const {
    std::ostringstream os;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    return os.str();
}

Composition Composition::parse(const std::string& s) {
    if (s.empty()) return {};
    if (s.back() == ',') throw std::invalid_argument("malformed composition: '" + s + "'");
    std::vector<int> parts;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed composition: '" + s + "'");
        }
        if (pos != tok.size() || v <= 0)
            throw std::invalid_argument("malformed composition: '" + s + "'");
        parts.push_back(v);
    }
    if (parts.empty()) throw std::invalid_argument("malformed composition: '" + s + "'");
    return Composition(std::move(parts));
}

Composition descent_op(const Composition& h, const Composition& k, DescentOp op) {
    if (h.degree() != k.degree())
        throw std::domain_error("descent_op: compositions of different degree");
    const std::uint32_t a = h.descent_mask(), b = k.descent_mask();
    std::uint32_t m = 0;
    switch (op) {
        case DescentOp::meet: m = a & b; break;
        case DescentOp::join: m = a | b; break;
        case DescentOp::diff: m = a & ~b; break;
    }
    return Composition::from_descent_mask(m, h.degree());
}

Composition concat(const Composition& a, const Composition& b) {
    std::vector<int> p = a.parts();
    p.insert(p.end(), b.parts().begin(), b.parts().end());
    return Composition(std::move(p));
}

Composition near_concat(const Composition& a, const Composition& b) {
    if (a.empty() || b.empty())
        throw std::domain_error("near_concat: needs nonempty compositions");
    std::vector<int> p = a.parts();
    p.back() += b.parts().front();
    p.insert(p.end(), b.parts().begin() + 1, b.parts().end());
    return Composition(std::move(p));
}

std::vector<Composition> compositions_of(int n) {
    if (n == 0) return {Composition()};
    std::vector<Composition> out;
    const std::uint32_t count = 1u << (n - 1);
    out.reserve(count);
    for (std::uint32_t mask = 0; mask < count; ++mask)
        out.push_back(Composition::from_descent_mask(mask, n));
    return out;
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int v : images_) {
        if (v < 1 || v > static_cast<int>(images_.size()) || seen[v - 1])
            throw std::domain_error("Permutation: not a bijection on {1..n}");
        seen[v - 1] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 1);
    return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
    std::vector<int> im(images_.size());
    for (size_t i = 0; i < images_.size(); ++i) im[images_[i] - 1] = static_cast<int>(i) + 1;
    return Permutation(std::move(im));
}

std::uint32_t Permutation::descent_mask() const {
    std::uint32_t mask = 0;
    for (size_t i = 0; i + 1 < images_.size(); ++i)
        if (images_[i] > images_[i + 1]) mask |= 1u << i;
    return mask;
}

Composition Permutation::descent_composition() const {
    return Composition::from_descent_mask(descent_mask(), size());
}

int Permutation::coimaj() const {
    const int n = size();
    const std::uint32_t mask = inverse().descent_mask();
    int s = 0;
    for (int d = 1; d < n; ++d)
        if (mask >> (d - 1) & 1u) s += n - d;
    return s;
}

void Permutation::for_each(int n, const std::function<void(const Permutation&)>& fn) {
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 1);
    do {
        fn(Permutation(im));
    } while (std::next_permutation(im.begin(), im.end()));
}

Composition descent_composition(const std::vector<int>& word) {
    if (word.empty()) throw std::domain_error("descent_composition: empty word");
    std::uint32_t mask = 0;
    for (size_t i = 0; i + 1 < word.size(); ++i)
        if (word[i] > word[i + 1]) mask |= 1u << i;
    return Composition::from_descent_mask(mask, static_cast<int>(word.size()));
}

Int descent_class_multinomial(const Composition& I) {
    Int v = factorial(I.degree());
    for (int p : I.parts()) v /= factorial(p);
    return v;
}

Int ribbon_number(const Composition& I) {
    // beta_I = sum over Des(J) subset Des(I) of (-1)^{|Des(I)\Des(J)|} n!/(j_1!...j_r!)
    const std::uint32_t des = I.descent_mask();
    const int n = I.degree();
    Int total = 0;
    std::uint32_t sub = des;
    while (true) {
        const Composition J = Composition::from_descent_mask(sub, n);
        const int sign = (std::popcount(des & ~sub) % 2 == 0) ? 1 : -1;
        total += sign * descent_class_multinomial(J);
        if (sub == 0) break;
        sub = (sub - 1) & des;
    }
    return total;
}

Int ribbon_number_brute(const Composition& I) {
    const std::uint32_t des = I.descent_mask();
    Int count = 0;
    Permutation::for_each(I.degree(), [&](const Permutation& s) {
        if (s.descent_mask() == des) ++count;
    });
    return count;
}

}  // namespace ncsf
