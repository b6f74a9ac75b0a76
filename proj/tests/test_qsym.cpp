#include <random>

#include "doctest.h"
#include "ncsf/qsym.hpp"
#include "ncsf/tensor.hpp"

using namespace ncsf;

namespace {

Composition C(std::vector<int> parts) { return Composition(std::move(parts)); }
QsymElement F(std::vector<int> p) { return QsymElement::term(QBasis::F, C(std::move(p))); }
QsymElement M(std::vector<int> p) { return QsymElement::term(QBasis::M, C(std::move(p))); }

}  // namespace

TEST_CASE("M/F conversions") {
    CHECK(convert_q(F({2}), QBasis::M) == M({2}) + M({1, 1}));
    CHECK(convert_q(M({2}), QBasis::F) == F({2}) - F({1, 1}));
    CHECK(convert_q(F({1, 1}), QBasis::M) == M({1, 1}));
    for (int n = 0; n <= 7; ++n)
        for (const Composition& I : compositions_of(n)) {
            const QsymElement f = QsymElement::term(QBasis::F, I);
            CHECK(convert_q(convert_q(f, QBasis::M), QBasis::F) == f);
        }
}

TEST_CASE("internal products act on descent sets") {
    CHECK(internal_product(F({2, 1}), F({1, 2}), DescentOp::meet) == F({3}));
    CHECK(internal_product(F({2, 1}), F({1, 2}), DescentOp::join) == F({1, 1, 1}));
    CHECK(internal_product(F({1, 1}), F({2}), DescentOp::meet) == F({2}));
    // cross-degree terms vanish
    CHECK(internal_product(F({2}), F({3}), DescentOp::meet).is_zero());

    for (int n = 1; n <= 6; ++n) {
        const QsymElement unit_meet = QsymElement::term(QBasis::F, C(std::vector<int>(n, 1)));
        const QsymElement unit_join = F({n});
        for (const Composition& I : compositions_of(n)) {
            const QsymElement f = QsymElement::term(QBasis::F, I);
            CHECK(internal_product(f, unit_meet, DescentOp::meet) == f);
            CHECK(internal_product(f, unit_join, DescentOp::join) == f);
        }
    }
}

TEST_CASE("concatenation product") {
    CHECK(concat_product(F({2}), F({1})) == F({2, 1}));
    CHECK(concat_product(QsymElement::term(QBasis::F, C({})), F({3, 1})) == F({3, 1}));
    CHECK(concat_product(F({1}), F({1})) == F({1, 1}));
}

TEST_CASE("duality pairing") {
    CHECK(pairing(NsymElement::term(Basis::R, C({2, 1})), F({2, 1})) == MultiPoly::one());
    CHECK(pairing(NsymElement::term(Basis::R, C({2, 1})), F({3})).is_zero());
    CHECK(pairing(NsymElement::term(Basis::S, C({2, 1})), F({2, 1})) == MultiPoly::one());
    // <S^I, M_J> = delta
    for (const Composition& I : compositions_of(4))
        for (const Composition& J : compositions_of(4)) {
            const MultiPoly v =
                pairing(NsymElement::term(Basis::S, I), QsymElement::term(QBasis::M, J));
            CHECK(v == (I == J ? MultiPoly::one() : MultiPoly()));
        }
}

TEST_CASE("pairing is invariant under the triangular conversions") {
    std::mt19937_64 rng(23);
    for (int k = 0; k < 30; ++k) {
        const int n = static_cast<int>(rng() % 5) + 1;
        const auto all = compositions_of(n);
        NsymElement f(Basis::R);
        QsymElement g(QBasis::F);
        for (int j = 0; j < 3; ++j) {
            f.add_term(all[rng() % all.size()],
                       MultiPoly::constant(static_cast<int>(rng() % 5) - 2));
            g.add_term(all[rng() % all.size()],
                       MultiPoly::constant(static_cast<int>(rng() % 5) - 2));
        }
        CHECK(pairing(f, g) == pairing(convert(f, Basis::S), convert_q(g, QBasis::M)));
        CHECK(pairing(f, g) == pairing(convert(f, Basis::L), g));
    }
}

TEST_CASE("coproduct duality: <gamma(F), G (x) H> = <F, G ^ H>") {
    std::mt19937_64 rng(29);
    for (int n = 1; n <= 5; ++n) {
        const auto all = compositions_of(n);
        for (int k = 0; k < 10; ++k) {
            const Composition& i = all[rng() % all.size()];
            const Composition& g = all[rng() % all.size()];
            const Composition& h = all[rng() % all.size()];
            const NsymElement f = NsymElement::term(Basis::R, i);
            const QsymElement fg = QsymElement::term(QBasis::F, g);
            const QsymElement fh = QsymElement::term(QBasis::F, h);
            const MultiPoly lhs = tensor_pairing(gamma_meet(f), fg, fh);
            const MultiPoly rhs = pairing(f, internal_product(fg, fh, DescentOp::meet));
            CHECK(lhs == rhs);
        }
    }
}
