#include <random>

#include "doctest.h"
#include "ncsf/multipoly.hpp"

using namespace ncsf;

namespace {

MultiPoly q_power(int k, Truncation t = Truncation::none()) {
    return MultiPoly::variable(Var::q, k, t);
}

MultiPoly random_poly(std::mt19937_64& rng, const Truncation& t) {
    MultiPoly f(t);
    const int terms = 1 + static_cast<int>(rng() % 5);
    for (int k = 0; k < terms; ++k) {
        Monomial m = kUnitMonomial;
        m[static_cast<int>(Var::q)] = static_cast<int>(rng() % 4);
        m[static_cast<int>(Var::t)] = static_cast<int>(rng() % 3);
        const int num = static_cast<int>(rng() % 9) - 4;
        const int den = 1 + static_cast<int>(rng() % 3);
        f += MultiPoly::monomial(m, Rational(num, den), t);
    }
    return f;
}

}  // namespace

TEST_CASE("exact ring arithmetic") {
    const MultiPoly one = MultiPoly::one();
    CHECK((one + q_power(1)) * (one - q_power(1)) == one - q_power(2));

    // [3]_q * (1-q) telescopes to 1 - q^3
    const MultiPoly bracket3 = one + q_power(1) + q_power(2);
    CHECK(bracket3 * (one - q_power(1)) == one - q_power(3));
}

TEST_CASE("truncation drops overflowing terms eagerly") {
    const Truncation t = Truncation::cap(Var::q, 1);
    const MultiPoly f = MultiPoly::one(t) + q_power(1, t);
    CHECK(f * f == MultiPoly::one(t) + q_power(1, t) * Rational(2));

    // merging truncations takes the pointwise minimum
    const MultiPoly g = MultiPoly::one() + q_power(2);
    CHECK((f + g).truncation().at(Var::q) == 1);
    CHECK((f + g).coeff_of(Var::q, 2).is_zero());
}

TEST_CASE("geometric inverse") {
    const Truncation q3 = Truncation::cap(Var::q, 3);
    const MultiPoly f = MultiPoly::one(q3) - q_power(1, q3);
    CHECK(geometric_inverse(f) ==
          MultiPoly::one(q3) + q_power(1, q3) + q_power(2, q3) + q_power(3, q3));

    CHECK(geometric_inverse(MultiPoly::one(q3)) == MultiPoly::one(q3));

    // 1/(q;q)_2 counts partitions into parts <= 2
    const Truncation q4 = Truncation::cap(Var::q, 4);
    const MultiPoly poch2 = qpochhammer(2).with_truncation(q4);
    MultiPoly expected = MultiPoly::one(q4);
    expected += q_power(1, q4);
    expected += q_power(2, q4) * Rational(2);
    expected += q_power(3, q4) * Rational(2);
    expected += q_power(4, q4) * Rational(3);
    CHECK(geometric_inverse(poch2) == expected);

    CHECK_THROWS_AS(geometric_inverse(q_power(1, q3)), std::domain_error);
    // untruncated non-constant series cannot be inverted by expansion
    CHECK_THROWS_AS(geometric_inverse(MultiPoly::one() - MultiPoly::variable(Var::t)),
                    std::domain_error);
}

TEST_CASE("ring axioms and inverse property on random truncated polynomials") {
    std::mt19937_64 rng(12345);
    const Truncation t = Truncation::cap(Var::q, 5).with(Var::t, 4);
    for (int k = 0; k < 60; ++k) {
        const MultiPoly a = random_poly(rng, t);
        const MultiPoly b = random_poly(rng, t);
        const MultiPoly c = random_poly(rng, t);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
    }
    int inverted = 0;
    for (int k = 0; k < 200 && inverted < 100; ++k) {
        MultiPoly f = random_poly(rng, t);
        f -= MultiPoly::constant(f.constant_term(), t);
        f += MultiPoly::one(t);  // force a unit constant term
        CHECK(f * geometric_inverse(f) == MultiPoly::one(t));
        ++inverted;
    }
    CHECK(inverted == 100);
}

TEST_CASE("rendering") {
    CHECK(MultiPoly().to_string() == "0");
    CHECK(MultiPoly::one().to_string() == "1");
    const MultiPoly f =
        MultiPoly::one() - q_power(2) + MultiPoly::variable(Var::t) * q_power(1) * Rational(3, 2);
    CHECK(f.to_string() == "1 - q^2 + 3/2*t*q");  // exponent-lex over (t,q,p,x,y,z)
    CHECK(MultiPoly::monomial({0, 2, 0, 0, 0, 0}, 1).to_string() == "q^2");
}
