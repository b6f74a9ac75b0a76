#include "ncsf/verify.hpp"

#include <functional>
#include <random>
#include <sstream>

#include "ncsf/polyomino.hpp"
#include "ncsf/qsym.hpp"
#include "ncsf/specialize.hpp"
#include "ncsf/tensor.hpp"
#include "ncsf/theta.hpp"

namespace ncsf {

namespace {

// --- seeded generators ------------------------------------------------------

Composition random_composition(std::mt19937_64& rng, int n) {
    if (n == 0) return {};
    const std::uint32_t full = n >= 1 ? (1u << (n - 1)) - 1u : 0u;
    return Composition::from_descent_mask(static_cast<std::uint32_t>(rng()) & full, n);
}

MultiPoly random_coeff(std::mt19937_64& rng) {
    // small integers, occasionally times t
    const int v = static_cast<int>(rng() % 7) - 3;
    MultiPoly c = MultiPoly::constant(v == 0 ? 1 : v);
    if (rng() % 4 == 0) c *= MultiPoly::variable(Var::t);
    return c;
}

NsymElement random_element(std::mt19937_64& rng, Basis b, int max_deg, int terms) {
    NsymElement f(b);
    for (int k = 0; k < terms; ++k) {
        const int n = static_cast<int>(rng() % (max_deg + 1));
        f.add_term(random_composition(rng, n), random_coeff(rng));
    }
    return f;
}

// Sum over pairs (H, K) of n with Des(H) cap Des(K) = 0 of R_H (x) f(K).
TensorElement disjoint_descent_sum(int n, const std::function<Composition(const Composition&)>& f) {
    TensorElement out;
    const std::uint32_t count = n >= 1 ? 1u << (n - 1) : 1u;
    for (std::uint32_t h = 0; h < count; ++h)
        for (std::uint32_t k = 0; k < count; ++k) {
            if ((h & k) != 0) continue;
            out.add_term(Composition::from_descent_mask(h, n),
                         f(Composition::from_descent_mask(k, n)), MultiPoly::one());
        }
    return out;
}

TensorElement alternating_diagonal(int max_n, bool omega_side) {
    // sum_k (-1)^k Lambda_k (x) Lambda_k, or with S_k on the B side.
    TensorElement out;
    for (int k = 0; k <= max_n; ++k) {
        const Composition col = Composition(std::vector<int>(k, 1));
        const Composition row = k == 0 ? Composition() : Composition({k});
        out.add_term(col, omega_side ? row : col,
                     MultiPoly::constant(k % 2 == 0 ? 1 : -1));
    }
    return out;
}

std::string compare_note(const std::string& what, int n) {
    std::ostringstream os;
    os << what << " at n=" << n;
    return os.str();
}

// --- individual checks ------------------------------------------------------

CheckResult check_gamma_morphism(const VerifyConfig& cfg) {
    CheckResult r{"gamma-morphism", "gamma_meet is multiplicative on S-generator pairs", true, ""};
    for (int a = 1; a <= cfg.max_n; ++a) {
        for (int b = 1; a + b <= cfg.max_n; ++b) {
            const NsymElement sa = NsymElement::term(Basis::S, Composition({a}));
            const NsymElement sb = NsymElement::term(Basis::S, Composition({b}));
            if (!(gamma_meet(sa * sb) == gamma_meet(sa) * gamma_meet(sb))) {
                r.pass = false;
                r.detail = compare_note("product pair", a * 10 + b);
            }
        }
    }
    return r;
}

CheckResult check_inversion_formula(const VerifyConfig& cfg) {
    CheckResult r{"inversion-formula",
                  "inverse of the alternating diagonal equals the disjoint-descent sum", true, ""};
    const TensorElement inv =
        tensor_invert(alternating_diagonal(cfg.max_n, false), cfg.max_n, cfg.max_n);
    for (int n = 1; n <= cfg.max_n; ++n) {
        const TensorElement expected =
            disjoint_descent_sum(n, [](const Composition& k) { return k; });
        if (!(inv.bicomponent(n, n) == expected)) {
            r.pass = false;
            r.detail = compare_note("bidegree", n);
        }
    }
    return r;
}

CheckResult check_twisted_inversion(const VerifyConfig& cfg) {
    CheckResult r{"inversion-twisted",
                  "omega on the second factor of the inverse gives the conjugate-indexed sum",
                  true, ""};
    // The literal orientation ((sum (-1)^k Lambda_k (x) S_k)^{-1} equals the
    // R_H (x) R_{K~} sum) fails from n=3 on; the reading that holds applies
    // omega to the second factor of the untwisted inverse. Both are evaluated;
    // the report records which one certified the conjugate recipe.
    const TensorElement inv_untwisted =
        tensor_invert(alternating_diagonal(cfg.max_n, false), cfg.max_n, cfg.max_n);
    const TensorElement inv_literal =
        tensor_invert(alternating_diagonal(cfg.max_n, true), cfg.max_n, cfg.max_n);
    bool literal_ok = true, applied_ok = true;
    for (int n = 1; n <= cfg.max_n; ++n) {
        const TensorElement expected =
            disjoint_descent_sum(n, [](const Composition& k) { return k.conjugate(); });
        if (!(inv_literal.bicomponent(n, n) == expected)) literal_ok = false;
        if (!(apply_second(inv_untwisted.bicomponent(n, n), SecondOp::omega) == expected))
            applied_ok = false;
    }
    r.pass = applied_ok;
    r.detail = literal_ok ? "both orientations hold"
                          : "holds as omega applied to the inverse; the literal "
                            "inverse-of-twisted-series orientation fails from n=3";
    return r;
}

CheckResult check_ribbon_embedding(const VerifyConfig& cfg) {
    CheckResult r{"ribbon-embedding", "j_embed(R_K) equals the descent-difference sum", true, ""};
    for (int n = 1; n <= cfg.max_n; ++n) {
        for (const Composition& K : compositions_of(n)) {
            if (!(j_embed(NsymElement::term(Basis::R, K)) == ribbon_image(K))) {
                r.pass = false;
                r.detail = "K=" + K.to_string();
            }
        }
    }
    return r;
}

CheckResult check_csv_a(const VerifyConfig& cfg) {
    CheckResult r{"csv-pairs-a", "subset-descent pair counts agree across three routes", true, ""};
    for (int n = 0; n <= cfg.pair_oracle_n; ++n) {
        const CsvA a = csv_a(n, cfg.pair_oracle_n);
        if (!a.agree()) {
            r.pass = false;
            r.detail = compare_note("triple agreement", n);
        }
        if ((n == 2 && a.brute != 3) || (n == 3 && a.brute != 19)) {
            r.pass = false;
            r.detail = compare_note("anchor value", n);
        }
    }
    return r;
}

CheckResult check_csv_c(const VerifyConfig& cfg) {
    CheckResult r{"csv-pairs-c", "fixed-last-value pair counts match the derivation series", true, ""};
    for (int n = 1; n <= cfg.pair_oracle_n; ++n) {
        const CsvC c = csv_c(n, cfg.pair_oracle_n);
        if (!c.agree()) {
            r.pass = false;
            r.detail = compare_note("pair agreement", n);
        }
        // c_3 = 4: both routes agree; the descent classes below beta = 213
        // are {123, 213, 312}.
        if ((n == 2 && c.brute != 1) || (n == 3 && c.brute != 4)) {
            r.pass = false;
            r.detail = compare_note("anchor value", n);
        }
    }
    return r;
}

CheckResult check_classical_bessel(const VerifyConfig&) {
    CheckResult r{"classical-bessel", "tensor specialization reproduces the Taylor series of J_nu(2x)",
                  true, ""};
    for (int nu = 0; nu <= 2; ++nu) {
        if (!(classical_bessel(nu, 12) == classical_bessel_via_tensor(nu, 12))) {
            r.pass = false;
            r.detail = compare_note("order 12, nu", nu);
        }
    }
    return r;
}

CheckResult check_koszul(const VerifyConfig& cfg) {
    CheckResult r{"carlitz-koszul", "alternating theta convolution vanishes for random relations",
                  true, ""};
    std::mt19937_64 rng(cfg.seed);
    for (int k = 0; k < cfg.random_relations; ++k) {
        const int m = 2 + static_cast<int>(rng() % 3);  // 2..4 letters
        const Relation th = Relation::random(m, rng());
        for (int n = 1; n <= cfg.theta_len; ++n) {
            if (!koszul_check(n, th)) {
                r.pass = false;
                r.detail = compare_note("relation index", k);
            }
        }
    }
    return r;
}

CheckResult check_theta_eulerian(const VerifyConfig& cfg) {
    CheckResult r{"theta-eulerian",
                  "adjacency enumeration equals the closed form, with the ending restriction",
                  true, ""};
    std::mt19937_64 rng(cfg.seed + 1);
    std::vector<Relation> rels = {Relation::greater(cfg.theta_letters),
                                  Relation::geq(cfg.theta_letters),
                                  Relation::equal(cfg.theta_letters)};
    for (int k = 0; k < 10; ++k) rels.push_back(Relation::random(cfg.theta_letters, rng()));
    for (size_t k = 0; k < rels.size(); ++k) {
        for (int n = 1; n <= cfg.theta_len; ++n) {
            try {
                theta_eulerian(n, rels[k]);
            } catch (const VerificationError&) {
                r.pass = false;
                r.detail = compare_note("closed form, relation", static_cast<int>(k));
            }
            if (!theta_ending_check(n, rels[k], {0})) {
                r.pass = false;
                r.detail = compare_note("ending restriction, relation", static_cast<int>(k));
            }
        }
    }
    return r;
}

CheckResult check_theta_maj(const VerifyConfig& cfg) {
    CheckResult r{"theta-maj", "theta-maj enumeration equals (q)_n times the ordered sigma product",
                  true, ""};
    std::mt19937_64 rng(cfg.seed + 2);
    std::vector<Relation> rels = {Relation::greater(cfg.theta_letters),
                                  Relation::geq(cfg.theta_letters)};
    for (int k = 0; k < 5; ++k) rels.push_back(Relation::random(cfg.theta_letters, rng()));
    for (size_t k = 0; k < rels.size(); ++k) {
        for (int n = 1; n <= 4; ++n) {
            try {
                theta_maj(n, rels[k], cfg.q_order);
            } catch (const VerificationError&) {
                r.pass = false;
                r.detail = compare_note("relation", static_cast<int>(k));
            }
        }
    }
    return r;
}

CheckResult check_double_eulerian(const VerifyConfig& cfg) {
    CheckResult r{"double-eulerian",
                  "biword enumeration equals the J_0 ratio and the descent identity holds",
                  true, ""};
    const BiAlphabet ab{3, 3};
    for (int n = 1; n <= 4; ++n) {
        try {
            double_eulerian(n, ab);
        } catch (const VerificationError& e) {
            r.pass = false;
            r.detail = e.what();
        }
    }
    // exponential specialization against the pair statistic
    for (int n = 0; n <= std::min(cfg.pair_oracle_n, 4); ++n) {
        if (!(double_eulerian_exponential(n) == desris_distribution(n))) {
            r.pass = false;
            r.detail = compare_note("exponential cross-check", n);
        }
    }
    return r;
}

CheckResult check_fr_series(const VerifyConfig& cfg) {
    CheckResult r{"fr-series", "five-parameter double series agree coefficientwise", true, ""};
    for (int n = 0; n <= cfg.fr_n; ++n) {
        const FrCheck c = fr_check(cfg.fr_ij, cfg.fr_ij, n,
                                   std::max(cfg.q_order, n * cfg.fr_ij),
                                   std::max(cfg.p_order, n * cfg.fr_ij));
        if (!c.first_ok || !c.second_ok) {
            r.pass = false;
            r.detail = compare_note("series", n);
        }
        if (n >= 1 && c.second_plain_ok != c.second_ok)
            r.detail = "second series holds with the shifted (py)^j bookkeeping; "
                       "the unshifted Pochhammer variant differs";
    }
    return r;
}

CheckResult check_polyomino_series(const VerifyConfig& cfg) {
    CheckResult r{"polyomino-series", "heap series equals geometric enumeration by width/height/area",
                  true, ""};
    const MultiPoly series = polyomino_series(cfg.poly_width, cfg.poly_area, cfg.poly_area);

    // width-1 slice pins the height offset: x^1 coefficient = sum_h y^{h-1} q^h
    MultiPoly width1;
    for (int h = 1; h <= cfg.poly_area; ++h) {
        Monomial m = kUnitMonomial;
        m[static_cast<int>(Var::y)] = h - 1;
        m[static_cast<int>(Var::q)] = h;
        width1 += MultiPoly::monomial(m, 1);
    }
    if (!(series.coeff_of(Var::x, 1) == width1)) {
        r.pass = false;
        r.detail = "width-1 slice mismatch";
        return r;
    }

    MultiPoly expected = MultiPoly::one(series.truncation());
    for (const PolyominoStats& s : enumerate_polyominoes(cfg.poly_width, cfg.poly_area)) {
        Monomial m = kUnitMonomial;
        m[static_cast<int>(Var::x)] = s.width;
        m[static_cast<int>(Var::y)] = s.height - 1;  // the offset held fixed
        m[static_cast<int>(Var::q)] = s.area;
        expected += MultiPoly::monomial(m, 1, series.truncation());
    }
    if (!(series == expected)) {
        r.pass = false;
        r.detail = "full series mismatch";
    }
    return r;
}

CheckResult check_heaps(const VerifyConfig& cfg) {
    CheckResult r{"heap-normal-form",
                  "every commutation class has exactly one staircase representative", true, ""};
    for (int n = 1; n <= cfg.heap_len; ++n) {
        if (!heap_uniqueness_check(n, cfg.heap_max_j)) {
            r.pass = false;
            r.detail = compare_note("length", n);
        }
    }
    for (int n = 1; n <= 4; ++n) {
        if (!cartier_foata_check(n, cfg.heap_max_j)) {
            r.pass = false;
            r.detail = compare_note("cartier-foata", n);
        }
    }
    return r;
}

CheckResult check_structural(const VerifyConfig& cfg) {
    CheckResult r{"structural",
                  "round-trips, product rules, derivation, omega and lattice laws", true, ""};
    std::mt19937_64 rng(cfg.seed + 3);
    auto fail = [&](const std::string& what) {
        r.pass = false;
        r.detail = what;
    };

    // basis-conversion round trips, degrees <= 7
    for (int k = 0; k < 40; ++k) {
        const Basis bases[3] = {Basis::S, Basis::L, Basis::R};
        const Basis from = bases[rng() % 3], via = bases[rng() % 3];
        const NsymElement f = random_element(rng, from, 7, 4);
        if (!(convert(convert(f, via), from) == f)) fail("conversion round-trip");
    }
    // ribbon product rule against the S-basis product, degrees <= 6
    for (int k = 0; k < 25; ++k) {
        const NsymElement f = random_element(rng, Basis::R, 3, 3);
        const NsymElement g = random_element(rng, Basis::R, 3, 3);
        const NsymElement lhs = f * g;
        const NsymElement rhs = convert(convert(f, Basis::S) * convert(g, Basis::S), Basis::R);
        if (!(lhs == rhs)) fail("ribbon product vs S product");
    }
    // Leibniz rule for the right derivation, degrees <= 5
    for (int k = 0; k < 25; ++k) {
        const NsymElement f = random_element(rng, Basis::S, 5, 3);
        const NsymElement g = random_element(rng, Basis::S, 5, 3);
        const NsymElement lhs = partial_right(f * g);
        const NsymElement rhs =
            f * partial_right(g) + partial_right(f) * NsymElement::unit(Basis::S, g.coeff(Composition()));
        if (!(lhs == rhs)) fail("Leibniz rule");
    }
    // omega: involution, anti-automorphism, and the conjugate rule on ribbons
    for (int k = 0; k < 25; ++k) {
        const NsymElement f = random_element(rng, Basis::S, 5, 3);
        const NsymElement g = random_element(rng, Basis::S, 5, 3);
        if (!(omega(omega(f)) == f)) fail("omega involution");
        if (!(omega(f * g) == omega(g) * omega(f))) fail("omega anti-automorphism");
    }
    for (int n = 0; n <= cfg.max_n; ++n) {
        for (const Composition& I : compositions_of(n)) {
            if (!(omega(NsymElement::term(Basis::R, I)) ==
                  NsymElement::term(Basis::R, I.conjugate())))
                fail("omega on ribbons vs conjugate");
        }
    }
    // internal-product lattice laws with units, n <= 6
    for (int n = 1; n <= cfg.max_n; ++n) {
        const auto all = compositions_of(n);
        const Composition ones = Composition(std::vector<int>(n, 1));
        const Composition row({n});
        for (int k = 0; k < 30; ++k) {
            const Composition& a = all[rng() % all.size()];
            const Composition& b = all[rng() % all.size()];
            const Composition& c = all[rng() % all.size()];
            const QsymElement fa = QsymElement::term(QBasis::F, a);
            const QsymElement fb = QsymElement::term(QBasis::F, b);
            const QsymElement fc = QsymElement::term(QBasis::F, c);
            for (DescentOp op : {DescentOp::meet, DescentOp::join}) {
                if (!(internal_product(fa, fb, op) == internal_product(fb, fa, op)))
                    fail("internal product commutativity");
                if (!(internal_product(internal_product(fa, fb, op), fc, op) ==
                      internal_product(fa, internal_product(fb, fc, op), op)))
                    fail("internal product associativity");
                if (!(internal_product(fa, fa, op) == fa)) fail("internal product idempotence");
            }
            if (!(internal_product(fa, QsymElement::term(QBasis::F, ones), DescentOp::meet) == fa))
                fail("meet unit");
            if (!(internal_product(fa, QsymElement::term(QBasis::F, row), DescentOp::join) == fa))
                fail("join unit");
        }
    }
    return r;
}

}  // namespace

std::vector<CheckResult> run_verify_all(const VerifyConfig& cfg) {
    std::vector<CheckResult> out;
    out.push_back(check_gamma_morphism(cfg));
    out.push_back(check_inversion_formula(cfg));
    out.push_back(check_twisted_inversion(cfg));
    out.push_back(check_ribbon_embedding(cfg));
    out.push_back(check_csv_a(cfg));
    out.push_back(check_csv_c(cfg));
    out.push_back(check_classical_bessel(cfg));
    out.push_back(check_koszul(cfg));
    out.push_back(check_theta_eulerian(cfg));
    out.push_back(check_theta_maj(cfg));
    out.push_back(check_double_eulerian(cfg));
    out.push_back(check_fr_series(cfg));
    out.push_back(check_polyomino_series(cfg));
    out.push_back(check_heaps(cfg));
    out.push_back(check_structural(cfg));
    return out;
}

}  // namespace ncsf
