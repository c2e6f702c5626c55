#include <doctest.h>

#include "macd/errors.hpp"
#include "macd/matinv.hpp"
#include "macd/random.hpp"

using namespace macd;

namespace {

EntryFactory corollary_A(int n) {
    return [n](std::mt19937_64& g) {
        auto p = random_A_params(n, g);
        return EntryPair{[p](const MultiIndex& m, const MultiIndex& k) { return corollary_A_f(m, k, p); },
                         [p](const MultiIndex& k, const MultiIndex& l) { return corollary_A_g(k, l, p); }, "A"};
    };
}

}  // namespace

TEST_CASE("corollary pairs are mutually inverse") {
    auto a = verify_orthogonality(corollary_A(2), 2, 3, 5, 1);
    CHECK(a.passed());
    CHECK(a.checks > 0);
    EntryFactory c = [](std::mt19937_64& g) {
        auto p = random_C_params(2, g);
        return EntryPair{[p](const MultiIndex& m, const MultiIndex& k) { return corollary_C_f(m, k, p); },
                         [p](const MultiIndex& k, const MultiIndex& l) { return corollary_C_g(k, l, p); }, "C"};
    };
    CHECK(verify_orthogonality(c, 2, 3, 5, 1).passed());
    CHECK(verify_orthogonality(corollary_A(2), 2, 0, 2, 1).passed());
}

TEST_CASE("printed C-type g is not inverse to f") {
    EntryFactory c = [](std::mt19937_64& g) {
        auto p = random_C_params(1, g);
        return EntryPair{[p](const MultiIndex& m, const MultiIndex& k) { return corollary_C_f(m, k, p); },
                         [p](const MultiIndex& k, const MultiIndex& l) { return corollary_C_g_printed(k, l, p); },
                         "C printed"};
    };
    CHECK_FALSE(verify_orthogonality(c, 1, 2, 3, 1).passed());
}

TEST_CASE("general pairs and their b -> infinity forms") {
    EntryFactory gen = [](std::mt19937_64& g) {
        auto fam = random_family(2, 3, g);
        return EntryPair{[fam](const MultiIndex& m, const MultiIndex& k) { return general_f(m, k, fam); },
                         [fam](const MultiIndex& k, const MultiIndex& l) { return general_g(k, l, fam); }, "gen"};
    };
    CHECK(verify_orthogonality(gen, 2, 3, 3, 2).passed());
    EntryFactory genC = [](std::mt19937_64& g) {
        auto fam = random_family(2, 3, g);
        return EntryPair{[fam](const MultiIndex& m, const MultiIndex& k) { return general_fC(m, k, fam); },
                         [fam](const MultiIndex& k, const MultiIndex& l) { return general_gC(k, l, fam); },
                         "genC"};
    };
    CHECK(verify_orthogonality(genC, 2, 3, 3, 2).passed());
    auto rng = rng_for(2, 0);
    auto fam = random_family(1, 4, rng);
    auto sh = shifted_family(fam);
    CHECK(diagonally_equivalent([&](int m, int k) { return kr_f1(m, k, fam); },
                                [&](int k, int l) { return kr_g1(k, l, fam); },
                                [&](int m, int k) { return kr_f2(m, k, sh); },
                                [&](int k, int l) { return kr_g2(k, l, sh); }, 4));
}

TEST_CASE("Pieri and recursion coefficient matrices are inverse") {
    EntryFactory pr = [](std::mt19937_64& g) {
        std::vector<Rational> U{draw_rational(g), draw_rational(g)};
        auto pt = draw_qt_point(g);
        return EntryPair{[=](const MultiIndex& m, const MultiIndex& k) { return pieri_matrix_entry(m, k, U, pt.q, pt.t); },
                         [=](const MultiIndex& k, const MultiIndex& l) {
                             return recursion_matrix_entry(k, l, U, pt.q, pt.t);
                         },
                         "pr"};
    };
    CHECK(verify_orthogonality(pr, 2, 3, 3, 1).passed());
}

TEST_CASE("a perturbed entry is reported with a witness") {
    EntryFactory bad = [](std::mt19937_64& g) {
        auto p = random_A_params(2, g);
        return EntryPair{[p](const MultiIndex& m, const MultiIndex& k) {
                             Rational v = corollary_A_f(m, k, p);
                             if (m == MultiIndex{1, 1} && k == MultiIndex{0, 1}) v += 1;
                             return v;
                         },
                         [p](const MultiIndex& k, const MultiIndex& l) { return corollary_A_g(k, l, p); }, "bad"};
    };
    auto rep = verify_orthogonality(bad, 2, 2, 1, 1);
    CHECK_FALSE(rep.passed());
    REQUIRE_FALSE(rep.witnesses.empty());
}

TEST_CASE("one-dimensional reductions to Bressoud's pair") {
    for (int d = 0; d < 20; ++d) {
        auto rng = rng_for(9, d);
        for (int attempt = 0; attempt < 50; ++attempt) {
            auto p = random_A_params(1, rng);
            Rational a = p.t0 * p.u[0], b = a / p.t[0];
            bool eq;
            try {
                eq = diagonally_equivalent([&](int m, int k) { return corollary_A_f({m}, {k}, p); },
                                           [&](int k, int l) { return corollary_A_g({k}, {l}, p); },
                                           [&](int m, int k) { return bressoud_f(m, k, a, b, p.q); },
                                           [&](int k, int l) { return bressoud_g(k, l, a, b, p.q); }, 4);
            } catch (const MathError&) {
                continue;
            }
            CHECK(eq);
            break;
        }
    }
}

TEST_CASE("inverse relations") {
    auto rng = rng_for(4, 0);
    AParams p;
    for (;;) {
        p = random_A_params(2, rng);
        try {
            for (const auto& m : box({0, 0}, {3, 3}))
                for (const auto& k : box({0, 0}, {3, 3})) {
                    corollary_A_f(m, k, p);
                    corollary_A_g(m, k, p);
                }
            an87_sequences(p, Rational(5, 6), Rational(-7, 3), 2, 3);
            break;
        } catch (const MathError&) {
        }
    }
    Sequence seq;
    for (const auto& k : box({0, 0}, {2, 2})) seq[k] = draw_rational(rng);
    EntryFn id = [](const MultiIndex& m, const MultiIndex& k) -> Rational { return m == k ? 1 : 0; };
    CHECK(inverse_relations_apply(SumDirection::second_index, id, seq, 2, 2) == seq);
    auto f = [&](const MultiIndex& m, const MultiIndex& k) { return corollary_A_f(m, k, p); };
    auto g = [&](const MultiIndex& k, const MultiIndex& l) { return corollary_A_g(k, l, p); };
    auto b = inverse_relations_apply(SumDirection::second_index, f, seq, 2, 2);
    CHECK(inverse_relations_apply(SumDirection::second_index, g, b, 2, 2) == seq);
    auto s = an87_sequences(p, Rational(5, 6), Rational(-7, 3), 2, 3);
    CHECK(inverse_relations_apply(SumDirection::first_index, f, s.a, 2, 3) == s.b);
    CHECK(inverse_relations_apply(SumDirection::first_index, g, s.b, 2, 3) == s.a);
}
