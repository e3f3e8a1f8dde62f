#include <doctest.h>

#include <cmath>

#include "relzk/games.hpp"

using namespace relzk;
using namespace relzk::games;

namespace {

// Joint enumeration over both strategy spaces, with no best-response
// shortcut. Deliberately a different route than omega_classical.
Rational oracle_value(const FiniteGame& g) {
    std::vector<std::size_t> fa(g.alice_inputs(), 0), fb(g.bob_inputs(), 0);
    std::int64_t best = 0;
    auto step = [](std::vector<std::size_t>& f, std::size_t radix) {
        std::size_t i = 0;
        while (i < f.size() && ++f[i] == radix) f[i++] = 0;
        return i < f.size();
    };
    do {
        std::fill(fb.begin(), fb.end(), 0);
        do {
            std::int64_t wins = 0;
            for (std::size_t x = 0; x < g.alice_inputs(); ++x)
                for (std::size_t y = 0; y < g.bob_inputs(); ++y)
                    wins += g.win(x, y, fa[x], fb[y]) ? 1 : 0;
            best = std::max(best, wins);
        } while (step(fb, g.bob_outputs()));
    } while (step(fa, g.alice_outputs()));
    return Rational(best, static_cast<std::int64_t>(g.alice_inputs() * g.bob_inputs()));
}

FiniteGame constant_game(std::size_t ia, std::size_t ib, std::size_t oa, std::size_t ob, bool v) {
    FiniteGame g(ia, ib, oa, ob);
    for (std::size_t x = 0; x < ia; ++x)
        for (std::size_t y = 0; y < ib; ++y)
            for (std::size_t a = 0; a < oa; ++a)
                for (std::size_t b = 0; b < ob; ++b) g.set_win(x, y, a, b, v);
    return g;
}

} // namespace

TEST_SUITE("games") {

TEST_CASE("constant games") {
    CHECK(omega_classical(constant_game(2, 2, 2, 2, true)) == Rational(1));
    CHECK(omega_classical(constant_game(2, 2, 2, 2, false)) == Rational(0));
    CHECK(projectivity(constant_game(2, 2, 2, 3, true)) == 3);
    CHECK(projectivity(constant_game(2, 2, 2, 3, false)) == 0);
}

TEST_CASE("CHSH classical value is 3/4") {
    auto g = chsh();
    CHECK(omega_classical(g) == Rational(3, 4));
    CHECK(oracle_value(g) == Rational(3, 4));
    CHECK(projectivity(g) == 1); // parity pins Bob's winning answer
}

TEST_CASE("CHSH coup value is 1/2") {
    auto coup = build_coupled(chsh());
    CHECK(coup.bob_inputs.size() == 2);
    CHECK(omega_classical(coup.game) == Rational(1, 2));
    CHECK(oracle_value(coup.game) == Rational(1, 2));
    CHECK(check_coupling_bound(chsh())); // 2*(3/4) - 1 = 1/2 <= 1/2, tight here
}

TEST_CASE("coup input combinatorics") {
    FiniteGame g3(2, 3, 2, 2);
    CHECK(build_coupled(g3).bob_inputs.size() == 6);
    FiniteGame g1(2, 1, 2, 2);
    CHECK_THROWS_AS((void)build_coupled(g1), std::invalid_argument);
}

TEST_CASE("omega agrees with the joint-enumeration oracle on random games") {
    Rng rng(31);
    for (int t = 0; t < 100; ++t) {
        auto g = random_binary_game(rng);
        CHECK(omega_classical(g) == oracle_value(g));
        auto coup = build_coupled(g);
        CHECK(omega_classical(coup.game) == oracle_value(coup.game));
    }
}

TEST_CASE("omega is invariant under alphabet relabeling") {
    Rng rng(77);
    for (int t = 0; t < 50; ++t) {
        auto g = random_binary_game(rng);
        // swap Alice's outputs and Bob's inputs
        FiniteGame h(2, 2, 2, 2);
        for (std::size_t x = 0; x < 2; ++x)
            for (std::size_t y = 0; y < 2; ++y)
                for (std::size_t a = 0; a < 2; ++a)
                    for (std::size_t b = 0; b < 2; ++b)
                        h.set_win(x, 1 - y, 1 - a, b, g.win(x, y, a, b));
        CHECK(omega_classical(g) == omega_classical(h));
    }
}

TEST_CASE("rewinding: coup value of the lifted strategy") {
    // optimal CHSH strategy: everyone answers 0; wins unless x=y=1
    auto g = chsh();
    auto coup = build_coupled(g);
    DetStrategy zeros{{0, 0}, {0, 0}};
    CHECK(evaluate_strategy(g, zeros) == Rational(3, 4));
    CHECK(evaluate_strategy(coup.game, rewind_strategy(zeros, coup)) >= Rational(1, 2));

    auto ones = constant_game(2, 2, 2, 2, true);
    auto coup1 = build_coupled(ones);
    CHECK(evaluate_strategy(coup1.game, rewind_strategy(zeros, coup1)) == Rational(1));

    // the Prop-2 proof inequality holds strategy-wise on random games
    Rng rng(13);
    for (int t = 0; t < 200; ++t) {
        auto rg = random_binary_game(rng);
        auto rcoup = build_coupled(rg);
        DetStrategy s{{rng.below(2), rng.below(2)}, {rng.below(2), rng.below(2)}};
        Rational v = evaluate_strategy(rg, s);
        CHECK(evaluate_strategy(rcoup.game, rewind_strategy(s, rcoup)) >= 2 * v - 1);
    }
}

TEST_CASE("Proposition 2 holds on 500 random binary games") {
    Rng rng(2023);
    int pass = 0;
    for (int t = 0; t < 500; ++t) {
        if (check_coupling_bound(random_binary_game(rng))) ++pass;
    }
    CHECK(pass == 500);
}

TEST_CASE("coup of an S-projective game is at most S^2-projective") {
    Rng rng(40);
    for (int t = 0; t < 50; ++t) {
        auto g = random_binary_game(rng);
        std::size_t s = projectivity(g);
        CHECK(projectivity(build_coupled(g).game) <= s * s);
    }
}

TEST_CASE("coupling_value_bound reproduces the soundness shape") {
    // S = 2^n, omega_coup <= 1/Q, |I_B| = 2  ->  1/2 + (64 * 2^n / Q)^(1/3)
    BigInt s = BigInt(1) << 10;
    BigInt q = BigInt(1) << 30;
    double expected = 0.5 + std::cbrt(64.0 * 1024.0 / std::exp2(30));
    CHECK(coupling_value_bound(s, 2, 1, q) == doctest::Approx(expected).epsilon(1e-12));

    // perfect coupling impossibility
    CHECK(coupling_value_bound(s, 2, 0, 1) == doctest::Approx(0.5));
    CHECK(coupling_value_bound(s, 3, 0, 1) == doctest::Approx(1.0 / 3.0));

    // Q = 64 * 2^(n+3K)  ->  1/2 + 2^-K, including 2^300-scale instances
    for (int n : {5, 300}) {
        for (int k : {1, 5, 10}) {
            BigInt sn = BigInt(1) << n;
            BigInt qn = BigInt(64) << (n + 3 * k);
            CHECK(coupling_value_bound(sn, 2, 1, qn) ==
                  doctest::Approx(0.5 + std::exp2(-k)).epsilon(1e-9));
        }
    }
}

TEST_CASE("strategy-space guard") {
    FiniteGame big(24, 2, 2, 2); // 2^24 * 4 pairs
    CHECK_THROWS_AS((void)omega_classical(big), SizeGuardExceeded);
}

} // TEST_SUITE
