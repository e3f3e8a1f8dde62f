#include <doctest.h>

#include <set>

#include "relzk/subset_sum.hpp"

using namespace relzk;
using namespace relzk::ss;

namespace {

FieldElement fe(const FieldCtxPtr& c, long v) { return FieldElement(c, BigInt(v)); }

std::vector<FieldElement> fev(const FieldCtxPtr& c, std::vector<long> vals) {
    std::vector<FieldElement> out;
    for (long v : vals) out.push_back(fe(c, v));
    return out;
}

// Unsatisfiable instance via the 2^n subset-sum oracle (n small).
SubsetSumInstance random_unsat_instance(std::size_t n, const FieldCtxPtr& ctx, Rng& rng) {
    for (;;) {
        BigInt upper = (ctx->modulus() - 1) / BigInt(static_cast<unsigned long>(n));
        SubsetSumInstance inst;
        for (std::size_t i = 0; i < n; ++i) inst.s.push_back(1 + random_below(upper, rng));
        std::set<BigInt> sums;
        for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
            BigInt t = 0;
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (std::size_t{1} << i)) t += inst.s[i];
            sums.insert(t);
        }
        BigInt total = inst.sum();
        for (int attempt = 0; attempt < 32; ++attempt) {
            BigInt k = random_below(total + 1, rng);
            if (!sums.count(k)) {
                inst.k = k;
                return inst;
            }
        }
    }
}

// Answers to both challenges of one round that each verify against the same
// committed vectors: chall=0 forces the w rows, c' is then solved from the
// chall=1 equation.
struct ConsistentDoubles {
    Chall0Response chall0;
    Chall1Response chall1;
    P1Response resp1;
};

ConsistentDoubles make_consistent_doubles(const FieldCtxPtr& ctx, const SubsetSumInstance& inst,
                                          const FieldElement& a, Rng& rng) {
    ProverSharedState st = sample_shared_state(ctx, inst.size(), rng);
    P1Response resp1 = p1_respond(a, inst, st);
    std::vector<std::uint8_t> x = random_bits(inst.size(), rng);
    FieldElement selected(ctx, 0);
    for (std::size_t i = 0; i < inst.size(); ++i) {
        selected = selected + (x[i] ? resp1.w1[i] : resp1.w0[i]);
    }
    FieldElement c_sum = selected - a * FieldElement(ctx, inst.k);
    return {Chall0Response{st.z, st.c0, st.c1}, Chall1Response{x, c_sum}, resp1};
}

} // namespace

TEST_SUITE("subset_sum") {

TEST_CASE("P1 masks the two rows: worked example at Q=11") {
    auto c = FieldCtx::create(11);
    SubsetSumInstance inst{{3, 4}, 7};
    ProverSharedState st{fev(c, {1, 1}), fev(c, {2, 2}), {1, 0}};
    auto resp = p1_respond(fe(c, 2), inst, st);
    CHECK(resp.w0 == fev(c, {7, 1}));
    CHECK(resp.w1 == fev(c, {2, 10}));

    // a = 0 collapses to the keys
    auto resp0 = p1_respond(fe(c, 0), inst, st);
    CHECK(resp0.w0 == st.c0);
    CHECK(resp0.w1 == st.c1);

    // z all ones leaves the complement row unmasked: w1 = c1
    ProverSharedState ones{st.c0, st.c1, {1, 1}};
    CHECK(p1_respond(fe(c, 2), inst, ones).w1 == st.c1);

    ProverSharedState bad{fev(c, {1}), fev(c, {2, 2}), {1, 0}};
    CHECK_THROWS_AS((void)p1_respond(fe(c, 2), inst, bad), DimensionMismatch);
}

TEST_CASE("P2 reveals x = v xor z and the selected key sum") {
    auto c = FieldCtx::create(11);
    ProverSharedState st{fev(c, {1, 1}), fev(c, {2, 2}), {1, 0}};
    SubsetSumWitness wit{{1, 1}}; // 3 + 4 = 7 = k

    auto resp = p2_respond(1, wit, st);
    const auto& r1 = std::get<Chall1Response>(resp);
    CHECK(r1.x == std::vector<std::uint8_t>{0, 1});
    CHECK(r1.c_sum == fe(c, 3)); // (c0)_1 + (c1)_2 = 1 + 2

    auto resp0 = p2_respond(0, wit, st);
    const auto& r0 = std::get<Chall0Response>(resp0);
    CHECK(r0.z == st.z);
    CHECK(r0.c0 == st.c0);
    CHECK(r0.c1 == st.c1);

    // z = v cancels: x = 0, c' collapses to sum of row 0 keys
    ProverSharedState st_v{st.c0, st.c1, {1, 1}};
    const auto rv = std::get<Chall1Response>(p2_respond(1, wit, st_v));
    CHECK(rv.x == std::vector<std::uint8_t>{0, 0});
    CHECK(rv.c_sum == fe(c, 2));
}

TEST_CASE("verify_round accepts the honest worked round") {
    auto c = FieldCtx::create(11);
    SubsetSumInstance inst{{3, 4}, 7};
    SubsetSumWitness wit{{1, 1}};
    ProverSharedState st{fev(c, {1, 1}), fev(c, {2, 2}), {1, 0}};
    FieldElement a = fe(c, 2);
    auto resp1 = p1_respond(a, inst, st);

    auto resp2_1 = p2_respond(1, wit, st);
    CHECK(verify_round(a, inst, resp1, 1, resp2_1).accepted);

    auto resp2_0 = p2_respond(0, wit, st);
    CHECK(verify_round(a, inst, resp1, 0, resp2_0).accepted);

    // single-equation sensitivity: bump c'
    auto tampered = std::get<Chall1Response>(resp2_1);
    tampered.c_sum = tampered.c_sum + fe(c, 1);
    auto verdict = verify_round(a, inst, resp1, 1, P2Response{tampered});
    CHECK_FALSE(verdict.accepted);
    CHECK(verdict.reason.find("c'") != std::string::npos);

    // tamper one revealed key
    auto t0 = std::get<Chall0Response>(resp2_0);
    t0.c0[1] = t0.c0[1] + fe(c, 1);
    auto verdict0 = verify_round(a, inst, resp1, 0, P2Response{t0});
    CHECK_FALSE(verdict0.accepted);
    CHECK(verdict0.reason.find("w0[1]") != std::string::npos);

    // wrong-variant answer is rejected
    CHECK_FALSE(verify_round(a, inst, resp1, 0, resp2_1).accepted);
}

TEST_CASE("completeness: honest rounds always accept") {
    Rng rng(6021);
    for (std::size_t n : {1u, 2u, 5u, 12u, 25u}) {
        auto ctx = choose_params(n, 2, 0);
        auto [inst, wit] = generate_instance(n, ctx, rng);
        REQUIRE(check_witness(inst, wit));
        REQUIRE(inst.sum() < ctx->modulus());
        // any field with Q > sum(s) preserves completeness, including the
        // smallest one (soundness is a separate concern)
        auto minimal_ctx = choose_prime(inst.sum() + 1);
        for (const auto& c : {ctx, minimal_ctx}) {
            for (int round = 0; round < 20; ++round) {
                auto st = sample_shared_state(c, n, rng);
                FieldElement a = FieldElement::random(c, rng);
                auto resp1 = p1_respond(a, inst, st);
                std::uint8_t chall = rng.next_bit();
                auto resp2 = p2_respond(chall, wit, st);
                CHECK(verify_round(a, inst, resp1, chall, resp2).accepted);
            }
        }
    }
}

TEST_CASE("the chall=1 equation telescopes to a*sum(s_i v_i) + sum of keys") {
    auto ctx = FieldCtx::create(101);
    Rng rng(88);
    for (int t = 0; t < 100; ++t) {
        auto [inst, wit] = generate_instance(4, ctx, rng);
        auto st = sample_shared_state(ctx, 4, rng);
        FieldElement a = FieldElement::random(ctx, rng);
        auto resp1 = p1_respond(a, inst, st);
        const auto r1 = std::get<Chall1Response>(p2_respond(1, wit, st));

        FieldElement lhs(ctx, 0);
        FieldElement key_sum(ctx, 0);
        FieldElement weighted(ctx, 0);
        for (std::size_t i = 0; i < 4; ++i) {
            lhs = lhs + (r1.x[i] ? resp1.w1[i] : resp1.w0[i]);
            key_sum = key_sum + (r1.x[i] ? st.c1[i] : st.c0[i]);
            if (wit.v[i]) weighted = weighted + FieldElement(ctx, inst.s[i]);
        }
        CHECK(lhs == a * weighted + key_sum);
    }
}

TEST_CASE("extract_a recovers the worked hand trace") {
    auto c = FieldCtx::create(11);
    SubsetSumInstance inst{{2, 2}, 3};
    Chall0Response chall0{{0, 0}, fev(c, {0, 0}), fev(c, {0, 0})};
    Chall1Response chall1{{1, 0}, fe(c, 6)};
    auto got = extract_a(c, inst, chall0, chall1);
    REQUIRE(got.has_value());
    CHECK(*got == fe(c, 5));
}

TEST_CASE("extract_a returns NoConflict exactly when x xor z is a witness") {
    auto c = FieldCtx::create(101);
    Rng rng(7);
    SubsetSumInstance inst{{1, 2, 5}, 6}; // witness (1,0,1)
    SubsetSumWitness wit{{1, 0, 1}};
    REQUIRE(check_witness(inst, wit));
    for (int t = 0; t < 50; ++t) {
        auto st = sample_shared_state(c, 3, rng);
        const auto r1 = std::get<Chall1Response>(p2_respond(1, wit, st));
        CHECK_FALSE(extract_a(c, inst, Chall0Response{st.z, st.c0, st.c1}, r1).has_value());
    }
}

TEST_CASE("extraction is exact on 1000 random consistent double answers") {
    Rng rng(424242);
    auto ctx = FieldCtx::create(2099);
    int checked = 0;
    while (checked < 1000) {
        std::size_t n = 2 + rng.below(5);
        auto inst = random_unsat_instance(n, ctx, rng);
        FieldElement a = FieldElement::random(ctx, rng);
        auto doubles = make_consistent_doubles(ctx, inst, a, rng);

        // both answers really do verify against the same commitments
        REQUIRE(verify_round(a, inst, doubles.resp1, 0, P2Response{doubles.chall0}).accepted);
        REQUIRE(verify_round(a, inst, doubles.resp1, 1, P2Response{doubles.chall1}).accepted);

        auto got = extract_a(ctx, inst, doubles.chall0, doubles.chall1);
        REQUIRE(got.has_value());
        CHECK(*got == a);
        ++checked;
    }
}

TEST_CASE("choose_params meets the soundness and hiding bounds") {
    auto big = choose_params(300, 5, 0);
    CHECK(big->bit_length() == 322); // smallest prime above 64 * 2^315 = 2^321
    CHECK(big->modulus() >= BigInt(1) << 321);

    auto small = choose_params(1, 1, 0);
    CHECK(small->modulus() >= 1024);
    CHECK(small->modulus() == 1031);

    BigInt huge_sum = BigInt(1) << 400;
    auto dominated = choose_params(2, 1, huge_sum);
    CHECK(dominated->modulus() > huge_sum);
}

TEST_CASE("round_bits reproduces the efficiency formula") {
    CHECK(round_bits(300, 321.0) == 289682.5);
    CHECK(round_bits(0, 10.0) == 1.5 * 10.0 + 1);
    // affine in n
    CHECK(round_bits(100, 321.0) + round_bits(300, 321.0) == 2 * round_bits(200, 321.0));
    CHECK(round_bits(600, 321.0) < 2 * round_bits(300, 321.0));
}

TEST_CASE("rounds_needed") {
    CHECK(rounds_needed(5, 100) == 110);
    CHECK(rounds_needed(5, 0) == 0);
    CHECK(rounds_needed(60, 100) == 100); // eps -> 1/2
    CHECK(rounds_needed(2, 100) == 241);  // 0.75 per round
    CHECK_THROWS_AS((void)rounds_needed(1, 100), std::invalid_argument); // eps = 1
}

TEST_CASE("generate_instance produces valid witnessed instances") {
    auto ctx = choose_params(5, 2, 0);
    Rng rng(17);
    BigInt upper = (ctx->modulus() - 1) / 5;
    bool saw_empty = false;
    for (int t = 0; t < 200; ++t) {
        auto [inst, wit] = generate_instance(5, ctx, rng);
        CHECK(check_witness(inst, wit));
        CHECK(inst.sum() < ctx->modulus());
        for (const auto& si : inst.s) {
            CHECK(si >= 1);
            CHECK(si <= upper);
        }
        if (inst.k == 0) saw_empty = true;
    }
    CHECK(saw_empty); // the empty subset is allowed and does occur

    for (int t = 0; t < 200; ++t) {
        auto [inst, wit] = generate_instance(3, ctx, rng, /*nonempty_subset=*/true);
        CHECK(inst.k > 0);
    }

    // determinism under a fixed seed
    Rng r1(5), r2(5);
    auto [i1, w1] = generate_instance(8, ctx, r1);
    auto [i2, w2] = generate_instance(8, ctx, r2);
    CHECK(i1.s == i2.s);
    CHECK(i1.k == i2.k);
    CHECK(w1.v == w2.v);
}

} // TEST_SUITE
