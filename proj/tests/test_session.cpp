#include <doctest.h>

#include "relzk/session.hpp"

using namespace relzk;
using namespace relzk::session;

namespace {

SubsetSumProtocol small_ss_protocol(std::uint64_t seed, std::size_t n = 5,
                                    ss::SubsetSumWitness* wit_out = nullptr) {
    auto ctx = ss::choose_params(n, 2, 0);
    Rng rng(seed);
    auto [inst, wit] = ss::generate_instance(n, ctx, rng, true);
    if (wit_out) *wit_out = wit;
    return SubsetSumProtocol(ctx, inst);
}

sat::Cnf3 demo_formula() {
    return sat::Cnf3{5,
                     {sat::Clause{sat::Literal{3, false}, sat::Literal{2, true},
                                  sat::Literal{5, false}},
                      sat::Clause{sat::Literal{1, true}, sat::Literal{4, true},
                                  sat::Literal{5, true}},
                      sat::Clause{sat::Literal{1, false}, sat::Literal{2, true},
                                  sat::Literal{5, false}},
                      sat::Clause{sat::Literal{1, false}, sat::Literal{4, false},
                                  sat::Literal{2, false}}}};
}

// P1 that tries to talk to the wrong verifier
class CrossChannelP1 : public ProverOneParty<SubsetSumProtocol> {
public:
    explicit CrossChannelP1(std::shared_ptr<ProverOneParty<SubsetSumProtocol>> inner)
        : inner_(std::move(inner)) {}
    void round_start(int round) override { inner_->round_start(round); }
    Out respond(int round, const FieldElement& a) override {
        auto out = inner_->respond(round, a);
        out.to = PartyId::V2;
        return out;
    }

private:
    std::shared_ptr<ProverOneParty<SubsetSumProtocol>> inner_;
};

// P2 that answers the other challenge
class WrongChallengeP2 : public ProverTwoParty<SubsetSumProtocol> {
public:
    explicit WrongChallengeP2(std::shared_ptr<ProverTwoParty<SubsetSumProtocol>> inner)
        : inner_(std::move(inner)) {}
    void round_start(int round) override { inner_->round_start(round); }
    Out respond(int round, std::uint8_t chall) override {
        return inner_->respond(round, 1 - chall);
    }

private:
    std::shared_ptr<ProverTwoParty<SubsetSumProtocol>> inner_;
};

} // namespace

TEST_SUITE("session") {

TEST_CASE("honest subset-sum run accepts 110 rounds") {
    ss::SubsetSumWitness wit;
    auto proto = small_ss_protocol(1, 5, &wit);
    auto parties = honest_parties(proto, wit, 99);
    auto result = run_protocol(proto, parties, 110, 7);
    CHECK(result.accepted);
    CHECK(result.transcript.accepted());
    CHECK(result.transcript.rounds.size() == 110);
    CHECK(result.transcript.messages.size() == 440);
    CHECK(isolation_check(result.transcript, proto));
}

TEST_CASE("honest 3SAT run accepts") {
    auto phi = demo_formula();
    auto ctx = sat::sat_choose_params(phi.clause_count(), 2);
    ThreeSatProtocol proto(ctx, phi);
    auto parties = honest_parties(proto, sat::Assignment{{1, 0, 1, 0, 0}}, 4);
    auto result = run_protocol(proto, parties, 60, 11);
    CHECK(result.accepted);
    CHECK(isolation_check(result.transcript, proto));
}

TEST_CASE("honest completeness over 1000 seeded runs") {
    ss::SubsetSumWitness wit;
    auto proto = small_ss_protocol(2, 3, &wit);
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        auto parties = honest_parties(proto, wit, seed * 31 + 5);
        auto result = run_protocol(proto, parties, 1, seed);
        REQUIRE(result.accepted);
    }
}

TEST_CASE("identical seeds give byte-identical transcripts") {
    ss::SubsetSumWitness wit;
    auto proto = small_ss_protocol(3, 6, &wit);
    auto parties1 = honest_parties(proto, wit, 42);
    auto parties2 = honest_parties(proto, wit, 42);
    auto r1 = run_protocol(proto, parties1, 20, 123);
    auto r2 = run_protocol(proto, parties2, 20, 123);
    CHECK(r1.transcript.export_lines() == r2.transcript.export_lines());

    auto parties3 = honest_parties(proto, wit, 42);
    auto r3 = run_protocol(proto, parties3, 20, 124);
    CHECK(r1.transcript.export_lines() != r3.transcript.export_lines());
}

TEST_CASE("channel discipline: only V1-P1 and V2-P2 ever talk") {
    ss::SubsetSumWitness wit;
    auto proto = small_ss_protocol(4, 4, &wit);
    auto parties = honest_parties(proto, wit, 8);
    auto result = run_protocol(proto, parties, 30, 9);
    for (const auto& m : result.transcript.messages) {
        bool v1p1 = (m.from == PartyId::V1 && m.to == PartyId::P1) ||
                    (m.from == PartyId::P1 && m.to == PartyId::V1);
        bool v2p2 = (m.from == PartyId::V2 && m.to == PartyId::P2) ||
                    (m.from == PartyId::P2 && m.to == PartyId::V2);
        CHECK((v1p1 || v2p2));
    }
}

TEST_CASE("cross-channel attempts abort the run") {
    ss::SubsetSumWitness wit;
    auto proto = small_ss_protocol(5, 4, &wit);
    auto parties = honest_parties(proto, wit, 3);
    parties.p1 = std::make_shared<CrossChannelP1>(parties.p1);
    CHECK_THROWS_AS((void)run_protocol(proto, parties, 5, 1), ProtocolViolation);
}

TEST_CASE("answering the wrong challenge aborts the run") {
    ss::SubsetSumWitness wit;
    auto proto = small_ss_protocol(6, 4, &wit);
    auto parties = honest_parties(proto, wit, 3);
    parties.p2 = std::make_shared<WrongChallengeP2>(parties.p2);
    CHECK_THROWS_AS((void)run_protocol(proto, parties, 5, 1), ProtocolViolation);
}

TEST_CASE("the isolation audit catches forged transcripts") {
    ss::SubsetSumWitness wit;
    auto proto = small_ss_protocol(7, 4, &wit);
    auto parties = honest_parties(proto, wit, 12);
    auto result = run_protocol(proto, parties, 6, 2);
    REQUIRE(isolation_check(result.transcript, proto));

    // P2's payload replaced by a copy of V1's challenge a
    auto forged = result.transcript;
    forged.messages[3].payload = forged.messages[0].payload;
    CHECK_FALSE(isolation_check(forged, proto));

    // a message rerouted across the forbidden channel
    auto rerouted = result.transcript;
    rerouted.messages[0].to = PartyId::P2;
    CHECK_FALSE(isolation_check(rerouted, proto));

    // a dropped message breaks the step structure
    auto dropped = result.transcript;
    dropped.messages.erase(dropped.messages.begin() + 2);
    CHECK_FALSE(isolation_check(dropped, proto));
}

TEST_CASE("byte accounting matches the recorded payloads") {
    ss::SubsetSumWitness wit;
    auto proto = small_ss_protocol(8, 5, &wit);
    auto parties = honest_parties(proto, wit, 21);
    auto result = run_protocol(proto, parties, 40, 31);
    auto acc = byte_accounting(result.transcript, proto);

    CHECK(acc.total_bytes == result.transcript.total_bytes());
    std::size_t sum_party = 0;
    for (auto b : acc.by_party) sum_party += b;
    CHECK(sum_party == acc.total_bytes);
    std::size_t sum_round = 0;
    for (auto b : acc.by_round) sum_round += b;
    CHECK(sum_round == acc.total_bytes);

    // the two challenge branches cost different bytes, and both occur
    const std::size_t bw = proto.ctx()->byte_width();
    bool saw0 = false, saw1 = false;
    for (std::size_t r = 0; r < result.transcript.rounds.size(); ++r) {
        std::size_t expected = bw + proto.p1_payload_bytes() + 1 +
                               proto.p2_payload_bytes(result.transcript.rounds[r].chall);
        CHECK(acc.by_round[r] == expected);
        (result.transcript.rounds[r].chall == 0 ? saw0 : saw1) = true;
    }
    CHECK(saw0);
    CHECK(saw1);
    CHECK(proto.p2_payload_bytes(0) > proto.p2_payload_bytes(1));

    // the formula's averaged term splits into the two branches
    CHECK(acc.formula_bits_mean ==
          doctest::Approx((acc.formula_bits_chall0 + acc.formula_bits_chall1) / 2));

    // realized bits track the per-challenge formula, padded only by the
    // byte alignment of field elements, bit vectors, and the chall byte
    const std::size_t n = proto.instance().size();
    for (std::size_t r = 0; r < result.transcript.rounds.size(); ++r) {
        double realized = 8.0 * static_cast<double>(acc.by_round[r]);
        double formula = proto.formula_bits(result.transcript.rounds[r].chall);
        CHECK(realized >= formula);
        CHECK(realized <= formula + 8.0 * (4 * n + 4));
    }

    // empty transcript reports zeros
    Transcript empty;
    auto zero = byte_accounting(empty, proto);
    CHECK(zero.total_bytes == 0);
    CHECK(zero.realized_bits_per_round == 0);
}

TEST_CASE("incomplete wiring is rejected") {
    ss::SubsetSumWitness wit;
    auto proto = small_ss_protocol(9, 4, &wit);
    Parties<SubsetSumProtocol> parties;
    CHECK_THROWS_AS((void)run_protocol(proto, parties, 1, 0), std::invalid_argument);
}

} // TEST_SUITE
