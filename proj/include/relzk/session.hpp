#pragma once

#include <array>
#include <functional>
#include <memory>

#include "relzk/subset_sum.hpp"
#include "relzk/three_sat.hpp"
#include "relzk/wire.hpp"

namespace relzk::session {

enum class PartyId { V1, V2, P1, P2 };

/// The four steps of one round, in order.
enum class Step { ChallengeA, ProverOneResponse, Challenge, ProverTwoResponse };

const char* to_string(PartyId p);
const char* to_string(Step s);

struct Message {
    int round;
    PartyId from;
    PartyId to;
    Step step;
    std::vector<std::uint8_t> payload;

    std::size_t byte_len() const { return payload.size(); }
};

struct RoundVerdict {
    bool accepted;
    std::string reason;
    std::uint8_t chall;
};

struct Transcript {
    std::vector<Message> messages;
    std::vector<RoundVerdict> rounds;

    bool accepted() const;
    std::size_t total_bytes() const;
    std::size_t bytes_from(PartyId p) const;
    std::size_t round_bytes(int round) const;

    /// One line per message: round, from, to, step tag, hex payload, byte count.
    std::vector<std::string> export_lines() const;
};

/// Protocol driver for the session engine: wire formats, verifier checks,
/// and the per-round bit accounting formulas.
class SubsetSumProtocol {
public:
    using P1Resp = ss::P1Response;
    using P2Resp = ss::P2Response;

    SubsetSumProtocol(FieldCtxPtr ctx, ss::SubsetSumInstance inst);

    const FieldCtxPtr& ctx() const { return ctx_; }
    const ss::SubsetSumInstance& instance() const { return inst_; }

    std::vector<std::uint8_t> serialize_p1(const P1Resp& r) const;
    std::vector<std::uint8_t> serialize_p2(const P2Resp& r) const;
    static bool variant_matches(const P2Resp& r, std::uint8_t chall);

    ss::VerifyResult verify(const FieldElement& a, const P1Resp& r1, std::uint8_t chall,
                            const P2Resp& r2) const;

    std::size_t p1_payload_bytes() const;
    std::size_t p2_payload_bytes(std::uint8_t chall) const;

    /// Paper-formula bits for one round at the given challenge.
    double formula_bits(std::uint8_t chall) const;
    /// Expectation over the uniform challenge (ss::round_bits).
    double formula_bits_mean() const;

private:
    FieldCtxPtr ctx_;
    ss::SubsetSumInstance inst_;
};

class ThreeSatProtocol {
public:
    using P1Resp = sat::SatP1Response;
    using P2Resp = sat::SatP2Response;

    ThreeSatProtocol(FieldCtxPtr ctx, sat::Cnf3 phi);

    const FieldCtxPtr& ctx() const { return ctx_; }
    const sat::Cnf3& formula() const { return phi_; }

    std::vector<std::uint8_t> serialize_p1(const P1Resp& r) const;
    std::vector<std::uint8_t> serialize_p2(const P2Resp& r) const;
    static bool variant_matches(const P2Resp& r, std::uint8_t chall);

    ss::VerifyResult verify(const FieldElement& a, const P1Resp& r1, std::uint8_t chall,
                            const P2Resp& r2) const;

    std::size_t p1_payload_bytes() const;
    std::size_t p2_payload_bytes(std::uint8_t chall) const;

    double formula_bits(std::uint8_t chall) const;
    double formula_bits_mean() const;

private:
    FieldCtxPtr ctx_;
    sat::Cnf3 phi_;
};

/// Prover state machines. P1 only ever sees a, P2 only ever sees chall;
/// the `to` field lets a malicious implementation attempt an illegal
/// channel, which the engine turns into an abort.
template <class Proto>
class ProverOneParty {
public:
    struct Out {
        PartyId to = PartyId::V1;
        typename Proto::P1Resp resp;
    };

    virtual ~ProverOneParty() = default;
    virtual void round_start(int round) { (void)round; }
    virtual Out respond(int round, const FieldElement& a) = 0;
};

template <class Proto>
class ProverTwoParty {
public:
    struct Out {
        PartyId to = PartyId::V2;
        typename Proto::P2Resp resp;
    };

    virtual ~ProverTwoParty() = default;
    virtual void round_start(int round) { (void)round; }
    virtual Out respond(int round, std::uint8_t chall) = 0;
};

template <class Proto>
struct Parties {
    std::function<FieldElement(int round, Rng& rng)> v1_pick_a;
    std::function<std::uint8_t(int round, Rng& rng)> v2_pick_chall;
    std::shared_ptr<ProverOneParty<Proto>> p1;
    std::shared_ptr<ProverTwoParty<Proto>> p2;
};

struct RunResult {
    Transcript transcript;
    bool accepted;
};

/// Run `rounds` independent rounds in the step order of the protocol table.
/// Deterministic given the seed. Throws ProtocolViolation on any attempt to
/// use a forbidden channel, a malformed challenge, or an answer to the wrong
/// challenge.
template <class Proto>
RunResult run_protocol(const Proto& proto, Parties<Proto>& parties, int rounds,
                       std::uint64_t seed) {
    if (!parties.v1_pick_a || !parties.v2_pick_chall || !parties.p1 || !parties.p2) {
        throw std::invalid_argument("run_protocol: party wiring incomplete");
    }
    Rng v1_rng = Rng(seed).derive(0x5631);
    Rng v2_rng = Rng(seed).derive(0x5632);

    RunResult result;
    result.accepted = true;
    result.transcript.messages.reserve(4 * static_cast<std::size_t>(rounds));

    for (int r = 0; r < rounds; ++r) {
        parties.p1->round_start(r);
        parties.p2->round_start(r);

        FieldElement a = parties.v1_pick_a(r, v1_rng);
        result.transcript.messages.push_back(
            {r, PartyId::V1, PartyId::P1, Step::ChallengeA, a.to_bytes()});

        auto out1 = parties.p1->respond(r, a);
        if (out1.to != PartyId::V1) {
            throw ProtocolViolation("P1 attempted to send to " + std::string(to_string(out1.to)));
        }
        result.transcript.messages.push_back(
            {r, PartyId::P1, PartyId::V1, Step::ProverOneResponse, proto.serialize_p1(out1.resp)});

        std::uint8_t chall = parties.v2_pick_chall(r, v2_rng);
        if (chall > 1) throw ProtocolViolation("challenge must be a bit");
        result.transcript.messages.push_back(
            {r, PartyId::V2, PartyId::P2, Step::Challenge, {chall}});

        auto out2 = parties.p2->respond(r, chall);
        if (out2.to != PartyId::V2) {
            throw ProtocolViolation("P2 attempted to send to " + std::string(to_string(out2.to)));
        }
        if (!Proto::variant_matches(out2.resp, chall)) {
            throw ProtocolViolation("P2 answered the wrong challenge in round " +
                                    std::to_string(r));
        }
        result.transcript.messages.push_back(
            {r, PartyId::P2, PartyId::V2, Step::ProverTwoResponse, proto.serialize_p2(out2.resp)});

        auto verdict = proto.verify(a, out1.resp, chall, out2.resp);
        result.transcript.rounds.push_back({verdict.accepted, verdict.reason, chall});
        result.accepted = result.accepted && verdict.accepted;
    }
    return result;
}

/// Honest parties for either protocol: uniform verifier choices; provers
/// derive identical per-round shared randomness from shared_seed, modeling
/// the pre-shared vectors without any prover-to-prover channel.
Parties<SubsetSumProtocol> honest_parties(const SubsetSumProtocol& proto,
                                          ss::SubsetSumWitness wit, std::uint64_t shared_seed);
Parties<ThreeSatProtocol> honest_parties(const ThreeSatProtocol& proto, sat::Assignment s,
                                         std::uint64_t shared_seed);

namespace detail {
bool isolation_check_impl(const Transcript& t, std::size_t a_bytes, std::size_t p1_bytes,
                          const std::function<std::size_t(std::uint8_t)>& p2_bytes);
}

/// Audit of the logical causality contract: only the V1-P1 and V2-P2
/// channels appear, every round runs its four steps in order, and each
/// payload has the shape its step allows. The engine guarantees this by
/// construction; the audit exists to catch harness regressions and forged
/// transcripts.
template <class Proto>
bool isolation_check(const Transcript& t, const Proto& proto) {
    return detail::isolation_check_impl(
        t, proto.ctx()->byte_width(), proto.p1_payload_bytes(),
        [&proto](std::uint8_t chall) { return proto.p2_payload_bytes(chall); });
}

struct ByteAccounting {
    std::size_t total_bytes = 0;
    std::array<std::size_t, 4> by_party{}; // indexed by PartyId order V1,V2,P1,P2
    std::vector<std::size_t> by_round;
    double formula_bits_chall0 = 0;
    double formula_bits_chall1 = 0;
    double formula_bits_mean = 0;
    double realized_bits_per_round = 0; // 8 * total / rounds
};

template <class Proto>
ByteAccounting byte_accounting(const Transcript& t, const Proto& proto) {
    ByteAccounting acc;
    acc.by_round.resize(t.rounds.size(), 0);
    for (const auto& m : t.messages) {
        acc.total_bytes += m.byte_len();
        acc.by_party[static_cast<std::size_t>(m.from)] += m.byte_len();
        if (m.round >= 0 && static_cast<std::size_t>(m.round) < acc.by_round.size()) {
            acc.by_round[static_cast<std::size_t>(m.round)] += m.byte_len();
        }
    }
    acc.formula_bits_chall0 = proto.formula_bits(0);
    acc.formula_bits_chall1 = proto.formula_bits(1);
    acc.formula_bits_mean = proto.formula_bits_mean();
    if (!t.rounds.empty()) {
        acc.realized_bits_per_round =
            8.0 * static_cast<double>(acc.total_bytes) / static_cast<double>(t.rounds.size());
    }
    return acc;
}

} // namespace relzk::session
