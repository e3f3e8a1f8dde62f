#include "relzk/session.hpp"

#include <sstream>

namespace relzk::session {

const char* to_string(PartyId p) {
    switch (p) {
        case PartyId::V1: return "V1";
        case PartyId::V2: return "V2";
        case PartyId::P1: return "P1";
        case PartyId::P2: return "P2";
    }
    return "?";
}

const char* to_string(Step s) {
    switch (s) {
        case Step::ChallengeA: return "a";
        case Step::ProverOneResponse: return "resp1";
        case Step::Challenge: return "chall";
        case Step::ProverTwoResponse: return "resp2";
    }
    return "?";
}

bool Transcript::accepted() const {
    if (rounds.empty()) return false;
    for (const auto& r : rounds) {
        if (!r.accepted) return false;
    }
    return true;
}

std::size_t Transcript::total_bytes() const {
    std::size_t total = 0;
    for (const auto& m : messages) total += m.byte_len();
    return total;
}

std::size_t Transcript::bytes_from(PartyId p) const {
    std::size_t total = 0;
    for (const auto& m : messages) {
        if (m.from == p) total += m.byte_len();
    }
    return total;
}

std::size_t Transcript::round_bytes(int round) const {
    std::size_t total = 0;
    for (const auto& m : messages) {
        if (m.round == round) total += m.byte_len();
    }
    return total;
}

std::vector<std::string> Transcript::export_lines() const {
    std::vector<std::string> lines;
    lines.reserve(messages.size());
    for (const auto& m : messages) {
        std::ostringstream os;
        os << m.round << ' ' << to_string(m.from) << ' ' << to_string(m.to) << ' '
           << to_string(m.step) << ' ' << wire::to_hex(m.payload) << ' ' << m.byte_len();
        lines.push_back(os.str());
    }
    return lines;
}

SubsetSumProtocol::SubsetSumProtocol(FieldCtxPtr ctx, ss::SubsetSumInstance inst)
    : ctx_(std::move(ctx)), inst_(std::move(inst)) {
    if (inst_.sum() >= ctx_->modulus()) {
        throw std::invalid_argument("instance sum must stay below the modulus");
    }
}

std::vector<std::uint8_t> SubsetSumProtocol::serialize_p1(const P1Resp& r) const {
    std::vector<std::uint8_t> out;
    out.reserve(p1_payload_bytes());
    wire::append_fe_vec(out, r.w0);
    wire::append_fe_vec(out, r.w1);
    return out;
}

std::vector<std::uint8_t> SubsetSumProtocol::serialize_p2(const P2Resp& r) const {
    std::vector<std::uint8_t> out;
    if (const auto* c0 = std::get_if<ss::Chall0Response>(&r)) {
        wire::append_bytes(out, wire::pack_bits(c0->z));
        wire::append_fe_vec(out, c0->c0);
        wire::append_fe_vec(out, c0->c1);
    } else {
        const auto& c1 = std::get<ss::Chall1Response>(r);
        wire::append_bytes(out, wire::pack_bits(c1.x));
        wire::append_fe(out, c1.c_sum);
    }
    return out;
}

bool SubsetSumProtocol::variant_matches(const P2Resp& r, std::uint8_t chall) {
    return chall == 0 ? std::holds_alternative<ss::Chall0Response>(r)
                      : std::holds_alternative<ss::Chall1Response>(r);
}

ss::VerifyResult SubsetSumProtocol::verify(const FieldElement& a, const P1Resp& r1,
                                           std::uint8_t chall, const P2Resp& r2) const {
    return ss::verify_round(a, inst_, r1, chall, r2);
}

std::size_t SubsetSumProtocol::p1_payload_bytes() const {
    return 2 * inst_.size() * ctx_->byte_width();
}

std::size_t SubsetSumProtocol::p2_payload_bytes(std::uint8_t chall) const {
    std::size_t bit_bytes = (inst_.size() + 7) / 8;
    if (chall == 0) return bit_bytes + 2 * inst_.size() * ctx_->byte_width();
    return bit_bytes + ctx_->byte_width();
}

double SubsetSumProtocol::formula_bits(std::uint8_t chall) const {
    double log_q = ss::log2_modulus(ctx_);
    double n = static_cast<double>(inst_.size());
    double fixed = log_q + 1 + 2 * n * log_q; // V1, V2, P1
    return fixed + (chall == 0 ? n + 2 * n * log_q : n + log_q);
}

double SubsetSumProtocol::formula_bits_mean() const {
    return ss::round_bits(inst_.size(), ss::log2_modulus(ctx_));
}

ThreeSatProtocol::ThreeSatProtocol(FieldCtxPtr ctx, sat::Cnf3 phi)
    : ctx_(std::move(ctx)), phi_(std::move(phi)) {
    phi_.validate();
}

std::vector<std::uint8_t> ThreeSatProtocol::serialize_p1(const P1Resp& r) const {
    std::vector<std::uint8_t> out;
    out.reserve(p1_payload_bytes());
    wire::append_fe_vec(out, r.w_prime);
    wire::append_fe_vec(out, r.w);
    return out;
}

std::vector<std::uint8_t> ThreeSatProtocol::serialize_p2(const P2Resp& r) const {
    std::vector<std::uint8_t> out;
    if (const auto* c0 = std::get_if<sat::SatChall0Response>(&r)) {
        wire::append_bytes(out, wire::pack_crumbs(c0->perm.rot));
        wire::append_fe_vec(out, c0->delta);
    } else {
        const auto& c1 = std::get<sat::SatChall1Response>(r);
        wire::append_bytes(out, wire::pack_crumbs(c1.f));
        wire::append_fe_vec(out, c1.gamma);
    }
    return out;
}

bool ThreeSatProtocol::variant_matches(const P2Resp& r, std::uint8_t chall) {
    return chall == 0 ? std::holds_alternative<sat::SatChall0Response>(r)
                      : std::holds_alternative<sat::SatChall1Response>(r);
}

ss::VerifyResult ThreeSatProtocol::verify(const FieldElement& a, const P1Resp& r1,
                                          std::uint8_t chall, const P2Resp& r2) const {
    return sat::sat_verify_round(a, phi_, r1, chall, r2);
}

std::size_t ThreeSatProtocol::p1_payload_bytes() const {
    return (phi_.var_count + 3 * phi_.clause_count()) * ctx_->byte_width();
}

std::size_t ThreeSatProtocol::p2_payload_bytes(std::uint8_t chall) const {
    std::size_t m = phi_.clause_count();
    std::size_t crumb_bytes = (m + 3) / 4;
    if (chall == 0) return crumb_bytes + 3 * m * ctx_->byte_width();
    return crumb_bytes + m * ctx_->byte_width();
}

double ThreeSatProtocol::formula_bits(std::uint8_t chall) const {
    double log_q = ss::log2_modulus(ctx_);
    double n = static_cast<double>(phi_.var_count);
    double m = static_cast<double>(phi_.clause_count());
    double fixed = log_q + 1 + (n + 3 * m) * log_q;
    return fixed + (chall == 0 ? 2 * m + 3 * m * log_q : m * (log_q + 2));
}

double ThreeSatProtocol::formula_bits_mean() const {
    return sat::sat_round_bits(phi_.var_count, phi_.clause_count(), ss::log2_modulus(ctx_));
}

namespace {

class HonestSsP1 : public ProverOneParty<SubsetSumProtocol> {
public:
    HonestSsP1(FieldCtxPtr ctx, ss::SubsetSumInstance inst, std::uint64_t shared_seed)
        : ctx_(std::move(ctx)), inst_(std::move(inst)), shared_seed_(shared_seed) {}

    void round_start(int round) override {
        Rng rng = Rng(shared_seed_).derive(static_cast<std::uint64_t>(round));
        st_ = ss::sample_shared_state(ctx_, inst_.size(), rng);
    }

    Out respond(int round, const FieldElement& a) override {
        (void)round;
        return {PartyId::V1, ss::p1_respond(a, inst_, st_)};
    }

private:
    FieldCtxPtr ctx_;
    ss::SubsetSumInstance inst_;
    std::uint64_t shared_seed_;
    ss::ProverSharedState st_;
};

class HonestSsP2 : public ProverTwoParty<SubsetSumProtocol> {
public:
    HonestSsP2(FieldCtxPtr ctx, std::size_t n, ss::SubsetSumWitness wit, std::uint64_t shared_seed)
        : ctx_(std::move(ctx)), n_(n), wit_(std::move(wit)), shared_seed_(shared_seed) {}

    void round_start(int round) override {
        Rng rng = Rng(shared_seed_).derive(static_cast<std::uint64_t>(round));
        st_ = ss::sample_shared_state(ctx_, n_, rng);
    }

    Out respond(int round, std::uint8_t chall) override {
        (void)round;
        return {PartyId::V2, ss::p2_respond(chall, wit_, st_)};
    }

private:
    FieldCtxPtr ctx_;
    std::size_t n_;
    ss::SubsetSumWitness wit_;
    std::uint64_t shared_seed_;
    ss::ProverSharedState st_;
};

class HonestSatP1 : public ProverOneParty<ThreeSatProtocol> {
public:
    HonestSatP1(FieldCtxPtr ctx, sat::Cnf3 phi, sat::Assignment s, std::uint64_t shared_seed)
        : ctx_(std::move(ctx)), phi_(std::move(phi)), s_(std::move(s)), shared_seed_(shared_seed) {}

    void round_start(int round) override {
        Rng rng = Rng(shared_seed_).derive(static_cast<std::uint64_t>(round));
        st_ = sat::sample_shared_state(ctx_, phi_, rng);
        p_ = sat::formula_bits(sat::apply_perm(st_.perm, phi_), s_);
    }

    Out respond(int round, const FieldElement& a) override {
        (void)round;
        return {PartyId::V1, sat::sat_p1_respond(a, st_, s_, p_)};
    }

private:
    FieldCtxPtr ctx_;
    sat::Cnf3 phi_;
    sat::Assignment s_;
    std::uint64_t shared_seed_;
    sat::SatSharedState st_;
    std::vector<std::uint8_t> p_;
};

class HonestSatP2 : public ProverTwoParty<ThreeSatProtocol> {
public:
    HonestSatP2(FieldCtxPtr ctx, sat::Cnf3 phi, sat::PositionWitness e, std::uint64_t shared_seed)
        : ctx_(std::move(ctx)), phi_(std::move(phi)), e_(std::move(e)), shared_seed_(shared_seed) {}

    void round_start(int round) override {
        Rng rng = Rng(shared_seed_).derive(static_cast<std::uint64_t>(round));
        st_ = sat::sample_shared_state(ctx_, phi_, rng);
    }

    Out respond(int round, std::uint8_t chall) override {
        (void)round;
        return {PartyId::V2, sat::sat_p2_respond(chall, st_, phi_, e_)};
    }

private:
    FieldCtxPtr ctx_;
    sat::Cnf3 phi_;
    sat::PositionWitness e_;
    std::uint64_t shared_seed_;
    sat::SatSharedState st_;
};

} // namespace

Parties<SubsetSumProtocol> honest_parties(const SubsetSumProtocol& proto,
                                          ss::SubsetSumWitness wit, std::uint64_t shared_seed) {
    if (!ss::check_witness(proto.instance(), wit)) {
        throw std::invalid_argument("honest_parties: witness does not solve the instance");
    }
    Parties<SubsetSumProtocol> parties;
    FieldCtxPtr ctx = proto.ctx();
    parties.v1_pick_a = [ctx](int, Rng& rng) { return FieldElement::random(ctx, rng); };
    parties.v2_pick_chall = [](int, Rng& rng) { return rng.next_bit(); };
    parties.p1 = std::make_shared<HonestSsP1>(ctx, proto.instance(), shared_seed);
    parties.p2 =
        std::make_shared<HonestSsP2>(ctx, proto.instance().size(), std::move(wit), shared_seed);
    return parties;
}

Parties<ThreeSatProtocol> honest_parties(const ThreeSatProtocol& proto, sat::Assignment s,
                                         std::uint64_t shared_seed) {
    sat::PositionWitness e = sat::witness_positions(proto.formula(), s);
    Parties<ThreeSatProtocol> parties;
    FieldCtxPtr ctx = proto.ctx();
    parties.v1_pick_a = [ctx](int, Rng& rng) { return FieldElement::random(ctx, rng); };
    parties.v2_pick_chall = [](int, Rng& rng) { return rng.next_bit(); };
    parties.p1 = std::make_shared<HonestSatP1>(ctx, proto.formula(), std::move(s), shared_seed);
    parties.p2 =
        std::make_shared<HonestSatP2>(ctx, proto.formula(), std::move(e), shared_seed);
    return parties;
}

namespace detail {

bool isolation_check_impl(const Transcript& t, std::size_t a_bytes, std::size_t p1_bytes,
                          const std::function<std::size_t(std::uint8_t)>& p2_bytes) {
    if (t.messages.size() != 4 * t.rounds.size()) return false;
    for (std::size_t r = 0; r < t.rounds.size(); ++r) {
        const Message* step[4];
        for (int i = 0; i < 4; ++i) {
            step[i] = &t.messages[4 * r + i];
            if (step[i]->round != static_cast<int>(r)) return false;
        }
        // channels and step order of Tables' rounds
        if (step[0]->from != PartyId::V1 || step[0]->to != PartyId::P1 ||
            step[0]->step != Step::ChallengeA || step[0]->byte_len() != a_bytes) {
            return false;
        }
        if (step[1]->from != PartyId::P1 || step[1]->to != PartyId::V1 ||
            step[1]->step != Step::ProverOneResponse || step[1]->byte_len() != p1_bytes) {
            return false;
        }
        if (step[2]->from != PartyId::V2 || step[2]->to != PartyId::P2 ||
            step[2]->step != Step::Challenge || step[2]->payload.size() != 1 ||
            step[2]->payload[0] > 1) {
            return false;
        }
        std::uint8_t chall = step[2]->payload[0];
        if (step[3]->from != PartyId::P2 || step[3]->to != PartyId::V2 ||
            step[3]->step != Step::ProverTwoResponse ||
            step[3]->byte_len() != p2_bytes(chall)) {
            return false;
        }
    }
    return true;
}

} // namespace detail

} // namespace relzk::session
