#include "relzk/adversary.hpp"

#include <cmath>

namespace relzk::adv {

using session::Parties;
using session::PartyId;
using session::ProverOneParty;
using session::ProverTwoParty;
using session::SubsetSumProtocol;

namespace {

// P1 half of answer-chall0 and guess=0: honest-form commitment to the
// shared state, no witness involved.
class HonestFormP1 : public ProverOneParty<SubsetSumProtocol> {
public:
    HonestFormP1(FieldCtxPtr ctx, ss::SubsetSumInstance inst, std::uint64_t shared_seed)
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

// P2 that reveals the shared state on chall=0 and improvises on chall=1.
class AnswerChall0P2 : public ProverTwoParty<SubsetSumProtocol> {
public:
    AnswerChall0P2(FieldCtxPtr ctx, std::size_t n, std::uint64_t shared_seed)
        : ctx_(std::move(ctx)), n_(n), shared_seed_(shared_seed) {}

    void round_start(int round) override {
        Rng rng = Rng(shared_seed_).derive(static_cast<std::uint64_t>(round));
        st_ = ss::sample_shared_state(ctx_, n_, rng);
        junk_rng_ = Rng(shared_seed_ ^ 0xdeadULL).derive(static_cast<std::uint64_t>(round));
    }

    Out respond(int round, std::uint8_t chall) override {
        (void)round;
        if (chall == 0) return {PartyId::V2, ss::Chall0Response{st_.z, st_.c0, st_.c1}};
        return {PartyId::V2, ss::Chall1Response{random_bits(n_, junk_rng_),
                                                FieldElement::random(ctx_, junk_rng_)}};
    }

private:
    FieldCtxPtr ctx_;
    std::size_t n_;
    std::uint64_t shared_seed_;
    ss::ProverSharedState st_;
    Rng junk_rng_{0};
};

// Shared plan for the guess=1 pair: commit rows u0, u1 whose x-selected
// entries sum to k, so sum(w_{x_i})_i = a*k + sum(c_{x_i})_i for every a.
struct UnveilPlan {
    ss::ProverSharedState st;       // c0, c1 and the z the rows were shaped from
    std::vector<std::uint8_t> x;    // planned reveal
    std::vector<FieldElement> u0, u1;
    FieldElement c_sum;
};

UnveilPlan make_unveil_plan(const FieldCtxPtr& ctx, const ss::SubsetSumInstance& inst,
                            std::uint64_t shared_seed, int round) {
    Rng rng = Rng(shared_seed).derive(static_cast<std::uint64_t>(round));
    auto st = ss::sample_shared_state(ctx, inst.size(), rng);
    auto x = random_bits(inst.size(), rng);

    // start from the honest row shapes for a fake relaxed witness x xor z,
    // then patch one selected entry so the selected contents sum to k
    FieldElement zero(ctx, 0);
    FieldElement selected(ctx, 0);
    std::vector<FieldElement> u0, u1;
    for (std::size_t i = 0; i < inst.size(); ++i) {
        FieldElement si(ctx, inst.s[i]);
        u0.push_back(st.z[i] ? si : zero);
        u1.push_back(st.z[i] ? zero : si);
        selected = selected + (x[i] ? u1[i] : u0[i]);
    }
    FieldElement fixup = FieldElement(ctx, inst.k) - selected;
    if (x[0]) {
        u1[0] = u1[0] + fixup;
    } else {
        u0[0] = u0[0] + fixup;
    }

    FieldElement c_sum = zero;
    for (std::size_t i = 0; i < inst.size(); ++i) {
        c_sum = c_sum + (x[i] ? st.c1[i] : st.c0[i]);
    }
    return UnveilPlan{std::move(st), std::move(x), std::move(u0), std::move(u1),
                      std::move(c_sum)};
}

class GuessOneP1 : public ProverOneParty<SubsetSumProtocol> {
public:
    GuessOneP1(FieldCtxPtr ctx, ss::SubsetSumInstance inst, std::uint64_t shared_seed)
        : ctx_(std::move(ctx)), inst_(std::move(inst)), shared_seed_(shared_seed) {}

    void round_start(int round) override {
        plan_ = make_unveil_plan(ctx_, inst_, shared_seed_, round);
    }

    Out respond(int round, const FieldElement& a) override {
        (void)round;
        ss::P1Response resp;
        for (std::size_t i = 0; i < inst_.size(); ++i) {
            resp.w0.push_back(a * plan_->u0[i] + plan_->st.c0[i]);
            resp.w1.push_back(a * plan_->u1[i] + plan_->st.c1[i]);
        }
        return {PartyId::V1, resp};
    }

private:
    FieldCtxPtr ctx_;
    ss::SubsetSumInstance inst_;
    std::uint64_t shared_seed_;
    std::optional<UnveilPlan> plan_;
};

class GuessOneP2 : public ProverTwoParty<SubsetSumProtocol> {
public:
    GuessOneP2(FieldCtxPtr ctx, ss::SubsetSumInstance inst, std::uint64_t shared_seed)
        : ctx_(std::move(ctx)), inst_(std::move(inst)), shared_seed_(shared_seed) {}

    void round_start(int round) override {
        plan_ = make_unveil_plan(ctx_, inst_, shared_seed_, round);
    }

    Out respond(int round, std::uint8_t chall) override {
        (void)round;
        if (chall == 1) return {PartyId::V2, ss::Chall1Response{plan_->x, plan_->c_sum}};
        return {PartyId::V2, ss::Chall0Response{plan_->st.z, plan_->st.c0, plan_->st.c1}};
    }

private:
    FieldCtxPtr ctx_;
    ss::SubsetSumInstance inst_;
    std::uint64_t shared_seed_;
    std::optional<UnveilPlan> plan_;
};

double log2_or_zero(double v) { return v > 0 ? std::log2(v) : 0.0; }

} // namespace

SsCheatStrategy strategy_answer_chall0(const session::SubsetSumProtocol& proto,
                                       std::uint64_t shared_seed) {
    return {"answer-chall0",
            std::make_shared<HonestFormP1>(proto.ctx(), proto.instance(), shared_seed),
            std::make_shared<AnswerChall0P2>(proto.ctx(), proto.instance().size(), shared_seed)};
}

SsCheatStrategy strategy_guess_chall(const session::SubsetSumProtocol& proto, std::uint8_t guess,
                                     std::uint64_t shared_seed) {
    if (guess == 0) {
        auto s = strategy_answer_chall0(proto, shared_seed);
        s.label = "guess-chall0";
        return s;
    }
    return {"guess-chall1",
            std::make_shared<GuessOneP1>(proto.ctx(), proto.instance(), shared_seed),
            std::make_shared<GuessOneP2>(proto.ctx(), proto.instance(), shared_seed)};
}

session::Parties<session::SubsetSumProtocol> cheat_parties(
    const session::SubsetSumProtocol& proto, const SsCheatStrategy& strategy) {
    Parties<SubsetSumProtocol> parties;
    FieldCtxPtr ctx = proto.ctx();
    parties.v1_pick_a = [ctx](int, Rng& rng) { return FieldElement::random(ctx, rng); };
    parties.v2_pick_chall = [](int, Rng& rng) { return rng.next_bit(); };
    parties.p1 = strategy.p1;
    parties.p2 = strategy.p2;
    return parties;
}

games::Rational exhaustive_soundness_subset_sum(const ss::SubsetSumInstance& inst,
                                                const FieldCtxPtr& ctx) {
    const std::size_t n = inst.size();
    const std::uint64_t q = ctx->modulus().convert_to<std::uint64_t>();
    if (inst.sum() >= ctx->modulus()) {
        throw std::invalid_argument("instance sum must stay below the modulus");
    }

    double log_space = static_cast<double>(2 * n) + (2 * n + 1) * log2_or_zero(double(q));
    if (log_space > 24.0) {
        throw SizeGuardExceeded("subset-sum strategy space exceeds 2^24");
    }

    std::vector<std::uint64_t> s_mod(n);
    for (std::size_t i = 0; i < n; ++i) {
        s_mod[i] = (inst.s[i] % ctx->modulus()).convert_to<std::uint64_t>();
    }
    const std::uint64_t k_mod = (inst.k % ctx->modulus()).convert_to<std::uint64_t>();

    std::uint64_t q_pow_2n = 1;
    for (std::size_t i = 0; i < 2 * n; ++i) q_pow_2n *= q;
    const std::uint64_t masks = std::uint64_t{1} << n;

    // P2's two output alphabets: chall=0 answers (z, c0, c1) and chall=1
    // answers (x, c'). For a committed row pair, chall=0 forces the rows,
    // and those rows win chall=1 too exactly when a*D = N.
    std::vector<std::size_t> radix{static_cast<std::size_t>(masks * q_pow_2n),
                                   static_cast<std::size_t>(masks * q)};

    std::vector<std::uint64_t> c0(n), c1(n);
    std::uint64_t best = games::detail::max_over_assignments(
        radix, [&](std::span<const std::size_t> f) -> std::uint64_t {
            std::uint64_t i0 = f[0];
            std::uint64_t keys = i0 % q_pow_2n;
            std::uint64_t z_mask = i0 / q_pow_2n;
            for (std::size_t i = 0; i < n; ++i) {
                c0[i] = keys % q;
                keys /= q;
            }
            for (std::size_t i = 0; i < n; ++i) {
                c1[i] = keys % q;
                keys /= q;
            }

            std::uint64_t i1 = f[1];
            std::uint64_t c_prime = i1 % q;
            std::uint64_t x_mask = i1 / q;

            // D = sum s_i (x_i xor z_i) - k; N = c' - sum (c_{x_i})_i
            std::uint64_t d = (q - k_mod) % q;
            std::uint64_t t = 0;
            for (std::size_t i = 0; i < n; ++i) {
                bool xi = (x_mask >> i) & 1;
                bool zi = (z_mask >> i) & 1;
                if (xi != zi) d = (d + s_mod[i]) % q;
                t = (t + (xi ? c1[i] : c0[i])) % q;
            }
            std::uint64_t n_val = (c_prime + q - t) % q;

            // number of a with both branches winnable
            std::uint64_t both = d != 0 ? 1 : (n_val == 0 ? q : 0);
            // every other a still wins the one challenge P1 chooses to satisfy
            return q + both;
        });

    return games::Rational(static_cast<std::int64_t>(best), static_cast<std::int64_t>(2 * q));
}

games::Rational exhaustive_soundness_three_sat(const sat::Cnf3& phi, const FieldCtxPtr& ctx) {
    const std::size_t m = phi.clause_count();
    const std::size_t n = phi.var_count;
    const std::uint64_t q = ctx->modulus().convert_to<std::uint64_t>();
    if (m < 1) throw std::invalid_argument("need at least one clause");

    double lg3 = std::log2(3.0);
    double log_space = 2 * m * lg3 + (3 * m + m) * log2_or_zero(double(q));
    if (log_space > 24.0) {
        throw SizeGuardExceeded("3SAT strategy space exceeds 2^24");
    }

    std::uint64_t q_pow_3m = 1;
    for (std::size_t i = 0; i < 3 * m; ++i) q_pow_3m *= q;
    std::uint64_t q_pow_m = 1;
    for (std::size_t i = 0; i < m; ++i) q_pow_m *= q;
    std::uint64_t perms = 1;
    for (std::size_t i = 0; i < m; ++i) perms *= 3;

    std::vector<std::size_t> radix{static_cast<std::size_t>(perms * q_pow_3m),
                                   static_cast<std::size_t>(perms * q_pow_m)};

    std::vector<std::uint64_t> delta(3 * m), gamma(m);
    std::vector<std::uint8_t> f_pos(m);
    sat::CyclicPerm perm;
    perm.rot.resize(m);

    // per-variable pinned values: w'_j = t (negated pin) or w'_j - a = u
    std::vector<std::int64_t> t_pin(n), u_pin(n);

    std::uint64_t best = games::detail::max_over_assignments(
        radix, [&](std::span<const std::size_t> fidx) -> std::uint64_t {
            std::uint64_t i0 = fidx[0];
            std::uint64_t d_keys = i0 % q_pow_3m;
            std::uint64_t p_idx = i0 / q_pow_3m;
            for (std::size_t i = 0; i < 3 * m; ++i) {
                delta[i] = d_keys % q;
                d_keys /= q;
            }
            for (std::size_t i = 0; i < m; ++i) {
                perm.rot[i] = static_cast<std::uint8_t>(p_idx % 3);
                p_idx /= 3;
            }

            std::uint64_t i1 = fidx[1];
            std::uint64_t g_keys = i1 % q_pow_m;
            std::uint64_t f_idx = i1 / q_pow_m;
            for (std::size_t i = 0; i < m; ++i) {
                gamma[i] = g_keys % q;
                g_keys /= q;
            }
            for (std::size_t i = 0; i < m; ++i) {
                f_pos[i] = static_cast<std::uint8_t>(1 + f_idx % 3);
                f_idx /= 3;
            }

            sat::Cnf3 permuted = sat::apply_perm(perm, phi);

            std::fill(t_pin.begin(), t_pin.end(), -1);
            std::fill(u_pin.begin(), u_pin.end(), -1);
            bool impossible = false;
            std::int64_t pinned_a = -1; // -1: all a feasible

            for (std::size_t i = 0; i < m && !impossible; ++i) {
                std::size_t p = 3 * i + f_pos[i] - 1;
                const sat::Literal& lit = permuted.clauses[i][p % 3];
                std::size_t j = lit.var - 1;
                if (lit.negated) {
                    std::int64_t t = static_cast<std::int64_t>((delta[p] + q - gamma[i]) % q);
                    if (t_pin[j] >= 0 && t_pin[j] != t) impossible = true;
                    t_pin[j] = t;
                } else {
                    std::int64_t u = static_cast<std::int64_t>((gamma[i] + q - delta[p]) % q);
                    if (u_pin[j] >= 0 && u_pin[j] != u) impossible = true;
                    u_pin[j] = u;
                }
            }
            if (!impossible) {
                for (std::size_t j = 0; j < n && !impossible; ++j) {
                    if (t_pin[j] >= 0 && u_pin[j] >= 0) {
                        std::int64_t a =
                            static_cast<std::int64_t>((t_pin[j] + q - u_pin[j]) % q);
                        if (pinned_a >= 0 && pinned_a != a) impossible = true;
                        pinned_a = a;
                    }
                }
            }

            std::uint64_t both = impossible ? 0 : (pinned_a >= 0 ? 1 : q);
            return q + both;
        });

    return games::Rational(static_cast<std::int64_t>(best), static_cast<std::int64_t>(2 * q));
}

} // namespace relzk::adv
