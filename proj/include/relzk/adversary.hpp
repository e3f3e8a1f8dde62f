#pragma once

#include <memory>
#include <string>

#include "relzk/games.hpp"
#include "relzk/session.hpp"

namespace relzk::adv {

/// A witnessless prover pair for the subset-sum session. Both provers only
/// ever see their own verifier's message; coordination happens through the
/// pre-shared seed, like the honest parties.
struct SsCheatStrategy {
    std::string label;
    std::shared_ptr<session::ProverOneParty<session::SubsetSumProtocol>> p1;
    std::shared_ptr<session::ProverTwoParty<session::SubsetSumProtocol>> p2;
};

/// P1 commits honestly to the shared (z, c0, c1) without any witness; P2
/// answers chall=0 perfectly and chall=1 with fresh random (x, c').
/// Accepted with probability 1/2 + 1/(2Q).
SsCheatStrategy strategy_answer_chall0(const session::SubsetSumProtocol& proto,
                                       std::uint64_t shared_seed);

/// Tailors the round to one guessed challenge. guess=0 plays the honest
/// commit and wins the audit branch; guess=1 commits rows whose x-selected
/// entries already sum to k, so the unveil equation holds for every a while
/// the audit branch fails (bar a = 0).
SsCheatStrategy strategy_guess_chall(const session::SubsetSumProtocol& proto, std::uint8_t guess,
                                     std::uint64_t shared_seed);

/// Session wiring with honest verifiers and the given cheating provers.
session::Parties<session::SubsetSumProtocol> cheat_parties(
    const session::SubsetSumProtocol& proto, const SsCheatStrategy& strategy);

/// Exact maximum single-round acceptance over all deterministic prover
/// pairs, computed by exhausting P2's answer pairs through the shared
/// game-search engine; P1's per-a best response has a closed form. Guarded
/// at 2^24 strategies, which confines it to n <= 3 / m <= 2 and tiny Q.
games::Rational exhaustive_soundness_subset_sum(const ss::SubsetSumInstance& inst,
                                                const FieldCtxPtr& ctx);
games::Rational exhaustive_soundness_three_sat(const sat::Cnf3& phi, const FieldCtxPtr& ctx);

} // namespace relzk::adv
