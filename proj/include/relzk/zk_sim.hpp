#pragma once

#include <functional>
#include <string>

#include "relzk/subset_sum.hpp"
#include "relzk/three_sat.hpp"

namespace relzk::zk {

/// Classical verifier strategy: a fixed first query and a challenge that may
/// depend on everything seen so far. Deterministic so view distributions are
/// well-defined for the exact checker.
struct SsVerifier {
    std::string label;
    std::function<FieldElement(const FieldCtxPtr&)> pick_a;
    std::function<std::uint8_t(const FieldElement& a, const ss::P1Response&)> pick_chall;
};

struct SatVerifier {
    std::string label;
    std::function<FieldElement(const FieldCtxPtr&)> pick_a;
    std::function<std::uint8_t(const FieldElement& a, const sat::SatP1Response&)> pick_chall;
};

/// The classical registers of one round: (Q1, R1, Q2, R2).
struct SsView {
    FieldElement a;
    ss::P1Response resp1;
    std::uint8_t chall;
    ss::P2Response resp2;
};

struct SatView {
    FieldElement a;
    sat::SatP1Response resp1;
    std::uint8_t chall;
    sat::SatP2Response resp2;
};

/// The simulator's branch answers, solved from the verifier equations so any
/// uniformly chosen (w0, w1) becomes an accepting view.
ss::Chall0Response simulate_ss_chall0(const FieldCtxPtr& ctx, const ss::SubsetSumInstance& inst,
                                      const FieldElement& a, const ss::P1Response& resp1,
                                      std::vector<std::uint8_t> z);
ss::Chall1Response simulate_ss_chall1(const FieldCtxPtr& ctx, const ss::SubsetSumInstance& inst,
                                      const FieldElement& a, const ss::P1Response& resp1,
                                      std::vector<std::uint8_t> x);

sat::SatChall0Response simulate_sat_chall0(const sat::Cnf3& phi, const FieldElement& a,
                                           const sat::SatP1Response& resp1, sat::CyclicPerm perm);
sat::SatChall1Response simulate_sat_chall1(const FieldElement& a, const sat::SatP1Response& resp1,
                                           std::vector<std::uint8_t> f);

/// One simulated round: uniform masked vectors, verifier-chosen challenge,
/// branch answer from the formulas above. No witness anywhere.
SsView simulate_subset_sum(const FieldCtxPtr& ctx, const ss::SubsetSumInstance& inst,
                           const SsVerifier& verifier, Rng& rng);
SatView simulate_three_sat(const FieldCtxPtr& ctx, const sat::Cnf3& phi,
                           const SatVerifier& verifier, Rng& rng);

/// One honest round under the same verifier strategy.
SsView honest_view_subset_sum(const FieldCtxPtr& ctx, const ss::SubsetSumInstance& inst,
                              const ss::SubsetSumWitness& wit, const SsVerifier& verifier,
                              Rng& rng);
SatView honest_view_three_sat(const FieldCtxPtr& ctx, const sat::Cnf3& phi,
                              const sat::Assignment& s, const SatVerifier& verifier, Rng& rng);

/// Total variation distance between the honest and simulated view
/// distributions. Exact mode enumerates all shared randomness on both sides
/// (equal atom counts by construction), so TV = diff / (2 * atoms) as an
/// exact rational; zero numerator means perfect zero knowledge at this size.
struct TvResult {
    BigInt diff = 0;  // sum over views of |honest count - simulated count|
    BigInt atoms = 0; // per-side atom count
    bool exact = true;
    double value() const;
    bool is_zero() const { return diff == 0; }
};

inline constexpr std::uint64_t kExactAtomCap = 10'000'000;

TvResult tv_exact_subset_sum(const FieldCtxPtr& ctx, const ss::SubsetSumInstance& inst,
                             const ss::SubsetSumWitness& wit, const SsVerifier& verifier);
TvResult tv_exact_three_sat(const FieldCtxPtr& ctx, const sat::Cnf3& phi, const sat::Assignment& s,
                            const SatVerifier& verifier);

/// Empirical TV over `samples` draws per side (atoms = samples).
TvResult tv_sampled_subset_sum(const FieldCtxPtr& ctx, const ss::SubsetSumInstance& inst,
                               const ss::SubsetSumWitness& wit, const SsVerifier& verifier,
                               std::size_t samples, Rng& rng);
TvResult tv_sampled_three_sat(const FieldCtxPtr& ctx, const sat::Cnf3& phi,
                              const sat::Assignment& s, const SatVerifier& verifier,
                              std::size_t samples, Rng& rng);

/// Built-in deterministic strategy family: fixed challenges and challenges
/// adaptive in P1's response, over several values of a.
std::vector<SsVerifier> standard_ss_verifiers();
std::vector<SatVerifier> standard_sat_verifiers();

} // namespace relzk::zk
