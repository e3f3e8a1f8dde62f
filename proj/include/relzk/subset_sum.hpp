#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "relzk/field.hpp"

namespace relzk::ss {

/// A Subset Sum instance over plain positive integers. Protocol runs embed
/// the values into F_Q; the invariant Q > sum(s) keeps both views equal.
struct SubsetSumInstance {
    std::vector<BigInt> s;
    BigInt k;

    std::size_t size() const { return s.size(); }
    BigInt sum() const;
};

struct SubsetSumWitness {
    std::vector<std::uint8_t> v; // bits, one per set element
};

/// sum(v_i * s_i) == k over the integers.
bool check_witness(const SubsetSumInstance& inst, const SubsetSumWitness& wit);

/// Randomness both provers share before a round: masks for the two rows of
/// commitments and the row-shuffle bits z.
struct ProverSharedState {
    std::vector<FieldElement> c0, c1;
    std::vector<std::uint8_t> z;
};

ProverSharedState sample_shared_state(const FieldCtxPtr& ctx, std::size_t n, Rng& rng);

/// P1's masked rows: w0 = a*(s.z) + c0, w1 = a*(s.z_bar) + c1 (entry-wise).
struct P1Response {
    std::vector<FieldElement> w0, w1;
};

/// chall = 0: reveal the whole shared state.
struct Chall0Response {
    std::vector<std::uint8_t> z;
    std::vector<FieldElement> c0, c1;
};

/// chall = 1: reveal x = v xor z and the one combined key
/// c' = sum_i (c_{x_i})_i, where x_i picks the row and i the coordinate.
struct Chall1Response {
    std::vector<std::uint8_t> x;
    FieldElement c_sum;
};

using P2Response = std::variant<Chall0Response, Chall1Response>;

P1Response p1_respond(const FieldElement& a, const SubsetSumInstance& inst,
                      const ProverSharedState& st);

P2Response p2_respond(std::uint8_t chall, const SubsetSumWitness& wit,
                      const ProverSharedState& st);

struct VerifyResult {
    bool accepted;
    std::string reason; // names the failing equation on reject
};

VerifyResult verify_round(const FieldElement& a, const SubsetSumInstance& inst,
                          const P1Response& resp1, std::uint8_t chall, const P2Response& resp2);

/// The soundness identity: from P2's answers to both challenges of one round
/// on a NO-instance, recover V1's secret a. Returns nullopt (no conflict)
/// exactly when x xor z is a valid witness.
std::optional<FieldElement> extract_a(const FieldCtxPtr& ctx, const SubsetSumInstance& inst,
                                      const Chall0Response& chall0, const Chall1Response& chall1);

/// Field selection: smallest prime >= max(64 * 2^(n+3K), instance_sum + 1),
/// giving single-round soundness 1/2 + 2^-K and wrap-free sums.
FieldCtxPtr choose_params(std::size_t n, unsigned security_k, const BigInt& instance_sum);

/// Expected bits per round (expectation over the uniform challenge):
/// log2(Q) + 1 + 2n log2(Q) + (n + (2n log2(Q) + log2(Q)) / 2).
double round_bits(std::size_t n, double log_q);

/// Rounds to push total soundness error below 2^-target_exponent at
/// per-round error 1/2 + 2^-K.
int rounds_needed(unsigned security_k, unsigned target_exponent);

/// Positive instance with a known witness: s_i uniform in [1, (Q-1)/n] so
/// sums cannot wrap, k the sum of a uniformly chosen subset.
std::pair<SubsetSumInstance, SubsetSumWitness> generate_instance(std::size_t n,
                                                                 const FieldCtxPtr& ctx, Rng& rng,
                                                                 bool nonempty_subset = false);

/// log2(Q) as a double. The accounting formulas charge log2(Q) bits per
/// field element, as opposed to the byte_width * 8 bits of the realized
/// fixed-width encoding.
double log2_modulus(const FieldCtxPtr& ctx);

} // namespace relzk::ss
