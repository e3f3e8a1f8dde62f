#pragma once

#include <span>
#include <utility>

#include "relzk/field.hpp"

namespace relzk {

/// The verifier-side challenge of the two-prover commitment: V1's uniform a.
struct CommitChallenge {
    FieldElement a;
};

/// Prover-side blinding key c, shared by both provers ahead of the round.
struct CommitKey {
    FieldElement c;
};

/// What the verifiers hold after the commit phase: w = a*b + c.
struct CommitValue {
    FieldElement w;
};

/// What P2 reveals in the unveil phase.
struct Opening {
    FieldElement b;
    FieldElement c;
};

/// Commit phase: w = a*b + c.
CommitValue commit(const CommitChallenge& a, const FieldElement& b, const CommitKey& key);

/// Unveil check: w == a*b + c. False is the failure signal.
bool verify_open(const CommitChallenge& a, const CommitValue& w, const Opening& opening);

/// Linear combination of commitments made under the same challenge a.
/// The result commits to sum(coeff_i * b_i) with key sum(coeff_i * c_i).
CommitValue combine_linear(std::span<const FieldElement> coeffs, std::span<const CommitValue> ws);

/// Prover-side mirror of combine_linear.
CommitKey combine_keys(std::span<const FieldElement> coeffs, std::span<const CommitKey> keys);

/// The equivocation attempt the binding argument bounds: openings for two
/// different values b and b2 built from a guess of a. Both verify iff the
/// guess was right.
std::pair<Opening, Opening> double_open_attack(const CommitValue& w, const FieldElement& b,
                                               const FieldElement& b2, const FieldElement& guess_a);

} // namespace relzk
