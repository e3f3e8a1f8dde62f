#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "relzk/field.hpp"
#include "relzk/subset_sum.hpp" // VerifyResult

namespace relzk::sat {

using ss::VerifyResult;

struct Literal {
    unsigned var; // 1-based variable index
    bool negated;
};

using Clause = std::array<Literal, 3>;

/// 3-CNF over variables x_1..x_n: exactly three literals per clause.
/// A variable may repeat within a clause.
struct Cnf3 {
    unsigned var_count = 0;
    std::vector<Clause> clauses;

    std::size_t clause_count() const { return clauses.size(); }
    void validate() const; // literal indices in 1..var_count
};

struct Assignment {
    std::vector<std::uint8_t> bits; // one per variable
};

/// Per-clause position (1..3) of a satisfied literal.
struct PositionWitness {
    std::vector<std::uint8_t> e;
};

/// One right-rotation amount in {0,1,2} per clause. |CP| = 3^m.
struct CyclicPerm {
    std::vector<std::uint8_t> rot;
};

/// Pre-round shared randomness: the clause permutation plus one-time keys
/// for the formula bits (c, length 3m) and the assignment (c', length n).
struct SatSharedState {
    CyclicPerm perm;
    std::vector<FieldElement> c;
    std::vector<FieldElement> c_prime;
};

/// P1's masked vectors: w' = a*s' + c' and w = a*p + c.
struct SatP1Response {
    std::vector<FieldElement> w_prime; // n
    std::vector<FieldElement> w;       // 3m
};

/// chall = 0: the permutation plus, per position, the combined key
/// c_i + c'_j (negated literal) or c_i - c'_j (plain literal).
struct SatChall0Response {
    CyclicPerm perm;
    std::vector<FieldElement> delta; // 3m
};

/// chall = 1: the pointed position of a 1 in each permuted clause and its key.
struct SatChall1Response {
    std::vector<std::uint8_t> f;     // m entries in 1..3
    std::vector<FieldElement> gamma; // m
};

using SatP2Response = std::variant<SatChall0Response, SatChall1Response>;

bool literal_value(const Literal& lit, const Assignment& s);

bool evaluate(const Cnf3& phi, const Assignment& s);

/// Smallest satisfied position per clause; throws if some clause has none.
PositionWitness witness_positions(const Cnf3& phi, const Assignment& s);

Cnf3 apply_perm(const CyclicPerm& perm, const Cnf3& phi);

/// Where the pointed literals land after the rotation: f_i in 1..3.
std::vector<std::uint8_t> apply_perm_positions(const CyclicPerm& perm, const PositionWitness& e);

/// p_(3(i-1)+j) = value of the j-th literal of clause i under s.
/// Takes the already-permuted formula.
std::vector<std::uint8_t> formula_bits(const Cnf3& permuted_phi, const Assignment& s);

SatSharedState sample_shared_state(const FieldCtxPtr& ctx, const Cnf3& phi, Rng& rng);

SatP1Response sat_p1_respond(const FieldElement& a, const SatSharedState& st, const Assignment& s,
                             std::span<const std::uint8_t> p);

SatP2Response sat_p2_respond(std::uint8_t chall, const SatSharedState& st, const Cnf3& phi,
                             const PositionWitness& e);

VerifyResult sat_verify_round(const FieldElement& a, const Cnf3& phi, const SatP1Response& resp1,
                              std::uint8_t chall, const SatP2Response& resp2);

/// Conflicting-clause extraction: find a variable negated at one pointed
/// position and plain at another; their delta/gamma combination equals a.
/// nullopt means the pointed literals induce a consistent (satisfying)
/// assignment.
std::optional<FieldElement> sat_extract_a(const Cnf3& phi, const SatChall0Response& chall0,
                                          const SatChall1Response& chall1);

/// Smallest prime >= 64 * 3^m * 2^(3k): single-round soundness 1/2 + 2^-k
/// (the game is 3^m-projective).
FieldCtxPtr sat_choose_params(std::size_t m, unsigned security_k);

/// Expected bits per round over the uniform challenge. Field elements are
/// charged log2(Q) bits, clause positions and rotations 2 bits each.
double sat_round_bits(std::size_t n, std::size_t m, double log_q);

/// Random 3-CNF with a planted satisfying assignment: if a sampled clause
/// misses the plant, one literal's sign is flipped.
std::pair<Cnf3, Assignment> generate_satisfiable(unsigned n, std::size_t m, Rng& rng);

/// Exhaustive test oracle; guarded at 2^20 assignments.
bool brute_force_satisfiable(const Cnf3& phi);

} // namespace relzk::sat
