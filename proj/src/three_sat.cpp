#include "relzk/three_sat.hpp"

namespace relzk::sat {

namespace {

void check_perm(const CyclicPerm& perm, std::size_t m) {
    if (perm.rot.size() != m) throw DimensionMismatch("permutation does not cover all clauses");
    for (auto r : perm.rot) {
        if (r > 2) throw std::invalid_argument("rotation amounts must be in {0,1,2}");
    }
}

} // namespace

void Cnf3::validate() const {
    for (const auto& clause : clauses) {
        for (const auto& lit : clause) {
            if (lit.var < 1 || lit.var > var_count) {
                throw std::invalid_argument("literal variable index out of range");
            }
        }
    }
}

bool literal_value(const Literal& lit, const Assignment& s) {
    bool v = s.bits.at(lit.var - 1) != 0;
    return lit.negated ? !v : v;
}

bool evaluate(const Cnf3& phi, const Assignment& s) {
    if (s.bits.size() != phi.var_count) throw DimensionMismatch("assignment length != var count");
    for (const auto& clause : phi.clauses) {
        bool any = false;
        for (const auto& lit : clause) any = any || literal_value(lit, s);
        if (!any) return false;
    }
    return true;
}

PositionWitness witness_positions(const Cnf3& phi, const Assignment& s) {
    PositionWitness out;
    out.e.reserve(phi.clause_count());
    for (std::size_t i = 0; i < phi.clause_count(); ++i) {
        std::uint8_t pos = 0;
        for (std::uint8_t j = 0; j < 3; ++j) {
            if (literal_value(phi.clauses[i][j], s)) {
                pos = j + 1;
                break;
            }
        }
        if (pos == 0) {
            throw std::invalid_argument("clause " + std::to_string(i + 1) +
                                        " is not satisfied by the assignment");
        }
        out.e.push_back(pos);
    }
    return out;
}

Cnf3 apply_perm(const CyclicPerm& perm, const Cnf3& phi) {
    check_perm(perm, phi.clause_count());
    Cnf3 out;
    out.var_count = phi.var_count;
    out.clauses.reserve(phi.clause_count());
    for (std::size_t i = 0; i < phi.clause_count(); ++i) {
        const auto& old = phi.clauses[i];
        Clause rotated;
        for (std::size_t j = 0; j < 3; ++j) {
            rotated[j] = old[(j + 3 - perm.rot[i]) % 3]; // right rotation
        }
        out.clauses.push_back(rotated);
    }
    return out;
}

std::vector<std::uint8_t> apply_perm_positions(const CyclicPerm& perm, const PositionWitness& e) {
    check_perm(perm, e.e.size());
    std::vector<std::uint8_t> f(e.e.size());
    for (std::size_t i = 0; i < e.e.size(); ++i) {
        f[i] = static_cast<std::uint8_t>((e.e[i] - 1 + perm.rot[i]) % 3 + 1);
    }
    return f;
}

std::vector<std::uint8_t> formula_bits(const Cnf3& permuted_phi, const Assignment& s) {
    std::vector<std::uint8_t> p;
    p.reserve(3 * permuted_phi.clause_count());
    for (const auto& clause : permuted_phi.clauses) {
        for (const auto& lit : clause) p.push_back(literal_value(lit, s) ? 1 : 0);
    }
    return p;
}

SatSharedState sample_shared_state(const FieldCtxPtr& ctx, const Cnf3& phi, Rng& rng) {
    SatSharedState st;
    st.perm.rot.reserve(phi.clause_count());
    for (std::size_t i = 0; i < phi.clause_count(); ++i) {
        st.perm.rot.push_back(static_cast<std::uint8_t>(rng.below(3)));
    }
    st.c = random_vector(ctx, 3 * phi.clause_count(), rng);
    st.c_prime = random_vector(ctx, phi.var_count, rng);
    return st;
}

SatP1Response sat_p1_respond(const FieldElement& a, const SatSharedState& st, const Assignment& s,
                             std::span<const std::uint8_t> p) {
    if (st.c_prime.size() != s.bits.size() || st.c.size() != p.size()) {
        throw DimensionMismatch("shared state does not match assignment/formula dimensions");
    }
    const auto& ctx = a.ctx();
    SatP1Response out;
    out.w_prime.reserve(s.bits.size());
    out.w.reserve(p.size());
    FieldElement zero(ctx, 0);
    for (std::size_t j = 0; j < s.bits.size(); ++j) {
        out.w_prime.push_back((s.bits[j] ? a : zero) + st.c_prime[j]);
    }
    for (std::size_t i = 0; i < p.size(); ++i) {
        out.w.push_back((p[i] ? a : zero) + st.c[i]);
    }
    return out;
}

SatP2Response sat_p2_respond(std::uint8_t chall, const SatSharedState& st, const Cnf3& phi,
                             const PositionWitness& e) {
    const std::size_t m = phi.clause_count();
    check_perm(st.perm, m);
    if (chall == 0) {
        Cnf3 permuted = apply_perm(st.perm, phi);
        SatChall0Response out{st.perm, {}};
        out.delta.reserve(3 * m);
        for (std::size_t i = 0; i < 3 * m; ++i) {
            const Literal& lit = permuted.clauses[i / 3][i % 3];
            const FieldElement& key = st.c_prime.at(lit.var - 1);
            out.delta.push_back(lit.negated ? st.c[i] + key : st.c[i] - key);
        }
        return out;
    }
    std::vector<std::uint8_t> f = apply_perm_positions(st.perm, e);
    SatChall1Response out{f, {}};
    out.gamma.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        out.gamma.push_back(st.c.at(3 * i + f[i] - 1));
    }
    return out;
}

VerifyResult sat_verify_round(const FieldElement& a, const Cnf3& phi, const SatP1Response& resp1,
                              std::uint8_t chall, const SatP2Response& resp2) {
    const std::size_t m = phi.clause_count();
    if (resp1.w_prime.size() != phi.var_count || resp1.w.size() != 3 * m) {
        return {false, "P1 response has wrong dimensions"};
    }

    if (chall == 0) {
        const auto* r = std::get_if<SatChall0Response>(&resp2);
        if (!r) return {false, "P2 answered the wrong challenge"};
        if (r->perm.rot.size() != m || r->delta.size() != 3 * m) {
            return {false, "P2 chall=0 response has wrong dimensions"};
        }
        for (auto rot : r->perm.rot) {
            if (rot > 2) return {false, "rotation amount out of range"};
        }
        Cnf3 permuted = apply_perm(r->perm, phi);
        for (std::size_t i = 0; i < 3 * m; ++i) {
            const Literal& lit = permuted.clauses[i / 3][i % 3];
            const FieldElement& wj = resp1.w_prime[lit.var - 1];
            bool ok = lit.negated ? (resp1.w[i] + wj == a + r->delta[i])
                                  : (resp1.w[i] - wj == r->delta[i]);
            if (!ok) {
                return {false, "key equation fails at position " + std::to_string(i + 1)};
            }
        }
        return {true, ""};
    }

    const auto* r = std::get_if<SatChall1Response>(&resp2);
    if (!r) return {false, "P2 answered the wrong challenge"};
    if (r->f.size() != m || r->gamma.size() != m) {
        return {false, "P2 chall=1 response has wrong dimensions"};
    }
    for (std::size_t i = 0; i < m; ++i) {
        if (r->f[i] < 1 || r->f[i] > 3) return {false, "pointed position out of range"};
        if (resp1.w[3 * i + r->f[i] - 1] != a + r->gamma[i]) {
            return {false, "unveil equation fails at clause " + std::to_string(i + 1)};
        }
    }
    return {true, ""};
}

std::optional<FieldElement> sat_extract_a(const Cnf3& phi, const SatChall0Response& chall0,
                                          const SatChall1Response& chall1) {
    const std::size_t m = phi.clause_count();
    check_perm(chall0.perm, m);
    if (chall0.delta.size() != 3 * m || chall1.f.size() != m || chall1.gamma.size() != m) {
        throw DimensionMismatch("sat_extract_a: responses do not match formula dimensions");
    }
    Cnf3 permuted = apply_perm(chall0.perm, phi);

    // Pointed literal of each clause under the chall=1 answer.
    std::vector<std::size_t> flat(m);
    for (std::size_t i = 0; i < m; ++i) {
        if (chall1.f[i] < 1 || chall1.f[i] > 3) {
            throw std::invalid_argument("pointed position out of range");
        }
        flat[i] = 3 * i + chall1.f[i] - 1;
    }

    for (std::size_t i = 0; i < m; ++i) {
        const Literal& neg = permuted.clauses[i][flat[i] % 3];
        if (!neg.negated) continue;
        for (std::size_t i2 = 0; i2 < m; ++i2) {
            if (i2 == i) continue;
            const Literal& plain = permuted.clauses[i2][flat[i2] % 3];
            if (plain.negated || plain.var != neg.var) continue;
            // the conflicting-clause identity
            return chall0.delta[flat[i]] + chall0.delta[flat[i2]] - chall1.gamma[i] -
                   chall1.gamma[i2];
        }
    }
    return std::nullopt;
}

FieldCtxPtr sat_choose_params(std::size_t m, unsigned security_k) {
    if (m < 1 || security_k < 1) {
        throw std::invalid_argument("sat_choose_params: m, k must be >= 1");
    }
    BigInt pow3 = 1;
    for (std::size_t i = 0; i < m; ++i) pow3 *= 3;
    BigInt bound = (BigInt(64) * pow3) << (3 * static_cast<std::size_t>(security_k));
    return choose_prime(bound);
}

double sat_round_bits(std::size_t n, std::size_t m, double log_q) {
    double dn = static_cast<double>(n), dm = static_cast<double>(m);
    double chall0 = 2 * dm + 3 * dm * log_q;  // permutation + delta
    double chall1 = dm * (log_q + 2);         // pointed positions + gamma
    return log_q + 1 + (dn + 3 * dm) * log_q + (chall0 + chall1) / 2;
}

std::pair<Cnf3, Assignment> generate_satisfiable(unsigned n, std::size_t m, Rng& rng) {
    if (n < 1) throw std::invalid_argument("generate_satisfiable: need at least one variable");
    Assignment plant{random_bits(n, rng)};
    Cnf3 phi;
    phi.var_count = n;
    phi.clauses.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        Clause clause;
        for (auto& lit : clause) {
            lit.var = 1 + static_cast<unsigned>(rng.below(n));
            lit.negated = rng.next_bit() != 0;
        }
        bool satisfied = false;
        for (const auto& lit : clause) satisfied = satisfied || literal_value(lit, plant);
        if (!satisfied) {
            Literal& lit = clause[rng.below(3)];
            lit.negated = plant.bits[lit.var - 1] == 0; // force that literal true
        }
        phi.clauses.push_back(clause);
    }
    return {std::move(phi), std::move(plant)};
}

bool brute_force_satisfiable(const Cnf3& phi) {
    if (phi.var_count > 20) throw SizeGuardExceeded("brute-force SAT oracle capped at 2^20");
    Assignment s{std::vector<std::uint8_t>(phi.var_count, 0)};
    const std::size_t total = std::size_t{1} << phi.var_count;
    for (std::size_t mask = 0; mask < total; ++mask) {
        for (unsigned j = 0; j < phi.var_count; ++j) s.bits[j] = (mask >> j) & 1;
        if (evaluate(phi, s)) return true;
    }
    return false;
}

} // namespace relzk::sat
