#include "relzk/subset_sum.hpp"

#include <cmath>

namespace relzk::ss {

namespace {

void check_dims(const SubsetSumInstance& inst, const ProverSharedState& st) {
    if (st.c0.size() != inst.size() || st.c1.size() != inst.size() || st.z.size() != inst.size()) {
        throw DimensionMismatch("shared state does not match instance size " +
                                std::to_string(inst.size()));
    }
}

} // namespace

BigInt SubsetSumInstance::sum() const {
    BigInt total = 0;
    for (const auto& v : s) total += v;
    return total;
}

bool check_witness(const SubsetSumInstance& inst, const SubsetSumWitness& wit) {
    if (wit.v.size() != inst.size()) return false;
    BigInt total = 0;
    for (std::size_t i = 0; i < inst.size(); ++i) {
        if (wit.v[i]) total += inst.s[i];
    }
    return total == inst.k;
}

ProverSharedState sample_shared_state(const FieldCtxPtr& ctx, std::size_t n, Rng& rng) {
    ProverSharedState st;
    st.c0 = random_vector(ctx, n, rng);
    st.c1 = random_vector(ctx, n, rng);
    st.z = random_bits(n, rng);
    return st;
}

P1Response p1_respond(const FieldElement& a, const SubsetSumInstance& inst,
                      const ProverSharedState& st) {
    check_dims(inst, st);
    const auto& ctx = a.ctx();
    P1Response out;
    out.w0.reserve(inst.size());
    out.w1.reserve(inst.size());
    for (std::size_t i = 0; i < inst.size(); ++i) {
        FieldElement si(ctx, inst.s[i]);
        FieldElement zero(ctx, 0);
        out.w0.push_back(a * (st.z[i] ? si : zero) + st.c0[i]);
        out.w1.push_back(a * (st.z[i] ? zero : si) + st.c1[i]);
    }
    return out;
}

P2Response p2_respond(std::uint8_t chall, const SubsetSumWitness& wit,
                      const ProverSharedState& st) {
    if (chall == 0) {
        return Chall0Response{st.z, st.c0, st.c1};
    }
    if (wit.v.size() != st.z.size()) {
        throw DimensionMismatch("witness does not match shared state size");
    }
    Chall1Response out{std::vector<std::uint8_t>(st.z.size()), FieldElement(st.c0[0].ctx(), 0)};
    for (std::size_t i = 0; i < st.z.size(); ++i) {
        out.x[i] = wit.v[i] ^ st.z[i];
        out.c_sum = out.c_sum + (out.x[i] ? st.c1[i] : st.c0[i]);
    }
    return out;
}

VerifyResult verify_round(const FieldElement& a, const SubsetSumInstance& inst,
                          const P1Response& resp1, std::uint8_t chall, const P2Response& resp2) {
    const auto& ctx = a.ctx();
    if (resp1.w0.size() != inst.size() || resp1.w1.size() != inst.size()) {
        return {false, "P1 response has wrong dimensions"};
    }

    if (chall == 0) {
        const auto* r = std::get_if<Chall0Response>(&resp2);
        if (!r) return {false, "P2 answered the wrong challenge"};
        if (r->z.size() != inst.size() || r->c0.size() != inst.size() ||
            r->c1.size() != inst.size()) {
            return {false, "P2 chall=0 response has wrong dimensions"};
        }
        for (std::size_t i = 0; i < inst.size(); ++i) {
            FieldElement si(ctx, inst.s[i]);
            FieldElement zero(ctx, 0);
            if (resp1.w0[i] != a * (r->z[i] ? si : zero) + r->c0[i]) {
                return {false, "w0[" + std::to_string(i) + "] does not match the revealed keys"};
            }
            if (resp1.w1[i] != a * (r->z[i] ? zero : si) + r->c1[i]) {
                return {false, "w1[" + std::to_string(i) + "] does not match the revealed keys"};
            }
        }
        return {true, ""};
    }

    const auto* r = std::get_if<Chall1Response>(&resp2);
    if (!r) return {false, "P2 answered the wrong challenge"};
    if (r->x.size() != inst.size()) return {false, "P2 chall=1 response has wrong dimensions"};
    FieldElement lhs(ctx, 0);
    for (std::size_t i = 0; i < inst.size(); ++i) {
        lhs = lhs + (r->x[i] ? resp1.w1[i] : resp1.w0[i]);
    }
    FieldElement rhs = a * FieldElement(ctx, inst.k) + r->c_sum;
    if (lhs != rhs) return {false, "sum of selected w entries != a*k + c'"};
    return {true, ""};
}

std::optional<FieldElement> extract_a(const FieldCtxPtr& ctx, const SubsetSumInstance& inst,
                                      const Chall0Response& chall0, const Chall1Response& chall1) {
    const std::size_t n = inst.size();
    if (chall0.z.size() != n || chall0.c0.size() != n || chall0.c1.size() != n ||
        chall1.x.size() != n) {
        throw DimensionMismatch("extract_a: responses do not match instance size");
    }
    // denominator: sum_i s_i * (x_i xor z_i) - k. Zero exactly when x xor z
    // is a witness (sums cannot wrap since Q > sum(s)).
    FieldElement denom(ctx, -inst.k);
    FieldElement numer = chall1.c_sum;
    for (std::size_t i = 0; i < n; ++i) {
        if (chall1.x[i] ^ chall0.z[i]) denom = denom + FieldElement(ctx, inst.s[i]);
        numer = numer - (chall1.x[i] ? chall0.c1[i] : chall0.c0[i]);
    }
    if (denom.is_zero()) return std::nullopt;
    return numer * denom.inv();
}

FieldCtxPtr choose_params(std::size_t n, unsigned security_k, const BigInt& instance_sum) {
    if (n < 1 || security_k < 1) throw std::invalid_argument("choose_params: n, K must be >= 1");
    BigInt soundness_bound = BigInt(64) << (n + 3 * static_cast<std::size_t>(security_k));
    BigInt hiding_bound = instance_sum + 1;
    return choose_prime(std::max(soundness_bound, hiding_bound));
}

double round_bits(std::size_t n, double log_q) {
    double dn = static_cast<double>(n);
    return log_q + 1 + 2 * dn * log_q + (dn + (2 * dn * log_q + log_q) / 2);
}

int rounds_needed(unsigned security_k, unsigned target_exponent) {
    double eps = 0.5 + std::exp2(-static_cast<double>(security_k));
    if (eps >= 1.0) throw std::invalid_argument("rounds_needed: per-round error must be < 1");
    if (target_exponent == 0) return 0;
    return static_cast<int>(std::ceil(target_exponent / -std::log2(eps)));
}

std::pair<SubsetSumInstance, SubsetSumWitness> generate_instance(std::size_t n,
                                                                 const FieldCtxPtr& ctx, Rng& rng,
                                                                 bool nonempty_subset) {
    if (n < 1) throw std::invalid_argument("generate_instance: n must be >= 1");
    // [1, (Q-1)/n] keeps sum(s) <= Q-1, strictly below Q for every n.
    BigInt upper = (ctx->modulus() - 1) / BigInt(static_cast<unsigned long>(n));
    if (upper < 1) throw std::invalid_argument("generate_instance: modulus too small for n");

    SubsetSumInstance inst;
    inst.s.reserve(n);
    for (std::size_t i = 0; i < n; ++i) inst.s.push_back(1 + random_below(upper, rng));

    SubsetSumWitness wit{random_bits(n, rng)};
    if (nonempty_subset) {
        auto empty = [](const std::vector<std::uint8_t>& bits) {
            for (auto b : bits)
                if (b) return false;
            return true;
        };
        while (empty(wit.v)) wit.v = random_bits(n, rng);
    }

    inst.k = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (wit.v[i]) inst.k += inst.s[i];
    }
    return {std::move(inst), std::move(wit)};
}

double log2_modulus(const FieldCtxPtr& ctx) {
    const BigInt& q = ctx->modulus();
    unsigned b = boost::multiprecision::msb(q);
    if (b <= 900) return std::log2(q.convert_to<double>());
    BigInt top = q >> (b - 52);
    return std::log2(top.convert_to<double>()) + static_cast<double>(b - 52);
}

} // namespace relzk::ss
