#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "relzk/errors.hpp"
#include "relzk/rng.hpp"

namespace relzk {

using BigInt = boost::multiprecision::cpp_int;

class FieldCtx;
using FieldCtxPtr = std::shared_ptr<const FieldCtx>;

/// Immutable description of the prime field F_Q. Shared by every element of
/// the field; safe to hand to concurrent parties.
class FieldCtx {
public:
    /// q must be prime (checked with Miller-Rabin, error < 2^-128).
    static FieldCtxPtr create(BigInt q);

    const BigInt& modulus() const { return q_; }

    /// ceil(log2 Q)
    unsigned bit_length() const { return bits_; }

    /// Fixed serialized width of one element.
    std::size_t byte_width() const { return bytes_; }

    bool same_as(const FieldCtx& other) const { return this == &other || q_ == other.q_; }

private:
    explicit FieldCtx(BigInt q);

    BigInt q_;
    unsigned bits_;
    std::size_t bytes_;
};

/// Deterministic Miller-Rabin: small-prime sieve, then 64 strong rounds with
/// a witness schedule derived from the candidate itself (error < 2^-128).
bool is_probable_prime(const BigInt& n);

/// Smallest prime >= min_bound. Pure function of its argument.
FieldCtxPtr choose_prime(const BigInt& min_bound);

/// A residue mod Q, bound to its field. Value semantics; every operation
/// keeps 0 <= value < Q.
class FieldElement {
public:
    FieldElement(FieldCtxPtr ctx, BigInt v);

    const BigInt& value() const { return v_; }
    const FieldCtxPtr& ctx() const { return ctx_; }

    FieldElement operator+(const FieldElement& rhs) const;
    FieldElement operator-(const FieldElement& rhs) const;
    FieldElement operator*(const FieldElement& rhs) const;
    FieldElement operator-() const;

    /// Multiplicative inverse; throws DivisionByZero on 0.
    FieldElement inv() const;

    bool operator==(const FieldElement& rhs) const;
    bool operator!=(const FieldElement& rhs) const { return !(*this == rhs); }

    bool is_zero() const { return v_ == 0; }

    /// Fixed-width big-endian encoding (ctx->byte_width() bytes).
    std::vector<std::uint8_t> to_bytes() const;
    static FieldElement from_bytes(const FieldCtxPtr& ctx, std::span<const std::uint8_t> bytes);

    /// Uniform over {0, ..., Q-1}: byte_width-sized draws masked to
    /// bit_length bits, rejected while >= Q.
    static FieldElement random(const FieldCtxPtr& ctx, Rng& rng);

private:
    void check_ctx_(const FieldElement& rhs) const;

    FieldCtxPtr ctx_;
    BigInt v_;
};

/// Uniform integer in [0, bound).
BigInt random_below(const BigInt& bound, Rng& rng);

std::vector<FieldElement> random_vector(const FieldCtxPtr& ctx, std::size_t n, Rng& rng);

} // namespace relzk
