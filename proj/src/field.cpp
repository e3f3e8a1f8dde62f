#include "relzk/field.hpp"

#include <boost/multiprecision/integer.hpp>

#include <algorithm>
#include <utility>

namespace relzk {

namespace {

namespace mp = boost::multiprecision;

const int kSmallPrimes[] = {
    2,   3,   5,   7,   11,  13,  17,  19,  23,  29,  31,  37,  41,  43,  47,  53,  59,  61,
    67,  71,  73,  79,  83,  89,  97,  101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151,
    157, 163, 167, 173, 179, 181, 191, 193, 197, 199, 211, 223, 227, 229, 233, 239, 241, 251,
    257, 263, 269, 271, 277, 281, 283, 293, 307, 311, 313, 317, 331, 337, 347, 349, 353, 359,
    367, 373, 379, 383, 389, 397, 401, 409, 419, 421, 431, 433, 439, 443, 449, 457, 461, 463,
    467, 479, 487, 491, 499, 503, 509, 521, 523, 541, 547, 557, 563, 569, 571, 577, 587, 593,
    599, 601, 607, 613, 617, 619, 631, 641, 643, 647, 653, 659, 661, 673, 677, 683, 691, 701,
    709, 719, 727, 733, 739, 743, 751, 757, 761, 769, 773, 787, 797, 809, 811, 821, 823, 827,
    829, 839, 853, 857, 859, 863, 877, 881, 883, 887, 907, 911, 919, 929, 937, 941, 947, 953,
    967, 971, 977, 983, 991, 997};

// Fixed round count for error < 2^-128 (each strong round errs <= 1/4).
constexpr int kMillerRabinRounds = 64;

bool strong_probable_prime(const BigInt& n, const BigInt& base, const BigInt& d, unsigned s) {
    BigInt x = mp::powm(base, d, n);
    if (x == 1 || x == n - 1) return true;
    for (unsigned i = 1; i < s; ++i) {
        x = (x * x) % n;
        if (x == n - 1) return true;
    }
    return false;
}

} // namespace

bool is_probable_prime(const BigInt& n) {
    if (n < 2) return false;
    for (int p : kSmallPrimes) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    if (n < 997 * 997) return true; // fully trial-divided above

    // n - 1 = d * 2^s
    BigInt d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }

    // Witness schedule seeded from the candidate so the test is a pure
    // function of n.
    std::uint64_t seed = static_cast<std::uint64_t>(n % BigInt("18446744073709551557"));
    Rng witness_rng(seed ^ 0xa5a5a5a55a5a5a5aULL);
    for (int round = 0; round < kMillerRabinRounds; ++round) {
        BigInt base = 2 + random_below(n - 3, witness_rng);
        if (!strong_probable_prime(n, base, d, s)) return false;
    }
    return true;
}

FieldCtx::FieldCtx(BigInt q) : q_(std::move(q)) {
    unsigned msb_index = mp::msb(q_); // position of highest set bit
    bool power_of_two = (q_ & (q_ - 1)) == 0;
    bits_ = msb_index + (power_of_two ? 0 : 1);
    if (bits_ == 0) bits_ = 1;
    bytes_ = (bits_ + 7) / 8;
}

FieldCtxPtr FieldCtx::create(BigInt q) {
    if (!is_probable_prime(q)) {
        throw std::invalid_argument("FieldCtx: modulus is not prime: " + q.str());
    }
    return FieldCtxPtr(new FieldCtx(std::move(q)));
}

FieldCtxPtr choose_prime(const BigInt& min_bound) {
    if (min_bound < 2) throw std::invalid_argument("choose_prime: bound must be >= 2");
    if (min_bound == 2) return FieldCtx::create(2);
    BigInt candidate = min_bound;
    if ((candidate & 1) == 0) ++candidate;
    while (!is_probable_prime(candidate)) candidate += 2;
    return FieldCtx::create(std::move(candidate));
}

FieldElement::FieldElement(FieldCtxPtr ctx, BigInt v) : ctx_(std::move(ctx)), v_(std::move(v)) {
    if (!ctx_) throw std::invalid_argument("FieldElement: null context");
    v_ %= ctx_->modulus();
    if (v_ < 0) v_ += ctx_->modulus();
}

void FieldElement::check_ctx_(const FieldElement& rhs) const {
    if (!ctx_->same_as(*rhs.ctx_)) {
        throw ContextMismatch("field elements from different moduli: " + ctx_->modulus().str() +
                              " vs " + rhs.ctx_->modulus().str());
    }
}

FieldElement FieldElement::operator+(const FieldElement& rhs) const {
    check_ctx_(rhs);
    BigInt r = v_ + rhs.v_;
    if (r >= ctx_->modulus()) r -= ctx_->modulus();
    return FieldElement(ctx_, std::move(r));
}

FieldElement FieldElement::operator-(const FieldElement& rhs) const {
    check_ctx_(rhs);
    BigInt r = v_ - rhs.v_;
    if (r < 0) r += ctx_->modulus();
    return FieldElement(ctx_, std::move(r));
}

FieldElement FieldElement::operator*(const FieldElement& rhs) const {
    check_ctx_(rhs);
    return FieldElement(ctx_, (v_ * rhs.v_) % ctx_->modulus());
}

FieldElement FieldElement::operator-() const {
    return FieldElement(ctx_, v_ == 0 ? BigInt(0) : ctx_->modulus() - v_);
}

FieldElement FieldElement::inv() const {
    if (v_ == 0) throw DivisionByZero("inverse of zero in F_" + ctx_->modulus().str());
    // Q prime, so x^(Q-2) = x^-1.
    return FieldElement(ctx_, boost::multiprecision::powm(v_, ctx_->modulus() - 2, ctx_->modulus()));
}

bool FieldElement::operator==(const FieldElement& rhs) const {
    check_ctx_(rhs);
    return v_ == rhs.v_;
}

std::vector<std::uint8_t> FieldElement::to_bytes() const {
    std::vector<std::uint8_t> out(ctx_->byte_width(), 0);
    if (v_ != 0) {
        std::vector<std::uint8_t> tmp;
        boost::multiprecision::export_bits(v_, std::back_inserter(tmp), 8);
        std::copy(tmp.begin(), tmp.end(), out.begin() + (out.size() - tmp.size()));
    }
    return out;
}

FieldElement FieldElement::from_bytes(const FieldCtxPtr& ctx, std::span<const std::uint8_t> bytes) {
    if (bytes.size() != ctx->byte_width()) {
        throw DecodeError("field element: expected " + std::to_string(ctx->byte_width()) +
                          " bytes, got " + std::to_string(bytes.size()));
    }
    BigInt v = 0;
    boost::multiprecision::import_bits(v, bytes.begin(), bytes.end(), 8);
    if (v >= ctx->modulus()) {
        throw DecodeError("field element: value " + v.str() + " >= modulus");
    }
    return FieldElement(ctx, std::move(v));
}

BigInt random_below(const BigInt& bound, Rng& rng) {
    if (bound <= 0) throw std::invalid_argument("random_below: bound must be positive");
    if (bound == 1) return 0;
    BigInt top = bound - 1;
    unsigned bits = boost::multiprecision::msb(top) + 1;
    std::size_t nbytes = (bits + 7) / 8;
    unsigned top_mask_bits = bits % 8 == 0 ? 8 : bits % 8;
    std::uint8_t mask = static_cast<std::uint8_t>((1u << top_mask_bits) - 1);

    std::vector<std::uint8_t> buf(nbytes);
    for (;;) {
        rng.fill_bytes(buf);
        buf[0] &= mask;
        BigInt v = 0;
        boost::multiprecision::import_bits(v, buf.begin(), buf.end(), 8);
        if (v < bound) return v;
    }
}

FieldElement FieldElement::random(const FieldCtxPtr& ctx, Rng& rng) {
    return FieldElement(ctx, random_below(ctx->modulus(), rng));
}

std::vector<FieldElement> random_vector(const FieldCtxPtr& ctx, std::size_t n, Rng& rng) {
    std::vector<FieldElement> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(FieldElement::random(ctx, rng));
    return out;
}

} // namespace relzk
