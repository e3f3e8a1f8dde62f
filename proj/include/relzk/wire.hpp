#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "relzk/field.hpp"

namespace relzk::wire {

/// 0/1 bits packed MSB-first into ceil(n/8) bytes.
inline std::vector<std::uint8_t> pack_bits(std::span<const std::uint8_t> bits) {
    std::vector<std::uint8_t> out((bits.size() + 7) / 8, 0);
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i]) out[i / 8] |= static_cast<std::uint8_t>(0x80u >> (i % 8));
    }
    return out;
}

/// Values in 0..3 packed two bits each, MSB-first, into ceil(n/4) bytes.
/// Clause rotations and pointed positions ride this encoding.
inline std::vector<std::uint8_t> pack_crumbs(std::span<const std::uint8_t> vals) {
    std::vector<std::uint8_t> out((vals.size() + 3) / 4, 0);
    for (std::size_t i = 0; i < vals.size(); ++i) {
        out[i / 4] |= static_cast<std::uint8_t>((vals[i] & 0x3u) << (6 - 2 * (i % 4)));
    }
    return out;
}

inline void append_fe(std::vector<std::uint8_t>& out, const FieldElement& x) {
    auto b = x.to_bytes();
    out.insert(out.end(), b.begin(), b.end());
}

inline void append_fe_vec(std::vector<std::uint8_t>& out, std::span<const FieldElement> xs) {
    for (const auto& x : xs) append_fe(out, x);
}

inline void append_bytes(std::vector<std::uint8_t>& out, std::span<const std::uint8_t> bytes) {
    out.insert(out.end(), bytes.begin(), bytes.end());
}

inline std::string to_hex(std::span<const std::uint8_t> bytes) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(2 * bytes.size());
    for (auto b : bytes) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 0xf]);
    }
    return out;
}

} // namespace relzk::wire
