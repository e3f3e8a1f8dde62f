#pragma once

#include <stdexcept>
#include <string>

namespace relzk {

/// Two field elements from different moduli were combined.
class ContextMismatch : public std::invalid_argument {
public:
    explicit ContextMismatch(const std::string& what) : std::invalid_argument(what) {}
};

/// Multiplicative inverse of zero.
class DivisionByZero : public std::domain_error {
public:
    explicit DivisionByZero(const std::string& what) : std::domain_error(what) {}
};

/// Malformed byte string or text record.
class DecodeError : public std::runtime_error {
public:
    explicit DecodeError(const std::string& what) : std::runtime_error(what) {}
};

/// Vector operands of incompatible length.
class DimensionMismatch : public std::invalid_argument {
public:
    explicit DimensionMismatch(const std::string& what) : std::invalid_argument(what) {}
};

/// Exhaustive search asked to enumerate more than the configured cap.
class SizeGuardExceeded : public std::length_error {
public:
    explicit SizeGuardExceeded(const std::string& what) : std::length_error(what) {}
};

/// A party broke the message discipline of the session (wrong channel,
/// wrong step order, wrong payload shape).
class ProtocolViolation : public std::runtime_error {
public:
    explicit ProtocolViolation(const std::string& what) : std::runtime_error(what) {}
};

} // namespace relzk
