#pragma once

#include <stdexcept>
#include <string>

namespace dcqkd {

// Protocol-level aborts are values (AbortReason), not exceptions. The types
// below cover contract violations and harness failures that callers are not
// expected to recover from in-protocol.

struct KeystreamExhausted : std::runtime_error {
    explicit KeystreamExhausted(const std::string& m) : std::runtime_error(m) {}
};

struct InsufficientReserve : std::runtime_error {
    explicit InsufficientReserve(const std::string& m) : std::runtime_error(m) {}
};

struct KeyExhausted : std::runtime_error {
    explicit KeyExhausted(const std::string& m) : std::runtime_error(m) {}
};

struct LengthMismatchError : std::runtime_error {
    explicit LengthMismatchError(const std::string& m) : std::runtime_error(m) {}
};

struct ProtocolViolation : std::logic_error {
    explicit ProtocolViolation(const std::string& m) : std::logic_error(m) {}
};

struct TransportError : std::runtime_error {
    explicit TransportError(const std::string& m) : std::runtime_error(m) {}
};

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& m) : std::runtime_error(m) {}
};

struct ModelMismatch : std::logic_error {
    explicit ModelMismatch(const std::string& m) : std::logic_error(m) {}
};

}  // namespace dcqkd
