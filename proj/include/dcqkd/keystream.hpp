#pragma once

#include <cstdint>

#include "dcqkd/bits.hpp"
#include "dcqkd/errors.hpp"
#include "dcqkd/kem.hpp"

namespace dcqkd {

enum class Direction : uint8_t { AtoB = 0, BtoA = 1 };

inline Direction reverse(Direction d) {
    return d == Direction::AtoB ? Direction::BtoA : Direction::AtoB;
}

/// Shared pseudorandom bits driving quantum-layer authentication. Both
/// parties expand the same inputs to bit-identical streams; the cursor only
/// moves forward. Expansion is length-extensible: the first n bits of a
/// longer request equal a shorter request's output.
class Keystream {
public:
    Keystream() = default;
    explicit Keystream(BitVec bits) : bits_(std::move(bits)) {}

    size_t size() const { return bits_.size(); }
    size_t cursor() const { return cursor_; }
    size_t remaining() const { return bits_.size() - cursor_; }

    int take_bit() {
        if (cursor_ >= bits_.size()) throw KeystreamExhausted("keystream exhausted");
        return bits_.get(cursor_++);
    }

    uint64_t take_bits(size_t k) {
        uint64_t v = 0;
        for (size_t i = 0; i < k; ++i) v |= static_cast<uint64_t>(take_bit()) << i;
        return v;
    }

    const BitVec& bits() const { return bits_; }

private:
    BitVec bits_;
    size_t cursor_ = 0;
};

/// Round-1 keystream: expansion of the KEM shared secret, domain-separated by
/// session and direction.
Keystream derive_keystream(const SharedSecret& ss, uint64_t session_id, Direction dir,
                           size_t n_bits);

inline constexpr size_t kNextRoundMinReserveBits = 256;

/// Round >= 2 keystream drawn from the reserved slice of an earlier session's
/// final key; the KEM is not involved. Throws InsufficientReserve below the
/// minimum reserve length.
Keystream next_round_keystream(const BitVec& reserved_bits, uint64_t session_id, Direction dir,
                               size_t n_bits);

// Per-session subkeys derived from the shared secret.
std::array<uint8_t, 32> confirm_key(const SharedSecret& ss, uint64_t session_id);
std::array<uint8_t, 32> mac_key(const SharedSecret& ss, uint64_t session_id, Direction dir);
uint64_t signal_phase_seed(const SharedSecret& ss, uint64_t session_id);

}  // namespace dcqkd
