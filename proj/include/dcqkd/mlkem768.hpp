#pragma once

#include <array>
#include <utility>

#include "dcqkd/bytes.hpp"

namespace dcqkd::mlkem768 {

// ML-KEM-768: k = 3, eta1 = eta2 = 2, du = 10, dv = 4.
inline constexpr size_t EK_BYTES = 1184;
inline constexpr size_t DK_BYTES = 2400;
inline constexpr size_t CT_BYTES = 1088;
inline constexpr size_t SS_BYTES = 32;

struct KeyPair {
    Bytes ek;
    Bytes dk;  // dk_pke || ek || H(ek) || z
};

/// Deterministic key generation from the 32-byte seeds (d, z).
KeyPair keygen_from_seed(ByteView d32, ByteView z32);

/// Deterministic encapsulation with explicit 32-byte message coins.
std::pair<Bytes, std::array<uint8_t, 32>> encaps_with_coins(ByteView ek, ByteView m32);

/// Decapsulation with implicit rejection: a tampered ciphertext yields a
/// pseudorandom secret, never a failure.
std::array<uint8_t, 32> decaps(ByteView dk, ByteView ct);

/// Encapsulation-key check: length and canonical (mod q) encoding.
bool validate_ek(ByteView ek);

}  // namespace dcqkd::mlkem768
