#pragma once

#include <array>
#include <optional>

#include "dcqkd/bytes.hpp"

namespace dcqkd::crypto {

std::array<uint8_t, 32> sha3_256(ByteView data);
std::array<uint8_t, 64> sha3_512(ByteView data);

// XOF output is prefix-consistent: a longer request extends a shorter one.
Bytes shake128(ByteView data, size_t outlen);
Bytes shake256(ByteView data, size_t outlen);

std::array<uint8_t, 32> hmac_sha256(ByteView key, ByteView data);

bool ct_equal(ByteView a, ByteView b);

// AES-256-GCM. Ciphertext carries the 16-byte tag appended.
Bytes aead_encrypt(ByteView key32, ByteView nonce12, ByteView aad, ByteView plaintext);
std::optional<Bytes> aead_decrypt(ByteView key32, ByteView nonce12, ByteView aad,
                                  ByteView ciphertext_and_tag);

}  // namespace dcqkd::crypto
