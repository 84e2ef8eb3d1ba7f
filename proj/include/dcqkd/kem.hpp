#pragma once

#include <array>
#include <memory>
#include <string>
#include <utility>

#include "dcqkd/bytes.hpp"
#include "dcqkd/rng.hpp"

namespace dcqkd {

struct SharedSecret {
    std::array<uint8_t, 32> octets{};
    bool operator==(const SharedSecret&) const = default;
};

struct KemKeyPair {
    Bytes public_key;
    Bytes secret_key;
};

/// Key encapsulation behind a provider interface. Round-trip on honest keys
/// yields equal secrets; decapsulating a tampered ciphertext returns a
/// (mismatched) secret rather than failing.
class KemProvider {
public:
    virtual ~KemProvider() = default;
    virtual std::string name() const = 0;
    virtual KemKeyPair keygen(Rng& rng) const = 0;
    virtual std::pair<Bytes, SharedSecret> encapsulate(ByteView public_key, Rng& rng) const = 0;
    virtual SharedSecret decapsulate(ByteView ciphertext, ByteView secret_key) const = 0;
    virtual size_t public_key_bytes() const = 0;
    virtual size_t ciphertext_bytes() const = 0;
};

/// Hash-based deterministic KEM for fast seed-reproducible protocol tests.
/// Provides the KEM round-trip/implicit-rejection contract only; it is NOT
/// secure (anyone holding the public key can recover the secret).
class ToyKem final : public KemProvider {
public:
    std::string name() const override { return "toy"; }
    KemKeyPair keygen(Rng& rng) const override;
    std::pair<Bytes, SharedSecret> encapsulate(ByteView public_key, Rng& rng) const override;
    SharedSecret decapsulate(ByteView ciphertext, ByteView secret_key) const override;
    size_t public_key_bytes() const override { return 32; }
    size_t ciphertext_bytes() const override { return 32; }
};

class MlKem768Provider final : public KemProvider {
public:
    std::string name() const override { return "mlkem768"; }
    KemKeyPair keygen(Rng& rng) const override;
    std::pair<Bytes, SharedSecret> encapsulate(ByteView public_key, Rng& rng) const override;
    SharedSecret decapsulate(ByteView ciphertext, ByteView secret_key) const override;
    size_t public_key_bytes() const override;
    size_t ciphertext_bytes() const override;
};

std::shared_ptr<const KemProvider> make_kem_provider(const std::string& name);

}  // namespace dcqkd
