#include "dcqkd/kem.hpp"

#include <cstring>

#include "dcqkd/crypto.hpp"
#include "dcqkd/errors.hpp"
#include "dcqkd/mlkem768.hpp"

namespace dcqkd {

namespace {

SharedSecret to_secret(ByteView b) {
    SharedSecret ss;
    std::memcpy(ss.octets.data(), b.data(), 32);
    return ss;
}

Bytes tagged(std::string_view tag, ByteView data) {
    Bytes in;
    append_str(in, tag);
    append_bytes(in, data);
    return in;
}

}  // namespace

KemKeyPair ToyKem::keygen(Rng& rng) const {
    KemKeyPair kp;
    kp.secret_key = rng.bytes(32);
    auto pk = crypto::sha3_256(tagged("toy-kem.pk", kp.secret_key));
    kp.public_key.assign(pk.begin(), pk.end());
    return kp;
}

std::pair<Bytes, SharedSecret> ToyKem::encapsulate(ByteView public_key, Rng& rng) const {
    if (public_key.size() != 32) throw ConfigError("toy kem: bad public key size");
    Bytes m = rng.bytes(32);
    Bytes mask = crypto::shake256(tagged("toy-kem.mask", public_key), 32);
    Bytes ct(32);
    for (int i = 0; i < 32; ++i) ct[i] = m[i] ^ mask[i];
    Bytes ssin = tagged("toy-kem.ss", m);
    append_bytes(ssin, public_key);
    return {std::move(ct), to_secret(crypto::sha3_256(ssin))};
}

SharedSecret ToyKem::decapsulate(ByteView ciphertext, ByteView secret_key) const {
    if (ciphertext.size() != 32) throw ConfigError("toy kem: bad ciphertext size");
    auto pk = crypto::sha3_256(tagged("toy-kem.pk", secret_key));
    Bytes mask = crypto::shake256(tagged("toy-kem.mask", pk), 32);
    Bytes m(32);
    for (int i = 0; i < 32; ++i) m[i] = ciphertext[i] ^ mask[i];
    Bytes ssin = tagged("toy-kem.ss", m);
    append_bytes(ssin, pk);
    return to_secret(crypto::sha3_256(ssin));
}

KemKeyPair MlKem768Provider::keygen(Rng& rng) const {
    Bytes d = rng.bytes(32), z = rng.bytes(32);
    auto kp = mlkem768::keygen_from_seed(d, z);
    return {std::move(kp.ek), std::move(kp.dk)};
}

std::pair<Bytes, SharedSecret> MlKem768Provider::encapsulate(ByteView public_key,
                                                             Rng& rng) const {
    Bytes m = rng.bytes(32);
    auto [ct, ss] = mlkem768::encaps_with_coins(public_key, m);
    SharedSecret out;
    out.octets = ss;
    return {std::move(ct), out};
}

SharedSecret MlKem768Provider::decapsulate(ByteView ciphertext, ByteView secret_key) const {
    SharedSecret out;
    out.octets = mlkem768::decaps(secret_key, ciphertext);
    return out;
}

size_t MlKem768Provider::public_key_bytes() const { return mlkem768::EK_BYTES; }
size_t MlKem768Provider::ciphertext_bytes() const { return mlkem768::CT_BYTES; }

std::shared_ptr<const KemProvider> make_kem_provider(const std::string& name) {
    if (name == "toy") return std::make_shared<ToyKem>();
    if (name == "mlkem768") return std::make_shared<MlKem768Provider>();
    throw ConfigError("unknown kem provider: " + name);
}

}  // namespace dcqkd
