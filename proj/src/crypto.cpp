#include "dcqkd/crypto.hpp"

#include <openssl/crypto.h>
#include <openssl/evp.h>
#include <openssl/hmac.h>

#include <memory>
#include <stdexcept>

#include "dcqkd/bits.hpp"
#include "dcqkd/rng.hpp"

namespace dcqkd {

std::string to_hex(ByteView data) {
    static const char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(data.size() * 2);
    for (uint8_t b : data) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 0xf]);
    }
    return out;
}

static int hex_val(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw std::invalid_argument("bad hex digit");
}

Bytes from_hex(std::string_view hex) {
    if (hex.size() % 2) throw std::invalid_argument("odd hex length");
    Bytes out(hex.size() / 2);
    for (size_t i = 0; i < out.size(); ++i)
        out[i] = static_cast<uint8_t>(hex_val(hex[2 * i]) << 4 | hex_val(hex[2 * i + 1]));
    return out;
}

BitVec BitVec::from_bytes(ByteView bytes, size_t nbits) {
    if (nbits > bytes.size() * 8) throw std::invalid_argument("BitVec::from_bytes: short input");
    BitVec out(nbits);
    for (size_t i = 0; i < nbits; ++i)
        out.set(i, (bytes[i >> 3] >> (i & 7)) & 1);
    return out;
}

Bytes BitVec::to_bytes() const {
    Bytes out((n_ + 7) / 8, 0);
    for (size_t i = 0; i < n_; ++i)
        if (get(i)) out[i >> 3] |= static_cast<uint8_t>(1u << (i & 7));
    return out;
}

size_t BitVec::count_ones() const {
    size_t c = 0;
    for (uint64_t w : w_) c += static_cast<size_t>(__builtin_popcountll(w));
    return c;
}

int BitVec::parity() const {
    uint64_t acc = 0;
    for (uint64_t w : w_) acc ^= w;
    return __builtin_parityll(acc);
}

uint64_t derive_seed(uint64_t base, std::string_view label) {
    Bytes in;
    append_u64be(in, base);
    append_str(in, label);
    Bytes h = crypto::shake256(in, 8);
    return read_u64be(h.data());
}

}  // namespace dcqkd

namespace dcqkd::crypto {

namespace {

using MdCtx = std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)>;

void digest_into(const EVP_MD* md, ByteView data, uint8_t* out, size_t outlen, bool xof) {
    MdCtx ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
    if (!ctx || EVP_DigestInit_ex(ctx.get(), md, nullptr) != 1 ||
        EVP_DigestUpdate(ctx.get(), data.data(), data.size()) != 1)
        throw std::runtime_error("digest init/update failed");
    if (xof) {
        if (EVP_DigestFinalXOF(ctx.get(), out, outlen) != 1)
            throw std::runtime_error("xof final failed");
    } else {
        unsigned int n = 0;
        if (EVP_DigestFinal_ex(ctx.get(), out, &n) != 1 || n != outlen)
            throw std::runtime_error("digest final failed");
    }
}

}  // namespace

std::array<uint8_t, 32> sha3_256(ByteView data) {
    std::array<uint8_t, 32> out;
    digest_into(EVP_sha3_256(), data, out.data(), out.size(), false);
    return out;
}

std::array<uint8_t, 64> sha3_512(ByteView data) {
    std::array<uint8_t, 64> out;
    digest_into(EVP_sha3_512(), data, out.data(), out.size(), false);
    return out;
}

Bytes shake128(ByteView data, size_t outlen) {
    Bytes out(outlen);
    digest_into(EVP_shake128(), data, out.data(), outlen, true);
    return out;
}

Bytes shake256(ByteView data, size_t outlen) {
    Bytes out(outlen);
    digest_into(EVP_shake256(), data, out.data(), outlen, true);
    return out;
}

std::array<uint8_t, 32> hmac_sha256(ByteView key, ByteView data) {
    std::array<uint8_t, 32> out;
    unsigned int n = 0;
    if (!HMAC(EVP_sha256(), key.data(), static_cast<int>(key.size()), data.data(), data.size(),
              out.data(), &n) ||
        n != out.size())
        throw std::runtime_error("hmac failed");
    return out;
}

bool ct_equal(ByteView a, ByteView b) {
    if (a.size() != b.size()) return false;
    return CRYPTO_memcmp(a.data(), b.data(), a.size()) == 0;
}

Bytes aead_encrypt(ByteView key32, ByteView nonce12, ByteView aad, ByteView plaintext) {
    std::unique_ptr<EVP_CIPHER_CTX, decltype(&EVP_CIPHER_CTX_free)> ctx(EVP_CIPHER_CTX_new(),
                                                                        EVP_CIPHER_CTX_free);
    Bytes out(plaintext.size() + 16);
    int len = 0;
    if (!ctx || EVP_EncryptInit_ex(ctx.get(), EVP_aes_256_gcm(), nullptr, key32.data(),
                                   nonce12.data()) != 1)
        throw std::runtime_error("gcm init failed");
    if (!aad.empty() && EVP_EncryptUpdate(ctx.get(), nullptr, &len, aad.data(),
                                          static_cast<int>(aad.size())) != 1)
        throw std::runtime_error("gcm aad failed");
    if (EVP_EncryptUpdate(ctx.get(), out.data(), &len, plaintext.data(),
                          static_cast<int>(plaintext.size())) != 1)
        throw std::runtime_error("gcm encrypt failed");
    int fin = 0;
    if (EVP_EncryptFinal_ex(ctx.get(), out.data() + len, &fin) != 1)
        throw std::runtime_error("gcm final failed");
    if (EVP_CIPHER_CTX_ctrl(ctx.get(), EVP_CTRL_GCM_GET_TAG, 16,
                            out.data() + plaintext.size()) != 1)
        throw std::runtime_error("gcm tag failed");
    return out;
}

std::optional<Bytes> aead_decrypt(ByteView key32, ByteView nonce12, ByteView aad,
                                  ByteView ciphertext_and_tag) {
    if (ciphertext_and_tag.size() < 16) return std::nullopt;
    size_t clen = ciphertext_and_tag.size() - 16;
    std::unique_ptr<EVP_CIPHER_CTX, decltype(&EVP_CIPHER_CTX_free)> ctx(EVP_CIPHER_CTX_new(),
                                                                        EVP_CIPHER_CTX_free);
    Bytes out(clen);
    int len = 0;
    if (!ctx || EVP_DecryptInit_ex(ctx.get(), EVP_aes_256_gcm(), nullptr, key32.data(),
                                   nonce12.data()) != 1)
        return std::nullopt;
    if (!aad.empty() && EVP_DecryptUpdate(ctx.get(), nullptr, &len, aad.data(),
                                          static_cast<int>(aad.size())) != 1)
        return std::nullopt;
    if (EVP_DecryptUpdate(ctx.get(), out.data(), &len, ciphertext_and_tag.data(),
                          static_cast<int>(clen)) != 1)
        return std::nullopt;
    Bytes tag(ciphertext_and_tag.begin() + static_cast<long>(clen), ciphertext_and_tag.end());
    if (EVP_CIPHER_CTX_ctrl(ctx.get(), EVP_CTRL_GCM_SET_TAG, 16, tag.data()) != 1)
        return std::nullopt;
    int fin = 0;
    if (EVP_DecryptFinal_ex(ctx.get(), out.data() + len, &fin) != 1) return std::nullopt;
    return out;
}

}  // namespace dcqkd::crypto
