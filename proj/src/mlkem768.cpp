#include "dcqkd/mlkem768.hpp"

#include <cstring>
#include <stdexcept>

#include "dcqkd/crypto.hpp"

namespace dcqkd::mlkem768 {

namespace {

constexpr int Q = 3329;
constexpr int N = 256;
constexpr int K = 3;
constexpr int ETA = 2;        // eta1 == eta2 for this parameter set
constexpr int DU = 10;
constexpr int DV = 4;
constexpr int INV_128 = 3303;  // 128^-1 mod q

using Poly = std::array<int16_t, N>;
using PolyVec = std::array<Poly, K>;

int16_t mod_q(int32_t x) {
    x %= Q;
    if (x < 0) x += Q;
    return static_cast<int16_t>(x);
}

int16_t mul_q(int32_t a, int32_t b) { return mod_q(a * b); }

uint8_t bitrev7(uint8_t x) {
    uint8_t r = 0;
    for (int i = 0; i < 7; ++i)
        if (x & (1 << i)) r |= static_cast<uint8_t>(1 << (6 - i));
    return r;
}

struct Tables {
    std::array<int16_t, 128> zeta;        // 17^bitrev7(i)
    std::array<int16_t, 128> gamma;       // 17^(2*bitrev7(i)+1)
    Tables() {
        std::array<int16_t, 256> pow{};
        pow[0] = 1;
        for (int i = 1; i < 256; ++i) pow[i] = mul_q(pow[i - 1], 17);
        for (int i = 0; i < 128; ++i) {
            zeta[i] = pow[bitrev7(static_cast<uint8_t>(i))];
            gamma[i] = pow[(2 * bitrev7(static_cast<uint8_t>(i)) + 1) % 256];
        }
    }
};
const Tables T;

void ntt(Poly& f) {
    int k = 1;
    for (int len = 128; len >= 2; len /= 2) {
        for (int start = 0; start < N; start += 2 * len) {
            int16_t z = T.zeta[k++];
            for (int j = start; j < start + len; ++j) {
                int16_t t = mul_q(z, f[j + len]);
                f[j + len] = mod_q(f[j] - t);
                f[j] = mod_q(f[j] + t);
            }
        }
    }
}

void inv_ntt(Poly& f) {
    int k = 127;
    for (int len = 2; len <= 128; len *= 2) {
        for (int start = 0; start < N; start += 2 * len) {
            int16_t z = T.zeta[k--];
            for (int j = start; j < start + len; ++j) {
                int16_t t = f[j];
                f[j] = mod_q(t + f[j + len]);
                f[j + len] = mul_q(z, f[j + len] - t);
            }
        }
    }
    for (auto& c : f) c = mul_q(c, INV_128);
}

// Pointwise product of two NTT-domain polynomials (128 degree-1 factors).
Poly ntt_multiply(const Poly& f, const Poly& g) {
    Poly h;
    for (int i = 0; i < 128; ++i) {
        int16_t a0 = f[2 * i], a1 = f[2 * i + 1];
        int16_t b0 = g[2 * i], b1 = g[2 * i + 1];
        h[2 * i] = mod_q(a0 * b0 + mul_q(a1, b1) * T.gamma[i]);
        h[2 * i + 1] = mod_q(a0 * b1 + a1 * b0);
    }
    return h;
}

void add_into(Poly& a, const Poly& b) {
    for (int i = 0; i < N; ++i) a[i] = mod_q(a[i] + b[i]);
}

Poly sample_ntt(ByteView seed34) {
    // Rejection-sample 12-bit values from SHAKE128(seed). One-shot XOF output
    // is prefix-consistent, so re-requesting a longer stream on a shortfall
    // keeps the already-consumed bytes identical.
    size_t request = 3 * N;  // well above the ~396-byte expectation
    for (;;) {
        Bytes stream = crypto::shake128(seed34, request);
        Poly a;
        int j = 0;
        for (size_t i = 0; i + 3 <= stream.size() && j < N; i += 3) {
            int d1 = stream[i] | ((stream[i + 1] & 0x0f) << 8);
            int d2 = (stream[i + 1] >> 4) | (stream[i + 2] << 4);
            if (d1 < Q) a[j++] = static_cast<int16_t>(d1);
            if (d2 < Q && j < N) a[j++] = static_cast<int16_t>(d2);
        }
        if (j == N) return a;
        request *= 2;
    }
}

Poly sample_cbd(ByteView b) {
    // eta = 2: 128 input bytes, coefficients in {-2..2} mod q
    Poly f;
    for (int i = 0; i < N; ++i) {
        int bit = 4 * i;
        auto at = [&](int k) { return (b[(bit + k) >> 3] >> ((bit + k) & 7)) & 1; };
        int x = at(0) + at(1);
        int y = at(2) + at(3);
        f[i] = mod_q(x - y);
    }
    return f;
}

int16_t compress(int16_t x, int d) {
    return static_cast<int16_t>(((static_cast<uint32_t>(x) << d) + Q / 2) / Q &
                                ((1u << d) - 1));
}

int16_t decompress(int16_t y, int d) {
    return static_cast<int16_t>((static_cast<uint32_t>(y) * Q + (1u << (d - 1))) >> d);
}

// d bits per coefficient, LSB-first bit order.
void byte_encode(Bytes& out, const Poly& f, int d) {
    size_t base = out.size();
    out.resize(base + 32 * static_cast<size_t>(d), 0);
    size_t bit = 0;
    for (int i = 0; i < N; ++i) {
        for (int k = 0; k < d; ++k, ++bit)
            if ((f[i] >> k) & 1) out[base + (bit >> 3)] |= static_cast<uint8_t>(1u << (bit & 7));
    }
}

Poly byte_decode(ByteView in, int d) {
    Poly f{};
    size_t bit = 0;
    for (int i = 0; i < N; ++i) {
        int v = 0;
        for (int k = 0; k < d; ++k, ++bit)
            v |= ((in[bit >> 3] >> (bit & 7)) & 1) << k;
        f[i] = static_cast<int16_t>(v);
    }
    return f;
}

Bytes prf(ByteView s, uint8_t b) {
    Bytes in(s.begin(), s.end());
    in.push_back(b);
    return crypto::shake256(in, 64 * ETA);
}

// A-hat[i][j] <- SampleNTT(rho || j || i)
void sample_matrix(ByteView rho, PolyVec (&a)[K]) {
    for (int i = 0; i < K; ++i)
        for (int j = 0; j < K; ++j) {
            Bytes seed(rho.begin(), rho.end());
            seed.push_back(static_cast<uint8_t>(j));
            seed.push_back(static_cast<uint8_t>(i));
            a[i][j] = sample_ntt(seed);
        }
}

struct PkeKeys {
    Bytes ek;  // Encode12(t-hat) || rho
    Bytes dk;  // Encode12(s-hat)
};

PkeKeys pke_keygen(ByteView d32) {
    Bytes gin(d32.begin(), d32.end());
    gin.push_back(static_cast<uint8_t>(K));
    auto g = crypto::sha3_512(gin);
    ByteView rho(g.data(), 32), sigma(g.data() + 32, 32);

    PolyVec a[K];
    sample_matrix(rho, a);

    uint8_t n = 0;
    PolyVec s, e;
    for (int i = 0; i < K; ++i) s[i] = sample_cbd(prf(sigma, n++));
    for (int i = 0; i < K; ++i) e[i] = sample_cbd(prf(sigma, n++));
    for (int i = 0; i < K; ++i) {
        ntt(s[i]);
        ntt(e[i]);
    }

    PolyVec t;
    for (int i = 0; i < K; ++i) {
        t[i] = e[i];
        for (int j = 0; j < K; ++j) add_into(t[i], ntt_multiply(a[i][j], s[j]));
    }

    PkeKeys out;
    for (int i = 0; i < K; ++i) byte_encode(out.ek, t[i], 12);
    append_bytes(out.ek, rho);
    for (int i = 0; i < K; ++i) byte_encode(out.dk, s[i], 12);
    return out;
}

Bytes pke_encrypt(ByteView ek, ByteView m32, ByteView r32) {
    PolyVec t;
    for (int i = 0; i < K; ++i) t[i] = byte_decode(ek.subspan(384 * i, 384), 12);
    ByteView rho = ek.subspan(384 * K, 32);

    PolyVec a[K];
    sample_matrix(rho, a);

    uint8_t n = 0;
    PolyVec y, e1;
    for (int i = 0; i < K; ++i) y[i] = sample_cbd(prf(r32, n++));
    for (int i = 0; i < K; ++i) e1[i] = sample_cbd(prf(r32, n++));
    Poly e2 = sample_cbd(prf(r32, n++));
    for (int i = 0; i < K; ++i) ntt(y[i]);

    PolyVec u;
    for (int i = 0; i < K; ++i) {
        Poly acc{};
        for (int j = 0; j < K; ++j) add_into(acc, ntt_multiply(a[j][i], y[j]));  // A^T
        inv_ntt(acc);
        add_into(acc, e1[i]);
        u[i] = acc;
    }

    Poly mu = byte_decode(m32, 1);
    for (auto& c : mu) c = decompress(c, 1);

    Poly v{};
    for (int j = 0; j < K; ++j) add_into(v, ntt_multiply(t[j], y[j]));
    inv_ntt(v);
    add_into(v, e2);
    add_into(v, mu);

    Bytes c;
    for (int i = 0; i < K; ++i) {
        Poly cu = u[i];
        for (auto& x : cu) x = compress(x, DU);
        byte_encode(c, cu, DU);
    }
    Poly cv = v;
    for (auto& x : cv) x = compress(x, DV);
    byte_encode(c, cv, DV);
    return c;
}

Bytes pke_decrypt(ByteView dk, ByteView ct) {
    PolyVec u;
    for (int i = 0; i < K; ++i) {
        u[i] = byte_decode(ct.subspan(32 * DU * i, 32 * DU), DU);
        for (auto& x : u[i]) x = decompress(x, DU);
    }
    Poly v = byte_decode(ct.subspan(32 * DU * K, 32 * DV), DV);
    for (auto& x : v) x = decompress(x, DV);

    Poly w{};
    for (int i = 0; i < K; ++i) {
        Poly s = byte_decode(dk.subspan(384 * i, 384), 12);
        Poly ui = u[i];
        ntt(ui);
        add_into(w, ntt_multiply(s, ui));
    }
    inv_ntt(w);
    for (int i = 0; i < N; ++i) w[i] = mod_q(v[i] - w[i]);

    for (auto& x : w) x = compress(x, 1);
    Bytes m;
    byte_encode(m, w, 1);
    return m;
}

}  // namespace

KeyPair keygen_from_seed(ByteView d32, ByteView z32) {
    if (d32.size() != 32 || z32.size() != 32)
        throw std::invalid_argument("mlkem768: seed halves must be 32 bytes");
    PkeKeys pke = pke_keygen(d32);
    KeyPair kp;
    kp.ek = pke.ek;
    kp.dk = pke.dk;
    append_bytes(kp.dk, kp.ek);
    auto h = crypto::sha3_256(kp.ek);
    append_bytes(kp.dk, h);
    append_bytes(kp.dk, z32);
    return kp;
}

std::pair<Bytes, std::array<uint8_t, 32>> encaps_with_coins(ByteView ek, ByteView m32) {
    if (!validate_ek(ek)) throw std::invalid_argument("mlkem768: invalid encapsulation key");
    if (m32.size() != 32) throw std::invalid_argument("mlkem768: coins must be 32 bytes");
    Bytes gin(m32.begin(), m32.end());
    auto h = crypto::sha3_256(ek);
    append_bytes(gin, h);
    auto g = crypto::sha3_512(gin);
    std::array<uint8_t, 32> ss;
    std::memcpy(ss.data(), g.data(), 32);
    Bytes ct = pke_encrypt(ek, m32, ByteView(g.data() + 32, 32));
    return {std::move(ct), ss};
}

std::array<uint8_t, 32> decaps(ByteView dk, ByteView ct) {
    if (dk.size() != DK_BYTES) throw std::invalid_argument("mlkem768: bad dk length");
    if (ct.size() != CT_BYTES) throw std::invalid_argument("mlkem768: bad ct length");
    ByteView dk_pke = dk.subspan(0, 384 * K);
    ByteView ek = dk.subspan(384 * K, EK_BYTES);
    ByteView h = dk.subspan(384 * K + EK_BYTES, 32);
    ByteView z = dk.subspan(384 * K + EK_BYTES + 32, 32);

    Bytes m = pke_decrypt(dk_pke, ct);
    Bytes gin = m;
    append_bytes(gin, h);
    auto g = crypto::sha3_512(gin);

    Bytes jin(z.begin(), z.end());
    append_bytes(jin, ct);
    Bytes reject = crypto::shake256(jin, 32);

    Bytes ct2 = pke_encrypt(ek, m, ByteView(g.data() + 32, 32));
    bool ok = crypto::ct_equal(ct, ct2);

    std::array<uint8_t, 32> ss;
    for (int i = 0; i < 32; ++i)
        ss[static_cast<size_t>(i)] = ok ? g[static_cast<size_t>(i)] : reject[static_cast<size_t>(i)];
    return ss;
}

bool validate_ek(ByteView ek) {
    if (ek.size() != EK_BYTES) return false;
    // Canonical encoding: every 12-bit coefficient must already be reduced.
    for (int i = 0; i < K; ++i) {
        Poly t = byte_decode(ek.subspan(384 * i, 384), 12);
        for (int16_t c : t)
            if (c >= Q) return false;
    }
    return true;
}

}  // namespace dcqkd::mlkem768
