#pragma once

#include <cstdint>
#include <stdexcept>

#include "dcqkd/bytes.hpp"

namespace dcqkd {

/// Packed bit vector. Bit i lives in word i/64 at position i%64; byte
/// serialization is LSB-first within each byte. Bits past size() are kept
/// zero so whole-word operations (parity, windows) need no masking.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    static BitVec from_bytes(ByteView bytes, size_t nbits);
    Bytes to_bytes() const;

    size_t size() const { return n_; }
    bool empty() const { return n_ == 0; }

    int get(size_t i) const { return static_cast<int>((w_[i >> 6] >> (i & 63)) & 1u); }

    void set(size_t i, int v) {
        uint64_t mask = uint64_t{1} << (i & 63);
        if (v) w_[i >> 6] |= mask;
        else w_[i >> 6] &= ~mask;
    }

    void flip(size_t i) { w_[i >> 6] ^= uint64_t{1} << (i & 63); }

    void push_back(int v) {
        if ((n_ & 63) == 0) w_.push_back(0);
        if (v) w_.back() |= uint64_t{1} << (n_ & 63);
        ++n_;
    }

    void append(const BitVec& other) {
        for (size_t i = 0; i < other.size(); ++i) push_back(other.get(i));
    }

    BitVec slice(size_t pos, size_t len) const {
        if (pos + len > n_) throw std::out_of_range("BitVec::slice");
        BitVec out(len);
        for (size_t i = 0; i < len; ++i) out.set(i, get(pos + i));
        return out;
    }

    /// 64 bits starting at bit position `pos`, zero-padded past the end.
    uint64_t window64(size_t pos) const {
        size_t wi = pos >> 6, r = pos & 63;
        uint64_t lo = wi < w_.size() ? w_[wi] : 0;
        if (r == 0) return lo;
        uint64_t hi = wi + 1 < w_.size() ? w_[wi + 1] : 0;
        return (lo >> r) | (hi << (64 - r));
    }

    uint64_t word(size_t wi) const { return wi < w_.size() ? w_[wi] : 0; }
    size_t word_count() const { return w_.size(); }

    size_t count_ones() const;
    int parity() const;

    bool operator==(const BitVec& other) const { return n_ == other.n_ && w_ == other.w_; }

private:
    size_t n_ = 0;
    std::vector<uint64_t> w_;
};

}  // namespace dcqkd
