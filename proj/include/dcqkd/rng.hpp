#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string_view>

#include "dcqkd/bytes.hpp"

namespace dcqkd {

/// Seedable generator behind every stochastic operation. Identical seeds give
/// identical transcripts; each session/endpoint owns its own instance.
class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    int bit() { return static_cast<int>(eng_() >> 63); }
    uint64_t u64() { return eng_(); }

    bool chance(double p) {
        if (p <= 0.0) return false;
        if (p >= 1.0) return true;
        return std::bernoulli_distribution(p)(eng_);
    }

    uint64_t below(uint64_t n) {
        return std::uniform_int_distribution<uint64_t>(0, n - 1)(eng_);
    }

    uint32_t poisson(double mean) {
        if (mean <= 0.0) return 0;
        return std::poisson_distribution<uint32_t>(mean)(eng_);
    }

    Bytes bytes(size_t n) {
        Bytes out(n);
        for (auto& b : out) b = static_cast<uint8_t>(eng_() >> 56);
        return out;
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        std::shuffle(v.begin(), v.end(), eng_);
    }

    std::mt19937_64& engine() { return eng_; }

private:
    std::mt19937_64 eng_;
};

/// Deterministic sub-seed derivation (domain-separated hash of seed and label).
uint64_t derive_seed(uint64_t base, std::string_view label);

}  // namespace dcqkd
