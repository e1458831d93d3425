#pragma once

// Deterministic randomness: seed derivation and a per-trial random stream.
// Every stochastic operation in the library draws from an explicitly passed
// Rng, and raw draws avoid std::uniform_*_distribution so that sequences are
// identical across standard-library implementations.

#include <cstdint>
#include <initializer_list>
#include <random>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace spellerlab {

constexpr std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ull;
    }
    return h;
}

constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// Folds a master seed with context words (subject index, method hash, trial
// index, ...). Each part is absorbed through a SplitMix64 round, so related
// contexts map to unrelated streams.
constexpr std::uint64_t derive_seed(std::uint64_t master,
                                    std::initializer_list<std::uint64_t> parts) {
    std::uint64_t s = splitmix64(master);
    for (std::uint64_t p : parts) s = splitmix64(s ^ p);
    return s;
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform double in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return uniform01() < p; }

    // Unbiased integer in [0, n); Lemire multiply-shift with rejection.
    std::size_t uniform_index(std::size_t n) {
        if (n == 0) throw std::invalid_argument("Rng::uniform_index: n must be positive");
        std::uint64_t range = static_cast<std::uint64_t>(n);
        std::uint64_t x = engine_();
        unsigned __int128 m = static_cast<unsigned __int128>(x) * range;
        auto lo = static_cast<std::uint64_t>(m);
        if (lo < range) {
            const std::uint64_t threshold = (0 - range) % range;
            while (lo < threshold) {
                x = engine_();
                m = static_cast<unsigned __int128>(x) * range;
                lo = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::size_t>(m >> 64);
    }

    // Draws an index with probability proportional to probs[i]. Entries must
    // be non-negative with a positive total; zero-probability indices are
    // never returned.
    std::size_t categorical(std::span<const double> probs) {
        double total = 0.0;
        for (double p : probs) {
            if (!(p >= 0.0)) throw std::invalid_argument("Rng::categorical: negative probability");
            total += p;
        }
        if (!(total > 0.0)) throw std::invalid_argument("Rng::categorical: zero total mass");
        const double u = uniform01() * total;
        double acc = 0.0;
        std::size_t last_positive = probs.size();
        for (std::size_t i = 0; i < probs.size(); ++i) {
            if (probs[i] > 0.0) {
                acc += probs[i];
                last_positive = i;
                if (u < acc) return i;
            }
        }
        return last_positive;
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        if (v.size() < 2) return;
        for (std::size_t i = v.size() - 1; i > 0; --i) {
            const std::size_t j = uniform_index(i + 1);
            std::swap(v[i], v[j]);
        }
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace spellerlab
