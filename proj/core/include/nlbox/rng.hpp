#pragma once

#include <cstdint>
#include <random>

#include "nlbox/rational.hpp"

namespace nlbox {

// Every randomized routine in the library draws from this wrapper around
// std::mt19937_64. The engine itself is fully specified by the standard, so
// identical seeds give identical streams on every platform; the standard
// *distributions* are not, which is why Bernoulli draws below avoid them.
class Sampler {
public:
    static constexpr const char* kAlgorithm = "mt19937_64";

    explicit Sampler(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_word() { return engine_(); }

    int next_bit() { return static_cast<int>(engine_() >> 63); }

private:
    std::mt19937_64 engine_;
};

// Deterministic Bernoulli(p) for exact rational p: one engine word is compared
// against floor(p * 2^64). The bias of the rounding is below 2^-64, and the
// draw consumes exactly one word, which keeps sample streams reproducible.
class Bernoulli {
public:
    explicit Bernoulli(const Rational& p)
    {
        if (p < 0 || p > 1)
            throw RangeError("Bernoulli parameter must lie in [0, 1], got " + rational_str(p));
        if (p == 1) {
            always_ = true;
            threshold_ = 0;
        } else {
            always_ = false;
            BigInt scaled = (numerator(p) << 64) / denominator(p);
            threshold_ = scaled.convert_to<std::uint64_t>();
        }
    }

    bool draw(Sampler& sampler) const
    {
        std::uint64_t w = sampler.next_word();
        return always_ || w < threshold_;
    }

private:
    bool always_;
    std::uint64_t threshold_;
};

} // namespace nlbox
