#pragma once

#include <cstdint>
#include <string>

#include "fol/rational.hpp"

namespace fol {

// Deterministic splittable generator (splitmix64 core). All randomness in
// the artifact flows from a single seed through explicit Rng values; there
// is no global state, so runs are reproducible bit for bit.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [lo, hi], both ends included. Rejection-free modulo bias is
    // irrelevant at the ranges used here (spans of a few hundred).
    long uniform(long lo, long hi) {
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<long>(next() % span);
    }

    // Generic-member coefficients: integers uniform in [-99, 99].
    Rational coefficient() { return Rational(uniform(-99, 99)); }

    Rational nonzero_coefficient() {
        long v = 0;
        while (v == 0) v = uniform(-99, 99);
        return Rational(v);
    }

    // Derives an independent child stream from a label; used to hand each
    // table row / trial its own generator regardless of evaluation order.
    Rng split(std::uint64_t label) const {
        Rng child(state_ ^ (0x9e3779b97f4a7c15ULL * (label + 1)));
        child.next();
        return child;
    }

    Rng split(const std::string& label) const {
        std::uint64_t h = 1469598103934665603ULL;
        for (unsigned char c : label) {
            h ^= c;
            h *= 1099511628211ULL;
        }
        return split(h);
    }

private:
    std::uint64_t state_;
};

}  // namespace fol
