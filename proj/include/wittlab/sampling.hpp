#pragma once

// Seeded random generation of ring elements, Witt vectors and unit
// polynomials. Draws are made with explicit integer arithmetic on top of
// mt19937_64 so a seed fixes the sequence on every platform.

#include <cstdint>
#include <random>

#include "wittlab/series.hpp"
#include "wittlab/witt.hpp"

namespace wittlab {

class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [lo, hi].
    std::int64_t uniform(std::int64_t lo, std::int64_t hi);
    /// Uniform in [0, n) for n >= 1.
    mpz_class below(const mpz_class& n);
    bool coin() { return uniform(0, 1) == 1; }

    /// Integers in [-9, 9]; finite scalars uniform; polynomials with at most
    /// three terms of total degree at most two.
    RingElement element(const RingPtr& ring);
    RingElement nonzero_element(const RingPtr& ring);
    WittVector witt(const TruncationSet& s, const RingPtr& ring);
    /// Roughly half the coordinates zero, to exercise sparse inputs.
    WittVector sparse_witt(const TruncationSet& s, const RingPtr& ring);
    /// 1 + c_1 t + ... + c_d t^d.
    UPoly unit_poly(const RingPtr& ring, std::size_t degree);

    std::mt19937_64& engine() { return engine_; }

private:
    RingElement scalar(const RingPtr& ring);

    std::mt19937_64 engine_;
};

} // namespace wittlab
