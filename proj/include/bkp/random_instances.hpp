#pragma once

#include <cstdint>
#include <random>

#include "bkp/affine_coords.hpp"
#include "bkp/lemma_verifier.hpp"

namespace bkp {

// Seeded generators. Draws go through plain modulo reduction of mt19937_64
// output so that a seed means the same instance on every platform.
class InstanceRng {
public:
    explicit InstanceRng(std::uint64_t seed) : engine_(seed) {}

    // Uniform-ish integer in [lo, hi].
    int uniform(int lo, int hi);
    // p/q with 1 <= |p| <= height, 1 <= q <= height.
    Rational nonzero_rational(int height);

private:
    std::mt19937_64 engine_;
};

struct AffineShape {
    int max_index = 4;
    int max_entries = 6;
    int height = 9;
};

// 1..max_entries independent entries a_{n,m} with n > m, indices <= max_index.
AffineB random_affine_b(InstanceRng& rng, const AffineShape& shape = {});
AffineB random_affine_b(std::uint64_t seed, const AffineShape& shape = {});

struct SpecShape {
    int max_index = 4;
    int max_support = 3;
    int height = 9;
};

// Up to max_support entries each for s and t (at least one entry overall).
SeriesPairSpec random_series_pair(InstanceRng& rng, const SpecShape& shape = {});
SeriesPairSpec random_series_pair(std::uint64_t seed, const SpecShape& shape = {});

}  // namespace bkp
