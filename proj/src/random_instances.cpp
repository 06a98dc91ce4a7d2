#include "bkp/random_instances.hpp"

namespace bkp {

int InstanceRng::uniform(int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<int>(engine_() % span);
}

Rational InstanceRng::nonzero_rational(int height) {
    const int p = uniform(1, height);
    const int q = uniform(1, height);
    return fraction(uniform(0, 1) == 0 ? p : -p, q);
}

AffineB random_affine_b(InstanceRng& rng, const AffineShape& shape) {
    const int count = rng.uniform(1, shape.max_entries);
    std::vector<RawEntry> raw;
    std::map<IndexPair, bool> used;
    for (int i = 0; i < count; ++i) {
        const int n = rng.uniform(1, shape.max_index);
        const int m = rng.uniform(0, n - 1);
        if (used[{n, m}]) continue;
        used[{n, m}] = true;
        raw.push_back({n, m, rng.nonzero_rational(shape.height)});
    }
    return AffineB::validate(raw);
}

AffineB random_affine_b(std::uint64_t seed, const AffineShape& shape) {
    InstanceRng rng(seed);
    return random_affine_b(rng, shape);
}

SeriesPairSpec random_series_pair(InstanceRng& rng, const SpecShape& shape) {
    SeriesPairSpec spec;
    while (spec.empty()) {
        const int s_count = rng.uniform(0, shape.max_support);
        for (int i = 0; i < s_count; ++i) {
            const int n = rng.uniform(2, shape.max_index);
            const int m = rng.uniform(1, n - 1);
            spec.set_s(m, n, rng.nonzero_rational(shape.height));
        }
        const int t_count = rng.uniform(0, shape.max_support);
        for (int i = 0; i < t_count; ++i) spec.set_t(rng.uniform(1, shape.max_index), rng.nonzero_rational(shape.height));
    }
    return spec;
}

SeriesPairSpec random_series_pair(std::uint64_t seed, const SpecShape& shape) {
    InstanceRng rng(seed);
    return random_series_pair(rng, shape);
}

}  // namespace bkp
