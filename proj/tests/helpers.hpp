#pragma once

#include "cobord/poly.hpp"

#include <random>

namespace testing {

using namespace cobord;

inline RingPtr xyz_ring() {
    return make_ring({{"x", 1, GeneratorKind::SeriesVariable, false},
                      {"y", 1, GeneratorKind::SeriesVariable, false},
                      {"z", 1, GeneratorKind::SeriesVariable, false}});
}

inline RingPtr x_ring() { return make_ring({{"x", 1, GeneratorKind::SeriesVariable, false}}); }

// Random polynomial with small integer coefficients and bounded exponents.
inline Poly random_poly(std::mt19937& rng, const RingPtr& ring, int terms, int max_exp,
                        int min_weight = 0) {
    std::uniform_int_distribution<int> coef(-3, 3), ex(0, max_exp);
    Poly p(ring);
    for (int t = 0; t < terms; ++t) {
        Exponents e(ring->size());
        int w = 0;
        for (auto& v : e) {
            v = ex(rng);
            w += v;
        }
        if (w < min_weight)
            e[0] += min_weight - w;
        p.add_term(e, coef(rng));
    }
    return p;
}

} // namespace testing
