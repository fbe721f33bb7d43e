#include "helpers.hpp"

#include "cobord/fgl.hpp"

#include <doctest.h>

using namespace cobord;
using namespace testing;

namespace {

Series var(const FormalGroupLaw& F, const RingPtr& r, const char* name) {
    return Series::variable(r, name, F.order());
}

std::vector<FormalGroupLaw> all_laws() {
    return {fgl_additive(6), fgl_multiplicative(6), fgl_universal(5)};
}

} // namespace

TEST_SUITE("fgl") {

TEST_CASE("additive and multiplicative laws") {
    FormalGroupLaw A = fgl_additive(4);
    Poly x = Poly::variable(A.ring(), "x"), y = Poly::variable(A.ring(), "y");
    CHECK(A.law().poly() == x + y);
    FormalGroupLaw M = fgl_multiplicative(4);
    Poly X = Poly::variable(M.ring(), "x"), Y = Poly::variable(M.ring(), "y"),
         b = Poly::variable(M.ring(), "beta");
    CHECK(M.law().poly() == X + Y + b * X * Y);
    for (const auto& F : all_laws())
        CHECK(law_residuals(F, F.order()).all_zero());
}

TEST_CASE("universal law low-degree coefficients") {
    FormalGroupLaw U = fgl_universal(3);
    CHECK(U.order() == 4);
    RingPtr L = U.coefficient_ring();
    CHECK(U.coefficient(1, 1) == Scalar(-2) * Poly::variable(L, "m1"));
    CHECK(U.coefficient(1, 0) == Poly::constant(L, 1));
    CHECK(U.coefficient(1, 2) == U.coefficient(2, 1));
    // m_i = 0 recovers the additive law
    std::vector<std::optional<Poly>> zero(U.ring()->size());
    for (std::size_t i : U.ring()->coefficient_generators())
        zero[i] = Poly(U.ring());
    Poly x = Poly::variable(U.ring(), "x"), y = Poly::variable(U.ring(), "y");
    CHECK(U.law().poly().substitute(zero) == x + y);
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; i + j <= 4; ++j)
            CHECK(U.coefficient(i, j).has_integer_coefficients());
}

TEST_CASE("n-series examples") {
    FormalGroupLaw A = fgl_additive(5);
    RingPtr ra = series_ring_over(A, {"t"});
    Series t = Series::variable(ra, "t", 5);
    CHECK(n_series(A, 3, t) == Scalar(3) * t);
    CHECK(n_series(A, -2, t) == Scalar(-2) * t);
    CHECK(n_series(A, 0, t).is_zero());

    FormalGroupLaw M = fgl_multiplicative(3);
    RingPtr rm = series_ring_over(M, {"t"});
    Poly T = Poly::variable(rm, "t"), b = Poly::variable(rm, "beta");
    Series tm = Series::variable(rm, "t", 3);
    CHECK(n_series(M, 2, tm).poly() == Scalar(2) * T + b * T * T);
    CHECK(n_series(M, -1, tm).poly() == -T + b * T * T - b * b * pow(T, 3));
}

TEST_CASE("inverse and n-series identities over every law") {
    for (const auto& F : all_laws()) {
        RingPtr r = series_ring_over(F, {"t"});
        Series t = var(F, r, "t");
        CHECK(formal_sum(F, t, formal_inverse(F, t)).is_zero());
        for (int n = -4; n <= 4; ++n)
            for (int k = -4; k <= 4; ++k) {
                CHECK(n_series(F, n, n_series(F, k, t)) == n_series(F, n * k, t));
                CHECK(formal_sum(F, n_series(F, n, t), n_series(F, k, t)) == n_series(F, n + k, t));
            }
    }
}

TEST_CASE("commutativity and associativity on random series") {
    std::mt19937 rng(17);
    for (const auto& F : all_laws()) {
        RingPtr r = series_ring_over(F, {"u", "v", "w"});
        for (int it = 0; it < 4; ++it) {
            auto rand_series = [&](const char* name) {
                Poly p = Poly::variable(r, name);
                std::uniform_int_distribution<int> c(-2, 2);
                Poly v = Poly::variable(r, "v");
                p += Scalar(c(rng)) * p * p + Scalar(c(rng)) * p * v;
                return Series(p, F.order());
            };
            Series a = rand_series("u"), b = rand_series("v"), c = rand_series("w");
            CHECK(formal_sum(F, a, b) == formal_sum(F, b, a));
            CHECK(formal_sum(F, formal_sum(F, a, b), c) == formal_sum(F, a, formal_sum(F, b, c)));
        }
    }
}

TEST_CASE("truncation coherence of the universal law") {
    FormalGroupLaw big = fgl_universal(5), small = fgl_universal(3);
    CHECK(big.law().truncated(4).poly().map_into(big.ring()) ==
          small.law().poly().map_into(big.ring()));
}

TEST_CASE("composition errors") {
    FormalGroupLaw A = fgl_additive(3);
    RingPtr r = series_ring_over(A, {"t"});
    Series bad(Poly::constant(r, 1), 3);
    CHECK_THROWS_AS(n_series(A, 2, bad), CompositionError);
    CHECK_THROWS_AS(fgl_universal(0), AlgebraError);
}

}
