#include "cobord/bt_module.hpp"
#include "cobord/twisted.hpp"
#include "bt_random.hpp"

#include <doctest.h>

#include <random>

using namespace cobord;

namespace {

Poly L1(const BTContext& ctx) { return Poly::constant(ctx.coefficient_ring(), 1); }

std::vector<Tuple> tuples_up_to(std::size_t r, int D) {
    std::vector<Tuple> out;
    for (int n = 0; n <= D; ++n)
        for (auto& m : tuples_of_weight(r, n))
            out.push_back(m);
    return out;
}

LatticeMap lattice_map(std::initializer_list<std::initializer_list<long>> rows) {
    LatticeMap m(rows.size());
    std::size_t i = 0;
    for (const auto& row : rows) {
        std::size_t j = 0;
        for (long v : row)
            m(i, j++) = v;
        ++i;
    }
    return m;
}

// Matrix of w on the degree-n lattice, columns are images of basis vectors.
IntMatrix action_matrix(const BTContext& ctx, const WeylGroup& W, std::size_t w, int n) {
    BTLattice lat = bt_lattice(ctx, n);
    IntMatrix m(lat.dim(), lat.dim());
    for (std::size_t c = 0; c < lat.dim(); ++c) {
        IntVector e(lat.dim());
        e[c] = 1;
        IntVector img = bt_coordinates(ctx, lat, weyl_act_bt(ctx, W, w, bt_element(ctx, lat, e)));
        for (std::size_t i = 0; i < lat.dim(); ++i)
            m(i, c) = img[i];
    }
    return m;
}

} // namespace

TEST_SUITE("bt_module") {

TEST_CASE("pairing, epsilon and cap product examples") {
    BTContext ctx(1, 4);
    Poly m1 = Poly::variable(ctx.coefficient_ring(), "m1");
    CHECK(pairing(ctx, ctx.t_monomial({2}), ctx.basis_class({2})) == L1(ctx));
    CHECK(pairing(ctx, ctx.t_monomial({3}), ctx.basis_class({2})).is_zero());
    CHECK(pairing(ctx, ctx.t_monomial({0}), ctx.basis_class({1})) == Scalar(2) * m1);
    CHECK(epsilon(ctx, ctx.basis_class({0})) == L1(ctx));
    CHECK(epsilon(ctx, ctx.basis_class({1})) == ctx.pn(1));
    CHECK(chern_op(ctx, ctx.t_monomial({1}), ctx.basis_class({1})) == ctx.basis_class({0}));
    CHECK(chern_op(ctx, ctx.t_monomial({2}), ctx.basis_class({1})).is_zero());

    BTContext c2(2, 3);
    Poly n1 = Poly::variable(c2.coefficient_ring(), "m1");
    CHECK(epsilon(c2, c2.basis_class({1, 1})) == Scalar(4) * n1 * n1);
    CHECK(chern_op(c2, c2.t_monomial({1, 0}), c2.basis_class({2, 1})) == c2.basis_class({1, 1}));
}

TEST_CASE("pairing refuses short truncations") {
    BTContext ctx(1, 4);
    Series short_one(Poly::constant(ctx.series_ring(), 1), 1);
    CHECK_THROWS_WITH_AS(pairing(ctx, short_one, ctx.basis_class({3})), doctest::Contains("N >= 3"),
                         AlgebraError);
    CHECK_NOTHROW(pairing(ctx, short_one, ctx.basis_class({1})));
}

TEST_CASE("pairing is unitriangular and the dual basis is dual") {
    for (std::size_t r : {1u, 2u}) {
        BTContext ctx(r, 5);
        auto ts = tuples_up_to(r, 5);
        for (std::size_t i = 0; i < ts.size(); ++i)
            for (std::size_t j = 0; j < ts.size(); ++j) {
                Poly v = pairing(ctx, ctx.t_monomial(ts[i]), ctx.basis_class(ts[j]));
                if (j < i)
                    CHECK(v.is_zero());
                if (j == i)
                    CHECK(v == L1(ctx));
                Poly d = pairing(ctx, ctx.dual(ts[i]), ctx.basis_class(ts[j]));
                CHECK(d == Poly::constant(ctx.coefficient_ring(), i == j ? 1 : 0));
            }
    }
}

TEST_CASE("dual basis agrees with the product oracle") {
    for (std::size_t r : {1u, 2u}) {
        const int D = 4;
        BTContext ctx(r, D);
        // d_0 = 1 / sum_n [P^n] t^n in each variable, d_m = t^m prod_i d_0(t_i).
        Series prod(Poly::constant(ctx.series_ring(), 1), D);
        for (std::size_t i = 0; i < r; ++i) {
            Tuple e(r, 0);
            Poly u(ctx.series_ring());
            for (int n = 1; n <= D; ++n) {
                e[i] = n;
                u += mul(ctx.pn(n).map_into(ctx.series_ring()), ctx.t_monomial(e).poly());
            }
            Series us(u, D), inv(Poly::constant(ctx.series_ring(), 1), D), power = inv;
            for (int k = 1; k <= D; ++k) {
                power = power * us;
                inv = k % 2 ? inv - power : inv + power;
            }
            prod = prod * inv;
        }
        for (const auto& m : tuples_up_to(r, D))
            CHECK(ctx.dual(m) == ctx.t_monomial(m) * prod);
    }
    BTContext c1(1, 3);
    Tuple one{1};
    const Series& d0 = c1.dual({0});
    Poly t = c1.t_monomial(one).poly();
    CHECK(d0.poly().series_weight_component(1) == mul(-c1.pn(1).map_into(c1.series_ring()), t));
    CHECK(c1.dual(one).poly().series_weight_component(1) == t);
}

TEST_CASE("product classes") {
    BTContext ctx(1, 4);
    for (int m = 0; m <= 4; ++m)
        CHECK(product_class(ctx, {{m}, lattice_map({{1}})}) == ctx.basis_class({m}));
    BTClass expected = ctx.basis_class({0});
    expected = Scalar(2) * ctx.pn(1) * expected - ctx.basis_class({1});
    CHECK(product_class(ctx, {{1}, lattice_map({{-1}})}) == expected);
    for (long c : {-3L, 2L, 5L})
        CHECK(product_class(ctx, {{0}, lattice_map({{c}})}) == ctx.basis_class({0}));

    std::mt19937 rng(41);
    BTContext c2(2, 3);
    for (int it = 0; it < 10; ++it) {
        std::uniform_int_distribution<long> d(-2, 2);
        LatticeMap C(2);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j)
                C(i, j) = d(rng);
        auto ts = tuples_of_weight(2, it % 4);
        ProductClassSpec spec{ts[static_cast<std::size_t>(it) % ts.size()], C};
        Series A = testing::random_bt_functional(rng, c2, 3);
        CHECK(pairing(c2, A, product_class(c2, spec)) == pair_with_product_class(c2, A, spec));
        CHECK(epsilon(c2, product_class(c2, spec)) == c2.pn_product(spec.m));
    }
}

TEST_CASE("cap product identity") {
    std::mt19937 rng(43);
    for (std::size_t r : {1u, 2u}) {
        BTContext ctx(r, 4);
        for (int it = 0; it < 25; ++it) {
            Series A = testing::random_bt_functional(rng, ctx, 4);
            BTClass x = testing::random_bt_class(rng, ctx, 4);
            CHECK(pairing(ctx, A, x) == epsilon(ctx, chern_op(ctx, A, x)));
        }
    }
}

TEST_CASE("Weyl action on classes") {
    BTContext ctx(1, 4);
    WeylGroup sl2 = weyl_enumerate(root_datum_preset("SL2"));
    BTClass expected = Scalar(2) * ctx.pn(1) * ctx.basis_class({0}) - ctx.basis_class({1});
    CHECK(weyl_act_bt(ctx, sl2, 1, ctx.basis_class({1})) == expected);
    std::mt19937 rng(47);
    for (int it = 0; it < 10; ++it) {
        BTClass x = testing::random_bt_class(rng, ctx, 4);
        CHECK(weyl_act_bt(ctx, sl2, 0, x) == x);
        CHECK(weyl_act_bt(ctx, sl2, 1, weyl_act_bt(ctx, sl2, 1, x)) == x);
        CHECK(epsilon(ctx, weyl_act_bt(ctx, sl2, 1, x)) == epsilon(ctx, x));
    }

    BTContext c2(2, 3);
    WeylGroup gl2 = weyl_enumerate(root_datum_preset("GL2"));
    for (const auto& m : tuples_up_to(2, 3))
        CHECK(weyl_act_bt(c2, gl2, 1, c2.basis_class(m)) == c2.basis_class({m[1], m[0]}));

    WeylGroup sl3 = weyl_enumerate(root_datum_preset("SL3"));
    for (int it = 0; it < 4; ++it) {
        BTClass x = testing::random_bt_class(rng, c2, 3);
        for (std::size_t a = 0; a < sl3.size(); ++a)
            for (std::size_t b = 0; b < sl3.size(); b += 2)
                CHECK(weyl_act_bt(c2, sl3, sl3.multiply(a, b), x) ==
                      weyl_act_bt(c2, sl3, a, weyl_act_bt(c2, sl3, b, x)));
    }
}

TEST_CASE("pairing is Weyl equivariant") {
    std::mt19937 rng(53);
    for (const char* g : {"SL2", "GL2", "SL3", "PGL2"}) {
        RootDatum rd = root_datum_preset(g);
        BTContext ctx(rd.rank, 3);
        TwistedContext tctx(ctx.law(), rd, 3);
        for (int it = 0; it < 6; ++it) {
            Series A = testing::random_bt_functional(rng, ctx, 3);
            Series At(A.poly().map_into(tctx.ring()), 3);
            BTClass x = testing::random_bt_class(rng, ctx, 3);
            for (std::size_t w = 0; w < tctx.weyl().size(); ++w)
                CHECK(pairing(ctx, weyl_act_series(tctx, w, At), weyl_act_bt(ctx, tctx.weyl(), w, x)) ==
                      pairing(ctx, A, x));
        }
    }
}

TEST_CASE("coinvariants") {
    BTContext t2(2, 3);
    WeylGroup trivial = weyl_enumerate(root_datum_preset("Torus(2)"));
    for (int n = 0; n <= 3; ++n) {
        CoinvariantsReport rep = coinvariants(t2, trivial, n);
        CHECK(rep.free_rank == rep.lattice_rank);
        CHECK(rep.torsion.empty());
    }

    BTContext ctx(1, 4);
    WeylGroup sl2 = weyl_enumerate(root_datum_preset("SL2"));
    CoinvariantsReport r0 = coinvariants(ctx, sl2, 0);
    CHECK(r0.free_rank == 1);
    CHECK(r0.torsion.empty());
    CoinvariantsReport r1 = coinvariants(ctx, sl2, 1);
    CHECK(r1.lattice_rank == 2);
    CHECK(r1.free_rank == 1);
    CHECK(r1.torsion == IntVector{2});
    CHECK(r1.free_rank == r1.lattice_rank - r1.relation_rank);
    // The lift of the quotient generator maps onto it.
    CHECK(r1.projection * r1.lifts.transpose() == r1.quotient_basis.transpose());
}

TEST_CASE("coinvariant free rank matches the averaging oracle") {
    for (const char* g : {"SL2", "GL2", "SL3", "PGL2"}) {
        RootDatum rd = root_datum_preset(g);
        BTContext ctx(rd.rank, 3);
        WeylGroup W = weyl_enumerate(rd);
        for (int n = 0; n <= 3; ++n) {
            BTLattice lat = bt_lattice(ctx, n);
            IntMatrix sum(lat.dim(), lat.dim());
            for (std::size_t w = 0; w < W.size(); ++w) {
                IntMatrix a = action_matrix(ctx, W, w, n);
                for (std::size_t i = 0; i < lat.dim(); ++i)
                    for (std::size_t j = 0; j < lat.dim(); ++j)
                        sum(i, j) += a(i, j);
            }
            CAPTURE(g);
            CAPTURE(n);
            CHECK(coinvariants(ctx, W, n).free_rank == rank(sum));
        }
    }
}

}
