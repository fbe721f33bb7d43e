// One PASS/FAIL line per acceptance criterion; nonzero exit if any fails.
#include "bt_random.hpp"
#include "golden_cases.hpp"

#include "cobord/duality.hpp"
#include "cobord/flag_chow.hpp"
#include "cobord/twisted.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>

using namespace cobord;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
    void fail(const std::string& why) {
        if (ok)
            detail = why;
        ok = false;
    }
};

LatticeVector random_vector(std::mt19937& rng, std::size_t r) {
    std::uniform_int_distribution<long> d(-2, 2);
    LatticeVector v(r);
    for (auto& e : v)
        e = d(rng);
    return v;
}

std::string torus(std::size_t r) { return "Torus(" + std::to_string(r) + ")"; }

Outcome lazard_ranks() {
    Outcome o;
    LazardBasis L = lazard_basis(6);
    const int expected[] = {1, 1, 2, 3, 5, 7, 11};
    for (int n = 0; n <= 6; ++n)
        if (L.rank(n) != expected[n])
            o.fail("rank L_" + std::to_string(n) + " = " + std::to_string(L.rank(n)));
    return o;
}

Outcome pn_integrality() {
    Outcome o;
    LazardBasis L = lazard_basis(6);
    for (int n = 1; n <= 6; ++n) {
        Poly p = Scalar(n + 1) * Poly::variable(L.ring(), "m" + std::to_string(n));
        if (!L.contains(p) || !(pn_class(L, n) == p))
            o.fail("[P^" + std::to_string(n) + "] not in L_" + std::to_string(n));
    }
    FormalGroupLaw U = fgl_universal(2);
    Poly minus_a11 = (Scalar(-1) * U.coefficient(1, 1)).map_into(L.ring());
    if (L.coordinates(pn_class(L, 1), 1) != L.coordinates(minus_a11, 1))
        o.fail("[P^1] != -a11");
    return o;
}

Outcome fgl_axioms() {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    if (!law_residuals(fgl_universal(6), 6).all_zero())
        o.fail("order 6 residuals nonzero");
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs >= 60)
        o.fail("order 6 took " + std::to_string(secs) + " s");
    if (!law_residuals(fgl_universal(8), 8).all_zero())
        o.fail("order 8 residuals nonzero");
    return o;
}

Outcome twisted_relations() {
    Outcome o;
    std::mt19937 rng(1001);
    std::vector<std::function<FormalGroupLaw()>> laws = {
        [] { return fgl_additive(5); }, [] { return fgl_multiplicative(5); }, [] { return fgl_universal(5); }};
    std::vector<std::vector<TwistedContext>> ctx(3);
    for (std::size_t l = 0; l < 3; ++l)
        for (std::size_t r = 1; r <= 3; ++r)
            ctx[l].emplace_back(laws[l](), root_datum_preset(torus(r)), 5);
    for (int it = 0; it < 100; ++it) {
        const std::size_t l = static_cast<std::size_t>(it) % 3;
        const std::size_t r = 1 + static_cast<std::size_t>(it / 3) % 3;
        if (!relations_check(ctx[l][r - 1], random_vector(rng, r), random_vector(rng, r)))
            o.fail("relation fails at check " + std::to_string(it));
    }
    return o;
}

Outcome multiplicative_model() {
    Outcome o;
    std::mt19937 rng(1002);
    for (std::size_t r = 1; r <= 3; ++r) {
        TwistedContext ctx(fgl_multiplicative(6), root_datum_preset(torus(r)), 6);
        Series one = ctx.one();
        Poly b = Poly::variable(ctx.ring(), "beta");
        for (int it = 0; it < 10; ++it) {
            LatticeVector m = random_vector(rng, r), m2 = random_vector(rng, r), s(r);
            for (std::size_t i = 0; i < r; ++i)
                s[i] = m[i] + m2[i];
            Series q1 = one + b * character_class(ctx, m), q2 = one + b * character_class(ctx, m2);
            if (!(twisted_mul(ctx, q1, q2) == one + b * character_class(ctx, s)))
                o.fail("group-like identity fails in rank " + std::to_string(r));
        }
    }
    return o;
}

std::vector<Tuple> tuples_up_to(std::size_t r, int D) {
    std::vector<Tuple> out;
    for (int n = 0; n <= D; ++n)
        for (auto& m : tuples_of_weight(r, n))
            out.push_back(m);
    return out;
}

Outcome pairing_matrix(bool dual) {
    Outcome o;
    for (std::size_t r : {1u, 2u}) {
        BTContext ctx(r, 5);
        Poly one = Poly::constant(ctx.coefficient_ring(), 1), zero(ctx.coefficient_ring());
        auto ts = tuples_up_to(r, 5);
        for (std::size_t i = 0; i < ts.size(); ++i)
            for (std::size_t j = 0; j < ts.size(); ++j) {
                const Series& A = dual ? ctx.dual(ts[i]) : ctx.t_monomial(ts[i]);
                Poly v = pairing(ctx, A, ctx.basis_class(ts[j]));
                const bool good = dual ? v == (i == j ? one : zero)
                                       : (j < i ? v.is_zero() : j == i ? v == one : true);
                if (!good)
                    o.fail("entry (" + std::to_string(i) + ", " + std::to_string(j) + ") rank " +
                           std::to_string(r));
            }
    }
    return o;
}

Outcome torsion_indices() {
    Outcome o;
    // Values from tests/oracles/torsion_index_oracle.py and by hand in rank 1.
    const std::pair<const char*, long> expected[] = {{"SL2", 1}, {"SL3", 1}, {"GL2", 1},
                                                     {"Sp4", 1}, {"PGL2", 2}, {"G2", 2}};
    for (auto [g, t] : expected) {
        Integer got = torsion_index(root_datum_preset(g));
        if (got != t)
            o.fail(std::string(g) + " gave " + got.get_str());
    }
    return o;
}

Outcome cap_identity() {
    Outcome o;
    std::mt19937 rng(1009);
    BTContext c1(1, 4), c2(2, 4);
    for (int it = 0; it < 100; ++it) {
        const BTContext& ctx = it % 2 ? c2 : c1;
        Series A = testing::random_bt_functional(rng, ctx, 4);
        BTClass x = testing::random_bt_class(rng, ctx, 4);
        if (!(pairing(ctx, A, x) == epsilon(ctx, chern_op(ctx, A, x))))
            o.fail("mismatch at check " + std::to_string(it));
    }
    return o;
}

Outcome weyl_integrity() {
    Outcome o;
    std::mt19937 rng(1013);
    {
        BTContext ctx(1, 4);
        WeylGroup sl2 = weyl_enumerate(root_datum_preset("SL2"));
        for (int it = 0; it < 10; ++it) {
            BTClass x = testing::random_bt_class(rng, ctx, 4);
            if (!(weyl_act_bt(ctx, sl2, 1, weyl_act_bt(ctx, sl2, 1, x)) == x))
                o.fail("SL2 reflection is not an involution");
        }
    }
    BTContext c2(2, 3);
    WeylGroup gl2 = weyl_enumerate(root_datum_preset("GL2"));
    for (const auto& m : tuples_up_to(2, 3))
        if (!(weyl_act_bt(c2, gl2, 1, c2.basis_class(m)) == c2.basis_class({m[1], m[0]})))
            o.fail("GL2 transposition does not permute basis classes");
    WeylGroup sl3 = weyl_enumerate(root_datum_preset("SL3"));
    for (int it = 0; it < 3; ++it) {
        BTClass x = testing::random_bt_class(rng, c2, 3);
        for (std::size_t a = 0; a < sl3.size(); ++a)
            for (std::size_t b = 0; b < sl3.size(); ++b)
                if (!(weyl_act_bt(c2, sl3, sl3.multiply(a, b), x) ==
                      weyl_act_bt(c2, sl3, a, weyl_act_bt(c2, sl3, b, x))))
                    o.fail("SL3 action is not a group action");
    }
    for (const char* g : {"SL2", "GL2", "SL3", "PGL2", "Sp4"}) {
        RootDatum rd = root_datum_preset(g);
        BTContext ctx(rd.rank, 3);
        TwistedContext tctx(ctx.law(), rd, 3);
        for (int it = 0; it < 5; ++it) {
            Series A = testing::random_bt_functional(rng, ctx, 3);
            Series At(A.poly().map_into(tctx.ring()), 3);
            BTClass x = testing::random_bt_class(rng, ctx, 3);
            for (std::size_t w = 0; w < tctx.weyl().size(); ++w)
                if (!(pairing(ctx, weyl_act_series(tctx, w, At), weyl_act_bt(ctx, tctx.weyl(), w, x)) ==
                      pairing(ctx, A, x)))
                    o.fail(std::string("pairing not equivariant for ") + g);
        }
    }
    return o;
}

Outcome duality() {
    Outcome o;
    const std::pair<const char*, int> runs[] = {{"Torus(1)", 6}, {"Torus(2)", 6}, {"SL2", 6}, {"GL2", 4}};
    for (auto [g, n] : runs) {
        DualityReport rep = duality_check(root_datum_preset(g), n);
        for (const auto& d : rep.degrees) {
            if (!d.rational_ok)
                o.fail(std::string(g) + " rational check fails in degree " + std::to_string(d.degree));
            else if (d.verdict != "perfect over Z")
                o.fail(std::string(g) + " degree " + std::to_string(d.degree) + ": " + d.verdict);
        }
        auto r = testing::run_cli({"verify-duality", "--group", g, "--max-degree", std::to_string(n)});
        if (r.code != 0)
            o.fail(std::string("verify-duality exit code ") + std::to_string(r.code) + " for " + g);
    }
    return o;
}

Outcome coinvariant_torsion() {
    Outcome o;
    BTContext ctx(1, 3);
    CoinvariantsReport co = coinvariants(ctx, weyl_enumerate(root_datum_preset("SL2")), 1);
    if (co.free_rank != 1 || co.torsion != IntVector{2})
        o.fail("SL2 degree 1 coinvariants wrong");
    DualityReport rep = duality_check(root_datum_preset("SL2"), 1);
    const DegreeVerdict& d = rep.degrees.at(1);
    if (d.pairing_divisors != IntVector{1} || !d.unimodular)
        o.fail("torsion-free quotient does not pair unimodularly");
    return o;
}

Outcome cli_goldens() {
    Outcome o;
    auto cases = testing::golden_cases(GOLDEN_DIR);
    if (cases.empty())
        o.fail("no golden cases");
    for (const auto& c : cases) {
        const std::string want = testing::read_file(c.path);
        auto a = testing::run_cli(c.args), b = testing::run_cli(c.args);
        if (a.code != 0 || a.out != want || b.out != a.out)
            o.fail(c.name + " differs from golden");
    }
    return o;
}

} // namespace

int main() {
    const std::pair<const char*, std::function<Outcome()>> criteria[] = {
        {"Lazard ranks 1,1,2,3,5,7,11", lazard_ranks},
        {"[P^n] integrality and [P^1] = -a11", pn_integrality},
        {"universal law axioms to order 8", fgl_axioms},
        {"twisted group algebra relations", twisted_relations},
        {"multiplicative model is group-like", multiplicative_model},
        {"pairing unitriangular", [] { return pairing_matrix(false); }},
        {"dual basis", [] { return pairing_matrix(true); }},
        {"torsion indices", torsion_indices},
        {"<A,x> = eps(c(A) cap x)", cap_identity},
        {"Weyl action integrity", weyl_integrity},
        {"duality perfect over Z", duality},
        {"SL2 coinvariant torsion", coinvariant_torsion},
        {"CLI golden determinism", cli_goldens},
    };
    int failures = 0, i = 0;
    for (const auto& [name, fn] : criteria) {
        ++i;
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::cout << (o.ok ? "PASS" : "FAIL") << "  " << i << ". " << name;
        if (!o.ok)
            std::cout << " (" << o.detail << ")";
        std::cout << "  [" << std::fixed << std::setprecision(2) << secs << " s]\n" << std::flush;
        failures += o.ok ? 0 : 1;
    }
    return failures == 0 ? 0 : 1;
}
