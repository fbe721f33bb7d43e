#include "cobord/flag_chow.hpp"

#include <doctest.h>

#include <functional>
#include <random>

using namespace cobord;

namespace {

Poly random_sym(std::mt19937& rng, const RingPtr& ring, int max_degree) {
    std::uniform_int_distribution<int> c(-3, 3), e(0, max_degree);
    Poly p(ring);
    for (int t = 0; t < 4; ++t) {
        Exponents ex(ring->size());
        int left = e(rng);
        for (auto& v : ex) {
            std::uniform_int_distribution<int> d(0, left);
            v = d(rng);
            left -= v;
        }
        p.add_term(ex, c(rng));
    }
    return p;
}

// All reduced words of w, found by peeling simple reflections that shorten it.
std::vector<std::vector<std::size_t>> reduced_words(const WeylGroup& W, std::size_t w) {
    if (w == W.identity())
        return {{}};
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t i = 0; i < W.num_generators(); ++i) {
        std::size_t v = W.multiply(w, W.generator(i));
        if (W[v].length + 1 != W[w].length)
            continue;
        for (auto word : reduced_words(W, v)) {
            word.push_back(i);
            out.push_back(word);
        }
    }
    return out;
}

} // namespace

TEST_SUITE("flag_chow") {

TEST_CASE("divided difference examples") {
    RootDatum sl2 = root_datum_preset("SL2");
    RingPtr r1 = sym_ring(1);
    CHECK(divided_difference(sl2, 0, Poly::variable(r1, "l1")) == Poly::constant(r1, 1));
    CHECK(divided_difference(sl2, 0, Poly::constant(r1, 1)).is_zero());

    RootDatum sl3 = root_datum_preset("SL3");
    RingPtr r2 = sym_ring(2);
    Poly l1 = Poly::variable(r2, "l1"), l2 = Poly::variable(r2, "l2");
    // s1 l1 = l2 - l1 and alpha_1 = 2 l1 - l2, so d1(l1^2) = l2.
    CHECK(divided_difference(sl3, 0, l1 * l1) == l2);
    Poly f = l1 * l1 * l2;
    CHECK(demazure_word(sl3, {0, 1, 0}, f) == demazure_word(sl3, {1, 0, 1}, f));
    CHECK(demazure_word(sl3, {0, 0}, f).is_zero());
    CHECK(demazure_word(sl3, {}, f) == f);
}

TEST_CASE("nil relation and Leibniz rule") {
    std::mt19937 rng(31);
    for (const char* g : {"SL3", "Sp4", "G2", "GL3"}) {
        RootDatum rd = root_datum_preset(g);
        RingPtr ring = sym_ring(rd.rank);
        for (int it = 0; it < 6; ++it) {
            Poly f = random_sym(rng, ring, 5), h = random_sym(rng, ring, 3);
            for (std::size_t i = 0; i < rd.num_simple(); ++i) {
                CHECK(divided_difference(rd, i, divided_difference(rd, i, f)).is_zero());
                Poly lhs = divided_difference(rd, i, f * h);
                Poly rhs = divided_difference(rd, i, f) * h +
                           act_on_sym(rd.reflection(i), f) * divided_difference(rd, i, h);
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("reduced-word independence in rank <= 2") {
    std::mt19937 rng(37);
    for (const char* g : {"SL2", "PGL2", "SL3", "GL2", "Sp4", "G2"}) {
        RootDatum rd = root_datum_preset(g);
        WeylGroup W = weyl_enumerate(rd);
        RingPtr ring = sym_ring(rd.rank);
        Poly f = random_sym(rng, ring, 6);
        for (std::size_t w = 0; w < W.size(); ++w) {
            auto words = reduced_words(W, w);
            REQUIRE(!words.empty());
            Poly first = demazure_word(rd, words[0], f);
            for (const auto& word : words)
                CHECK(demazure_word(rd, word, f) == first);
        }
    }
}

TEST_CASE("characteristic homomorphism on Schubert classes") {
    RootDatum sl2 = root_datum_preset("SL2"), pgl2 = root_datum_preset("PGL2");
    WeylGroup w1 = weyl_enumerate(sl2), w2 = weyl_enumerate(pgl2);
    SchubertVector a = char_hom_schubert(sl2, w1, Poly::variable(sym_ring(1), "l1"));
    CHECK(a.degree == 1);
    CHECK(a.coefficients == IntVector{1});
    SchubertVector b = char_hom_schubert(pgl2, w2, Poly::variable(sym_ring(1), "l1"));
    CHECK(b.coefficients == IntVector{2});
    SchubertVector c = char_hom_schubert(sl2, w1, Poly::constant(sym_ring(1), 1));
    CHECK(c.degree == 0);
    CHECK(c.elements == std::vector<std::size_t>{0});
    CHECK(c.coefficients == IntVector{1});
}

TEST_CASE("torsion indices") {
    // Values fixed in advance by tests/oracles/torsion_index_oracle.py.
    CHECK(torsion_index(root_datum_preset("SL2")) == 1);
    CHECK(torsion_index(root_datum_preset("SL3")) == 1);
    CHECK(torsion_index(root_datum_preset("GL2")) == 1);
    CHECK(torsion_index(root_datum_preset("GL3")) == 1);
    CHECK(torsion_index(root_datum_preset("Sp4")) == 1);
    CHECK(torsion_index(root_datum_preset("PGL2")) == 2);
    CHECK(torsion_index(root_datum_preset("G2")) == 2);
    CHECK(torsion_index(root_datum_preset("Torus(3)")) == 1);
    TorsionIndexReport g2 = torsion_index_report(root_datum_preset("G2"));
    CHECK(g2.top_degree == 6);
    CHECK(g2.per_degree.size() == 7);
}

}
