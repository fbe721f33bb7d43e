#include "cobord/flag_chow.hpp"

#include <functional>

namespace cobord {

RingPtr sym_ring(std::size_t rank) {
    std::vector<Generator> gens;
    for (std::size_t i = 1; i <= rank; ++i)
        gens.push_back({"l" + std::to_string(i), 1, GeneratorKind::Coefficient, false});
    return make_ring(std::move(gens));
}

Poly linear_form(const RingPtr& ring, const LatticeVector& v) {
    Poly out(ring);
    for (std::size_t k = 0; k < v.size(); ++k) {
        Exponents e(ring->size(), 0);
        e[k] = 1;
        out.add_term(e, Scalar(v[k]));
    }
    return out;
}

Poly act_on_sym(const LatticeMap& w, const Poly& f) {
    const RingPtr& ring = f.ring();
    std::vector<std::optional<Poly>> images(ring->size());
    for (std::size_t j = 0; j < w.dim(); ++j)
        images[j] = linear_form(ring, w.column(j));
    return f.substitute(images);
}

Poly divided_difference(const RootDatum& rd, std::size_t i, const Poly& f) {
    if (i >= rd.num_simple())
        throw UsageError("divided_difference: simple index out of range");
    Poly num = f - act_on_sym(rd.reflection(i), f);
    if (num.is_zero())
        return num;
    return divide_exact(num, linear_form(f.ring(), rd.simple_roots[i]));
}

Poly demazure_word(const RootDatum& rd, const std::vector<std::size_t>& word, const Poly& f) {
    Poly g = f;
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        g = divided_difference(rd, *it, g);
    return g;
}

SchubertVector char_hom_schubert(const RootDatum& rd, const WeylGroup& w, const Poly& f) {
    if (!f.is_homogeneous())
        throw AlgebraError("char_hom_schubert: polynomial must be homogeneous");
    SchubertVector out;
    out.degree = f.is_zero() ? 0 : f.total_degree(f.terms().begin()->first);
    for (std::size_t e = 0; e < w.size(); ++e) {
        if (w[e].length != out.degree)
            continue;
        out.elements.push_back(e);
        Poly g = demazure_word(rd, w[e].word, f);
        Scalar c = g.constant_term();
        if (!is_integer(c))
            throw InternalError("char_hom_schubert: non-integral Schubert coefficient");
        out.coefficients.push_back(c.get_num());
    }
    return out;
}

namespace {

std::vector<Exponents> sym_monomials(std::size_t r, int k) {
    std::vector<Exponents> out;
    Exponents e(r, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int rest) {
        if (i + 1 == r) {
            e[i] = rest;
            out.push_back(e);
            return;
        }
        for (int a = rest; a >= 0; --a) {
            e[i] = a;
            rec(i + 1, rest - a);
        }
    };
    if (r == 0) {
        if (k == 0)
            out.push_back(e);
        return out;
    }
    rec(0, k);
    return out;
}

Integer exponent_of(const Cokernel& c) {
    Integer e = 1;
    for (const auto& d : c.elementary_divisors)
        mpz_lcm(e.get_mpz_t(), e.get_mpz_t(), d.get_mpz_t());
    return e;
}

} // namespace

TorsionIndexReport torsion_index_report(const RootDatum& rd) {
    const WeylGroup w = weyl_enumerate(rd);
    const RingPtr ring = sym_ring(rd.rank);
    TorsionIndexReport rep;
    rep.top_degree = static_cast<std::size_t>(w[w.longest()].length);
    rep.torsion_index = 1;
    for (std::size_t k = 0; k <= rep.top_degree; ++k) {
        auto monos = sym_monomials(rd.rank, static_cast<int>(k));
        std::size_t rows = 0;
        for (const auto& e : w.elements())
            rows += e.length == static_cast<int>(k);
        IntMatrix m(rows, monos.size());
        for (std::size_t j = 0; j < monos.size(); ++j) {
            SchubertVector v = char_hom_schubert(rd, w, Poly::monomial(ring, monos[j]));
            for (std::size_t i = 0; i < rows; ++i)
                m(i, j) = v.coefficients[i];
        }
        Cokernel c = cokernel(m);
        if (c.free_rank != 0)
            throw InternalError("torsion_index: characteristic map not rationally surjective in degree " +
                                std::to_string(k));
        Integer e = exponent_of(c);
        mpz_lcm(rep.torsion_index.get_mpz_t(), rep.torsion_index.get_mpz_t(), e.get_mpz_t());
        rep.per_degree.push_back(std::move(c));
        if (k == rep.top_degree)
            rep.top_degree_exponent = e;
    }
    return rep;
}

Integer torsion_index(const RootDatum& rd) { return torsion_index_report(rd).torsion_index; }

} // namespace cobord
