#pragma once

#include "cobord/int_matrix.hpp"
#include "cobord/weyl.hpp"

namespace cobord {

// Polynomial ring Sym(character lattice) on l1..lr, each of degree 1.
RingPtr sym_ring(std::size_t rank);

// sum_k v_k l_k
Poly linear_form(const RingPtr& ring, const LatticeVector& v);

// f(l) -> f(w l): l_j -> sum_k w_{kj} l_k.
Poly act_on_sym(const LatticeMap& w, const Poly& f);

// (f - s_i f) / alpha_i, i zero-based.
Poly divided_difference(const RootDatum& rd, std::size_t i, const Poly& f);

// d_{i1} o ... o d_{ik} f; the rightmost index acts first.
Poly demazure_word(const RootDatum& rd, const std::vector<std::size_t>& word, const Poly& f);

// Coefficients ((d_w f)(0))_{l(w) = k} on the Schubert classes of degree k,
// indexed by Weyl elements of length k in group order.
struct SchubertVector {
    int degree = 0;
    std::vector<std::size_t> elements;
    IntVector coefficients;
};

SchubertVector char_hom_schubert(const RootDatum& rd, const WeylGroup& w, const Poly& f);

struct TorsionIndexReport {
    Integer torsion_index;          // of the identity component
    std::vector<Cokernel> per_degree;
    std::size_t top_degree = 0;     // number of positive roots
    Integer top_degree_exponent;    // exponent of the cokernel in top degree alone
};

TorsionIndexReport torsion_index_report(const RootDatum& rd);
Integer torsion_index(const RootDatum& rd);

} // namespace cobord
