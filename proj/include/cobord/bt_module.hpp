#pragma once

#include "cobord/lazard.hpp"
#include "cobord/weyl.hpp"

#include <map>

namespace cobord {

using Tuple = std::vector<int>;

// All tuples of length r with entry sum n, in lexicographic order.
std::vector<Tuple> tuples_of_weight(std::size_t r, int n);

// Finite combination sum_m b_m p_m with coefficients in the m-polynomial
// ring of a LazardBasis. Tuples are ordered by total degree, then lex.
class BTClass {
  public:
    using TermMap = std::map<Tuple, Poly, GradedLexLess>;

    BTClass(std::size_t rank, RingPtr coefficients);
    static BTClass basis(std::size_t rank, RingPtr coefficients, Tuple m);

    std::size_t rank() const { return rank_; }
    const RingPtr& coefficient_ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Poly coefficient(const Tuple& m) const;
    // Largest |m| among the terms; -1 for zero.
    int max_weight() const;

    void add_term(const Tuple& m, const Poly& c);

    BTClass& operator+=(const BTClass& other);
    BTClass& operator-=(const BTClass& other);
    friend BTClass operator+(BTClass a, const BTClass& b) { return a += b; }
    friend BTClass operator-(BTClass a, const BTClass& b) { return a -= b; }
    friend BTClass operator*(const Poly& c, const BTClass& x);
    bool operator==(const BTClass& other) const;

    std::string to_string() const;

  private:
    std::size_t rank_;
    RingPtr ring_;
    TermMap terms_;
};

// Shared tables for rank r up to degree D: the Lazard lattice, the universal
// law, the series ring L[t_1..t_r] and the dual basis d_m for |m| <= D.
class BTContext {
  public:
    BTContext(std::size_t rank, int max_degree);

    std::size_t rank() const { return rank_; }
    int max_degree() const { return max_degree_; }
    const LazardBasis& lazard() const { return lazard_; }
    const FormalGroupLaw& law() const { return law_; }
    const RingPtr& coefficient_ring() const { return lazard_.ring(); }
    // Coefficient generators m_i followed by t_1..t_r.
    const RingPtr& series_ring() const { return series_ring_; }

    Series t_monomial(const Tuple& k) const;
    // [P^n]; zero for n < 0.
    Poly pn(int n) const;
    // prod_i [P^{m_i}]; zero if an entry is negative.
    Poly pn_product(const Tuple& m) const;
    const Series& dual(const Tuple& m) const;

    BTClass basis_class(const Tuple& m) const;

  private:
    std::size_t rank_;
    int max_degree_;
    LazardBasis lazard_;
    FormalGroupLaw law_;
    RingPtr series_ring_;
    std::vector<Poly> pn_;
    std::map<Tuple, Series, GradedLexLess> dual_;
};

// <A, x>. A is a series over m-coefficients and t_1..t_r (any ring with those
// generator names). Throws AlgebraError naming the required order when A is
// truncated below the largest |m| in x.
Poly pairing(const BTContext& ctx, const Series& A, const BTClass& x);
Poly epsilon(const BTContext& ctx, const BTClass& x);
// Cap product t^k with p_m = p_{m-k}, zero when some entry goes negative.
BTClass chern_op(const BTContext& ctx, const Series& A, const BTClass& x);

// Dual basis by unitriangular solve: <d_m', p_m> = delta for |m|,|m'| <= D.
std::map<Tuple, Series, GradedLexLess> dual_basis(const BTContext& ctx);

// [P^m, (L_1..L_r)] where row j of `bundles` is the character of L_j in
// terms of the tautological bundles O(1) of the factors.
struct ProductClassSpec {
    Tuple m;
    LatticeMap bundles;
};

// <A, [P^m, L]> computed directly on L[h]/(h_i^{m_i+1}).
Poly pair_with_product_class(const BTContext& ctx, const Series& A, const ProductClassSpec& spec);
BTClass product_class(const BTContext& ctx, const ProductClassSpec& spec);

// w . x. On basis classes w . p_m = [P^m, L] with L_j carrying w^{-1} e_j,
// which makes the pairing equivariant: <w A, w x> = <A, x>.
BTClass weyl_act_bt(const BTContext& ctx, const WeylGroup& W, std::size_t w, const BTClass& x);

// The degree-n lattice with basis p_m (x) b, b running over the LazardBasis
// of degree n - |m|. Coordinates are ordered by m, then by b.
struct BTLattice {
    int degree = 0;
    std::vector<Tuple> tuples;
    std::vector<std::size_t> basis_index;
    std::size_t dim() const { return tuples.size(); }
};

BTLattice bt_lattice(const BTContext& ctx, int n);
// Throws InternalError if x is not an integral degree-n class.
IntVector bt_coordinates(const BTContext& ctx, const BTLattice& lattice, const BTClass& x);
BTClass bt_element(const BTContext& ctx, const BTLattice& lattice, const IntVector& coords);

struct CoinvariantsReport {
    int degree = 0;
    std::size_t lattice_rank = 0;
    std::size_t relation_rank = 0;
    std::size_t free_rank = 0;
    IntVector torsion;         // elementary divisors > 1
    IntMatrix relations;       // columns (s_i - 1) x over lattice coordinates and simple s_i
    IntMatrix projection;      // rows y with y . relations = 0; kernel is the saturation of the relations
    IntMatrix quotient_basis;  // HNF basis of the image of the projection
    std::vector<std::size_t> quotient_pivots;
    IntMatrix lifts;           // row i maps to quotient_basis row i
    // Coinvariants of a finite lattice involve no truncation.
    bool stable = true;
};

CoinvariantsReport coinvariants(const BTContext& ctx, const WeylGroup& W, int n);

} // namespace cobord
