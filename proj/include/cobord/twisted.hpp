#pragma once

#include "cobord/lazard.hpp"
#include "cobord/weyl.hpp"

namespace cobord {

// R[[M]] for M the character lattice of `datum`, written in the variables
// t_i = x_{lambda_i} and truncated at internal-degree filtration `order`.
class TwistedContext {
  public:
    TwistedContext(FormalGroupLaw law, RootDatum datum, int order);

    const FormalGroupLaw& law() const { return law_; }
    const RootDatum& datum() const { return datum_; }
    const WeylGroup& weyl() const { return weyl_; }
    int order() const { return order_; }
    std::size_t rank() const { return datum_.rank; }
    // Coefficient generators of the law plus t1..tr.
    const RingPtr& ring() const { return ring_; }

    Series t(std::size_t i) const;
    Series one() const;

  private:
    FormalGroupLaw law_;
    RootDatum datum_;
    WeylGroup weyl_;
    int order_;
    RingPtr ring_;
};

// x_m = [n_1]_F t_1 +_F ... +_F [n_r]_F t_r.
Series character_class(const TwistedContext& ctx, const LatticeVector& m);

Series twisted_mul(const TwistedContext& ctx, const Series& u, const Series& v);

// x_m +_F x_{m'} == x_{m+m'} up to the context order.
bool relations_check(const TwistedContext& ctx, const LatticeVector& m, const LatticeVector& m2);

// Ring endomorphism t_i -> x_{w lambda_i}.
Series weyl_act_series(const TwistedContext& ctx, std::size_t w, const Series& u);

// Finite lattice of one total degree delta = (coefficient degree) - (filtration),
// truncated above filtration `cut`: coordinates are pairs (t-monomial,
// coefficient lattice basis index) ordered by filtration first.
struct TwistedBlock {
    int total_degree = 0;
    int cut = 0;
    std::vector<Exponents> monomials;         // t-exponents of length rank
    std::vector<std::size_t> basis_index;     // parallel to monomials
    std::size_t dim() const { return monomials.size(); }
    int filtration(std::size_t c) const;
};

TwistedBlock twisted_block(const TwistedContext& ctx, const CoefficientLattice& coeffs,
                           int total_degree, int cut);

// Column c holds the coordinates of w applied to coordinate vector e_c.
IntMatrix block_action(const TwistedContext& ctx, const CoefficientLattice& coeffs,
                       const TwistedBlock& block, std::size_t w);

Series block_element(const TwistedContext& ctx, const CoefficientLattice& coeffs,
                     const TwistedBlock& block, const IntVector& coords);

struct InvariantBlock {
    TwistedBlock block;
    IntMatrix kernel;               // rows: HNF basis of the W-fixed lattice
    std::vector<int> graded_ranks;  // rank of the filtration-f graded piece, f = 0..cut
    std::optional<bool> stable;     // unchanged when the cut is raised by 2
};

InvariantBlock invariants_block(const TwistedContext& ctx, const CoefficientLattice& coeffs,
                                int total_degree, int cut, bool check_stability);

// One block per total degree in [-order, max_coefficient_degree], cut at
// filtration order (<= ctx.order()). Stability is only decided where the
// context and the lattice reach two filtration steps further; elsewhere it
// stays unset.
std::vector<InvariantBlock> invariants_truncated(const TwistedContext& ctx,
                                                 const CoefficientLattice& coeffs,
                                                 int order, int max_coefficient_degree,
                                                 bool check_stability);

} // namespace cobord
