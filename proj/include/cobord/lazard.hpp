#pragma once

#include "cobord/fgl.hpp"
#include "cobord/int_matrix.hpp"

namespace cobord {

// A graded ring given degreewise by integral lattices inside a rational
// polynomial ring. Elements of degree d are written on basis_element(d, *).
class CoefficientLattice {
  public:
    virtual ~CoefficientLattice() = default;

    virtual const RingPtr& ring() const = 0;
    virtual int rank(int degree) const = 0;
    virtual Poly basis_element(int degree, std::size_t i) const = 0;
    // Lattice coordinates of a homogeneous element; nullopt when the element
    // is not an integral lattice member.
    virtual std::optional<IntVector> coordinates(const Poly& element, int degree) const = 0;
    virtual std::optional<std::vector<Scalar>> rational_coordinates(const Poly& element,
                                                                    int degree) const = 0;
    // Degrees outside [min_degree, max_degree] have rank 0 or are unavailable.
    virtual int min_degree() const = 0;
    virtual int max_degree() const = 0;
    // True when nothing lives above max_degree (rather than being cut off).
    virtual bool bounded_above() const { return false; }

    Poly from_coordinates(int degree, const IntVector& coords) const;
};

// Z in degree 0: the coefficients of the additive law.
class IntegerLattice final : public CoefficientLattice {
  public:
    IntegerLattice();
    const RingPtr& ring() const override { return ring_; }
    int rank(int degree) const override { return degree == 0 ? 1 : 0; }
    Poly basis_element(int degree, std::size_t i) const override;
    std::optional<IntVector> coordinates(const Poly& element, int degree) const override;
    std::optional<std::vector<Scalar>> rational_coordinates(const Poly& element,
                                                            int degree) const override;
    int min_degree() const override { return 0; }
    int max_degree() const override { return 0; }
    bool bounded_above() const override { return true; }

  private:
    RingPtr ring_;
};

// Z[beta, 1/beta] with deg beta = -1: rank one in every degree.
class LaurentLattice final : public CoefficientLattice {
  public:
    explicit LaurentLattice(int bound);
    const RingPtr& ring() const override { return ring_; }
    int rank(int degree) const override { return degree >= -bound_ && degree <= bound_ ? 1 : 0; }
    Poly basis_element(int degree, std::size_t i) const override;
    std::optional<IntVector> coordinates(const Poly& element, int degree) const override;
    std::optional<std::vector<Scalar>> rational_coordinates(const Poly& element,
                                                            int degree) const override;
    int min_degree() const override { return -bound_; }
    int max_degree() const override { return bound_; }

  private:
    RingPtr ring_;
    int bound_;
};

// The Lazard ring L as the subring of Q[m_1, m_2, ...] generated by the
// coefficients of the universal law, degree by degree up to max_degree.
class LazardBasis final : public CoefficientLattice {
  public:
    explicit LazardBasis(int max_degree);

    const RingPtr& ring() const override { return ring_; }
    int rank(int degree) const override;
    Poly basis_element(int degree, std::size_t i) const override;
    std::optional<IntVector> coordinates(const Poly& element, int degree) const override;
    std::optional<std::vector<Scalar>> rational_coordinates(const Poly& element,
                                                            int degree) const override;
    int min_degree() const override { return 0; }
    int max_degree() const override { return max_degree_; }

    // Monomials of weight n in the m_i, in graded-lex order: the coordinate
    // system the lattice basis is written in.
    const std::vector<Exponents>& monomials(int degree) const { return monomials_.at(degree); }
    // Rows are the HNF basis of L_n in monomial coordinates.
    const IntMatrix& basis(int degree) const { return basis_.at(degree); }
    // a_{ij} with i <= j, keyed (i, j).
    const std::map<std::pair<int, int>, Poly>& law_coefficients() const { return aij_; }

    std::vector<Scalar> monomial_coordinates(const Poly& element, int degree) const;
    bool contains(const Poly& element) const;

  private:
    int max_degree_;
    RingPtr ring_;
    std::vector<std::vector<Exponents>> monomials_;
    std::vector<IntMatrix> basis_;
    std::vector<std::vector<std::size_t>> pivots_;
    std::map<std::pair<int, int>, Poly> aij_;
};

LazardBasis lazard_basis(int max_degree);

// [P^n] = (n+1) m_n, certified to lie in L_n.
Poly pn_class(const LazardBasis& basis, int n);

// Number of partitions of n.
long partition_count(int n);

} // namespace cobord
