#pragma once

#include "cobord/series.hpp"

namespace cobord {

enum class LawKind { Additive, Multiplicative, Universal };

std::string to_string(LawKind kind);

// Bivariate truncated series F(x, y) over a named coefficient ring.
class FormalGroupLaw {
  public:
    FormalGroupLaw(LawKind kind, RingPtr coefficients, Series law);

    LawKind kind() const { return kind_; }
    int order() const { return law_.order(); }
    // Coefficient generators plus the series variables x, y.
    const RingPtr& ring() const { return law_.ring(); }
    // Coefficient generators only.
    const RingPtr& coefficient_ring() const { return coefficients_; }
    const Series& law() const { return law_; }

    // a_{ij}: coefficient of x^i y^j as an element of the coefficient ring.
    Poly coefficient(int i, int j) const;

    // iota(x) with F(x, iota(x)) = 0, as a series in x over `ring()`'s
    // coefficients (its ring has x as the only series variable).
    const Series& inverse_series() const { return inverse_; }

  private:
    LawKind kind_;
    RingPtr coefficients_;
    Series law_;
    Series inverse_;
};

FormalGroupLaw fgl_additive(int order);
// F = x + y + beta x y with beta invertible of degree -1.
FormalGroupLaw fgl_multiplicative(int order);
// F = e(l(x) + l(y)) over Q[m_1..m_N], l(x) = x + sum m_i x^{i+1}; order N+1.
FormalGroupLaw fgl_universal(int max_degree);

// Ring of the logarithm coefficients m_1..m_N (deg m_i = i).
RingPtr logarithm_coefficient_ring(int max_degree);

// Coefficient ring of `law` extended by series variables named `names`.
RingPtr series_ring_over(const FormalGroupLaw& law, const std::vector<std::string>& names);

Series formal_sum(const FormalGroupLaw& law, const Series& a, const Series& b);
Series formal_inverse(const FormalGroupLaw& law, const Series& a);
// [n]_F(t); n < 0 goes through the formal inverse.
Series n_series(const FormalGroupLaw& law, long n, const Series& t);

// [n_1]_F v_1 +_F ... +_F [n_k]_F v_k; zero when every n_i vanishes.
Series formal_combination(const FormalGroupLaw& law, const std::vector<long>& n,
                          std::span<const Series> vars);

// Residuals F(x,0)-x, F(0,y)-y, F(x,y)-F(y,x), F(F(x,y),z)-F(x,F(y,z)),
// each computed up to `order`.
struct LawResiduals {
    Series unit_left, unit_right, commutativity, associativity;
    bool all_zero() const;
};
LawResiduals law_residuals(const FormalGroupLaw& law, int order);

} // namespace cobord
