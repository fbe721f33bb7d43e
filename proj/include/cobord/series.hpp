#pragma once

#include "cobord/poly.hpp"

#include <span>

namespace cobord {

// A polynomial in which every term of series weight above `order` is
// identically zero. Two series compare equal iff they agree termwise below
// the smaller of the two orders.
class Series {
  public:
    Series(Poly poly, int order);

    static Series zero(RingPtr ring, int order) { return Series(Poly(std::move(ring)), order); }
    static Series variable(RingPtr ring, std::string_view name, int order);

    const Poly& poly() const { return poly_; }
    const RingPtr& ring() const { return poly_.ring(); }
    int order() const { return order_; }
    bool is_zero() const { return poly_.is_zero(); }

    // True when no term has series weight 0.
    bool has_zero_constant_term() const;

    Series truncated(int order) const { return Series(poly_, order); }

    Series operator-() const { return Series(-poly_, order_); }
    friend Series operator+(const Series& a, const Series& b);
    friend Series operator-(const Series& a, const Series& b);
    friend Series operator*(const Series& a, const Series& b);
    friend Series operator*(const Scalar& c, const Series& a) { return Series(c * a.poly_, a.order_); }
    friend Series operator*(const Poly& c, const Series& a);

    friend bool operator==(const Series& a, const Series& b);

    std::string to_string() const { return poly_.to_string(); }

  private:
    Poly poly_;
    int order_;
};

// Substitutes args[i] for the i-th series variable of f (in ring order).
// Coefficient generators of f are matched by name in the args' ring.
Series compose(const Series& f, std::span<const Series> args, int order);

// Compositional inverse of f = x + (higher order) in a ring with exactly one
// series variable.
Series reverse(const Series& f, int order);

// Groups the terms of p by their series-variable exponents. The coefficient
// polynomials are written over `coefficients`, whose generators must be the
// coefficient generators of p's ring in the same order.
std::map<Exponents, Poly, GradedLexLess> split_by_series_monomial(const Poly& p,
                                                                  const RingPtr& coefficients);

} // namespace cobord
