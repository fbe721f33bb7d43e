#pragma once

#include <gmpxx.h>

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cobord {

using Integer = mpz_class;
using Scalar = mpq_class;

class AlgebraError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Operands built over incompatible generator lists.
class ContextError : public AlgebraError {
  public:
    using AlgebraError::AlgebraError;
};

// Substitution of a series with nonzero constant term.
class CompositionError : public AlgebraError {
  public:
    using AlgebraError::AlgebraError;
};

class NotReversibleError : public AlgebraError {
  public:
    using AlgebraError::AlgebraError;
};

// A consistency check failed that no valid input can trigger.
class InternalError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

bool is_integer(const Scalar& q);
std::string to_string(const Integer& z);
// "p" or "p/q".
std::string to_string(const Scalar& q);

enum class GeneratorKind { Coefficient, SeriesVariable };

// Degrees are algebraic: deg m_n = n, deg beta = -1. Series variables carry
// filtration weight 1 and lower the total degree by their exponent.
struct Generator {
    std::string name;
    int degree = 0;
    GeneratorKind kind = GeneratorKind::Coefficient;
    bool invertible = false;

    bool operator==(const Generator&) const = default;
};

class Ring {
  public:
    explicit Ring(std::vector<Generator> generators);

    std::size_t size() const { return gens_.size(); }
    const Generator& operator[](std::size_t i) const { return gens_[i]; }
    const std::vector<Generator>& generators() const { return gens_; }
    std::optional<std::size_t> index_of(std::string_view name) const;
    std::size_t require(std::string_view name) const;

    const std::vector<std::size_t>& series_variables() const { return series_; }
    const std::vector<std::size_t>& coefficient_generators() const { return coeffs_; }

    bool operator==(const Ring& other) const { return gens_ == other.gens_; }

  private:
    std::vector<Generator> gens_;
    std::vector<std::size_t> series_;
    std::vector<std::size_t> coeffs_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<Generator> generators);
bool same_ring(const RingPtr& a, const RingPtr& b);

using Exponents = std::vector<int>;

// Graded lexicographic: exponent sum first, then lexicographic.
struct GradedLexLess {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

class Poly {
  public:
    using TermMap = std::map<Exponents, Scalar, GradedLexLess>;

    explicit Poly(RingPtr ring);

    static Poly constant(RingPtr ring, const Scalar& c);
    static Poly variable(RingPtr ring, std::string_view name);
    static Poly monomial(RingPtr ring, Exponents exps, const Scalar& c = 1);

    const RingPtr& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Scalar coefficient(const Exponents& exps) const;
    Scalar constant_term() const;

    // Accumulates; a coefficient that cancels to zero is erased.
    void add_term(const Exponents& exps, const Scalar& c);

    Poly& operator+=(const Poly& other);
    Poly& operator-=(const Poly& other);
    Poly& operator*=(const Scalar& c);
    Poly operator-() const;

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Scalar& c) { return a *= c; }
    friend Poly operator*(const Scalar& c, Poly a) { return a *= c; }

    bool operator==(const Poly& other) const;

    int series_weight(const Exponents& exps) const;
    int coefficient_degree(const Exponents& exps) const;
    int total_degree(const Exponents& exps) const {
        return coefficient_degree(exps) - series_weight(exps);
    }

    // Drops every term whose series weight exceeds `order`.
    Poly truncated(int order) const;
    Poly homogeneous_component(int total_degree) const;
    Poly series_weight_component(int weight) const;
    std::optional<int> min_series_weight() const;
    bool is_homogeneous() const;
    bool has_integer_coefficients() const;

    // Re-expresses this polynomial over `target`, matching generators by name.
    Poly map_into(const RingPtr& target) const;

    // Ring endomorphism sending generator i to images[i]; generators not
    // listed in `images` (nullopt) are kept.
    Poly substitute(const std::vector<std::optional<Poly>>& images,
                    std::optional<int> order = std::nullopt) const;

    std::string to_string() const;

  private:
    RingPtr ring_;
    TermMap terms_;
};

void require_same_ring(const Poly& a, const Poly& b, const char* where);

// Product truncated at series weight `order` (no truncation when nullopt).
Poly mul(const Poly& a, const Poly& b, std::optional<int> order = std::nullopt);
Poly pow(const Poly& a, unsigned n, std::optional<int> order = std::nullopt);

// Exact quotient a / b; throws InternalError when b does not divide a.
Poly divide_exact(const Poly& a, const Poly& b);

} // namespace cobord
